use super::eigen::DEFAULT_HERMITIAN_TOL;
use crate::matrix::{Complex64, ComplexMatrix, ZERO};

/// Characteristic polynomial `P(E) = det(H - E·1)`.
///
/// Stored as the monic polynomial `det(E·1 - H) = Σ coeffs[k] E^k`
/// (ascending powers, `coeffs[n] = 1`) together with the overall sign
/// `(-1)^n` that converts it to `det(H - E·1)`.
#[derive(Clone, Debug, PartialEq)]
pub struct CharPoly {
    pub coeffs: Vec<f64>,
    pub sign: f64,
}

impl CharPoly {
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// `det(E·1 - H)`.
    pub fn evaluate_monic(&self, e: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * e + c)
    }

    /// `det(H - E·1)`.
    pub fn evaluate(&self, e: f64) -> f64 {
        self.sign * self.evaluate_monic(e)
    }

    /// `Σ |coeffs[k]| |E|^k`, the natural magnitude of a Horner evaluation at
    /// `E`; rounding errors in `evaluate` are relative to this.
    pub fn magnitude_at(&self, e: f64) -> f64 {
        let x = e.abs();
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, &c| acc * x + c.abs())
    }

    /// Product of two characteristic polynomials (that of the direct sum).
    pub fn product(&self, other: &CharPoly) -> CharPoly {
        let mut coeffs = vec![0.0; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        CharPoly {
            coeffs,
            sign: self.sign * other.sign,
        }
    }
}

/// Characteristic polynomial of any square matrix.
///
/// Hermitian input (to `DEFAULT_HERMITIAN_TOL`) is reduced to real
/// tridiagonal form by Householder reflections and expanded with the
/// three-term recurrence. Anything else goes through the Faddeev–LeVerrier
/// trace recursion, whose rounding error grows quickly with dimension.
pub fn char_poly(h: &ComplexMatrix) -> CharPoly {
    let n = h.dim();
    let coeffs = if h.is_hermitian(DEFAULT_HERMITIAN_TOL) {
        let (d, off_sq) = tridiagonalize(h);
        tridiagonal_coeffs(&d, &off_sq)
    } else {
        faddeev_leverrier(h)
    };
    CharPoly {
        coeffs,
        sign: if n.is_multiple_of(2) { 1.0 } else { -1.0 },
    }
}

/// Householder reduction of the Hermitian part of `h`. Returns the (real)
/// diagonal and the squared moduli of the subdiagonal.
fn tridiagonalize(h: &ComplexMatrix) -> (Vec<f64>, Vec<f64>) {
    let n = h.dim();
    let mut a: Vec<Complex64> = (0..n * n)
        .map(|idx| {
            let (i, j) = (idx / n, idx % n);
            (h.get(i, j) + h.get(j, i).conj()) * 0.5
        })
        .collect();
    let mut v = vec![ZERO; n];
    for k in 0..n.saturating_sub(2) {
        let norm = (k + 1..n)
            .map(|i| a[i * n + k].norm_sqr())
            .sum::<f64>()
            .sqrt();
        if norm == 0.0 {
            continue;
        }
        let x0 = a[(k + 1) * n + k];
        let phase = if x0.norm() == 0.0 {
            Complex64::new(1.0, 0.0)
        } else {
            x0 / x0.norm()
        };
        let alpha = -phase * norm;
        for i in k + 1..n {
            v[i] = a[i * n + k];
        }
        v[k + 1] -= alpha;
        let vn = (k + 1..n).map(|i| v[i].norm_sqr()).sum::<f64>().sqrt();
        for vi in &mut v[k + 1..n] {
            *vi /= vn;
        }
        // A <- P A P, P = 1 - 2 v v*, acting on indices k+1..n
        for j in 0..n {
            let s: Complex64 = (k + 1..n).map(|r| v[r].conj() * a[r * n + j]).sum();
            for r in k + 1..n {
                a[r * n + j] -= 2.0 * v[r] * s;
            }
        }
        for i in 0..n {
            let s: Complex64 = (k + 1..n).map(|c| a[i * n + c] * v[c]).sum();
            for c in k + 1..n {
                a[i * n + c] -= 2.0 * s * v[c].conj();
            }
        }
    }
    let d = (0..n).map(|i| a[i * n + i].re).collect();
    let off_sq = (1..n).map(|i| a[i * n + i - 1].norm_sqr()).collect();
    (d, off_sq)
}

/// `q_k = (E - d_k) q_{k-1} - |b_k|^2 q_{k-2}` in ascending coefficients.
fn tridiagonal_coeffs(d: &[f64], off_sq: &[f64]) -> Vec<f64> {
    let mut prev = vec![1.0];
    let mut cur = vec![-d[0], 1.0];
    for k in 1..d.len() {
        let mut next = vec![0.0; k + 2];
        for (i, &c) in cur.iter().enumerate() {
            next[i + 1] += c;
            next[i] -= d[k] * c;
        }
        for (i, &c) in prev.iter().enumerate() {
            next[i] -= off_sq[k - 1] * c;
        }
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// `M_k = H M_{k-1} + c_{n-k+1} 1`, `c_{n-k} = -tr(H M_k) / k`, from
/// `M_0 = 0`, `c_n = 1`. Imaginary parts of the coefficients are dropped.
fn faddeev_leverrier(h: &ComplexMatrix) -> Vec<f64> {
    let n = h.dim();
    let mut c = vec![ZERO; n + 1];
    c[n] = Complex64::new(1.0, 0.0);
    // Holds H·M_{k-1}.
    let mut hm = ComplexMatrix::zeros(n).expect("n >= 1");
    for k in 1..=n {
        let mut m = hm;
        let shift = c[n - k + 1];
        {
            let data = m.data_mut();
            for i in 0..n {
                data[i * n + i] += shift;
            }
        }
        hm = h * &m;
        c[n - k] = -hm.trace() / k as f64;
    }
    c.into_iter().map(|z| z.re).collect()
}
