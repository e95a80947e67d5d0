//! Cyclic Jacobi diagonalization of complex Hermitian matrices.
//!
//! Each rotation first removes the phase of `H[p,q]` with a diagonal unitary,
//! then applies the real symmetric Jacobi rotation that zeroes it. Sweeps run
//! over the upper triangle in row order until the off-diagonal Frobenius norm
//! drops below `CONVERGENCE * ||H||_F`.

use crate::error::{Error, Result};
use crate::matrix::{Complex64, ComplexMatrix, ZERO};

/// Sweep budget before giving up.
pub const MAX_SWEEPS: usize = 50;
/// Off-diagonal norm target, relative to the Frobenius norm of the input.
pub const CONVERGENCE: f64 = 1e-13;
/// Default Hermiticity tolerance used by callers that do not pick their own.
pub const DEFAULT_HERMITIAN_TOL: f64 = 1e-12;

#[derive(Clone, Debug, PartialEq)]
pub struct Spectrum {
    /// Ascending.
    pub eigenvalues: Vec<f64>,
    /// Column `k` is the eigenvector for `eigenvalues[k]`.
    pub eigenvectors: Option<ComplexMatrix>,
}

impl Spectrum {
    /// `||H v_k - λ_k v_k||_2` for each eigenpair, if vectors were requested.
    pub fn residuals(&self, h: &ComplexMatrix) -> Option<Vec<f64>> {
        let v = self.eigenvectors.as_ref()?;
        let n = h.dim();
        let res = self
            .eigenvalues
            .iter()
            .enumerate()
            .map(|(k, &lambda)| {
                (0..n)
                    .map(|i| {
                        let hv: Complex64 = (0..n).map(|j| h.get(i, j) * v.get(j, k)).sum();
                        (hv - v.get(i, k) * lambda).norm_sqr()
                    })
                    .sum::<f64>()
                    .sqrt()
            })
            .collect();
        Some(res)
    }
}

fn off_norm(a: &[Complex64], n: usize) -> f64 {
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[i * n + j].norm_sqr();
            }
        }
    }
    s.sqrt()
}

/// Eigenvalues (ascending) and optionally eigenvectors of a Hermitian matrix.
///
/// Fails with [`Error::NotHermitian`] if `h` is not Hermitian within `tol`
/// and with [`Error::NoConvergence`] if the sweep budget runs out.
pub fn eigen_hermitian(h: &ComplexMatrix, tol: f64, want_vectors: bool) -> Result<Spectrum> {
    if !h.is_hermitian(tol) {
        return Err(Error::NotHermitian {
            deviation: h.hermitian_deviation(),
        });
    }
    let n = h.dim();
    // Work on the exactly Hermitian part.
    let mut a: Vec<Complex64> = vec![ZERO; n * n];
    for i in 0..n {
        a[i * n + i] = Complex64::new(h.get(i, i).re, 0.0);
        for j in (i + 1)..n {
            let z = (h.get(i, j) + h.get(j, i).conj()) * 0.5;
            a[i * n + j] = z;
            a[j * n + i] = z.conj();
        }
    }
    let mut v: Option<Vec<Complex64>> = want_vectors.then(|| {
        let mut id = vec![ZERO; n * n];
        for i in 0..n {
            id[i * n + i] = Complex64::new(1.0, 0.0);
        }
        id
    });

    let norm = h.frobenius_norm();
    let target = CONVERGENCE * norm;
    let negligible = 1e-6 * target;
    let mut sweeps = 0;
    loop {
        let off = off_norm(&a, n);
        if off <= target {
            break;
        }
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence {
                sweeps,
                off_norm: off,
            });
        }
        sweeps += 1;
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                let r = apq.norm();
                if r <= negligible {
                    continue;
                }
                rotate(&mut a, v.as_deref_mut(), n, p, q, apq, r);
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    let diag: Vec<f64> = (0..n).map(|i| a[i * n + i].re).collect();
    order.sort_by(|&x, &y| diag[x].total_cmp(&diag[y]).then(x.cmp(&y)));
    let eigenvalues = order.iter().map(|&i| diag[i]).collect();
    let eigenvectors = v.map(|v| {
        let mut sorted = vec![ZERO; n * n];
        for (k, &src) in order.iter().enumerate() {
            for i in 0..n {
                sorted[i * n + k] = v[i * n + src];
            }
        }
        ComplexMatrix::from_raw(n, sorted)
    });
    Ok(Spectrum {
        eigenvalues,
        eigenvectors,
    })
}

fn rotate(
    a: &mut [Complex64],
    v: Option<&mut [Complex64]>,
    n: usize,
    p: usize,
    q: usize,
    apq: Complex64,
    r: f64,
) {
    let phase = apq / r;
    let app = a[p * n + p].re;
    let aqq = a[q * n + q].re;
    let theta = (aqq - app) / (2.0 * r);
    let t = if theta == 0.0 {
        1.0
    } else {
        theta.signum() / (theta.abs() + theta.hypot(1.0))
    };
    let c = 1.0 / t.hypot(1.0);
    let s = t * c;
    // U = diag(1, conj(phase)) on (p, q), then the real rotation [[c, s], [-s, c]].
    let u_qp = -phase.conj() * s;
    let u_qq = phase.conj() * c;

    for k in 0..n {
        let akp = a[k * n + p];
        let akq = a[k * n + q];
        a[k * n + p] = akp * c + akq * u_qp;
        a[k * n + q] = akp * s + akq * u_qq;
    }
    for k in 0..n {
        let apk = a[p * n + k];
        let aqk = a[q * n + k];
        a[p * n + k] = apk * c + aqk * u_qp.conj();
        a[q * n + k] = apk * s + aqk * u_qq.conj();
    }
    a[p * n + q] = ZERO;
    a[q * n + p] = ZERO;
    a[p * n + p] = Complex64::new(app - t * r, 0.0);
    a[q * n + q] = Complex64::new(aqq + t * r, 0.0);

    if let Some(v) = v {
        for k in 0..n {
            let vkp = v[k * n + p];
            let vkq = v[k * n + q];
            v[k * n + p] = vkp * c + vkq * u_qp;
            v[k * n + q] = vkp * s + vkq * u_qq;
        }
    }
}
