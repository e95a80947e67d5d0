//! Test-only oracles: closed-form matrices and polynomials written out by
//! hand, a pivoted-LU determinant, and a scalar root finder. None of these
//! call into the library's construction or spectral code.

#![allow(dead_code)]

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use spinkron::{Complex64, ComplexMatrix};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub fn draw(rng: &mut StdRng, lo: f64, hi: f64) -> f64 {
    rng.gen_range(lo..hi)
}

pub fn random_matrix(rng: &mut StdRng, n: usize) -> ComplexMatrix {
    ComplexMatrix::from_fn(n, |_, _| {
        c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
    })
    .unwrap()
}

pub fn random_hermitian(rng: &mut StdRng, n: usize) -> ComplexMatrix {
    let m = random_matrix(rng, n);
    (&m + &m.adjoint()).scale(0.5)
}

/// Largest entry deviation relative to `max(1, max|expected|)`.
pub fn rel_dev(actual: &ComplexMatrix, expected: &ComplexMatrix) -> f64 {
    actual.max_abs_diff(expected).unwrap() / expected.max_abs().max(1.0)
}

/// Spin-1/2 matrices (½ Pauli), descending m.
pub fn half_pauli() -> [ComplexMatrix; 3] {
    let h = 0.5;
    [
        ComplexMatrix::from_rows(&[vec![c(0.0, 0.0), c(h, 0.0)], vec![c(h, 0.0), c(0.0, 0.0)]])
            .unwrap(),
        ComplexMatrix::from_rows(&[vec![c(0.0, 0.0), c(0.0, -h)], vec![c(0.0, h), c(0.0, 0.0)]])
            .unwrap(),
        ComplexMatrix::from_rows(&[vec![c(h, 0.0), c(0.0, 0.0)], vec![c(0.0, 0.0), c(-h, 0.0)]])
            .unwrap(),
    ]
}

/// Spin-3/2 matrices written out: Ix = ½[...], Iy = (1/2i)[...], Iz = ½ diag(3,1,-1,-3).
pub fn spin_three_halves() -> [ComplexMatrix; 3] {
    let r3 = 3f64.sqrt();
    let x = [
        [0.0, r3, 0.0, 0.0],
        [r3, 0.0, 2.0, 0.0],
        [0.0, 2.0, 0.0, r3],
        [0.0, 0.0, r3, 0.0],
    ];
    let y = [
        [0.0, r3, 0.0, 0.0],
        [-r3, 0.0, 2.0, 0.0],
        [0.0, -2.0, 0.0, r3],
        [0.0, 0.0, -r3, 0.0],
    ];
    let ix = ComplexMatrix::from_fn(4, |i, j| c(x[i][j] / 2.0, 0.0)).unwrap();
    // 1/(2i) = -i/2
    let iy = ComplexMatrix::from_fn(4, |i, j| c(0.0, -y[i][j] / 2.0)).unwrap();
    let iz = ComplexMatrix::diagonal(&[1.5, 0.5, -0.5, -1.5]).unwrap();
    [ix, iy, iz]
}

/// Breit-Rabi matrix for I = 1/2, written out entrywise (times 1/4).
pub fn breit_rabi_half(a_hf: f64, b: f64, a: f64, bn: f64) -> ComplexMatrix {
    let rows = vec![
        vec![a_hf + 2.0 * b * (a + bn), 0.0, 0.0, 0.0],
        vec![0.0, 2.0 * b * (bn - a) - a_hf, 2.0 * a_hf, 0.0],
        vec![0.0, 2.0 * a_hf, 2.0 * b * (a - bn) - a_hf, 0.0],
        vec![0.0, 0.0, 0.0, a_hf - 2.0 * b * (a + bn)],
    ];
    ComplexMatrix::from_real_rows(&rows).unwrap().scale(0.25)
}

/// Breit-Rabi matrix for I = 3/2, written out entrywise (times 1/4).
pub fn breit_rabi_three_halves(a_hf: f64, b: f64, a: f64, bn: f64) -> ComplexMatrix {
    let r3 = 3f64.sqrt();
    let mut m = vec![vec![0.0; 8]; 8];
    m[0][0] = 3.0 * a_hf + 2.0 * b * (a + 3.0 * bn);
    m[1][1] = 2.0 * b * (3.0 * bn - a) - 3.0 * a_hf;
    m[1][2] = 2.0 * r3 * a_hf;
    m[2][1] = 2.0 * r3 * a_hf;
    m[2][2] = a_hf + 2.0 * b * (a + bn);
    m[3][3] = 2.0 * b * (bn - a) - a_hf;
    m[3][4] = 4.0 * a_hf;
    m[4][3] = 4.0 * a_hf;
    m[4][4] = 2.0 * b * (a - bn) - a_hf;
    m[5][5] = a_hf - 2.0 * b * (a + bn);
    m[5][6] = 2.0 * r3 * a_hf;
    m[6][5] = 2.0 * r3 * a_hf;
    m[6][6] = 2.0 * b * (a - 3.0 * bn) - 3.0 * a_hf;
    m[7][7] = 3.0 * a_hf - 2.0 * b * (a + 3.0 * bn);
    ComplexMatrix::from_real_rows(&m).unwrap().scale(0.25)
}

/// Anisotropic I = S = 1/2 matrix written out, with only
/// a1..a3, b1..b3, c11, c12, c13, c23 (times 1/4).
pub fn anisotropic_half(
    a: [f64; 3],
    b: [f64; 3],
    c11: f64,
    c12: f64,
    c13: f64,
    c23: f64,
) -> ComplexMatrix {
    let [a1, a2, a3] = a;
    let [b1, b2, b3] = b;
    let rows = vec![
        vec![
            c(2.0 * (a3 + b3), 0.0),
            c(2.0 * b1, -2.0 * b2),
            c(2.0 * a1 + c13, -(2.0 * a2 + c23)),
            c(c11, -c12),
        ],
        vec![
            c(2.0 * b1, 2.0 * b2),
            c(2.0 * (a3 - b3), 0.0),
            c(c11, c12),
            c(2.0 * a1 - c13, c23 - 2.0 * a2),
        ],
        vec![
            c(2.0 * a1 + c13, 2.0 * a2 + c23),
            c(c11, -c12),
            c(2.0 * (b3 - a3), 0.0),
            c(2.0 * b1, -2.0 * b2),
        ],
        vec![
            c(c11, c12),
            c(2.0 * a1 - c13, 2.0 * a2 - c23),
            c(2.0 * b1, 2.0 * b2),
            c(-2.0 * (a3 + b3), 0.0),
        ],
    ];
    ComplexMatrix::from_rows(&rows).unwrap().scale(0.25)
}

/// Factored characteristic polynomial for I = 1/2.
pub fn charpoly_half(e: f64, a_hf: f64, b: f64, a: f64, bn: f64) -> f64 {
    (1.0 / 256.0)
        * (4.0 * e - a_hf - 2.0 * b * (a + bn))
        * (4.0 * e - a_hf + 2.0 * b * (a + bn))
        * (16.0 * e * e + 8.0 * a_hf * e - 3.0 * a_hf * a_hf - 4.0 * b * b * (a - bn) * (a - bn))
}

/// Factored characteristic polynomial for I = 3/2 ("4e" in the second
/// factor read as 4E).
pub fn charpoly_three_halves(e: f64, a_hf: f64, b: f64, a: f64, bn: f64) -> f64 {
    let aa = a_hf;
    (1.0 / 65536.0)
        * (4.0 * e - 3.0 * aa - 2.0 * b * (a + 3.0 * bn))
        * (4.0 * e - 3.0 * aa + 2.0 * b * (a + 3.0 * bn))
        * (16.0 * e * e + 8.0 * aa * e - 15.0 * aa * aa - 4.0 * b * b * (a - bn) * (a - bn))
        * (16.0 * e * e + 8.0 * e * (aa + 4.0 * b * bn) - 15.0 * aa * aa
            + 4.0 * b * (2.0 * aa * a + b * (a + bn) * (3.0 * bn - a)))
        * (16.0 * e * e + 8.0 * e * (aa - 4.0 * b * bn)
            - 15.0 * aa * aa
            - 4.0 * b * (2.0 * aa * a + b * (a + bn) * (a - 3.0 * bn)))
}

/// The four closed-form eigenvalues for I = 1/2, ascending: two linear roots
/// and the two quadratic-formula roots.
pub fn eigenvalues_half(a_hf: f64, b: f64, a: f64, bn: f64) -> Vec<f64> {
    let lin1 = (a_hf + 2.0 * b * (a + bn)) / 4.0;
    let lin2 = (a_hf - 2.0 * b * (a + bn)) / 4.0;
    // 16E^2 + 8AE - 3A^2 - 4B^2(a-b)^2 = 0
    let disc = 64.0 * a_hf * a_hf + 64.0 * (3.0 * a_hf * a_hf + 4.0 * b * b * (a - bn) * (a - bn));
    let q1 = (-8.0 * a_hf + disc.sqrt()) / 32.0;
    let q2 = (-8.0 * a_hf - disc.sqrt()) / 32.0;
    let mut v = vec![lin1, lin2, q1, q2];
    v.sort_by(f64::total_cmp);
    v
}

/// Row-reversal permutation matrix for I = 1/2 (U1), written out.
pub fn u1() -> ComplexMatrix {
    ComplexMatrix::from_real_rows(&[
        vec![0.0, 0.0, 0.0, 1.0],
        vec![0.0, 0.0, 1.0, 0.0],
        vec![0.0, 1.0, 0.0, 0.0],
        vec![1.0, 0.0, 0.0, 0.0],
    ])
    .unwrap()
}

/// Middle-swap permutation matrix for I = 1/2 (U2), written out.
pub fn u2() -> ComplexMatrix {
    ComplexMatrix::from_real_rows(&[
        vec![1.0, 0.0, 0.0, 0.0],
        vec![0.0, 0.0, 1.0, 0.0],
        vec![0.0, 1.0, 0.0, 0.0],
        vec![0.0, 0.0, 0.0, 1.0],
    ])
    .unwrap()
}

/// 8x8 anti-diagonal permutation matrix for I = 3/2, written out.
pub fn u8_reversal() -> ComplexMatrix {
    let rows: Vec<Vec<f64>> = (0..8)
        .map(|i| (0..8).map(|j| if i + j == 7 { 1.0 } else { 0.0 }).collect())
        .collect();
    ComplexMatrix::from_real_rows(&rows).unwrap()
}

/// Determinant by Gaussian elimination with partial pivoting.
pub fn det(m: &ComplexMatrix) -> Complex64 {
    let n = m.dim();
    let mut a: Vec<Vec<Complex64>> = m.rows().map(|r| r.to_vec()).collect();
    let mut d = c(1.0, 0.0);
    for col in 0..n {
        let piv = (col..n)
            .max_by(|&x, &y| a[x][col].norm().total_cmp(&a[y][col].norm()))
            .unwrap();
        if a[piv][col].norm() == 0.0 {
            return c(0.0, 0.0);
        }
        if piv != col {
            a.swap(piv, col);
            d = -d;
        }
        d *= a[col][col];
        for r in (col + 1)..n {
            let f = a[r][col] / a[col][col];
            for k in col..n {
                let v = a[col][k];
                a[r][k] -= f * v;
            }
        }
    }
    d
}

/// det(H - E·1) via the LU oracle.
pub fn det_shifted(h: &ComplexMatrix, e: f64) -> f64 {
    let n = h.dim();
    let shifted =
        ComplexMatrix::from_fn(n, |i, j| if i == j { h.get(i, j) - e } else { h.get(i, j) })
            .unwrap();
    det(&shifted).re
}

/// All roots of `f` on `[lo, hi]` found by scanning with `scan_step` for sign
/// changes (or exact zeros at scan points) and bisecting each bracket.
pub fn scalar_roots(f: impl Fn(f64) -> f64, lo: f64, hi: f64, scan_step: f64) -> Vec<f64> {
    let n = ((hi - lo) / scan_step).round() as usize;
    let xs: Vec<f64> = (0..=n)
        .map(|k| lo + (hi - lo) * k as f64 / n as f64)
        .collect();
    let mut roots = Vec::new();
    for w in xs.windows(2) {
        let (mut a, mut b) = (w[0], w[1]);
        let (fa, fb) = (f(a), f(b));
        if fa == 0.0 {
            roots.push(a);
            continue;
        }
        if fa.signum() == fb.signum() || fb == 0.0 {
            continue;
        }
        let mut fa = fa;
        for _ in 0..200 {
            let mid = 0.5 * (a + b);
            let fm = f(mid);
            if fm == 0.0 || (b - a) < 1e-15 {
                a = mid;
                b = mid;
                break;
            }
            if fm.signum() == fa.signum() {
                a = mid;
                fa = fm;
            } else {
                b = mid;
            }
        }
        roots.push(0.5 * (a + b));
    }
    if f(hi) == 0.0 {
        roots.push(hi);
    }
    roots
}
