//! Spin matrices `Jx, Jy, Jz` for arbitrary spin `j`, in units of ħ.
//!
//! Basis order is **descending** in `m`: row 0 is `m = +j`, the last row is
//! `m = -j`. With this order `Jz = diag(j, j-1, ..., -j)` and the raising
//! operator sits on the first superdiagonal. The opposite (ascending) order is
//! equally common elsewhere; all Hamiltonian layouts in this crate assume the
//! descending one.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::matrix::{Complex64, ComplexMatrix, ZERO};

/// A spin quantum number stored as the integer `2j`, so half-integers are exact.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SpinQuantum(u32);

impl SpinQuantum {
    pub const ZERO: SpinQuantum = SpinQuantum(0);
    pub const HALF: SpinQuantum = SpinQuantum(1);

    pub const fn from_twice(two_j: u32) -> Self {
        SpinQuantum(two_j)
    }

    pub const fn two_j(self) -> u32 {
        self.0
    }

    pub fn j(self) -> f64 {
        f64::from(self.0) / 2.0
    }

    /// Multiplicity `2j + 1`.
    pub const fn dim(self) -> usize {
        self.0 as usize + 1
    }

    /// Projections `2m` in basis order: `2j, 2j - 2, ..., -2j`.
    pub fn twice_m_values(self) -> impl Iterator<Item = i32> {
        let two_j = self.0 as i32;
        (0..=two_j).map(move |k| two_j - 2 * k)
    }
}

impl fmt::Display for SpinQuantum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_multiple_of(2) {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SpinMatrices {
    pub jx: ComplexMatrix,
    pub jy: ComplexMatrix,
    pub jz: ComplexMatrix,
}

impl SpinMatrices {
    /// Component by Cartesian index 0, 1, 2 = x, y, z.
    pub fn component(&self, axis: usize) -> &ComplexMatrix {
        match axis {
            0 => &self.jx,
            1 => &self.jy,
            2 => &self.jz,
            _ => panic!("spin component index {axis} out of range"),
        }
    }

    pub fn components(&self) -> [&ComplexMatrix; 3] {
        [&self.jx, &self.jy, &self.jz]
    }
}

/// Builds `Jx = (J+ + J-)/2`, `Jy = (J+ - J-)/(2i)`, `Jz` from the ladder
/// elements `<m+1|J+|m> = sqrt(j(j+1) - m(m+1))`.
pub fn spin_matrices(s: SpinQuantum) -> SpinMatrices {
    let n = s.dim();
    let j = s.j();
    let ms: Vec<f64> = s.twice_m_values().map(|tm| f64::from(tm) / 2.0).collect();

    // raising[r][c] nonzero only for r = c - 1 (m_r = m_c + 1)
    let raising = |r: usize, c: usize| -> f64 {
        if r + 1 == c {
            let m = ms[c];
            (j * (j + 1.0) - m * (m + 1.0)).sqrt()
        } else {
            0.0
        }
    };

    let jx = ComplexMatrix::from_fn(n, |r, c| {
        Complex64::new(0.5 * (raising(r, c) + raising(c, r)), 0.0)
    })
    .expect("spin matrix entries are finite");
    // (J+ - J-)/(2i) = -i/2 (J+ - J-)
    let jy = ComplexMatrix::from_fn(n, |r, c| {
        Complex64::new(0.0, -0.5 * (raising(r, c) - raising(c, r)))
    })
    .expect("spin matrix entries are finite");
    let jz = ComplexMatrix::from_fn(n, |r, c| {
        if r == c {
            Complex64::new(ms[r], 0.0)
        } else {
            ZERO
        }
    })
    .expect("spin matrix entries are finite");

    SpinMatrices { jx, jy, jz }
}
