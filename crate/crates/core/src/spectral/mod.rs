//! Spectral analysis: Hermitian eigenvalues, characteristic polynomials,
//! block structure, and permutation equivalence.

mod blocks;
mod charpoly;
mod eigen;
mod permutation;

pub use blocks::{block_structure, eigenvalues_by_blocks, BlockStructure, DEFAULT_BLOCK_TOL};
pub use charpoly::{char_poly, CharPoly};
pub use eigen::{eigen_hermitian, Spectrum, CONVERGENCE, DEFAULT_HERMITIAN_TOL, MAX_SWEEPS};
pub use permutation::{permutation_conjugate, Permutation};

use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;

/// True iff the sorted spectra agree entrywise within
/// `tol * max(||H1||_F, ||H2||_F)`.
pub fn isospectral(h1: &ComplexMatrix, h2: &ComplexMatrix, tol: f64) -> Result<bool> {
    if h1.dim() != h2.dim() {
        return Err(Error::DimensionMismatch {
            op: "isospectral",
            left: h1.dim(),
            right: h2.dim(),
        });
    }
    let s1 = eigen_hermitian(h1, DEFAULT_HERMITIAN_TOL, false)?;
    let s2 = eigen_hermitian(h2, DEFAULT_HERMITIAN_TOL, false)?;
    let scale = h1.frobenius_norm().max(h2.frobenius_norm());
    Ok(s1
        .eigenvalues
        .iter()
        .zip(&s2.eigenvalues)
        .all(|(a, b)| (a - b).abs() <= tol * scale))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hamiltonian::{build_breit_rabi, BreitRabiParams};
    use crate::spin::SpinQuantum;

    #[test]
    fn sign_flipped_coupling_not_isospectral() {
        let h =
            build_breit_rabi(&BreitRabiParams::new(SpinQuantum::HALF, 1.3, 0.0, 1.0, 0.0)).unwrap();
        let g = build_breit_rabi(&BreitRabiParams::new(
            SpinQuantum::HALF,
            -1.3,
            0.0,
            1.0,
            0.0,
        ))
        .unwrap();
        assert!(!isospectral(&h, &g, 1e-11).unwrap());
        assert!(isospectral(&h, &h, 1e-11).unwrap());
    }

    #[test]
    fn zero_matrices_isospectral() {
        let z = ComplexMatrix::zeros(4).unwrap();
        assert!(isospectral(&z, &z, 1e-11).unwrap());
    }

    #[test]
    fn dimension_mismatch() {
        let a = ComplexMatrix::zeros(2).unwrap();
        let b = ComplexMatrix::zeros(3).unwrap();
        assert!(isospectral(&a, &b, 1e-11).is_err());
    }
}
