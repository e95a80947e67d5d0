//! Matrix representations of coupled spin Hamiltonians built directly from
//! Kronecker products of spin matrices, plus the tools to analyze them:
//! Hermitian eigenvalues, characteristic polynomials, block structure,
//! permutation equivalence, and magnetic-field sweeps.
//!
//! Conventions used throughout:
//! - spin bases are ordered by descending `m`;
//! - two-spin operators are `nucleus ⊗ electron`;
//! - energies and couplings are plain `f64` in whatever units the caller uses.

#![allow(clippy::needless_range_loop)]

pub mod check;
pub mod error;
pub mod hamiltonian;
pub mod matrix;
pub mod oracle;
pub mod spectral;
pub mod spin;
pub mod sweep;

pub use error::{Error, Result};
pub use hamiltonian::{
    build_breit_rabi, build_general, tensor_to_coefficients, BreitRabiParams, CouplingCoefficients,
    TensorParams,
};
pub use matrix::{identity, kron, Complex64, ComplexMatrix};
pub use oracle::build_breit_rabi_basis;
pub use spectral::{
    block_structure, char_poly, eigen_hermitian, isospectral, permutation_conjugate,
    BlockStructure, CharPoly, Permutation, Spectrum,
};
pub use spin::{spin_matrices, SpinMatrices, SpinQuantum};
