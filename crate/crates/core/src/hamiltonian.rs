//! Hamiltonian matrices for one nucleus coupled to one electron, assembled
//! purely from Kronecker products of spin matrices.
//!
//! The factor order is nucleus first: every two-spin operator is
//! `X_nucleus ⊗ Y_electron`, so the product basis runs over `m_I` in the
//! outer (slow) index and `m_S` in the inner (fast) index, both descending.

use std::ops::Add;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::{identity, ComplexMatrix};
use crate::spin::{spin_matrices, SpinQuantum};

/// Isotropic model `A I·S + B (a S_z + b I_z)` with electron spin 1/2.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct BreitRabiParams {
    pub nuclear_spin: SpinQuantum,
    /// Hyperfine coupling `A`.
    pub hyperfine: f64,
    /// Field intensity `B` along z.
    pub field: f64,
    /// Electronic Zeeman coefficient `a`.
    pub electron_zeeman: f64,
    /// Nuclear Zeeman coefficient `b`.
    pub nuclear_zeeman: f64,
}

impl BreitRabiParams {
    pub fn new(
        nuclear_spin: SpinQuantum,
        hyperfine: f64,
        field: f64,
        electron_zeeman: f64,
        nuclear_zeeman: f64,
    ) -> Self {
        Self {
            nuclear_spin,
            hyperfine,
            field,
            electron_zeeman,
            nuclear_zeeman,
        }
    }

    pub fn with_field(self, field: f64) -> Self {
        Self { field, ..self }
    }

    fn check_finite(&self) -> Result<()> {
        let values = [
            self.hyperfine,
            self.field,
            self.electron_zeeman,
            self.nuclear_zeeman,
        ];
        if values.iter().all(|v| v.is_finite()) {
            Ok(())
        } else {
            Err(Error::NonFinite("Breit-Rabi parameters".into()))
        }
    }
}

/// Coefficients of the general bilinear two-spin Hamiltonian
/// `Σ a_u I_u + Σ b_u S_u + Σ c[k][l] I_k S_l` (indices 0, 1, 2 = x, y, z).
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct CouplingCoefficients {
    /// `a_u`, multiplying `I_u ⊗ 1_S`.
    pub nuclear: [f64; 3],
    /// `b_u`, multiplying `1_I ⊗ S_u`.
    pub electron: [f64; 3],
    /// `c[k][l]`, multiplying `I_k ⊗ S_l`.
    pub bilinear: [[f64; 3]; 3],
}

impl CouplingCoefficients {
    fn check_finite(&self) -> Result<()> {
        let ok = self
            .nuclear
            .iter()
            .chain(&self.electron)
            .chain(self.bilinear.iter().flatten())
            .all(|v| v.is_finite());
        if ok {
            Ok(())
        } else {
            Err(Error::NonFinite("coupling coefficients".into()))
        }
    }
}

impl Add for CouplingCoefficients {
    type Output = CouplingCoefficients;

    fn add(self, rhs: Self) -> Self {
        let mut out = self;
        for u in 0..3 {
            out.nuclear[u] += rhs.nuclear[u];
            out.electron[u] += rhs.electron[u];
            for l in 0..3 {
                out.bilinear[u][l] += rhs.bilinear[u][l];
            }
        }
        out
    }
}

/// Anisotropic model `β_e Sᵀ·g·B + Sᵀ·A·I − β_n Iᵀ·g_n·B`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct TensorParams {
    pub beta_e: f64,
    pub beta_n: f64,
    pub g: [[f64; 3]; 3],
    pub g_n: [[f64; 3]; 3],
    pub hyperfine_tensor: [[f64; 3]; 3],
    pub field: [f64; 3],
}

/// `A (Ix⊗Sx + Iy⊗Sy + Iz⊗Sz) + B [a·1(2I+1)⊗Sz + b·Iz⊗1(2)]`.
pub fn build_breit_rabi(p: &BreitRabiParams) -> Result<ComplexMatrix> {
    p.check_finite()?;
    let nuc = spin_matrices(p.nuclear_spin);
    let el = spin_matrices(SpinQuantum::HALF);
    let id_nuc = identity(p.nuclear_spin.dim())?;
    let id_el = identity(2)?;

    let dot = &(&nuc.jx.kron(&el.jx) + &nuc.jy.kron(&el.jy)) + &nuc.jz.kron(&el.jz);
    let zeeman = &id_nuc.kron(&el.jz).scale(p.electron_zeeman)
        + &nuc.jz.kron(&id_el).scale(p.nuclear_zeeman);
    let h = &dot.scale(p.hyperfine) + &zeeman.scale(p.field);
    Ok(h)
}

/// General bilinear Hamiltonian for nuclear spin `nuclear` and electron spin
/// `electron`, dimension `(2I+1)(2S+1)`. Zero coefficients are skipped.
pub fn build_general(
    nuclear: SpinQuantum,
    electron: SpinQuantum,
    coeffs: &CouplingCoefficients,
) -> Result<ComplexMatrix> {
    coeffs.check_finite()?;
    let nuc = spin_matrices(nuclear);
    let el = spin_matrices(electron);
    let id_nuc = identity(nuclear.dim())?;
    let id_el = identity(electron.dim())?;

    let mut h = ComplexMatrix::zeros(nuclear.dim() * electron.dim())?;
    let mut accumulate = |coef: f64, term: ComplexMatrix| {
        if coef != 0.0 {
            h = &h + &term.scale(coef);
        }
    };
    for u in 0..3 {
        accumulate(coeffs.nuclear[u], nuc.component(u).kron(&id_el));
        accumulate(coeffs.electron[u], id_nuc.kron(el.component(u)));
    }
    for k in 0..3 {
        for l in 0..3 {
            accumulate(
                coeffs.bilinear[k][l],
                nuc.component(k).kron(el.component(l)),
            );
        }
    }
    Ok(h)
}

/// Rewrites the tensor form as bilinear coefficients:
/// `b_i = β_e Σ_k g[i][k] B_k`, `a_i = −β_n Σ_k g_n[i][k] B_k`, and
/// `c[k][l] = A[l][k]` since `Sᵀ·A·I = Σ A[l][k] S_l I_k`.
pub fn tensor_to_coefficients(t: &TensorParams) -> CouplingCoefficients {
    let mut out = CouplingCoefficients::default();
    for i in 0..3 {
        let g_b: f64 = (0..3).map(|k| t.g[i][k] * t.field[k]).sum();
        let gn_b: f64 = (0..3).map(|k| t.g_n[i][k] * t.field[k]).sum();
        out.electron[i] = t.beta_e * g_b;
        out.nuclear[i] = -t.beta_n * gn_b;
    }
    for k in 0..3 {
        for l in 0..3 {
            out.bilinear[k][l] = t.hyperfine_tensor[l][k];
        }
    }
    out
}
