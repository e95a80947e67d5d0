//! Breit-Rabi matrix from explicit matrix elements over the product basis
//! `|m_I, m_S>`, using `I·S = I_z S_z + (I+ S- + I- S+)/2`.
//!
//! Nothing here touches [`crate::matrix::kron`] or the spin-matrix module, so
//! agreement with [`crate::hamiltonian::build_breit_rabi`] is an independent
//! check of the Kronecker construction.

use crate::error::Result;
use crate::hamiltonian::BreitRabiParams;
use crate::matrix::{Complex64, ComplexMatrix};

/// A product-basis state, projections stored doubled.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ProductBasisIndex {
    pub twice_m_i: i32,
    pub twice_m_s: i32,
}

/// Enumerates the product basis with `m_I` descending in the outer loop and
/// `m_S` descending in the inner loop.
pub fn product_basis(two_j_i: u32, two_j_s: u32) -> Vec<ProductBasisIndex> {
    let (ti, ts) = (two_j_i as i32, two_j_s as i32);
    let mut out = Vec::with_capacity(((ti + 1) * (ts + 1)) as usize);
    let mut mi = ti;
    while mi >= -ti {
        let mut ms = ts;
        while ms >= -ts {
            out.push(ProductBasisIndex {
                twice_m_i: mi,
                twice_m_s: ms,
            });
            ms -= 2;
        }
        mi -= 2;
    }
    out
}

/// `<j, m±1| J± |j, m>` with everything doubled: `sqrt(j(j+1) - m(m±1))`.
/// Returns 0 outside the multiplet.
fn ladder(two_j: i32, two_m: i32, raise: bool) -> f64 {
    let two_m_new = if raise { two_m + 2 } else { two_m - 2 };
    if two_m_new.abs() > two_j {
        return 0.0;
    }
    // 4 [j(j+1) - m(m±1)] = 2j(2j+2) - 2m(2m±2)
    let shift = if raise { 2 } else { -2 };
    let quad = two_j * (two_j + 2) - two_m * (two_m + shift);
    (f64::from(quad) / 4.0).sqrt()
}

/// Matrix element `<bra| H_BR |ket>` for electron spin 1/2.
fn element(p: &BreitRabiParams, bra: ProductBasisIndex, ket: ProductBasisIndex) -> f64 {
    let two_j_i = p.nuclear_spin.two_j() as i32;
    let two_j_s = 1;
    let (mi, ms) = (
        f64::from(ket.twice_m_i) / 2.0,
        f64::from(ket.twice_m_s) / 2.0,
    );

    if bra == ket {
        return p.hyperfine * mi * ms + p.field * (p.electron_zeeman * ms + p.nuclear_zeeman * mi);
    }
    let d_i = bra.twice_m_i - ket.twice_m_i;
    let d_s = bra.twice_m_s - ket.twice_m_s;
    match (d_i, d_s) {
        // I+ S-
        (2, -2) => {
            0.5 * p.hyperfine
                * ladder(two_j_i, ket.twice_m_i, true)
                * ladder(two_j_s, ket.twice_m_s, false)
        }
        // I- S+
        (-2, 2) => {
            0.5 * p.hyperfine
                * ladder(two_j_i, ket.twice_m_i, false)
                * ladder(two_j_s, ket.twice_m_s, true)
        }
        _ => 0.0,
    }
}

pub fn build_breit_rabi_basis(p: &BreitRabiParams) -> Result<ComplexMatrix> {
    let basis = product_basis(p.nuclear_spin.two_j(), 1);
    ComplexMatrix::from_fn(basis.len(), |r, c| {
        Complex64::new(element(p, basis[r], basis[c]), 0.0)
    })
}
