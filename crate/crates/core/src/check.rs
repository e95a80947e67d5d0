//! Runtime invariant checks, run by `spinkron check`.
//!
//! Draws are seeded, so a given build always checks the same instances.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::error::Result;
use crate::hamiltonian::{build_breit_rabi, BreitRabiParams};
use crate::matrix::{identity, Complex64, ComplexMatrix};
use crate::oracle::build_breit_rabi_basis;
use crate::spectral::{
    block_structure, char_poly, eigen_hermitian, isospectral, permutation_conjugate, Permutation,
    DEFAULT_BLOCK_TOL,
};
use crate::spin::{spin_matrices, SpinQuantum};

#[derive(Clone, Debug)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

const SEED: u64 = 0x5eed_b4e1;

fn random_matrix(rng: &mut StdRng, n: usize) -> ComplexMatrix {
    ComplexMatrix::from_fn(n, |_, _| {
        Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
    })
    .expect("finite draws")
}

fn random_br(rng: &mut StdRng, two_j: u32) -> BreitRabiParams {
    BreitRabiParams::new(
        SpinQuantum::from_twice(two_j),
        rng.gen_range(-5.0..5.0),
        rng.gen_range(-5.0..5.0),
        rng.gen_range(-5.0..5.0),
        rng.gen_range(-5.0..5.0),
    )
}

fn outcome(name: &'static str, worst: f64, bound: f64) -> CheckOutcome {
    CheckOutcome {
        name,
        passed: worst <= bound,
        detail: format!("max deviation {worst:.3e} (bound {bound:.0e})"),
    }
}

fn spin_algebra() -> Result<CheckOutcome> {
    let mut worst: f64 = 0.0;
    for two_j in 0..=10 {
        let s = spin_matrices(SpinQuantum::from_twice(two_j));
        let i = Complex64::new(0.0, 1.0);
        let pairs = [
            (&s.jx, &s.jy, &s.jz),
            (&s.jy, &s.jz, &s.jx),
            (&s.jz, &s.jx, &s.jy),
        ];
        for (a, b, c) in pairs {
            worst = worst.max(a.commutator(b).max_abs_diff(&c.scale(i))?);
        }
        let j = f64::from(two_j) / 2.0;
        let casimir = &(&(&s.jx * &s.jx) + &(&s.jy * &s.jy)) + &(&s.jz * &s.jz);
        worst =
            worst.max(casimir.max_abs_diff(&identity(two_j as usize + 1)?.scale(j * (j + 1.0)))?);
    }
    Ok(outcome("spin commutators and Casimir", worst, 1e-13))
}

fn kron_identities(rng: &mut StdRng) -> Result<CheckOutcome> {
    let mut worst: f64 = 0.0;
    for _ in 0..20 {
        let (n, m) = (rng.gen_range(1..4), rng.gen_range(1..4));
        let (a, c) = (random_matrix(rng, n), random_matrix(rng, n));
        let (b, d) = (random_matrix(rng, m), random_matrix(rng, m));
        let lhs = &a.kron(&b) * &c.kron(&d);
        let rhs = (&a * &c).kron(&(&b * &d));
        worst = worst.max(lhs.max_abs_diff(&rhs)? / rhs.max_abs().max(1.0));
        let adj = a
            .kron(&b)
            .adjoint()
            .max_abs_diff(&a.adjoint().kron(&b.adjoint()))?;
        worst = worst.max(adj);
        let tr = (a.kron(&b).trace() - a.trace() * b.trace()).norm();
        worst = worst.max(tr / (a.trace() * b.trace()).norm().max(1.0));
    }
    Ok(outcome(
        "Kronecker mixed-product, adjoint, trace",
        worst,
        1e-13,
    ))
}

fn oracle_agreement(rng: &mut StdRng) -> Result<CheckOutcome> {
    let mut worst: f64 = 0.0;
    for two_j in 1..=7 {
        for _ in 0..10 {
            let p = random_br(rng, two_j);
            let h = build_breit_rabi(&p)?;
            let o = build_breit_rabi_basis(&p)?;
            worst = worst.max(h.max_abs_diff(&o)? / h.max_abs().max(1.0));
        }
    }
    Ok(outcome(
        "Kronecker vs ladder-operator construction",
        worst,
        1e-13,
    ))
}

fn spectra(rng: &mut StdRng) -> Result<CheckOutcome> {
    let mut worst: f64 = 0.0;
    for two_j in [1, 3, 5] {
        for _ in 0..5 {
            let h = build_breit_rabi(&random_br(rng, two_j))?;
            let norm = h.frobenius_norm().max(1.0);
            let s = eigen_hermitian(&h, 1e-12, true)?;
            for r in s.residuals(&h).unwrap_or_default() {
                worst = worst.max(r / norm);
            }
            let p = char_poly(&h);
            for &e in &s.eigenvalues {
                worst = worst.max(p.evaluate(e).abs() / p.magnitude_at(e).max(1.0) * 1e-3);
            }
            let rev = permutation_conjugate(&h, &Permutation::reversal(h.dim())?)?;
            if !isospectral(&h, &rev, 1e-11)? {
                worst = f64::INFINITY;
            }
        }
    }
    Ok(outcome(
        "eigen residuals, char-poly roots, isospectrality",
        worst,
        1e-11,
    ))
}

fn blocks() -> Result<CheckOutcome> {
    let mut ok = true;
    let mut detail = Vec::new();
    for (two_j, expected) in [(1, vec![1, 2, 1]), (3, vec![1, 2, 2, 2, 1])] {
        let h = build_breit_rabi(&BreitRabiParams::new(
            SpinQuantum::from_twice(two_j),
            1.1,
            0.7,
            2.3,
            0.4,
        ))?;
        let sizes = block_structure(&h, DEFAULT_BLOCK_TOL).block_sizes;
        ok &= sizes == expected;
        detail.push(format!("{sizes:?}"));
    }
    Ok(CheckOutcome {
        name: "Breit-Rabi block structure",
        passed: ok,
        detail: detail.join(" "),
    })
}

/// Runs every check. A check that errors out is reported as failed.
pub fn run_all() -> Vec<CheckOutcome> {
    let mut rng = StdRng::seed_from_u64(SEED);
    let results: Vec<(&'static str, Result<CheckOutcome>)> = vec![
        ("spin commutators and Casimir", spin_algebra()),
        (
            "Kronecker mixed-product, adjoint, trace",
            kron_identities(&mut rng),
        ),
        (
            "Kronecker vs ladder-operator construction",
            oracle_agreement(&mut rng),
        ),
        (
            "eigen residuals, char-poly roots, isospectrality",
            spectra(&mut rng),
        ),
        ("Breit-Rabi block structure", blocks()),
    ];
    results
        .into_iter()
        .map(|(name, r)| {
            r.unwrap_or_else(|e| CheckOutcome {
                name,
                passed: false,
                detail: e.to_string(),
            })
        })
        .collect()
}
