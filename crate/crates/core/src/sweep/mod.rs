//! Magnetic-field sweeps: build `H(B)` on a grid, record sorted energy
//! levels, and locate crossings and avoided crossings between neighbours.

mod events;
mod output;
mod spec;

pub use events::{
    default_crossing_tol, detect_events, CrossingEvent, CrossingKind, DEFAULT_CROSSING_TOL_REL,
};
pub use output::{
    events_csv, events_path, format_matrix, format_significant, levels_csv, write_csv,
    SIGNIFICANT_DIGITS,
};
pub use spec::{parse_spec, FieldGrid, Model, SweepSpec, MAX_GRID_POINTS};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::spectral::{eigen_hermitian, DEFAULT_HERMITIAN_TOL};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SweepResult {
    /// Strictly increasing.
    pub field_values: Vec<f64>,
    /// One ascending row of eigenvalues per field value.
    pub levels: Vec<Vec<f64>>,
    pub events: Vec<CrossingEvent>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Execution {
    Serial,
    #[default]
    Parallel,
}

fn levels_at(model: &Model, field: f64) -> Result<Vec<f64>> {
    let h = model.hamiltonian(field)?;
    Ok(eigen_hermitian(&h, DEFAULT_HERMITIAN_TOL, false)?.eigenvalues)
}

/// Runs the sweep with grid points evaluated in parallel.
pub fn run_sweep(spec: &SweepSpec) -> Result<SweepResult> {
    run_sweep_with(spec, Execution::Parallel)
}

/// Runs the sweep. Rows are merged in grid order, so the output does not
/// depend on `exec`.
pub fn run_sweep_with(spec: &SweepSpec, exec: Execution) -> Result<SweepResult> {
    let field_values = spec.grid.values();
    let eval = |&b: &f64| {
        levels_at(&spec.model, b).map_err(|e| Error::AtField {
            field: b,
            source: Box::new(e),
        })
    };
    let levels: Vec<Vec<f64>> = match exec {
        Execution::Serial => field_values.iter().map(eval).collect::<Result<_>>()?,
        Execution::Parallel => field_values.par_iter().map(eval).collect::<Result<_>>()?,
    };
    let mut result = SweepResult {
        field_values,
        levels,
        events: Vec::new(),
    };
    let tol = spec
        .crossing_tol
        .unwrap_or_else(|| default_crossing_tol(&result.levels));
    result.events = detect_events(&result, tol);
    Ok(result)
}
