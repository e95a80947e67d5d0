//! JSON sweep specifications.
//!
//! ```json
//! {
//!   "model": "breit_rabi",
//!   "two_j_i": 1,
//!   "a_hf": 1.0, "a_e": 2.0, "b_n": 0.001,
//!   "field": {"start": 0.0, "stop": 10.0, "step": 0.01},
//!   "output": "levels.csv"
//! }
//! ```
//!
//! `general_tensor` replaces `a_hf`/`a_e`/`b_n` with a `tensor` object holding
//! `g`, `g_n`, `a_tensor` (3x3 nested arrays), `beta_e`, `beta_n` and
//! `field_dir` (3 reals, normalized on load). Unknown keys are rejected.

use std::collections::BTreeMap;
use std::path::PathBuf;

use serde_json::Value;

use crate::error::{Error, Result};
use crate::hamiltonian::{
    build_breit_rabi, build_general, tensor_to_coefficients, BreitRabiParams, TensorParams,
};
use crate::matrix::ComplexMatrix;
use crate::spin::SpinQuantum;

/// Upper bound on grid size; protects against typos like `step: 1e-12`.
pub const MAX_GRID_POINTS: usize = 10_000_000;

#[derive(Clone, Debug, PartialEq)]
#[allow(clippy::large_enum_variant)]
pub enum Model {
    BreitRabi {
        nuclear_spin: SpinQuantum,
        hyperfine: f64,
        electron_zeeman: f64,
        nuclear_zeeman: f64,
    },
    GeneralTensor {
        nuclear_spin: SpinQuantum,
        electron_spin: SpinQuantum,
        beta_e: f64,
        beta_n: f64,
        g: [[f64; 3]; 3],
        g_n: [[f64; 3]; 3],
        hyperfine_tensor: [[f64; 3]; 3],
        /// Unit vector.
        field_dir: [f64; 3],
    },
}

impl Model {
    /// Hamiltonian at field intensity `field`.
    pub fn hamiltonian(&self, field: f64) -> Result<ComplexMatrix> {
        match *self {
            Model::BreitRabi {
                nuclear_spin,
                hyperfine,
                electron_zeeman,
                nuclear_zeeman,
            } => build_breit_rabi(&BreitRabiParams::new(
                nuclear_spin,
                hyperfine,
                field,
                electron_zeeman,
                nuclear_zeeman,
            )),
            Model::GeneralTensor {
                nuclear_spin,
                electron_spin,
                beta_e,
                beta_n,
                g,
                g_n,
                hyperfine_tensor,
                field_dir,
            } => {
                let t = TensorParams {
                    beta_e,
                    beta_n,
                    g,
                    g_n,
                    hyperfine_tensor,
                    field: field_dir.map(|d| d * field),
                };
                build_general(nuclear_spin, electron_spin, &tensor_to_coefficients(&t))
            }
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            Model::BreitRabi { nuclear_spin, .. } => nuclear_spin.dim() * 2,
            Model::GeneralTensor {
                nuclear_spin,
                electron_spin,
                ..
            } => nuclear_spin.dim() * electron_spin.dim(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FieldGrid {
    pub start: f64,
    pub stop: f64,
    pub step: f64,
}

impl FieldGrid {
    /// Number of points `start + k*step` not exceeding `stop` (up to a
    /// relative slack of 1e-9 steps, so `0..10 step 0.01` has 1001 points).
    pub fn len(&self) -> usize {
        ((self.stop - self.start) / self.step + 1e-9).floor() as usize + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn values(&self) -> Vec<f64> {
        (0..self.len())
            .map(|k| self.start + k as f64 * self.step)
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepSpec {
    pub model: Model,
    pub grid: FieldGrid,
    pub output: Option<PathBuf>,
    /// Absolute gap threshold; `None` means the scale-relative default.
    pub crossing_tol: Option<f64>,
}

/// Key-by-key reader over a JSON object that tracks the path for diagnostics
/// and rejects keys nobody asked for.
struct Fields<'a> {
    path: String,
    map: BTreeMap<&'a str, &'a Value>,
}

impl<'a> Fields<'a> {
    fn new(path: &str, value: &'a Value) -> Result<Self> {
        let obj = value
            .as_object()
            .ok_or_else(|| Error::spec(display_path(path), "expected a JSON object"))?;
        Ok(Self {
            path: path.to_string(),
            map: obj.iter().map(|(k, v)| (k.as_str(), v)).collect(),
        })
    }

    fn child(&self, key: &str) -> String {
        if self.path.is_empty() {
            key.to_string()
        } else {
            format!("{}.{}", self.path, key)
        }
    }

    fn take(&mut self, key: &str) -> Option<&'a Value> {
        self.map.remove(key)
    }

    fn require(&mut self, key: &str) -> Result<&'a Value> {
        self.take(key)
            .ok_or_else(|| Error::spec(self.child(key), format!("missing required key \"{key}\"")))
    }

    fn real(&mut self, key: &str) -> Result<f64> {
        let v = self.require(key)?;
        as_real(&self.child(key), v)
    }

    fn opt_real(&mut self, key: &str) -> Result<Option<f64>> {
        match self.take(key) {
            None => Ok(None),
            Some(v) => as_real(&self.child(key), v).map(Some),
        }
    }

    fn spin(&mut self, key: &str) -> Result<Option<SpinQuantum>> {
        let Some(v) = self.take(key) else {
            return Ok(None);
        };
        let n = v
            .as_u64()
            .filter(|&n| n <= 64)
            .ok_or_else(|| Error::spec(self.child(key), "expected an integer 2j in 0..=64"))?;
        Ok(Some(SpinQuantum::from_twice(n as u32)))
    }

    fn vec3(&mut self, key: &str) -> Result<[f64; 3]> {
        let path = self.child(key);
        let v = self.require(key)?;
        as_vec3(&path, v)
    }

    fn mat3(&mut self, key: &str) -> Result<[[f64; 3]; 3]> {
        let path = self.child(key);
        let v = self.require(key)?;
        let rows = v
            .as_array()
            .filter(|a| a.len() == 3)
            .ok_or_else(|| Error::spec(&path, "expected a 3x3 array of reals"))?;
        let mut out = [[0.0; 3]; 3];
        for (i, row) in rows.iter().enumerate() {
            out[i] = as_vec3(&format!("{path}[{i}]"), row)?;
        }
        Ok(out)
    }

    fn reject(&mut self, key: &str, why: &str) -> Result<()> {
        if self.map.contains_key(key) {
            return Err(Error::spec(self.child(key), why.to_string()));
        }
        Ok(())
    }

    fn finish(self) -> Result<()> {
        match self.map.keys().next() {
            None => Ok(()),
            Some(k) => Err(Error::spec(self.child(k), format!("unknown key \"{k}\""))),
        }
    }
}

fn display_path(path: &str) -> String {
    if path.is_empty() {
        "<root>".into()
    } else {
        path.into()
    }
}

fn as_real(path: &str, v: &Value) -> Result<f64> {
    let x = v
        .as_f64()
        .ok_or_else(|| Error::spec(path, "expected a real number"))?;
    if !x.is_finite() {
        return Err(Error::spec(path, "value must be finite"));
    }
    Ok(x)
}

fn as_vec3(path: &str, v: &Value) -> Result<[f64; 3]> {
    let items = v
        .as_array()
        .filter(|a| a.len() == 3)
        .ok_or_else(|| Error::spec(path, "expected an array of 3 reals"))?;
    let mut out = [0.0; 3];
    for (i, item) in items.iter().enumerate() {
        out[i] = as_real(&format!("{path}[{i}]"), item)?;
    }
    Ok(out)
}

/// Parses and validates a sweep specification document.
pub fn parse_spec(text: &str) -> Result<SweepSpec> {
    let root: Value = serde_json::from_str(text)
        .map_err(|e| Error::spec("<root>", format!("invalid JSON: {e}")))?;
    let mut top = Fields::new("", &root)?;

    let model_name = top
        .require("model")?
        .as_str()
        .ok_or_else(|| Error::spec("model", "expected a string"))?;
    let nuclear_spin = top
        .spin("two_j_i")?
        .ok_or_else(|| Error::spec("two_j_i", "missing required key \"two_j_i\""))?;
    let electron_spin = top.spin("two_j_s")?.unwrap_or(SpinQuantum::HALF);

    let model = match model_name {
        "breit_rabi" => {
            if electron_spin != SpinQuantum::HALF {
                return Err(Error::spec(
                    "two_j_s",
                    "breit_rabi requires electron spin 1/2 (two_j_s = 1)",
                ));
            }
            top.reject("tensor", "not used by model breit_rabi")?;
            Model::BreitRabi {
                nuclear_spin,
                hyperfine: top.real("a_hf")?,
                electron_zeeman: top.real("a_e")?,
                nuclear_zeeman: top.real("b_n")?,
            }
        }
        "general_tensor" => {
            for key in ["a_hf", "a_e", "b_n"] {
                top.reject(key, "not used by model general_tensor")?;
            }
            let tensor_value = top.require("tensor")?;
            let mut t = Fields::new("tensor", tensor_value)?;
            let g = t.mat3("g")?;
            let g_n = t.mat3("g_n")?;
            let hyperfine_tensor = t.mat3("a_tensor")?;
            let beta_e = t.real("beta_e")?;
            let beta_n = t.real("beta_n")?;
            let dir = t.vec3("field_dir")?;
            t.finish()?;
            let norm = dir.iter().map(|x| x * x).sum::<f64>().sqrt();
            if norm == 0.0 {
                return Err(Error::spec("tensor.field_dir", "direction must be nonzero"));
            }
            Model::GeneralTensor {
                nuclear_spin,
                electron_spin,
                beta_e,
                beta_n,
                g,
                g_n,
                hyperfine_tensor,
                field_dir: dir.map(|x| x / norm),
            }
        }
        other => {
            return Err(Error::spec(
                "model",
                format!(
                    "unknown model \"{other}\" (expected \"breit_rabi\" or \"general_tensor\")"
                ),
            ))
        }
    };

    let field_value = top.require("field")?;
    let mut f = Fields::new("field", field_value)?;
    let grid = FieldGrid {
        start: f.real("start")?,
        stop: f.real("stop")?,
        step: f.real("step")?,
    };
    f.finish()?;
    if grid.step <= 0.0 {
        return Err(Error::spec("field.step", "step must be positive"));
    }
    if grid.stop <= grid.start {
        return Err(Error::spec("field.stop", "stop must exceed start"));
    }
    let span = (grid.stop - grid.start) / grid.step;
    if !span.is_finite() || span + 1.0 > MAX_GRID_POINTS as f64 {
        return Err(Error::spec(
            "field.step",
            format!("grid exceeds {MAX_GRID_POINTS} points"),
        ));
    }
    if grid.len() < 2 {
        return Err(Error::spec(
            "field.step",
            "grid must contain at least 2 points",
        ));
    }

    let output = match top.take("output") {
        None => None,
        Some(v) => {
            Some(PathBuf::from(v.as_str().ok_or_else(|| {
                Error::spec("output", "expected a string path")
            })?))
        }
    };
    let crossing_tol = top.opt_real("crossing_tol")?;
    if matches!(crossing_tol, Some(t) if t < 0.0) {
        return Err(Error::spec("crossing_tol", "must be non-negative"));
    }
    top.finish()?;

    Ok(SweepSpec {
        model,
        grid,
        output,
        crossing_tol,
    })
}
