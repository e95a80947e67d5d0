//! Level crossings and avoided crossings in a field sweep.
//!
//! Levels are tracked by ascending sort, so at a true crossing the gap
//! `g = E[i+1] - E[i]` between neighbours is `|d(B)|` for a smooth signed
//! difference `d`, with a kink at the root. At an avoided crossing `g` is
//! itself smooth and `g²` is locally parabolic. Each interior local minimum
//! of `g` is refined by parabolic interpolation through its three bracketing
//! grid points under whichever of the two pictures fits those points more
//! smoothly (smaller second divided difference).

use serde::Serialize;

use super::SweepResult;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CrossingKind {
    Crossing,
    Avoided,
}

impl CrossingKind {
    pub fn as_str(self) -> &'static str {
        match self {
            CrossingKind::Crossing => "crossing",
            CrossingKind::Avoided => "avoided",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct CrossingEvent {
    pub kind: CrossingKind,
    /// 0-based indices into the ascending level list.
    pub level_pair: (usize, usize),
    pub field_at_extremum: f64,
    pub gap_at_extremum: f64,
}

/// Relative factor for the default crossing threshold.
pub const DEFAULT_CROSSING_TOL_REL: f64 = 1e-9;

/// `1e-9` times the largest level magnitude in the sweep.
pub fn default_crossing_tol(levels: &[Vec<f64>]) -> f64 {
    let scale = levels.iter().flatten().fold(0.0_f64, |m, e| m.max(e.abs()));
    DEFAULT_CROSSING_TOL_REL * scale
}

/// Second divided difference of three points.
fn curvature(x: [f64; 3], y: [f64; 3]) -> f64 {
    ((y[2] - y[1]) / (x[2] - x[1]) - (y[1] - y[0]) / (x[1] - x[0])) / (x[2] - x[0])
}

/// Interpolating parabola `y ≈ a (x - x1)^2 + b (x - x1) + y1`.
fn parabola(x: [f64; 3], y: [f64; 3]) -> (f64, f64) {
    let a = curvature(x, y);
    let slope_left = (y[1] - y[0]) / (x[1] - x[0]);
    // derivative at x1: slope of left chord plus a * (x1 - x0)
    let b = slope_left + a * (x[1] - x[0]);
    (a, b)
}

/// Root of the interpolating parabola of `(x, y)` inside `[lo, hi]`, where
/// `y` changes sign (or vanishes) on that interval.
fn bracketed_root(x: [f64; 3], y: [f64; 3], lo: f64, hi: f64) -> f64 {
    let (a, b) = parabola(x, y);
    let c = y[1];
    let x1 = x[1];
    let in_range =
        |t: f64| t.is_finite() && t >= lo - 1e-12 * (hi - lo) && t <= hi + 1e-12 * (hi - lo);
    let linear = -c / b;
    let candidates: Vec<f64> = if a.abs() <= 1e-300 || c == 0.0 {
        vec![if c == 0.0 { 0.0 } else { linear }]
    } else {
        let disc = b * b - 4.0 * a * c;
        if disc < 0.0 {
            vec![linear]
        } else {
            // stable quadratic roots
            let q = -0.5 * (b + b.signum() * disc.sqrt());
            vec![q / a, c / q]
        }
    };
    candidates
        .into_iter()
        .map(|t| x1 + t)
        .filter(|&t| in_range(t))
        .min_by(|p, q| {
            (p - (lo + hi) / 2.0)
                .abs()
                .total_cmp(&(q - (lo + hi) / 2.0).abs())
        })
        .map(|t| t.clamp(lo, hi))
        // Fall back to the chord root.
        .unwrap_or_else(|| {
            let (ylo, yhi) = if lo == x[0] {
                (y[0], y[1])
            } else {
                (y[1], y[2])
            };
            lo + (hi - lo) * ylo / (ylo - yhi)
        })
}

fn refine(x: [f64; 3], g: [f64; 3], tol: f64) -> (CrossingKind, f64, f64) {
    let smooth = curvature(x, g).abs();
    // Root lies on the side of the smaller neighbour.
    let (signed, lo, hi) = if g[2] < g[0] {
        ([g[0], g[1], -g[2]], x[1], x[2])
    } else {
        ([g[0], -g[1], -g[2]], x[0], x[1])
    };
    let kinked = curvature(x, signed).abs();

    if kinked < smooth {
        let root = bracketed_root(x, signed, lo, hi);
        return (CrossingKind::Crossing, root, 0.0);
    }

    let sq = g.map(|v| v * v);
    let (a, b) = parabola(x, sq);
    let (field, min_sq) = if a > 0.0 {
        let t = (-b / (2.0 * a)).clamp(x[0] - x[1], x[2] - x[1]);
        (x[1] + t, sq[1] + b * t + a * t * t)
    } else {
        (x[1], sq[1])
    };
    let gap = min_sq.max(0.0).sqrt().min(g[1]);
    let kind = if gap <= tol {
        CrossingKind::Crossing
    } else {
        CrossingKind::Avoided
    };
    (kind, field, gap)
}

/// Finds crossings and avoided crossings between adjacent sorted levels.
///
/// An event needs an isolated interior minimum of the gap: the gap must drop
/// strictly from the left neighbour and not rise to the right, and gaps that
/// sit at or below `crossing_tol` on two consecutive grid points are treated
/// as identically degenerate and skipped. Events come back sorted by field.
pub fn detect_events(result: &SweepResult, crossing_tol: f64) -> Vec<CrossingEvent> {
    let b = &result.field_values;
    let levels = &result.levels;
    if b.len() < 3 || levels.is_empty() {
        return Vec::new();
    }
    let n = levels[0].len();
    let mut events = Vec::new();
    for i in 0..n.saturating_sub(1) {
        let gaps: Vec<f64> = levels
            .iter()
            .map(|row| (row[i + 1] - row[i]).max(0.0))
            .collect();
        for k in 1..gaps.len() - 1 {
            let (gl, gk, gr) = (gaps[k - 1], gaps[k], gaps[k + 1]);
            if !(gk < gl && gk <= gr) {
                continue;
            }
            if gk <= crossing_tol && (gl <= crossing_tol || gr <= crossing_tol) {
                continue;
            }
            let (kind, field, gap) = refine([b[k - 1], b[k], b[k + 1]], [gl, gk, gr], crossing_tol);
            events.push(CrossingEvent {
                kind,
                level_pair: (i, i + 1),
                field_at_extremum: field,
                gap_at_extremum: gap,
            });
        }
    }
    events.sort_by(|p, q| {
        p.field_at_extremum
            .total_cmp(&q.field_at_extremum)
            .then(p.level_pair.cmp(&q.level_pair))
    });
    events
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sweep(fields: Vec<f64>, f: impl Fn(f64) -> Vec<f64>) -> SweepResult {
        let levels = fields
            .iter()
            .map(|&x| {
                let mut l = f(x);
                l.sort_by(f64::total_cmp);
                l
            })
            .collect();
        SweepResult {
            field_values: fields,
            levels,
            events: Vec::new(),
        }
    }

    fn grid(start: f64, stop: f64, step: f64) -> Vec<f64> {
        let n = ((stop - start) / step + 1e-9).floor() as usize + 1;
        (0..n).map(|k| start + k as f64 * step).collect()
    }

    #[test]
    fn linear_crossing_located_exactly() {
        let r = sweep(grid(0.0, 2.0, 0.1), |x| vec![x - 0.737, 0.0]);
        let ev = detect_events(&r, 1e-9);
        assert_eq!(ev.len(), 1);
        assert_eq!(ev[0].kind, CrossingKind::Crossing);
        assert_eq!(ev[0].level_pair, (0, 1));
        assert!((ev[0].field_at_extremum - 0.737).abs() < 1e-12);
        assert_eq!(ev[0].gap_at_extremum, 0.0);
    }

    #[test]
    fn curved_crossing() {
        // x^2 - 2 crosses 0 at sqrt(2)
        let r = sweep(grid(0.0, 3.0, 0.01), |x| vec![x * x - 2.0, 0.0]);
        let ev = detect_events(&r, 1e-9);
        assert_eq!(ev.len(), 1);
        assert_eq!(ev[0].kind, CrossingKind::Crossing);
        assert!((ev[0].field_at_extremum - 2f64.sqrt()).abs() < 1e-9);
    }

    #[test]
    fn hyperbolic_avoided_crossing() {
        // two-level model: gap sqrt(delta^2 + (x - x0)^2)
        let (x0, delta) = (1.2345, 0.05);
        let r = sweep(grid(0.0, 3.0, 0.01), |x| {
            let h = 0.5 * (delta * delta + (x - x0) * (x - x0)).sqrt();
            vec![-h, h]
        });
        let ev = detect_events(&r, 1e-9);
        assert_eq!(ev.len(), 1);
        assert_eq!(ev[0].kind, CrossingKind::Avoided);
        assert!((ev[0].field_at_extremum - x0).abs() < 1e-10);
        assert!((ev[0].gap_at_extremum - delta).abs() < 1e-10);
    }

    #[test]
    fn crossing_on_grid_point() {
        let r = sweep(grid(0.0, 2.0, 0.25), |x| vec![x - 1.0, 1.0 - x]);
        let ev = detect_events(&r, 1e-9);
        assert_eq!(ev.len(), 1);
        assert_eq!(ev[0].kind, CrossingKind::Crossing);
        assert!((ev[0].field_at_extremum - 1.0).abs() < 1e-12);
    }

    #[test]
    fn degenerate_levels_produce_nothing() {
        let r = sweep(grid(0.0, 1.0, 0.1), |_| vec![0.0; 4]);
        assert!(detect_events(&r, 0.0).is_empty());
        // exact degeneracy with rounding-sized noise
        let r = sweep(grid(0.0, 1.0, 0.1), |x| {
            let noise = 1e-17 * ((x * 37.0).sin());
            vec![x, x + noise, -x]
        });
        assert!(detect_events(&r, 1e-9).is_empty());
    }

    #[test]
    fn boundary_minimum_is_not_an_event() {
        let r = sweep(grid(0.0, 1.0, 0.1), |x| vec![0.0, 1.0 + x]);
        assert!(detect_events(&r, 1e-9).is_empty());
        let r = sweep(grid(0.0, 1.0, 0.5), |x| vec![0.0, x]);
        assert!(detect_events(&r, 1e-9).is_empty());
    }

    #[test]
    fn too_few_points() {
        let r = sweep(vec![0.0, 1.0], |x| vec![x - 0.5, 0.0]);
        assert!(detect_events(&r, 1e-9).is_empty());
    }
}
