//! Sudden death / birth and extremum detection on sampled series.
//!
//! A value is "zero" below [`ZERO_LEVEL`]. Grid-level events are located by
//! linear interpolation between the bracketing samples. When the underlying
//! function can be evaluated off-grid, each event is polished: crossings by
//! bisection, extrema by golden-section search on the two neighbouring grid
//! intervals. Polishing also catches curves that touch zero between two
//! positive samples, which a sampled grid alone cannot see.

use super::ExperimentError;

pub const ZERO_LEVEL: f64 = 1e-6;

const GOLDEN_ITERATIONS: usize = 80;
const BISECTION_ITERATIONS: usize = 60;

/// Off-grid evaluator for a scalar series.
pub trait Probe {
    fn probe(&self, x: f64) -> Result<f64, ExperimentError>;
}

impl<F> Probe for F
where
    F: Fn(f64) -> Result<f64, ExperimentError>,
{
    fn probe(&self, x: f64) -> Result<f64, ExperimentError> {
        self(x)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CrossingKind {
    /// zero → positive
    Birth,
    /// positive → zero
    Death,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Crossing {
    pub kind: CrossingKind,
    /// Index of the sample after the crossing.
    pub index: usize,
    /// Linear interpolation of the ZERO_LEVEL crossing between samples.
    pub x: f64,
}

fn is_zero(y: f64) -> bool {
    y < ZERO_LEVEL
}

/// All ZERO_LEVEL crossings of the sampled series.
pub fn crossings(xs: &[f64], ys: &[f64]) -> Vec<Crossing> {
    let mut out = Vec::new();
    for i in 1..xs.len().min(ys.len()) {
        let (y0, y1) = (ys[i - 1], ys[i]);
        let kind = match (is_zero(y0), is_zero(y1)) {
            (true, false) => CrossingKind::Birth,
            (false, true) => CrossingKind::Death,
            _ => continue,
        };
        let frac = (ZERO_LEVEL - y0) / (y1 - y0);
        out.push(Crossing {
            kind,
            index: i,
            x: xs[i - 1] + frac.clamp(0.0, 1.0) * (xs[i] - xs[i - 1]),
        });
    }
    out
}

/// Interior indices where the sample is a local maximum above zero.
pub fn local_maxima(ys: &[f64]) -> Vec<usize> {
    (1..ys.len().saturating_sub(1))
        .filter(|&i| ys[i] > ys[i - 1] && ys[i] >= ys[i + 1] && !is_zero(ys[i]))
        .collect()
}

/// Interior indices where the sample is a positive local minimum.
pub fn positive_local_minima(ys: &[f64]) -> Vec<usize> {
    (1..ys.len().saturating_sub(1))
        .filter(|&i| ys[i] < ys[i - 1] && ys[i] <= ys[i + 1] && !is_zero(ys[i]))
        .collect()
}

/// Golden-section search for the maximum of `f` on [a, b]; returns (x, f(x)).
pub fn refine_max(f: &impl Probe, a: f64, b: f64) -> Result<(f64, f64), ExperimentError> {
    golden(f, a, b, 1.0)
}

/// Golden-section search for the minimum of `f` on [a, b]; returns (x, f(x)).
pub fn refine_min(f: &impl Probe, a: f64, b: f64) -> Result<(f64, f64), ExperimentError> {
    golden(f, a, b, -1.0)
}

fn golden(f: &impl Probe, a: f64, b: f64, sign: f64) -> Result<(f64, f64), ExperimentError> {
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let (mut lo, mut hi) = (a.min(b), a.max(b));
    let mut x1 = hi - inv_phi * (hi - lo);
    let mut x2 = lo + inv_phi * (hi - lo);
    let mut f1 = sign * f.probe(x1)?;
    let mut f2 = sign * f.probe(x2)?;
    for _ in 0..GOLDEN_ITERATIONS {
        if f1 >= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = sign * f.probe(x1)?;
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = sign * f.probe(x2)?;
        }
    }
    // Compare against the bracket ends too; an extremum may sit on the boundary.
    let mut best = if f1 >= f2 { (x1, f1) } else { (x2, f2) };
    for x in [a, b] {
        let v = sign * f.probe(x)?;
        if v > best.1 {
            best = (x, v);
        }
    }
    Ok((best.0, sign * best.1))
}

/// Bisection for the ZERO_LEVEL crossing inside [a, b] given endpoint sides.
pub fn refine_crossing(f: &impl Probe, a: f64, b: f64) -> Result<f64, ExperimentError> {
    let a_zero = is_zero(f.probe(a)?);
    let (mut lo, mut hi) = (a, b);
    for _ in 0..BISECTION_ITERATIONS {
        let mid = 0.5 * (lo + hi);
        if is_zero(f.probe(mid)?) == a_zero {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Maximum of a sampled series, polished around the best sample when a probe is given.
pub fn sweep_max(
    xs: &[f64],
    ys: &[f64],
    probe: Option<&dyn Fn(f64) -> Result<f64, ExperimentError>>,
) -> Result<(f64, f64), ExperimentError> {
    let (i, &y) = ys
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.total_cmp(b.1))
        .ok_or_else(|| ExperimentError::InvalidConfig("empty series".into()))?;
    let grid_best = (xs[i], y);
    let Some(f) = probe else {
        return Ok(grid_best);
    };
    let a = xs[i.saturating_sub(1)];
    let b = xs[(i + 1).min(xs.len() - 1)];
    let refined = refine_max(&f, a, b)?;
    Ok(if refined.1 > grid_best.1 {
        refined
    } else {
        grid_best
    })
}

/// First birth, first maximum after it, and first death after that maximum.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Timeline {
    pub onset: Option<f64>,
    pub first_max: Option<(f64, f64)>,
    pub first_death: Option<f64>,
}

/// Scans a series that starts at zero for its first birth/maximum/death.
///
/// With a probe, crossings are bisected and positive local minima are
/// searched for a touch-down below ZERO_LEVEL.
pub fn timeline(
    xs: &[f64],
    ys: &[f64],
    probe: Option<&dyn Fn(f64) -> Result<f64, ExperimentError>>,
) -> Result<Timeline, ExperimentError> {
    let mut out = Timeline::default();
    let events = crossings(xs, ys);
    let Some(birth) = events.iter().find(|c| c.kind == CrossingKind::Birth) else {
        return Ok(out);
    };
    out.onset = Some(match probe {
        Some(f) => refine_crossing(&f, xs[birth.index - 1], xs[birth.index])?,
        None => birth.x,
    });

    let Some(&peak) = local_maxima(ys).iter().find(|&&i| i >= birth.index) else {
        return Ok(out);
    };
    out.first_max = Some(match probe {
        Some(f) => refine_max(&f, xs[peak - 1], xs[peak + 1])?,
        None => (xs[peak], ys[peak]),
    });

    let grid_death = events
        .iter()
        .find(|c| c.kind == CrossingKind::Death && c.index > peak);
    let mut death = match (grid_death, probe) {
        (Some(c), Some(f)) => Some(refine_crossing(&f, xs[c.index - 1], xs[c.index])?),
        (Some(c), None) => Some(c.x),
        (None, _) => None,
    };
    if let Some(f) = probe {
        let limit = grid_death.map_or(xs.len(), |c| c.index);
        for i in positive_local_minima(ys) {
            if i <= peak || i >= limit {
                continue;
            }
            let (x, v) = refine_min(&f, xs[i - 1], xs[i + 1])?;
            if is_zero(v) {
                death = Some(x);
                break;
            }
        }
    }
    out.first_death = death;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid(n: usize, end: f64) -> Vec<f64> {
        (0..n).map(|i| end * i as f64 / (n - 1) as f64).collect()
    }

    #[test]
    fn crossing_interpolation() {
        let xs = [0.0, 1.0, 2.0, 3.0];
        let ys = [0.0, 0.0, 1.0, 0.0];
        let c = crossings(&xs, &ys);
        assert_eq!(c.len(), 2);
        assert_eq!(c[0].kind, CrossingKind::Birth);
        assert!((c[0].x - (1.0 + ZERO_LEVEL)).abs() < 1e-12);
        assert_eq!(c[1].kind, CrossingKind::Death);
    }

    #[test]
    fn golden_section_finds_parabola_peak() {
        let f = |x: f64| Ok(1.0 - (x - 0.3).powi(2));
        let (x, v) = refine_max(&f, 0.0, 1.0).unwrap();
        assert!((x - 0.3).abs() < 1e-7);
        assert!((v - 1.0).abs() < 1e-12);
    }

    #[test]
    fn touch_zero_is_found_between_samples() {
        // |sin x| sampled off its zero at π.
        let f = |x: f64| Ok((x - 1.0).clamp(0.0, 1.0) * (x - std::f64::consts::PI).abs());
        let xs = grid(61, 6.0);
        let ys: Vec<f64> = xs.iter().map(|&x| f(x).unwrap()).collect();
        let probe: &dyn Fn(f64) -> Result<f64, ExperimentError> = &f;
        let tl = timeline(&xs, &ys, Some(probe)).unwrap();
        assert!((tl.onset.unwrap() - 1.0).abs() < 1e-5);
        assert!(tl.first_max.is_some());
        assert!((tl.first_death.unwrap() - std::f64::consts::PI).abs() < 1e-6);

        // Without refinement the sampled curve never dies.
        let coarse = timeline(&xs, &ys, None).unwrap();
        assert_eq!(coarse.first_death, None);
    }

    #[test]
    fn sweep_max_polishes() {
        let f = |x: f64| Ok(-(x - 0.123_456).powi(2));
        let xs = grid(11, 1.0);
        let ys: Vec<f64> = xs.iter().map(|&x| f(x).unwrap()).collect();
        let probe: &dyn Fn(f64) -> Result<f64, ExperimentError> = &f;
        let (x, v) = sweep_max(&xs, &ys, Some(probe)).unwrap();
        assert!((x - 0.123_456).abs() < 1e-7);
        assert!(v.abs() < 1e-13);
        let (gx, _) = sweep_max(&xs, &ys, None).unwrap();
        assert_eq!(gx, 0.1);
    }
}
