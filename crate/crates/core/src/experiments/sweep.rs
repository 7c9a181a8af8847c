use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::measures::{measure_state, InfoMode, MeasureError, MeasureSet};
use crate::model::{
    assemble_x_matrix, closed_form_elements, evolve, factorized_propagator, initial_state,
    marginal, DensityMatrix, ExactPropagator, PartitionId, SystemParams,
};

use super::ExperimentError;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum PropagatorKind {
    Exact,
    /// Ordered product of the four single-term exponentials.
    #[default]
    Factorized,
    /// Reference closed-form marginals (pairs only).
    ClosedForm,
}

impl PropagatorKind {
    pub fn label(self) -> &'static str {
        match self {
            PropagatorKind::Exact => "exact",
            PropagatorKind::Factorized => "factorized",
            PropagatorKind::ClosedForm => "closed_form",
        }
    }
}

impl fmt::Display for PropagatorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for PropagatorKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().replace('-', "_").as_str() {
            "exact" => Ok(PropagatorKind::Exact),
            "factorized" => Ok(PropagatorKind::Factorized),
            "closed_form" => Ok(PropagatorKind::ClosedForm),
            other => Err(format!(
                "unknown propagator '{other}' (expected exact, factorized or closed-form)"
            )),
        }
    }
}

/// The swept variable.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum SweepAxis {
    /// Uniform time grid; every other parameter fixed.
    Time { start: f64, end: f64, steps: usize },
    /// Uniform κ grid evaluated at the fixed time `t`.
    Kappa {
        start: f64,
        end: f64,
        steps: usize,
        t: f64,
    },
}

impl SweepAxis {
    /// 501 points over [0, 5].
    pub const DEFAULT_TIME: SweepAxis = SweepAxis::Time {
        start: 0.0,
        end: 5.0,
        steps: 501,
    };

    pub fn name(&self) -> &'static str {
        match self {
            SweepAxis::Time { .. } => "t",
            SweepAxis::Kappa { .. } => "kappa",
        }
    }

    fn bounds(&self) -> (f64, f64, usize) {
        match *self {
            SweepAxis::Time { start, end, steps }
            | SweepAxis::Kappa {
                start, end, steps, ..
            } => (start, end, steps),
        }
    }

    /// Grid point `i`; computed directly so that refining the grid reproduces old points.
    pub fn point(&self, i: usize) -> f64 {
        let (start, end, steps) = self.bounds();
        start + (end - start) * i as f64 / (steps - 1) as f64
    }

    pub fn steps(&self) -> usize {
        self.bounds().2
    }

    pub fn grid(&self) -> Vec<f64> {
        (0..self.steps()).map(|i| self.point(i)).collect()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepConfig {
    pub params: SystemParams,
    pub axis: SweepAxis,
    pub propagator: PropagatorKind,
    pub partitions: Vec<PartitionId>,
    pub info_mode: InfoMode,
    /// Permits the closed-form propagator away from α = π/3, γ = π/2, ω = 2.
    pub allow_nonconventional_closed_form: bool,
}

impl SweepConfig {
    pub fn time(params: SystemParams, partitions: Vec<PartitionId>) -> Self {
        Self {
            params,
            axis: SweepAxis::DEFAULT_TIME,
            propagator: PropagatorKind::default(),
            partitions,
            info_mode: InfoMode::default(),
            allow_nonconventional_closed_form: false,
        }
    }

    pub fn validate(&self) -> Result<(), ExperimentError> {
        let (start, end, steps) = self.axis.bounds();
        if !start.is_finite() || !end.is_finite() || end <= start {
            return Err(ExperimentError::InvalidConfig(format!(
                "{} range must satisfy start < end (got {start}..{end})",
                self.axis.name()
            )));
        }
        if steps < 2 {
            return Err(ExperimentError::InvalidConfig(format!(
                "need at least 2 steps, got {steps}"
            )));
        }
        if let SweepAxis::Kappa { t, .. } = self.axis {
            if start < 0.0 || end > 1.0 {
                return Err(ExperimentError::InvalidConfig(format!(
                    "kappa grid {start}..{end} leaves [0,1]"
                )));
            }
            if !t.is_finite() {
                return Err(ExperimentError::InvalidConfig("time must be finite".into()));
            }
        }
        if self.propagator == PropagatorKind::ClosedForm {
            if !self.allow_nonconventional_closed_form
                && !self.params.matches_closed_form_convention()
            {
                return Err(ExperimentError::InvalidConfig(
                    "closed-form marginals require alpha=pi/3, gamma=pi/2, omega=2 \
                     (pass the override to evaluate them elsewhere)"
                        .into(),
                ));
            }
            if let Some(p) = self.partitions.iter().find(|p| !p.is_pair()) {
                return Err(ExperimentError::InvalidConfig(format!(
                    "closed-form marginals exist only for AB, AC, BC (got {p})"
                )));
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepRow {
    /// Value of the swept variable (t or κ).
    pub x: f64,
    pub measures: Vec<(PartitionId, MeasureSet)>,
}

impl SweepRow {
    pub fn get(&self, part: PartitionId) -> Option<&MeasureSet> {
        self.measures
            .iter()
            .find(|(p, _)| *p == part)
            .map(|(_, m)| m)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepTable {
    pub config: SweepConfig,
    pub rows: Vec<SweepRow>,
}

/// Columns of a [`MeasureSet`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Quantity {
    Concurrence,
    Negativity,
    Eof,
    Purity,
    InfoNonlocal,
    InfoTotal,
}

impl Quantity {
    pub fn of(self, m: &MeasureSet) -> Option<f64> {
        match self {
            Quantity::Concurrence => m.concurrence,
            Quantity::Negativity => m.negativity,
            Quantity::Eof => m.eof,
            Quantity::Purity => Some(m.purity),
            Quantity::InfoNonlocal => Some(m.info_nonlocal),
            Quantity::InfoTotal => Some(m.info_total),
        }
    }
}

impl SweepTable {
    pub fn xs(&self) -> Vec<f64> {
        self.rows.iter().map(|r| r.x).collect()
    }

    /// One column; `None` entries (quantity undefined for the partition) become NaN.
    pub fn series(&self, part: PartitionId, q: Quantity) -> Vec<f64> {
        self.rows
            .iter()
            .map(|r| r.get(part).and_then(|m| q.of(m)).unwrap_or(f64::NAN))
            .collect()
    }
}

/// Evaluates a sweep configuration at arbitrary points of its axis.
#[derive(Clone, Debug)]
pub struct StateEvaluator {
    config: SweepConfig,
    exact: Option<ExactPropagator>,
}

impl StateEvaluator {
    pub fn new(config: SweepConfig) -> Result<Self, ExperimentError> {
        config.validate()?;
        // H does not depend on κ, so one decomposition serves both axes.
        let exact = match config.propagator {
            PropagatorKind::Exact => Some(ExactPropagator::new(&config.params)?),
            _ => None,
        };
        Ok(Self { config, exact })
    }

    pub fn config(&self) -> &SweepConfig {
        &self.config
    }

    fn params_and_time(&self, x: f64) -> Result<(SystemParams, f64), MeasureError> {
        Ok(match self.config.axis {
            SweepAxis::Time { .. } => (self.config.params, x),
            SweepAxis::Kappa { t, .. } => (self.config.params.with_kappa(x)?, t),
        })
    }

    /// Global three-qubit state at axis value `x` (not available for closed forms).
    pub fn global_state(&self, x: f64) -> Result<DensityMatrix, MeasureError> {
        let (params, t) = self.params_and_time(x)?;
        let rho0 = initial_state(&params)?;
        let u = match (&self.exact, self.config.propagator) {
            (Some(exact), _) => exact.at(t),
            (None, PropagatorKind::Factorized) => factorized_propagator(&params, t)?,
            _ => {
                return Err(MeasureError::Model(
                    crate::model::ModelError::InvalidParameter(
                        "closed-form marginals have no global state".into(),
                    ),
                ))
            }
        };
        Ok(evolve(&rho0, &u)?)
    }

    fn evaluate_inner(&self, x: f64) -> Result<SweepRow, MeasureError> {
        let mode = self.config.info_mode;
        let mut measures = Vec::with_capacity(self.config.partitions.len());
        if self.config.propagator == PropagatorKind::ClosedForm {
            let (params, t) = self.params_and_time(x)?;
            for &part in &self.config.partitions {
                let elements = closed_form_elements(params.kappa(), params.dz(), t, part)?;
                let rho = DensityMatrix::new(assemble_x_matrix(elements), 2)?;
                measures.push((part, measure_state(&rho, mode)?));
            }
        } else if !self.config.partitions.is_empty() {
            let global = self.global_state(x)?;
            for &part in &self.config.partitions {
                let m = if part == PartitionId::ABC {
                    measure_state(&global, mode)?
                } else {
                    measure_state(&marginal(&global, part)?, mode)?
                };
                measures.push((part, m));
            }
        }
        Ok(SweepRow { x, measures })
    }

    pub fn evaluate(&self, x: f64) -> Result<SweepRow, ExperimentError> {
        self.evaluate_inner(x)
            .map_err(|source| ExperimentError::Evaluation {
                axis: self.config.axis.name(),
                at: x,
                source,
            })
    }

    /// A single quantity of one partition as a function of the axis value.
    pub fn scalar(
        &self,
        part: PartitionId,
        q: Quantity,
    ) -> impl Fn(f64) -> Result<f64, ExperimentError> + '_ {
        move |x| {
            let row = self.evaluate(x)?;
            row.get(part).and_then(|m| q.of(m)).ok_or_else(|| {
                ExperimentError::InvalidConfig(format!("{q:?} is not defined for partition {part}"))
            })
        }
    }

    /// Evaluates every grid point. Rows are independent and computed in
    /// parallel; the first failing point in grid order is reported.
    pub fn run(&self) -> Result<SweepTable, ExperimentError> {
        let axis = self.config.axis;
        let results: Vec<Result<SweepRow, ExperimentError>> = (0..axis.steps())
            .into_par_iter()
            .map(|i| self.evaluate(axis.point(i)))
            .collect();
        let rows = results.into_iter().collect::<Result<Vec<_>, _>>()?;
        Ok(SweepTable {
            config: self.config.clone(),
            rows,
        })
    }
}

/// Propagates the initial state over the configured grid and measures every partition.
pub fn time_sweep(cfg: &SweepConfig) -> Result<SweepTable, ExperimentError> {
    if !matches!(cfg.axis, SweepAxis::Time { .. }) {
        return Err(ExperimentError::InvalidConfig(
            "time_sweep needs a time axis".into(),
        ));
    }
    StateEvaluator::new(cfg.clone())?.run()
}

/// Measures at a fixed time `t` for every κ on a uniform grid.
pub fn kappa_sweep(
    template: &SweepConfig,
    kappa_start: f64,
    kappa_end: f64,
    steps: usize,
    t: f64,
) -> Result<SweepTable, ExperimentError> {
    let cfg = SweepConfig {
        axis: SweepAxis::Kappa {
            start: kappa_start,
            end: kappa_end,
            steps,
            t,
        },
        ..template.clone()
    };
    StateEvaluator::new(cfg)?.run()
}

/// Runs whichever axis the configuration carries.
pub fn run_sweep(cfg: &SweepConfig) -> Result<SweepTable, ExperimentError> {
    StateEvaluator::new(cfg.clone())?.run()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, FRAC_PI_4};

    fn cfg(kappa: f64, omega: f64, dz: f64) -> SweepConfig {
        let params = SystemParams::new(FRAC_PI_3, FRAC_PI_2, kappa, omega, dz).unwrap();
        SweepConfig {
            axis: SweepAxis::Time {
                start: 0.0,
                end: 5.0,
                steps: 51,
            },
            ..SweepConfig::time(params, PartitionId::PAIRS.to_vec())
        }
    }

    #[test]
    fn frozen_dynamics_rows_repeat() {
        let table = time_sweep(&cfg(0.7, 0.0, 0.0)).unwrap();
        let first = &table.rows[0].measures;
        for row in &table.rows {
            for ((_, a), (_, b)) in row.measures.iter().zip(first) {
                assert!((a.concurrence.unwrap() - b.concurrence.unwrap()).abs() < 1e-12);
                assert!((a.info_nonlocal - b.info_nonlocal).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn table_shape() {
        let table = time_sweep(&cfg(0.7, 2.0, 0.5)).unwrap();
        assert_eq!(table.rows.len(), 51);
        assert!(table.rows.windows(2).all(|w| w[0].x < w[1].x));
        assert_eq!(table.rows[50].x, 5.0);
    }

    #[test]
    fn invalid_configs_rejected() {
        let mut c = cfg(0.5, 1.0, 1.0);
        c.axis = SweepAxis::Time {
            start: 1.0,
            end: 1.0,
            steps: 10,
        };
        assert!(c.validate().is_err());
        c.axis = SweepAxis::Time {
            start: 0.0,
            end: 1.0,
            steps: 1,
        };
        assert!(c.validate().is_err());

        let mut closed = cfg(0.5, 1.0, 0.5);
        closed.propagator = PropagatorKind::ClosedForm;
        assert!(closed.validate().is_err());
        closed.allow_nonconventional_closed_form = true;
        assert!(closed.validate().is_ok());
        closed.partitions.push(PartitionId::A);
        assert!(closed.validate().is_err());
    }

    #[test]
    fn kappa_sweep_endpoints() {
        let params = SystemParams::new(FRAC_PI_4, FRAC_PI_2, 0.5, 2.0, 0.5).unwrap();
        let template = SweepConfig::time(params, vec![PartitionId::AB]);
        let table = kappa_sweep(&template, 0.0, 1.0, 11, 0.0).unwrap();
        let first = table.rows[0].get(PartitionId::AB).unwrap();
        assert_eq!(first.concurrence, Some(0.0));
        assert_eq!(first.negativity, Some(0.0));
        let last = table.rows[10].get(PartitionId::AB).unwrap();
        for v in [last.concurrence, last.negativity, last.eof] {
            assert!((v.unwrap() - 1.0).abs() < 1e-9);
        }
    }

    #[test]
    fn propagator_labels() {
        for k in [
            PropagatorKind::Exact,
            PropagatorKind::Factorized,
            PropagatorKind::ClosedForm,
        ] {
            assert_eq!(k.label().parse::<PropagatorKind>().unwrap(), k);
        }
        assert_eq!(
            "closed-form".parse::<PropagatorKind>().unwrap(),
            PropagatorKind::ClosedForm
        );
    }

    #[test]
    fn evaluation_error_carries_point() {
        let params = SystemParams::closed_form_convention(0.9, 0.5).unwrap();
        let mut c = SweepConfig::time(params, vec![PartitionId::AC]);
        c.propagator = PropagatorKind::ClosedForm;
        match time_sweep(&c) {
            Err(ExperimentError::Evaluation { axis, at, .. }) => {
                assert_eq!(axis, "t");
                assert!(at.is_finite());
            }
            other => panic!("expected evaluation error, got {other:?}"),
        }
    }
}
