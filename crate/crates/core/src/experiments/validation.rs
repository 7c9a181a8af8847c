use crate::model::{
    closed_form_marginal, evolve, factorized_propagator, initial_state, marginal, ExactPropagator,
    PartitionId, SystemParams, ValidityReport,
};

use super::ExperimentError;

/// Factorized and exact marginals must agree this closely when D_z = 0.
pub const COMMUTING_LIMIT_TOL: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq)]
pub struct ValidationGrids {
    pub kappas: Vec<f64>,
    pub dzs: Vec<f64>,
    pub ts: Vec<f64>,
}

impl Default for ValidationGrids {
    fn default() -> Self {
        Self {
            kappas: vec![0.0, 0.3, 0.6, 0.9, 1.0],
            dzs: vec![0.0, 0.5, 0.9],
            ts: (0..=25).map(|i| 0.2 * i as f64).collect(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ValidationRecord {
    pub kappa: f64,
    pub dz: f64,
    pub t: f64,
    pub pair: PartitionId,
    pub report: ValidityReport,
    /// Frobenius distance between the factorized and exact marginals.
    pub factorized_vs_exact: f64,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Stat {
    pub max: f64,
    pub mean: f64,
}

impl Stat {
    fn of(values: impl Iterator<Item = f64>) -> Self {
        let (mut max, mut sum, mut n) = (f64::NEG_INFINITY, 0.0, 0usize);
        for v in values {
            max = max.max(v);
            sum += v;
            n += 1;
        }
        if n == 0 {
            return Stat {
                max: 0.0,
                mean: 0.0,
            };
        }
        Stat {
            max,
            mean: sum / n as f64,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PairSummary {
    pub pair: PartitionId,
    pub trace_deviation: Stat,
    pub hermiticity_deviation: Stat,
    /// Most negative eigenvalue of the Hermitian part over the grid.
    pub min_eigenvalue: f64,
    pub distance_exact: Stat,
    pub distance_factorized: Stat,
    pub factorized_vs_exact: Stat,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ValidationReport {
    pub grids: ValidationGrids,
    pub records: Vec<ValidationRecord>,
    pub summaries: Vec<PairSummary>,
    /// Largest factorized-vs-exact distance over the D_z = 0 records.
    pub commuting_limit_max: f64,
    pub commuting_limit_records: usize,
}

impl ValidationReport {
    /// The D_z = 0 subset agrees across propagators within [`COMMUTING_LIMIT_TOL`].
    pub fn oracle_consistent(&self) -> bool {
        self.commuting_limit_max <= COMMUTING_LIMIT_TOL
    }
}

/// Evaluates the reference closed forms on every grid point and pair.
///
/// Findings are returned as data; only malformed grids are an error.
pub fn validate_closed_forms(grids: &ValidationGrids) -> Result<ValidationReport, ExperimentError> {
    if grids.kappas.is_empty() || grids.dzs.is_empty() || grids.ts.is_empty() {
        return Err(ExperimentError::InvalidConfig(
            "validation grids must be nonempty".into(),
        ));
    }
    let mut records = Vec::with_capacity(grids.kappas.len() * grids.dzs.len() * grids.ts.len() * 3);
    for &kappa in &grids.kappas {
        for &dz in &grids.dzs {
            let params = SystemParams::closed_form_convention(kappa, dz)?;
            let rho0 = initial_state(&params)?;
            let exact = ExactPropagator::new(&params)?;
            for &t in &grids.ts {
                let by_exact = evolve(&rho0, &exact.at(t))?;
                let by_factorized = evolve(&rho0, &factorized_propagator(&params, t)?)?;
                for pair in PartitionId::PAIRS {
                    let report = closed_form_marginal(&params, t, pair)?.report;
                    let factorized_vs_exact = marginal(&by_factorized, pair)?
                        .matrix()
                        .frobenius_distance(marginal(&by_exact, pair)?.matrix())
                        .map_err(crate::model::ModelError::from)?;
                    records.push(ValidationRecord {
                        kappa,
                        dz,
                        t,
                        pair,
                        report,
                        factorized_vs_exact,
                    });
                }
            }
        }
    }

    let summaries = PartitionId::PAIRS
        .iter()
        .map(|&pair| {
            let rs: Vec<&ValidationRecord> = records.iter().filter(|r| r.pair == pair).collect();
            PairSummary {
                pair,
                trace_deviation: Stat::of(rs.iter().map(|r| r.report.trace_deviation)),
                hermiticity_deviation: Stat::of(rs.iter().map(|r| r.report.hermiticity_deviation)),
                min_eigenvalue: rs
                    .iter()
                    .map(|r| r.report.min_eigenvalue)
                    .fold(f64::INFINITY, f64::min),
                distance_exact: Stat::of(rs.iter().map(|r| r.report.distance_exact)),
                distance_factorized: Stat::of(rs.iter().map(|r| r.report.distance_factorized)),
                factorized_vs_exact: Stat::of(rs.iter().map(|r| r.factorized_vs_exact)),
            }
        })
        .collect();

    let commuting: Vec<f64> = records
        .iter()
        .filter(|r| r.dz == 0.0)
        .map(|r| r.factorized_vs_exact)
        .collect();
    Ok(ValidationReport {
        grids: grids.clone(),
        commuting_limit_records: commuting.len(),
        commuting_limit_max: commuting.into_iter().fold(0.0, f64::max),
        records,
        summaries,
    })
}
