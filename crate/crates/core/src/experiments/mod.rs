//! Sweeps over time or κ, figure presets, event detection and the
//! closed-form validation campaign.

pub mod events;
mod presets;
mod sweep;
mod validation;

use thiserror::Error;

use crate::measures::MeasureError;
use crate::model::ModelError;

pub use presets::{figure_preset, figure_preset_by_name, FigureName, Focus, Preset, KAPPA_STEPS};
pub use sweep::{
    kappa_sweep, run_sweep, time_sweep, PropagatorKind, Quantity, StateEvaluator, SweepAxis,
    SweepConfig, SweepRow, SweepTable,
};
pub use validation::{
    validate_closed_forms, PairSummary, Stat, ValidationGrids, ValidationRecord, ValidationReport,
    COMMUTING_LIMIT_TOL,
};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ExperimentError {
    #[error("invalid sweep configuration: {0}")]
    InvalidConfig(String),

    #[error("unknown preset '{0}'")]
    UnknownPreset(String),

    #[error("at {axis}={at}: {source}")]
    Evaluation {
        axis: &'static str,
        at: f64,
        #[source]
        source: MeasureError,
    },

    #[error(transparent)]
    Model(#[from] ModelError),
}

impl ExperimentError {
    /// True for failures of the numerics rather than of the request.
    pub fn is_numerical(&self) -> bool {
        matches!(
            self,
            ExperimentError::Evaluation { .. } | ExperimentError::Model(_)
        )
    }
}
