//! The three-qubit model: A and B share an XX dipole coupling, A and C a
//! z-polarized Dzyaloshinskii–Moriya coupling.

mod closed_form;
mod dynamics;
mod params;
mod state;

use thiserror::Error;

use crate::linalg::LinalgError;

pub use closed_form::{
    assemble_x_matrix, closed_form_elements, closed_form_marginal, ClosedFormMarginal,
    ValidityReport,
};
pub use dynamics::{
    ab_pure_component, build_hamiltonian, control_ket, evolve, exact_propagator,
    factorized_factors, factorized_propagator, initial_ab_state, initial_control_state,
    initial_state, ExactPropagator, EVOLVE_UNITARY_TOL,
};
pub use params::SystemParams;
pub use state::{marginal, DensityMatrix, PartitionId, STATE_TOL};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ModelError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid density matrix: {0}")]
    InvalidState(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("operator is not unitary (deviation {deviation:.3e})")]
    NotUnitary { deviation: f64 },

    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error(transparent)]
    Linalg(#[from] LinalgError),
}
