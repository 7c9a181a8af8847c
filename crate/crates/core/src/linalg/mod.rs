//! Small dense complex linear algebra for 2, 4 and 8 dimensional operators.
//!
//! Basis convention: |e⟩ = |0⟩ = (1, 0)ᵀ and |g⟩ = |1⟩ = (0, 1)ᵀ. Tensor
//! products put the left factor in the most significant position, so the
//! three-qubit basis index of |a b c⟩ is `4a + 2b + c`.

mod eigen;
mod matrix;
mod partial;

use num_complex::Complex64;
use thiserror::Error;

pub use eigen::{
    exp_minus_i_t, expm_hermitian_times_minus_i_t, general_eigvals, hermitian_eig, singular_values,
    EigenDecomposition, HERMITIAN_TOL,
};
pub use matrix::{kron, kron_all, kron_vec, ComplexMatrix, DEFAULT_TOL};
pub use partial::{partial_trace, partial_transpose, Subsystem};

/// Unitarity tolerance (entry-wise on U†U − I).
pub const UNITARY_TOL: f64 = 1e-10;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum LinalgError {
    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("matrix is not Hermitian (deviation {deviation:.3e})")]
    NotHermitian { deviation: f64 },

    #[error("invalid subsystem selection {keep:?} for {n_subsystems} subsystems")]
    InvalidSubsystems {
        keep: Vec<usize>,
        n_subsystems: usize,
    },

    #[error("dimension {dim} exceeds supported maximum {max}")]
    DimensionTooLarge { dim: usize, max: usize },

    #[error("{what} did not converge (residual {residual:.3e}, frobenius norm {scale:.3e})")]
    NoConvergence {
        what: &'static str,
        residual: f64,
        scale: f64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Axis {
    X,
    Y,
    Z,
}

/// Pauli matrix in the (|e⟩, |g⟩) basis.
///
/// σ_y is taken as [[0, i], [−i, 0]], the sign used by the model's
/// Hamiltonian. Every entanglement and information measure in this crate is
/// invariant under flipping that sign.
pub fn pauli(axis: Axis) -> ComplexMatrix {
    let o = Complex64::new(0.0, 0.0);
    let one = Complex64::new(1.0, 0.0);
    let i = Complex64::new(0.0, 1.0);
    let entries = match axis {
        Axis::X => vec![o, one, one, o],
        Axis::Y => vec![o, i, -i, o],
        Axis::Z => vec![one, o, o, -one],
    };
    ComplexMatrix::from_row_major(2, entries).expect("2x2")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pauli_involutions() {
        let id = ComplexMatrix::identity(2);
        for axis in [Axis::X, Axis::Y, Axis::Z] {
            let p = pauli(axis);
            assert!(p.matmul(&p).unwrap().approx_eq(&id, 0.0));
            assert!(p.is_hermitian(0.0));
        }
    }

    #[test]
    fn pauli_y_sign() {
        assert_eq!(pauli(Axis::Y)[(0, 1)], Complex64::new(0.0, 1.0));
        assert_eq!(pauli(Axis::Y)[(1, 0)], Complex64::new(0.0, -1.0));
    }

    #[test]
    fn xy_commutator_is_traceless_antihermitian() {
        let comm = pauli(Axis::X).commutator(&pauli(Axis::Y)).unwrap();
        assert!(comm.trace().norm() < 1e-15);
        assert!(comm.adjoint().approx_eq(&comm.scale_real(-1.0), 1e-15));
        assert!(comm.frobenius_norm() > 1.0);
    }
}
