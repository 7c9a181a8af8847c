use std::fmt;
use std::str::FromStr;

use crate::linalg::{hermitian_eig, partial_trace, ComplexMatrix};

use super::ModelError;

/// Tolerance on Hermiticity, unit trace and positivity of a density matrix.
pub const STATE_TOL: f64 = 1e-9;

/// A validated `n_qubits` density matrix: Hermitian, unit trace, positive semidefinite.
#[derive(Clone, Debug, PartialEq)]
pub struct DensityMatrix {
    matrix: ComplexMatrix,
    n_qubits: usize,
}

impl DensityMatrix {
    pub fn new(matrix: ComplexMatrix, n_qubits: usize) -> Result<Self, ModelError> {
        if !(1..=3).contains(&n_qubits) || matrix.dim() != 1 << n_qubits {
            return Err(ModelError::DimensionMismatch {
                expected: 1 << n_qubits.min(3),
                actual: matrix.dim(),
            });
        }
        let hermiticity = matrix.hermiticity_deviation();
        if hermiticity > STATE_TOL {
            return Err(ModelError::InvalidState(format!(
                "not Hermitian (deviation {hermiticity:.3e})"
            )));
        }
        let trace = matrix.trace();
        if (trace.re - 1.0).abs() > STATE_TOL || trace.im.abs() > STATE_TOL {
            return Err(ModelError::InvalidState(format!(
                "trace {:.12} {:+.3e}i is not 1",
                trace.re, trace.im
            )));
        }
        let min_eig = hermitian_eig(&matrix)?.min_eigenvalue();
        if min_eig < -STATE_TOL {
            return Err(ModelError::InvalidState(format!(
                "negative eigenvalue {min_eig:.3e}"
            )));
        }
        Ok(Self { matrix, n_qubits })
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.matrix
    }

    /// tr(ρ²)
    pub fn purity(&self) -> f64 {
        let m = &self.matrix;
        m.entries().iter().map(|z| z.norm_sqr()).sum()
    }

    /// Reduced state on the given qubits (in their original order).
    pub fn reduce(&self, keep: &[usize]) -> Result<DensityMatrix, ModelError> {
        let dims = vec![2; self.n_qubits];
        let reduced = partial_trace(&self.matrix, &dims, keep)?;
        DensityMatrix::new(reduced, keep.len())
    }
}

/// Subsystem labels of the three-qubit register A⊗B⊗C.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PartitionId {
    AB,
    AC,
    BC,
    A,
    B,
    C,
    ABC,
}

impl PartitionId {
    pub const ALL: [PartitionId; 7] = [
        PartitionId::AB,
        PartitionId::AC,
        PartitionId::BC,
        PartitionId::A,
        PartitionId::B,
        PartitionId::C,
        PartitionId::ABC,
    ];

    pub const PAIRS: [PartitionId; 3] = [PartitionId::AB, PartitionId::AC, PartitionId::BC];

    pub fn qubits(self) -> &'static [usize] {
        match self {
            PartitionId::AB => &[0, 1],
            PartitionId::AC => &[0, 2],
            PartitionId::BC => &[1, 2],
            PartitionId::A => &[0],
            PartitionId::B => &[1],
            PartitionId::C => &[2],
            PartitionId::ABC => &[0, 1, 2],
        }
    }

    pub fn n_qubits(self) -> usize {
        self.qubits().len()
    }

    pub fn is_pair(self) -> bool {
        self.n_qubits() == 2
    }

    pub fn label(self) -> &'static str {
        match self {
            PartitionId::AB => "AB",
            PartitionId::AC => "AC",
            PartitionId::BC => "BC",
            PartitionId::A => "A",
            PartitionId::B => "B",
            PartitionId::C => "C",
            PartitionId::ABC => "ABC",
        }
    }
}

impl fmt::Display for PartitionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for PartitionId {
    type Err = ModelError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        PartitionId::ALL
            .into_iter()
            .find(|p| p.label().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| ModelError::InvalidPartition(s.to_string()))
    }
}

/// Reduced density matrix of a three-qubit state on `part`.
pub fn marginal(rho: &DensityMatrix, part: PartitionId) -> Result<DensityMatrix, ModelError> {
    if rho.n_qubits() != 3 || part == PartitionId::ABC {
        return Err(ModelError::InvalidPartition(format!(
            "{part} of a {}-qubit state",
            rho.n_qubits()
        )));
    }
    rho.reduce(part.qubits())
}
