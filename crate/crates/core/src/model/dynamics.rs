//! Hamiltonian, initial state and the two propagators.

use num_complex::Complex64;

use crate::linalg::{
    exp_minus_i_t, hermitian_eig, kron, kron_all, kron_vec, pauli, Axis, ComplexMatrix,
    EigenDecomposition, UNITARY_TOL,
};

use super::{DensityMatrix, ModelError, SystemParams};

/// Unitarity tolerance accepted by [`evolve`].
pub const EVOLVE_UNITARY_TOL: f64 = 1e-9;

fn id2() -> ComplexMatrix {
    ComplexMatrix::identity(2)
}

/// σ_A^x σ_B^x
pub fn xx_ab() -> ComplexMatrix {
    kron_all(&[&pauli(Axis::X), &pauli(Axis::X), &id2()])
}

/// σ_A^y σ_B^y
pub fn yy_ab() -> ComplexMatrix {
    kron_all(&[&pauli(Axis::Y), &pauli(Axis::Y), &id2()])
}

/// σ_A^x σ_C^y
pub fn xy_ac() -> ComplexMatrix {
    kron_all(&[&pauli(Axis::X), &id2(), &pauli(Axis::Y)])
}

/// σ_A^y σ_C^x
pub fn yx_ac() -> ComplexMatrix {
    kron_all(&[&pauli(Axis::Y), &id2(), &pauli(Axis::X)])
}

/// (ω/2)(σ_A^xσ_B^x + σ_A^yσ_B^y) + D_z(σ_A^xσ_C^y − σ_A^yσ_C^x)
pub fn build_hamiltonian(p: &SystemParams) -> ComplexMatrix {
    let dipole = (&xx_ab() + &yy_ab()).scale_real(0.5 * p.omega());
    let dm = (&xy_ac() - &yx_ac()).scale_real(p.dz());
    &dipole + &dm
}

fn ket_e() -> [Complex64; 2] {
    [Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)]
}

fn ket_g() -> [Complex64; 2] {
    [Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)]
}

/// cos α|eg⟩ + sin α|ge⟩
pub fn ab_pure_component(alpha: f64) -> Vec<Complex64> {
    let eg = kron_vec(&ket_e(), &ket_g());
    let ge = kron_vec(&ket_g(), &ket_e());
    eg.iter()
        .zip(&ge)
        .map(|(a, b)| a * alpha.cos() + b * alpha.sin())
        .collect()
}

/// cos γ|e⟩ + sin γ|g⟩
pub fn control_ket(gamma: f64) -> Vec<Complex64> {
    ket_e()
        .iter()
        .zip(ket_g())
        .map(|(e, g)| e * gamma.cos() + g * gamma.sin())
        .collect()
}

/// κ|φ⟩⟨φ| + (1 − κ)I/4
pub fn initial_ab_state(p: &SystemParams) -> Result<DensityMatrix, ModelError> {
    let kappa = p.kappa();
    let pure = ComplexMatrix::projector(&ab_pure_component(p.alpha())).scale_real(kappa);
    let noise = ComplexMatrix::identity(4).scale_real(0.25 * (1.0 - kappa));
    DensityMatrix::new(&pure + &noise, 2)
}

pub fn initial_control_state(p: &SystemParams) -> Result<DensityMatrix, ModelError> {
    DensityMatrix::new(ComplexMatrix::projector(&control_ket(p.gamma())), 1)
}

/// ρ_AB(0) ⊗ |φ_c⟩⟨φ_c|
pub fn initial_state(p: &SystemParams) -> Result<DensityMatrix, ModelError> {
    let ab = initial_ab_state(p)?;
    let c = initial_control_state(p)?;
    DensityMatrix::new(kron(ab.matrix(), c.matrix()), 3)
}

/// exp(−iHt) through a cached eigendecomposition of H.
#[derive(Clone, Debug)]
pub struct ExactPropagator {
    spectrum: EigenDecomposition,
}

impl ExactPropagator {
    pub fn new(p: &SystemParams) -> Result<Self, ModelError> {
        Ok(Self {
            spectrum: hermitian_eig(&build_hamiltonian(p))?,
        })
    }

    pub fn at(&self, t: f64) -> ComplexMatrix {
        exp_minus_i_t(&self.spectrum, t)
    }
}

pub fn exact_propagator(p: &SystemParams, t: f64) -> Result<ComplexMatrix, ModelError> {
    Ok(ExactPropagator::new(p)?.at(t))
}

// cos(θ)·I − i·sin(θ)·P for a Pauli string P (P² = I).
fn pauli_string_rotation(theta: f64, string: &ComplexMatrix) -> ComplexMatrix {
    let id = ComplexMatrix::identity(string.dim()).scale_real(theta.cos());
    &id + &string.scale(Complex64::new(0.0, -theta.sin()))
}

/// The four single-term exponentials α₁, β₁, α₂, β₂ of the factorized form.
pub fn factorized_factors(p: &SystemParams, t: f64) -> [ComplexMatrix; 4] {
    let half_wt = 0.5 * p.omega() * t;
    let dt = p.dz() * t;
    [
        pauli_string_rotation(half_wt, &xx_ab()),
        pauli_string_rotation(half_wt, &yy_ab()),
        pauli_string_rotation(dt, &xy_ac()),
        // cos(D t)·I + i·sin(D t)·σ_A^yσ_C^x
        pauli_string_rotation(-dt, &yx_ac()),
    ]
}

/// Ordered product α₁·β₁·α₂·β₂.
///
/// The dipole factors commute with each other, as do the DM factors, so this
/// equals exp(−iHt) whenever ω = 0 or D_z = 0. With both couplings on, the
/// dipole and DM terms do not commute and the product is a one-step
/// Lie–Trotter splitting of the exact propagator.
pub fn factorized_propagator(p: &SystemParams, t: f64) -> Result<ComplexMatrix, ModelError> {
    let [a1, b1, a2, b2] = factorized_factors(p, t);
    let u = &(&(&a1 * &b1) * &a2) * &b2;
    let deviation = u.unitarity_deviation();
    if deviation > UNITARY_TOL {
        return Err(ModelError::NotUnitary { deviation });
    }
    Ok(u)
}

/// U ρ U†
pub fn evolve(rho0: &DensityMatrix, u: &ComplexMatrix) -> Result<DensityMatrix, ModelError> {
    if u.dim() != rho0.matrix().dim() {
        return Err(ModelError::DimensionMismatch {
            expected: rho0.matrix().dim(),
            actual: u.dim(),
        });
    }
    let deviation = u.unitarity_deviation();
    if deviation > EVOLVE_UNITARY_TOL {
        return Err(ModelError::NotUnitary { deviation });
    }
    let evolved = &(u * rho0.matrix()) * &u.adjoint();
    // Restore exact Hermiticity lost to roundoff.
    DensityMatrix::new(evolved.hermitian_part(), rho0.n_qubits())
}
