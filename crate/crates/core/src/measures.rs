//! Entanglement quantifiers and information measures.
//!
//! Concurrence, entanglement of formation and negativity act on two-qubit
//! states. Total information is the purity-affine (Brukner–Zeilinger style)
//! quantity `n·2ⁿ/(2ⁿ−1)·(tr ρ² − 2⁻ⁿ)`, which is `n` for pure `n`-qubit states
//! and 0 for the maximally mixed state. Non-local information has two
//! readings, see [`InfoMode`].

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::linalg::{
    general_eigvals, hermitian_eig, kron, partial_transpose, pauli, singular_values, Axis,
    LinalgError, Subsystem,
};
use crate::model::{DensityMatrix, ModelError};
use num_complex::Complex64;

/// Largest imaginary part tolerated on a spin-flip eigenvalue.
pub const SPIN_FLIP_IMAG_TOL: f64 = 1e-8;
/// Spin-flip eigenvalues below this are treated as a formula or input bug.
pub const SPIN_FLIP_NEGATIVE_ERROR: f64 = -1e-6;
/// Slack allowed outside [0, 1] before clamping a quantifier.
pub const QUANTIFIER_SLACK: f64 = 1e-9;
const ENTROPY_SLACK: f64 = 1e-12;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum MeasureError {
    #[error("binary entropy argument {0} outside [0, 1]")]
    DomainError(f64),

    #[error("measure domain error: {0}")]
    MeasureDomainError(String),

    #[error("expected a {expected}-qubit state, got {actual} qubits")]
    WrongQubitCount { expected: usize, actual: usize },

    #[error(transparent)]
    Linalg(#[from] LinalgError),

    #[error(transparent)]
    Model(#[from] ModelError),
}

/// How the "non-local" information of a state is read.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum InfoMode {
    /// Total information of the state. Reproduces the maxima 2 (pure pair)
    /// and 3 (pure triple).
    #[default]
    Total,
    /// Total information minus the total information of each single-qubit marginal.
    TotalMinusLocal,
}

impl InfoMode {
    pub fn label(self) -> &'static str {
        match self {
            InfoMode::Total => "total",
            InfoMode::TotalMinusLocal => "total_minus_local",
        }
    }
}

impl fmt::Display for InfoMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for InfoMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().replace('-', "_").as_str() {
            "total" => Ok(InfoMode::Total),
            "total_minus_local" => Ok(InfoMode::TotalMinusLocal),
            other => Err(format!(
                "unknown info mode '{other}' (expected total or total-minus-local)"
            )),
        }
    }
}

/// Quantifiers of one state at one time point.
///
/// Entanglement fields are `None` for states that are not two-qubit.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MeasureSet {
    pub concurrence: Option<f64>,
    pub negativity: Option<f64>,
    pub eof: Option<f64>,
    pub purity: f64,
    pub info_total: f64,
    pub info_nonlocal: f64,
}

fn require_qubits(rho: &DensityMatrix, n: usize) -> Result<(), MeasureError> {
    if rho.n_qubits() != n {
        return Err(MeasureError::WrongQubitCount {
            expected: n,
            actual: rho.n_qubits(),
        });
    }
    Ok(())
}

fn clamp_unit(raw: f64, what: &str) -> Result<f64, MeasureError> {
    if !raw.is_finite() || !(-QUANTIFIER_SLACK..=1.0 + QUANTIFIER_SLACK).contains(&raw) {
        return Err(MeasureError::MeasureDomainError(format!(
            "{what} = {raw:e} outside [0, 1]"
        )));
    }
    Ok(raw.clamp(0.0, 1.0))
}

/// Eigenvalues of ρ(σ_y⊗σ_y)ρ*(σ_y⊗σ_y), cleaned and sorted descending.
pub fn spin_flip_eigenvalues(rho: &DensityMatrix) -> Result<[f64; 4], MeasureError> {
    require_qubits(rho, 2)?;
    let m = rho.matrix();
    let yy = kron(&pauli(Axis::Y), &pauli(Axis::Y));
    let flipped = &(&(m * &yy) * &m.conj()) * &yy;
    let raw = general_eigvals(&flipped)?;
    let mut out = [0.0; 4];
    for (slot, z) in out.iter_mut().zip(&raw) {
        if z.im.abs() > SPIN_FLIP_IMAG_TOL {
            return Err(MeasureError::MeasureDomainError(format!(
                "spin-flip eigenvalue {z} has imaginary part above {SPIN_FLIP_IMAG_TOL:e}"
            )));
        }
        if z.re < SPIN_FLIP_NEGATIVE_ERROR {
            return Err(MeasureError::MeasureDomainError(format!(
                "spin-flip eigenvalue {} below {SPIN_FLIP_NEGATIVE_ERROR:e}",
                z.re
            )));
        }
        *slot = z.re.max(0.0);
    }
    out.sort_by(|a, b| b.total_cmp(a));
    Ok(out)
}

/// Square roots of the spin-flip eigenvalues, descending.
///
/// These are the singular values of √ρ·√ρ̃ with √ρ̃ = (σ_y⊗σ_y)√ρ*(σ_y⊗σ_y).
/// Taking them from an SVD avoids square-rooting eigenvalue noise, which
/// otherwise lifts zero roots to about 1e-8 on rank-deficient states.
pub fn spin_flip_roots(rho: &DensityMatrix) -> Result<[f64; 4], MeasureError> {
    require_qubits(rho, 2)?;
    let yy = kron(&pauli(Axis::Y), &pauli(Axis::Y));
    let sqrt_rho =
        hermitian_eig(rho.matrix())?.map_spectrum(|l| Complex64::new(l.max(0.0).sqrt(), 0.0));
    let sqrt_tilde = &(&yy * &sqrt_rho.conj()) * &yy;
    let sv = singular_values(&(&sqrt_rho * &sqrt_tilde))?;
    Ok([sv[0], sv[1], sv[2], sv[3]])
}

/// Wootters concurrence max{0, √λ₁ − √λ₂ − √λ₃ − √λ₄}.
///
/// The spin-flip spectrum is checked for domain errors; the roots
/// themselves come from [`spin_flip_roots`].
pub fn concurrence(rho: &DensityMatrix) -> Result<f64, MeasureError> {
    spin_flip_eigenvalues(rho)?;
    let roots = spin_flip_roots(rho)?;
    let raw = roots[0] - roots[1] - roots[2] - roots[3];
    clamp_unit(raw.max(0.0), "concurrence")
}

/// −x log₂ x − (1 − x) log₂(1 − x), zero at both ends.
pub fn binary_entropy(x: f64) -> Result<f64, MeasureError> {
    if !(-ENTROPY_SLACK..=1.0 + ENTROPY_SLACK).contains(&x) {
        return Err(MeasureError::DomainError(x));
    }
    let x = x.clamp(0.0, 1.0);
    let term = |p: f64| if p <= 0.0 { 0.0 } else { -p * p.log2() };
    Ok(term(x) + term(1.0 - x))
}

/// Entanglement of formation as a function of the concurrence.
pub fn eof_from_concurrence(c: f64) -> Result<f64, MeasureError> {
    let c = clamp_unit(c, "concurrence")?;
    let x = 0.5 * (1.0 + (1.0 - c * c).max(0.0).sqrt());
    clamp_unit(binary_entropy(x)?, "entanglement of formation")
}

pub fn eof(rho: &DensityMatrix) -> Result<f64, MeasureError> {
    eof_from_concurrence(concurrence(rho)?)
}

/// Twice the magnitude of the negative part of the partial-transpose spectrum.
pub fn negativity(rho: &DensityMatrix) -> Result<f64, MeasureError> {
    require_qubits(rho, 2)?;
    let pt = partial_transpose(rho.matrix(), (2, 2), Subsystem::Second)?;
    let spectrum = hermitian_eig(&pt)?;
    let raw = 2.0
        * spectrum
            .eigenvalues
            .iter()
            .map(|&mu| (-mu).max(0.0))
            .sum::<f64>();
    clamp_unit(raw, "negativity")
}

/// n·2ⁿ/(2ⁿ − 1)·(tr ρ² − 2⁻ⁿ), clamped to [0, n].
pub fn bz_total_information(rho: &DensityMatrix) -> f64 {
    let n = rho.n_qubits() as f64;
    let d = (1usize << rho.n_qubits()) as f64;
    let info = n * d / (d - 1.0) * (rho.purity() - 1.0 / d);
    info.clamp(0.0, n)
}

pub fn nonlocal_information(rho: &DensityMatrix, mode: InfoMode) -> Result<f64, MeasureError> {
    let total = bz_total_information(rho);
    match mode {
        InfoMode::Total => Ok(total),
        InfoMode::TotalMinusLocal => {
            if rho.n_qubits() < 2 {
                return Err(MeasureError::WrongQubitCount {
                    expected: 2,
                    actual: rho.n_qubits(),
                });
            }
            let mut local = 0.0;
            for q in 0..rho.n_qubits() {
                local += bz_total_information(&rho.reduce(&[q])?);
            }
            Ok(total - local)
        }
    }
}

/// Every quantifier of a two-qubit state.
pub fn measure_all(rho: &DensityMatrix, mode: InfoMode) -> Result<MeasureSet, MeasureError> {
    require_qubits(rho, 2)?;
    let c = concurrence(rho)?;
    Ok(MeasureSet {
        concurrence: Some(c),
        negativity: Some(negativity(rho)?),
        eof: Some(eof_from_concurrence(c)?),
        purity: rho.purity(),
        info_total: bz_total_information(rho),
        info_nonlocal: nonlocal_information(rho, mode)?,
    })
}

/// [`measure_all`] for pairs; information-only measures otherwise.
pub fn measure_state(rho: &DensityMatrix, mode: InfoMode) -> Result<MeasureSet, MeasureError> {
    if rho.n_qubits() == 2 {
        return measure_all(rho, mode);
    }
    let info_nonlocal = if rho.n_qubits() == 1 {
        // a single qubit has no non-local part
        match mode {
            InfoMode::Total => bz_total_information(rho),
            InfoMode::TotalMinusLocal => 0.0,
        }
    } else {
        nonlocal_information(rho, mode)?
    };
    Ok(MeasureSet {
        concurrence: None,
        negativity: None,
        eof: None,
        purity: rho.purity(),
        info_total: bz_total_information(rho),
        info_nonlocal,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::ComplexMatrix;
    use num_complex::Complex64;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn psi_plus() -> DensityMatrix {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        DensityMatrix::new(ComplexMatrix::projector(&[c(0.0), c(s), c(s), c(0.0)]), 2).unwrap()
    }

    fn mixed4() -> DensityMatrix {
        DensityMatrix::new(ComplexMatrix::identity(4).scale_real(0.25), 2).unwrap()
    }

    fn werner(kappa: f64) -> DensityMatrix {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let pure = ComplexMatrix::projector(&[c(0.0), c(s), c(s), c(0.0)]).scale_real(kappa);
        let noise = ComplexMatrix::identity(4).scale_real(0.25 * (1.0 - kappa));
        DensityMatrix::new(&pure + &noise, 2).unwrap()
    }

    #[test]
    fn bell_state_is_maximal() {
        let m = measure_all(&psi_plus(), InfoMode::Total).unwrap();
        for v in [m.concurrence, m.negativity, m.eof] {
            assert!((v.unwrap() - 1.0).abs() < 1e-12);
        }
        assert!((m.purity - 1.0).abs() < 1e-12);
        assert!((m.info_total - 2.0).abs() < 1e-12);
        assert!((spin_flip_eigenvalues(&psi_plus()).unwrap()[0] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn maximally_mixed_is_zero() {
        let m = measure_all(&mixed4(), InfoMode::TotalMinusLocal).unwrap();
        assert_eq!(m.concurrence, Some(0.0));
        assert_eq!(m.negativity, Some(0.0));
        assert_eq!(m.eof, Some(0.0));
        assert!((m.purity - 0.25).abs() < 1e-15);
        assert!(m.info_total.abs() < 1e-15);
        assert!(m.info_nonlocal.abs() < 1e-15);
    }

    #[test]
    fn binary_entropy_edge_cases() {
        assert_eq!(binary_entropy(0.5).unwrap(), 1.0);
        assert_eq!(binary_entropy(0.0).unwrap(), 0.0);
        assert_eq!(binary_entropy(1.0).unwrap(), 0.0);
        assert_eq!(binary_entropy(-1e-13).unwrap(), 0.0);
        assert!(matches!(
            binary_entropy(-0.01),
            Err(MeasureError::DomainError(_))
        ));
        assert!(matches!(
            binary_entropy(1.01),
            Err(MeasureError::DomainError(_))
        ));
    }

    #[test]
    fn eof_of_concurrence_point_six() {
        // H(0.9) evaluated at 40 digits: 0.46899559358928122125...
        assert!((eof_from_concurrence(0.6).unwrap() - 0.468_995_593_589_281_2).abs() < 1e-15);
        assert_eq!(eof_from_concurrence(0.0).unwrap(), 0.0);
        assert!((eof_from_concurrence(1.0).unwrap() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn werner_negativity_formula() {
        for i in 0..=20 {
            let kappa = i as f64 / 20.0;
            let n = negativity(&werner(kappa)).unwrap();
            let want = (0.5 * (3.0 * kappa - 1.0)).max(0.0);
            assert!((n - want).abs() < 1e-12, "kappa={kappa}");
        }
    }

    #[test]
    fn wrong_qubit_count() {
        let one = DensityMatrix::new(ComplexMatrix::identity(2).scale_real(0.5), 1).unwrap();
        assert!(matches!(
            concurrence(&one),
            Err(MeasureError::WrongQubitCount { .. })
        ));
        assert!(negativity(&one).is_err());
        assert!(nonlocal_information(&one, InfoMode::TotalMinusLocal).is_err());
        let m = measure_state(&one, InfoMode::Total).unwrap();
        assert_eq!(m.concurrence, None);
        assert!(m.info_total.abs() < 1e-15);
    }

    #[test]
    fn product_pure_state_information() {
        // |e⟩|g⟩
        let rho = DensityMatrix::new(
            ComplexMatrix::projector(&[c(0.0), c(1.0), c(0.0), c(0.0)]),
            2,
        )
        .unwrap();
        assert!((nonlocal_information(&rho, InfoMode::Total).unwrap() - 2.0).abs() < 1e-15);
        assert!(
            nonlocal_information(&rho, InfoMode::TotalMinusLocal)
                .unwrap()
                .abs()
                < 1e-15
        );
        assert_eq!(concurrence(&rho).unwrap(), 0.0);
        let bell = psi_plus();
        assert!(
            (nonlocal_information(&bell, InfoMode::TotalMinusLocal).unwrap() - 2.0).abs() < 1e-12
        );
    }

    #[test]
    fn info_mode_parsing() {
        assert_eq!("total".parse::<InfoMode>().unwrap(), InfoMode::Total);
        assert_eq!(
            "total-minus-local".parse::<InfoMode>().unwrap(),
            InfoMode::TotalMinusLocal
        );
        assert!("local".parse::<InfoMode>().is_err());
    }
}
