use super::ModelError;

/// Physical knobs of the three-qubit model.
///
/// `alpha` sets the A–B pure component cos α|eg⟩ + sin α|ge⟩, `kappa` its
/// weight against white noise, `gamma` the control qubit cos γ|e⟩ + sin γ|g⟩.
/// `omega` is the A–B XX coupling and `dz` the z-polarized DM strength
/// between A and C.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SystemParams {
    alpha: f64,
    gamma: f64,
    kappa: f64,
    omega: f64,
    dz: f64,
}

impl SystemParams {
    pub fn new(
        alpha: f64,
        gamma: f64,
        kappa: f64,
        omega: f64,
        dz: f64,
    ) -> Result<Self, ModelError> {
        for (name, value) in [
            ("alpha", alpha),
            ("gamma", gamma),
            ("kappa", kappa),
            ("omega", omega),
            ("dz", dz),
        ] {
            if !value.is_finite() {
                return Err(ModelError::InvalidParameter(format!(
                    "{name} must be finite"
                )));
            }
        }
        if !(0.0..=1.0).contains(&kappa) {
            return Err(ModelError::InvalidParameter(format!(
                "kappa out of [0,1]: {kappa}"
            )));
        }
        Ok(Self {
            alpha,
            gamma,
            kappa,
            omega,
            dz,
        })
    }

    /// α = π/3, γ = π/2, ω = 2: the setting the reference closed-form marginals assume.
    pub fn closed_form_convention(kappa: f64, dz: f64) -> Result<Self, ModelError> {
        Self::new(
            std::f64::consts::FRAC_PI_3,
            std::f64::consts::FRAC_PI_2,
            kappa,
            2.0,
            dz,
        )
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    pub fn kappa(&self) -> f64 {
        self.kappa
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    pub fn dz(&self) -> f64 {
        self.dz
    }

    pub fn with_alpha(self, alpha: f64) -> Result<Self, ModelError> {
        Self::new(alpha, self.gamma, self.kappa, self.omega, self.dz)
    }

    pub fn with_gamma(self, gamma: f64) -> Result<Self, ModelError> {
        Self::new(self.alpha, gamma, self.kappa, self.omega, self.dz)
    }

    pub fn with_kappa(self, kappa: f64) -> Result<Self, ModelError> {
        Self::new(self.alpha, self.gamma, kappa, self.omega, self.dz)
    }

    pub fn with_omega(self, omega: f64) -> Result<Self, ModelError> {
        Self::new(self.alpha, self.gamma, self.kappa, omega, self.dz)
    }

    pub fn with_dz(self, dz: f64) -> Result<Self, ModelError> {
        Self::new(self.alpha, self.gamma, self.kappa, self.omega, dz)
    }

    /// True when (α, γ, ω) match [`SystemParams::closed_form_convention`] within 1e-12.
    pub fn matches_closed_form_convention(&self) -> bool {
        (self.alpha - std::f64::consts::FRAC_PI_3).abs() < 1e-12
            && (self.gamma - std::f64::consts::FRAC_PI_2).abs() < 1e-12
            && (self.omega - 2.0).abs() < 1e-12
    }
}
