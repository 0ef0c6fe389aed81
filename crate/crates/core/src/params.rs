//! Physical parameters and input-field configuration.
//!
//! All frequencies and rates are angular frequencies in rad/s; unit
//! conversions belong at the CLI boundary. Three structural assumptions are
//! baked into every formula and are deliberately not parameters: the readout
//! cavity is resonantly driven (zero detuning), the drive phase is pi/2, and
//! the squeeze phase is pi.

use serde::{Deserialize, Serialize};

use crate::error::{GyroError, Result};
use crate::scalar::{as_f64, lit, Real};

/// Physical rates and couplings of the two-cavity system.
///
/// The two mechanical modes are taken degenerate at `omega_b` and the
/// beam-splitter and down-conversion couplings equal at `g`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
#[serde(bound(
    deserialize = "F: serde::Deserialize<'de> + num_traits::Zero + num_traits::One"
))]
pub struct GyroParams<F> {
    /// Mechanical angular frequency (rad/s).
    pub omega_b: F,
    /// Readout-cavity decay rate (rad/s).
    pub kappa: F,
    /// x-mode thermal decay rate (rad/s).
    pub gamma_x: F,
    /// y-mode thermal decay rate (rad/s).
    pub gamma_y: F,
    /// Linearized coupling rate (rad/s).
    pub g: F,
    /// Input photon number |alpha|^2 (dimensionless).
    pub n_in: F,
    /// Effective mass (kg); used only by the classical-mechanics oracle.
    #[serde(default = "default_mass")]
    pub mass: F,
    /// Equilibrium thermal phonon number; must be 0 for the closed-form
    /// spectra, the covariance oracle accepts any nonnegative value.
    #[serde(default = "default_n_th")]
    pub n_th: F,
}

fn default_mass<F: num_traits::One>() -> F {
    F::one()
}

fn default_n_th<F: num_traits::Zero>() -> F {
    F::zero()
}

impl<F: Real> GyroParams<F> {
    /// Normalized default parameter set used by the CLI and the verification
    /// suite. The absolute scales are arbitrary (every reported figure is a
    /// dimensionless ratio); they are chosen so that `omega_b/kappa = 1e-3`
    /// sits well inside the adiabatic regime and the couplings give unit
    /// cooperativity.
    pub fn default_normalized() -> Self {
        let kappa = lit::<F>(1e9);
        let gamma_x = F::one();
        Self {
            omega_b: lit(1e6),
            kappa,
            gamma_x,
            gamma_y: F::one(),
            // unit cooperativity: g = sqrt(kappa * gamma_x) / 2
            g: (kappa * gamma_x).sqrt() / lit(2.0),
            n_in: F::one(),
            mass: F::one(),
            n_th: F::zero(),
        }
    }

    /// Product of the two mechanical decay rates, the natural scale of
    /// every squared-angular-velocity bound.
    pub fn gamma_prod(&self) -> F {
        self.gamma_x * self.gamma_y
    }

    fn check(&self) -> Result<()> {
        for (name, value) in [
            ("omega_b", self.omega_b),
            ("kappa", self.kappa),
            ("gamma_x", self.gamma_x),
            ("gamma_y", self.gamma_y),
            ("g", self.g),
            ("n_in", self.n_in),
            ("mass", self.mass),
        ] {
            if value.is_nan() || !value.is_finite() || value <= F::zero() {
                return Err(GyroError::NonPositiveRate {
                    name,
                    value: as_f64(value),
                });
            }
        }
        if self.n_th.is_nan() || self.n_th < F::zero() {
            return Err(GyroError::NegativeThermalOccupancy {
                value: as_f64(self.n_th),
            });
        }
        Ok(())
    }
}

/// Quantum statistics of the drive's fluctuation input.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum InputField<F> {
    /// Vacuum fluctuations.
    Vacuum,
    /// Single-mode squeezed vacuum with squeeze parameter `r` (phase pi).
    SqueezedVacuum { r: F },
}

impl<F: Real> InputField<F> {
    /// Squeeze parameter; 0 for vacuum. Vacuum is identical to
    /// `SqueezedVacuum { r: 0 }` in every formula.
    pub fn squeeze(&self) -> F {
        match self {
            InputField::Vacuum => F::zero(),
            InputField::SqueezedVacuum { r } => *r,
        }
    }

    /// Noise attenuation factor `exp(-2 r)` applied to the squeezed quadratures.
    pub fn attenuation(&self) -> F {
        (-lit::<F>(2.0) * self.squeeze()).exp()
    }

    fn check(&self, r_max: F) -> Result<()> {
        if let InputField::SqueezedVacuum { r } = self {
            if r.is_nan() || *r < F::zero() {
                return Err(GyroError::NegativeSqueeze { value: as_f64(*r) });
            }
            if *r > r_max {
                return Err(GyroError::SqueezeOutOfRange {
                    value: as_f64(*r),
                    max: as_f64(r_max),
                });
            }
        }
        Ok(())
    }
}

/// Squared angular velocity of the platform, `(rad/s)^2`.
///
/// Every observable depends on the rotation only through its square, so the
/// model never needs a signed angular velocity.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
pub struct AngularVelocity<F> {
    omega_rot_sq: F,
}

impl<F: Real> AngularVelocity<F> {
    /// Wrap a squared angular velocity; rejects negative values.
    pub fn from_squared(omega_rot_sq: F) -> Result<Self> {
        if omega_rot_sq.is_nan() || omega_rot_sq < F::zero() {
            return Err(GyroError::NegativeAngularVelocitySquared {
                value: as_f64(omega_rot_sq),
            });
        }
        Ok(Self { omega_rot_sq })
    }

    /// Zero rotation.
    pub fn zero() -> Self {
        Self {
            omega_rot_sq: F::zero(),
        }
    }

    pub fn squared(&self) -> F {
        self.omega_rot_sq
    }
}

/// Knobs for [`validate_with`]; [`validate`] uses the defaults.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ValidationOptions<F> {
    /// Ceiling on `omega_b/kappa` below which the adiabatic closed forms are
    /// marked trusted.
    pub adiabatic_threshold: F,
    /// Ceiling on the squeeze parameter (the strongest squeezing reported in
    /// experiments corresponds to r = 1.73).
    pub r_max: F,
}

impl<F: Real> Default for ValidationOptions<F> {
    fn default() -> Self {
        Self {
            adiabatic_threshold: lit(1e-2),
            r_max: lit(5.0),
        }
    }
}

/// A parameter set and input field that passed validation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(bound(
    deserialize = "F: serde::Deserialize<'de> + num_traits::Zero + num_traits::One"
))]
pub struct ValidatedConfig<F> {
    params: GyroParams<F>,
    input: InputField<F>,
    adiabatic_ok: bool,
}

impl<F: Real> ValidatedConfig<F> {
    pub fn params(&self) -> &GyroParams<F> {
        &self.params
    }

    pub fn input(&self) -> &InputField<F> {
        &self.input
    }

    /// Whether `omega_b/kappa` is below the adiabatic threshold, i.e. whether
    /// the closed-form spectra can be trusted.
    pub fn adiabatic_ok(&self) -> bool {
        self.adiabatic_ok
    }

    /// Cooperativity implied by the stored coupling rate.
    pub fn cooperativity(&self) -> F {
        let p = &self.params;
        lit::<F>(4.0) * p.g * p.g / (p.kappa * p.gamma_x)
    }

    /// Whether the mechanical damping is slow enough for the resonance
    /// approximations (`gamma/omega_b <= 1e-2` for both modes).
    pub fn resonance_regime_ok(&self) -> bool {
        let p = &self.params;
        let threshold = lit::<F>(1e-2);
        p.gamma_x / p.omega_b <= threshold && p.gamma_y / p.omega_b <= threshold
    }
}

/// Validate a parameter set and input field with default options.
pub fn validate<F: Real>(params: GyroParams<F>, input: InputField<F>) -> Result<ValidatedConfig<F>> {
    validate_with(params, input, ValidationOptions::default())
}

/// Validate with explicit options. Validation is idempotent: re-validating
/// the stored parts of a [`ValidatedConfig`] reproduces it exactly.
pub fn validate_with<F: Real>(
    params: GyroParams<F>,
    input: InputField<F>,
    options: ValidationOptions<F>,
) -> Result<ValidatedConfig<F>> {
    params.check()?;
    input.check(options.r_max)?;
    let adiabatic_ok = params.omega_b / params.kappa <= options.adiabatic_threshold;
    Ok(ValidatedConfig {
        params,
        input,
        adiabatic_ok,
    })
}

/// Cooperativity `C_o = 4 g^2 / (kappa gamma_x)`.
pub fn cooperativity<F: Real>(g: F, kappa: F, gamma_x: F) -> Result<F> {
    for (name, value) in [("g", g), ("kappa", kappa), ("gamma_x", gamma_x)] {
        if value.is_nan() || value <= F::zero() {
            return Err(GyroError::NonPositiveRate {
                name,
                value: as_f64(value),
            });
        }
    }
    Ok(lit::<F>(4.0) * g * g / (kappa * gamma_x))
}

/// Coupling rate that realizes a given cooperativity: `g = sqrt(C_o kappa gamma_x) / 2`.
pub fn g_from_cooperativity<F: Real>(co: F, kappa: F, gamma_x: F) -> Result<F> {
    for (name, value) in [("co", co), ("kappa", kappa), ("gamma_x", gamma_x)] {
        if value.is_nan() || value <= F::zero() {
            return Err(GyroError::NonPositiveRate {
                name,
                value: as_f64(value),
            });
        }
    }
    Ok((co * kappa * gamma_x).sqrt() / lit(2.0))
}

/// Squeezing expressed in decibels: `10 log10(exp(2r))`.
pub fn squeeze_db_from_r<F: Real>(r: F) -> F {
    lit::<F>(10.0) * (lit::<F>(2.0) * r).exp().log10()
}

/// Inverse of [`squeeze_db_from_r`].
pub fn squeeze_r_from_db<F: Real>(db: F) -> F {
    db * lit::<F>(10.0).ln() / lit(20.0)
}
