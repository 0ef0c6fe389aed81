//! Frequency-domain model of a gyroscope built from a double-mode acoustic
//! cavity coupled to a microwave readout cavity.
//!
//! The platform rotation couples the two degenerate mechanical modes; the
//! readout cavity measures one of them by homodyne detection. This crate
//! computes the referred noise budget and photocurrent spectra for vacuum
//! and squeezed-vacuum drive fluctuations, the three gyroscope performance
//! indices (readable range, SNR per photon, sensitivity) with their
//! closed-form resonance values and fundamental limits, and brute-force
//! oracles that check every approximation: an exact frequency-domain solve
//! of the coupled modes, a Lyapunov route to the stationary variance, and a
//! classical two-frame integration of the rotating-platform mechanics.
//!
//! All numerics are generic over the scalar type via [`scalar::Real`];
//! concrete `f64`/`f32` aliases are exported below.

pub mod error;
pub mod metrics;
pub mod oracle;
pub mod params;
pub mod response;
pub mod scalar;
pub mod spectra;

pub use error::{GyroError, Result};
pub use metrics::{
    co_min, design_bounds, metrics_report, omega_range, sensitivity,
    sensitivity_finite_difference, sensitivity_limit, sensitivity_ratio, sensitivity_resonance,
    signal_psd, signal_resonance, snr_per_photon_resonance, solve_omega_sq_from_signal,
    DesignBounds, MetricsReport, SensitivityLimit, SensitivityRatio,
};
pub use params::{
    cooperativity, g_from_cooperativity, squeeze_db_from_r, squeeze_r_from_db, validate,
    validate_with, AngularVelocity, GyroParams, InputField, ValidatedConfig, ValidationOptions,
};
pub use response::{chi_x, chi_y, dchi_x_domega2, Detuning};
pub use scalar::Real;
pub use spectra::{
    noise_budget, noise_budget_symmetrized, photocurrent_psd, resonance_budget, sql_crossing_r,
    sql_report, NoiseBudget, PhotocurrentPsd, SqlReport,
};

/// `f64` aliases for the domain types.
pub type GyroParams64 = GyroParams<f64>;
pub type InputField64 = InputField<f64>;
pub type AngularVelocity64 = AngularVelocity<f64>;
pub type ValidatedConfig64 = ValidatedConfig<f64>;
pub type NoiseBudget64 = NoiseBudget<f64>;
pub type MetricsReport64 = MetricsReport<f64>;
pub type DesignBounds64 = DesignBounds<f64>;

/// `f32` aliases for the domain types.
pub type GyroParams32 = GyroParams<f32>;
pub type InputField32 = InputField<f32>;
pub type AngularVelocity32 = AngularVelocity<f32>;
pub type ValidatedConfig32 = ValidatedConfig<f32>;
