use thiserror::Error;

/// Errors reported by the gyroscope model.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum GyroError {
    /// A decay rate, coupling, frequency, or photon number was not strictly positive.
    #[error("parameter `{name}` must be strictly positive, got {value}")]
    NonPositiveRate { name: &'static str, value: f64 },

    /// Squeeze parameter below zero.
    #[error("squeeze parameter must be nonnegative, got {value}")]
    NegativeSqueeze { value: f64 },

    /// Squeeze parameter above the configured ceiling.
    #[error("squeeze parameter {value} exceeds the configured maximum {max}")]
    SqueezeOutOfRange { value: f64, max: f64 },

    /// A squared angular velocity below zero.
    #[error("squared angular velocity must be nonnegative, got {value}")]
    NegativeAngularVelocitySquared { value: f64 },

    /// Thermal occupancy outside its allowed range.
    #[error("thermal occupancy must be nonnegative, got {value}")]
    NegativeThermalOccupancy { value: f64 },

    /// The closed-form spectra are derived at zero thermal occupancy only.
    #[error("closed-form spectra require n_th = 0, got {value}")]
    ThermalOccupancyUnsupported { value: f64 },

    /// Signal-to-angular-velocity inversion asked for a signal above the
    /// zero-rotation maximum.
    #[error("signal {signal} cannot be inverted: it exceeds the zero-rotation maximum {max}")]
    SignalOutOfRange { signal: f64, max: f64 },

    /// Cooperativity below the readability floor: no angular velocity is readable.
    #[error("cooperativity {co} is below the readability floor {co_min}; the range is empty")]
    EmptyRange { co: f64, co_min: f64 },

    /// The frequency-domain system matrix could not be inverted.
    #[error("frequency-domain system matrix is numerically singular")]
    SingularSystem,

    /// The drift matrix is not Hurwitz, so no stationary covariance exists.
    #[error("drift matrix is not Hurwitz; no stationary state exists")]
    UnstableSystem,

    /// The classical integrator was asked for a step outside its stability range.
    #[error("integration step too large: dt * max(omega_x, omega_y, omega_rot) = {value} >= 0.1")]
    StepTooLarge { value: f64 },
}

pub type Result<T> = std::result::Result<T, GyroError>;
