//! Brute-force verification of the closed-form results: an exact
//! frequency-domain solve without adiabatic elimination, a Lyapunov route to
//! the stationary variance, and a classical two-frame integration check of
//! the rotating-frame Hamiltonian.

pub mod classical;
pub mod exact;
pub mod linalg;
pub mod lyapunov;
pub mod quad;

pub use classical::{
    inertial_energy, inertial_energy_drift, integrate_inertial, integrate_rotating,
    rotating_frame_check, rotating_frame_check_without_centrifugal, ClassicalOscillator,
    ClassicalState, Frame, FrameCheckReport,
};
pub use exact::{exact_photocurrent_psd, exact_transfer_matrix, input_correlations, TransferMatrix, DIM};
pub use lyapunov::{drift_matrix, lyapunov_variance, steady_state_variance, VarianceReport};
