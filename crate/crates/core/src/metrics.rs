//! Gyroscope performance indices: signal spectrum, SNR per photon,
//! angular-velocity range, and sensitivity, together with their closed-form
//! resonance values and fundamental limits.
//!
//! Everything here takes the cooperativity directly rather than the coupling
//! rate; the conversion lives in [`crate::params`]. Readability means an SNR
//! per photon of at least 1, and that threshold is what defines the range
//! bound and the cooperativity floor.

use crate::error::{GyroError, Result};
use crate::params::{AngularVelocity, InputField, ValidatedConfig};
use crate::response::{chi_x, dchi_x_domega2, Detuning};
use crate::scalar::{as_f64, lit, Real};
use crate::spectra::photocurrent_psd;

/// Readable-range summary for one cooperativity and input state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DesignBounds<F> {
    /// Upper bound on the squared angular velocity, in units of
    /// `gamma_x * gamma_y`.
    pub omega_sq_ub: F,
    /// Minimum cooperativity for a nonempty range.
    pub co_min: F,
}

/// Performance summary at one operating point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MetricsReport<F> {
    /// Signal PSD at the probe frequency.
    pub signal: F,
    /// Symmetric photocurrent PSD at the probe frequency.
    pub psd: F,
    /// `signal / (psd * n_in)` at the probe frequency.
    pub snr_per_photon: F,
    /// Minimum detectable change of the squared angular velocity.
    pub sensitivity: F,
    /// Fundamental sensitivity limit at the optimal cooperativity.
    pub limit: F,
    /// Squeezed-over-vacuum sensitivity ratio at resonance.
    pub ratio_to_vacuum: F,
    /// Closed-form resonance signal.
    pub signal_resonance: F,
    /// Closed-form resonance SNR per photon.
    pub snr_per_photon_resonance: F,
    /// Closed-form resonance sensitivity.
    pub sensitivity_resonance: F,
    /// Cooperativity at which the sensitivity limit is attained.
    pub co_at_equality: F,
}

/// Fundamental sensitivity limit and the cooperativity attaining it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SensitivityLimit<F> {
    pub limit: F,
    pub co_at_equality: F,
}

/// Squeezed-over-vacuum sensitivity ratio and its cooperativity-independent cap.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SensitivityRatio<F> {
    pub ratio: F,
    /// `sqrt((1 + exp(-2r)) / 2)`, approached only at the optimal cooperativity.
    pub bound: F,
}

/// `A = gamma_x gamma_y / 4 + Omega^2`, the detuned Lorentzian scale that
/// every resonance formula is built from.
fn lorentzian_scale<F: Real>(cfg: &ValidatedConfig<F>, omega_rot_sq: AngularVelocity<F>) -> F {
    lit::<F>(0.25) * cfg.params().gamma_prod() + omega_rot_sq.squared()
}

/// Real signal amplitude factor
/// `B(omega) = 2 Re chi_x(omega - omega_b) - 2 Re chi_x(omega + omega_b)`.
fn signal_amplitude_factor<F: Real>(
    omega: F,
    cfg: &ValidatedConfig<F>,
    omega_rot_sq: F,
) -> F {
    let p = cfg.params();
    let lower = chi_x(
        Detuning::from_omega(omega, p.omega_b),
        omega_rot_sq,
        p.gamma_x,
        p.gamma_y,
    );
    let upper = chi_x(
        Detuning(omega + p.omega_b),
        omega_rot_sq,
        p.gamma_x,
        p.gamma_y,
    );
    let sum = lower + lower.conj() - upper - upper.conj();
    debug_assert!(sum.im.abs() <= lit::<F>(1e3) * F::epsilon() * sum.norm().max(F::one()));
    sum.re
}

/// Signal PSD
/// `S(omega) = 16 N_in gamma_x^2 C_o^2 |chi_x(w-wb) + chi_x*(w-wb) - chi_x(w+wb) - chi_x*(w+wb)|^2`.
///
/// Independent of the input squeezing: squeezing shapes the noise, not the
/// coherent response.
pub fn signal_psd<F: Real>(
    omega: F,
    cfg: &ValidatedConfig<F>,
    co: F,
    omega_rot_sq: AngularVelocity<F>,
) -> F {
    let p = cfg.params();
    let b = signal_amplitude_factor(omega, cfg, omega_rot_sq.squared());
    lit::<F>(16.0) * p.n_in * p.gamma_x * p.gamma_x * co * co * b * b
}

/// Resonance approximation of the signal:
/// `S(omega_b) ~ 16 N_in C_o^2 (gamma_x gamma_y)^2 / A^2`.
pub fn signal_resonance<F: Real>(
    cfg: &ValidatedConfig<F>,
    co: F,
    omega_rot_sq: AngularVelocity<F>,
) -> F {
    let p = cfg.params();
    let a = lorentzian_scale(cfg, omega_rot_sq);
    let gp = p.gamma_prod();
    lit::<F>(16.0) * p.n_in * co * co * gp * gp / (a * a)
}

/// Invert the resonance signal for the squared angular velocity:
/// `Omega^2 = 4 C_o gamma_x gamma_y sqrt(N_in / S) - gamma_x gamma_y / 4`.
///
/// The signal decreases monotonically with rotation, so values above the
/// zero-rotation maximum are rejected rather than clamped.
pub fn solve_omega_sq_from_signal<F: Real>(
    signal: F,
    cfg: &ValidatedConfig<F>,
    co: F,
) -> Result<F> {
    let p = cfg.params();
    let gp = p.gamma_prod();
    let max = signal_resonance(cfg, co, AngularVelocity::zero());
    if signal.is_nan() || signal <= F::zero() {
        return Err(GyroError::SignalOutOfRange {
            signal: as_f64(signal),
            max: as_f64(max),
        });
    }
    let omega_sq = lit::<F>(4.0) * co * gp * (p.n_in / signal).sqrt() - lit::<F>(0.25) * gp;
    if omega_sq < F::zero() {
        return Err(GyroError::SignalOutOfRange {
            signal: as_f64(signal),
            max: as_f64(max),
        });
    }
    Ok(omega_sq)
}

/// Resonance photocurrent PSD expressed through the shared building blocks
/// `K = (gamma_x gamma_y)^2 / A^2` and `u = A / (gamma_x gamma_y)`:
///
/// `nbar_I(omega_b) = exp(-2r) (1 + C_o^2 K) + 2 C_o K u`.
///
/// The SNR closed form, the range bound, and the resonance sensitivity are
/// all derived from this one expression, which keeps them mutually
/// consistent (the SNR equals 1 exactly at the range bound).
fn resonance_photocurrent_psd<F: Real>(
    cfg: &ValidatedConfig<F>,
    co: F,
    omega_rot_sq: AngularVelocity<F>,
    input: &InputField<F>,
) -> F {
    let gp = cfg.params().gamma_prod();
    let a = lorentzian_scale(cfg, omega_rot_sq);
    let k = gp * gp / (a * a);
    let u = a / gp;
    input.attenuation() * (F::one() + co * co * k) + lit::<F>(2.0) * co * k * u
}

/// Resonance SNR per photon, `16 C_o^2 K / nbar_I(omega_b)` with the shot and
/// back-action noise attenuated by `exp(-2r)` for a squeezed input.
pub fn snr_per_photon_resonance<F: Real>(
    cfg: &ValidatedConfig<F>,
    co: F,
    omega_rot_sq: AngularVelocity<F>,
    input: &InputField<F>,
) -> F {
    let gp = cfg.params().gamma_prod();
    let a = lorentzian_scale(cfg, omega_rot_sq);
    let k = gp * gp / (a * a);
    lit::<F>(16.0) * co * co * k / resonance_photocurrent_psd(cfg, co, omega_rot_sq, input)
}

/// `exp(2r)`-dependent factor of the squeezed range bound and cooperativity
/// floor: `sqrt(exp(4r) + 16 exp(2r) - 1) - exp(2r)`. Equals 3 at `r = 0` and
/// grows to 8 as `r` grows.
fn range_root_factor<F: Real>(input: &InputField<F>) -> F {
    let e2r = (lit::<F>(2.0) * input.squeeze()).exp();
    // rationalized to avoid the cancellation between sqrt(exp(4r) + ...) and
    // exp(2r) at large r
    let num = lit::<F>(16.0) * e2r - F::one();
    num / ((e2r * e2r + num).sqrt() + e2r)
}

/// Minimum cooperativity for a nonempty readable range: 1/12 for vacuum,
/// decreasing with squeezing toward 1/32.
pub fn co_min<F: Real>(input: &InputField<F>) -> F {
    match input {
        InputField::Vacuum => F::one() / lit(12.0),
        InputField::SqueezedVacuum { .. } => lit::<F>(0.25) / range_root_factor(input),
    }
}

/// Upper bound of the readable squared-angular-velocity range, in units of
/// `gamma_x * gamma_y`: `3 C_o - 1/4` for vacuum and
/// `(sqrt(exp(4r) + 16 exp(2r) - 1) - exp(2r)) C_o - 1/4` for squeezed input.
///
/// This is exactly where the resonance SNR per photon crosses 1.
pub fn omega_range<F: Real>(co: F, input: &InputField<F>) -> Result<F> {
    let floor = co_min(input);
    if co < floor {
        return Err(GyroError::EmptyRange {
            co: as_f64(co),
            co_min: as_f64(floor),
        });
    }
    let u_ub = match input {
        InputField::Vacuum => lit::<F>(3.0) * co,
        InputField::SqueezedVacuum { .. } => range_root_factor(input) * co,
    };
    // co == co_min lands on zero up to rounding; keep the boundary clean
    Ok((u_ub - lit(0.25)).max(F::zero()))
}

/// Range bound and cooperativity floor for one `(C_o, input)` pair.
pub fn design_bounds<F: Real>(co: F, input: &InputField<F>) -> Result<DesignBounds<F>> {
    Ok(DesignBounds {
        omega_sq_ub: omega_range(co, input)?,
        co_min: co_min(input),
    })
}

/// Modulus of the derivative of the signal amplitude with respect to
/// `Omega^2`, analytic route.
fn signal_amplitude_derivative<F: Real>(
    omega: F,
    cfg: &ValidatedConfig<F>,
    co: F,
    omega_rot_sq: F,
) -> F {
    let p = cfg.params();
    let lower = dchi_x_domega2(
        Detuning::from_omega(omega, p.omega_b),
        omega_rot_sq,
        p.gamma_x,
        p.gamma_y,
    );
    let upper = dchi_x_domega2(
        Detuning(omega + p.omega_b),
        omega_rot_sq,
        p.gamma_x,
        p.gamma_y,
    );
    let db = lit::<F>(2.0) * (lower.re - upper.re);
    lit::<F>(4.0) * p.n_in.sqrt() * p.gamma_x * co * db.abs()
}

fn sensitivity_from_derivative<F: Real>(
    omega: F,
    cfg: &ValidatedConfig<F>,
    co: F,
    omega_rot_sq: AngularVelocity<F>,
    input: &InputField<F>,
    derivative: F,
) -> Result<F> {
    let psd = photocurrent_psd(omega, cfg, co, omega_rot_sq, input)?.symmetric;
    if derivative == F::zero() {
        // a vanishing derivative means no first-order response: infinite
        // minimum detectable change, reported as such rather than an error
        return Ok(F::infinity());
    }
    Ok(psd.sqrt() / derivative)
}

/// Sensitivity `Delta Omega^2(omega)`: the photocurrent noise divided by the
/// modulus of the `Omega^2`-derivative of the signal amplitude (analytic
/// derivative route).
pub fn sensitivity<F: Real>(
    omega: F,
    cfg: &ValidatedConfig<F>,
    co: F,
    omega_rot_sq: AngularVelocity<F>,
    input: &InputField<F>,
) -> Result<F> {
    let derivative = signal_amplitude_derivative(omega, cfg, co, omega_rot_sq.squared());
    sensitivity_from_derivative(omega, cfg, co, omega_rot_sq, input, derivative)
}

/// Finite-difference cross-check of [`sensitivity`] (relative step 1e-6 on
/// `Omega^2`); the two routes must agree to 1e-4 relative.
pub fn sensitivity_finite_difference<F: Real>(
    omega: F,
    cfg: &ValidatedConfig<F>,
    co: F,
    omega_rot_sq: AngularVelocity<F>,
    input: &InputField<F>,
) -> Result<F> {
    let p = cfg.params();
    let osq = omega_rot_sq.squared();
    let step = lit::<F>(1e-6) * osq.max(p.gamma_prod());
    let up = signal_amplitude_factor(omega, cfg, osq + step);
    let down = signal_amplitude_factor(omega, cfg, (osq - step).max(F::zero()));
    let width = if osq >= step {
        lit::<F>(2.0) * step
    } else {
        osq + step // one-sided shrink near zero rotation
    };
    let db = (up - down) / width;
    let derivative = lit::<F>(4.0) * p.n_in.sqrt() * p.gamma_x * co * db.abs();
    sensitivity_from_derivative(omega, cfg, co, omega_rot_sq, input, derivative)
}

/// Resonance sensitivity `sqrt(nbar_I(omega_b)) A^2 / (4 gamma_x gamma_y C_o sqrt(N_in))`,
/// sharing [`resonance_photocurrent_psd`] with the SNR closed form.
pub fn sensitivity_resonance<F: Real>(
    cfg: &ValidatedConfig<F>,
    co: F,
    omega_rot_sq: AngularVelocity<F>,
    input: &InputField<F>,
) -> F {
    let p = cfg.params();
    let a = lorentzian_scale(cfg, omega_rot_sq);
    let psd = resonance_photocurrent_psd(cfg, co, omega_rot_sq, input);
    psd.sqrt() * a * a / (lit::<F>(4.0) * p.gamma_prod() * co * p.n_in.sqrt())
}

/// Fundamental sensitivity limit, `sqrt(2 (1 + exp(-2r))) A / (4 sqrt(N_in))`,
/// attained if and only if `C_o = A / (gamma_x gamma_y)`. The vacuum case
/// `A / (2 sqrt(N_in))` is the standard-quantum-limit floor.
pub fn sensitivity_limit<F: Real>(
    cfg: &ValidatedConfig<F>,
    omega_rot_sq: AngularVelocity<F>,
    input: &InputField<F>,
) -> SensitivityLimit<F> {
    let p = cfg.params();
    let a = lorentzian_scale(cfg, omega_rot_sq);
    let two = lit::<F>(2.0);
    let limit = (two * (F::one() + input.attenuation())).sqrt() * a
        / (lit::<F>(4.0) * p.n_in.sqrt());
    SensitivityLimit {
        limit,
        co_at_equality: a / p.gamma_prod(),
    }
}

/// Squeezed-over-vacuum resonance sensitivity ratio
///
/// `sqrt(exp(-2r) + 2 (1 - exp(-2r)) C_o gamma_x gamma_y A / (A + C_o gamma_x gamma_y)^2)`
///
/// together with its cap `sqrt((1 + exp(-2r)) / 2)`: even infinite squeezing
/// improves the sensitivity by at most `sqrt(2)/2`.
pub fn sensitivity_ratio<F: Real>(
    cfg: &ValidatedConfig<F>,
    co: F,
    omega_rot_sq: AngularVelocity<F>,
    r: F,
) -> SensitivityRatio<F> {
    let p = cfg.params();
    let a = lorentzian_scale(cfg, omega_rot_sq);
    let attn = (-lit::<F>(2.0) * r).exp();
    let cg = co * p.gamma_prod();
    let mixing = lit::<F>(2.0) * (F::one() - attn) * cg * a / ((a + cg) * (a + cg));
    let ratio = (attn + mixing).sqrt();
    let bound = ((F::one() + attn) / lit(2.0)).sqrt();
    debug_assert!(ratio <= bound + lit(1e-12));
    SensitivityRatio { ratio, bound }
}

/// Full performance report at one probe frequency and operating point.
pub fn metrics_report<F: Real>(
    omega: F,
    cfg: &ValidatedConfig<F>,
    co: F,
    omega_rot_sq: AngularVelocity<F>,
    input: &InputField<F>,
) -> Result<MetricsReport<F>> {
    let p = cfg.params();
    let signal = signal_psd(omega, cfg, co, omega_rot_sq);
    let psd = photocurrent_psd(omega, cfg, co, omega_rot_sq, input)?.symmetric;
    let limit = sensitivity_limit(cfg, omega_rot_sq, input);
    Ok(MetricsReport {
        signal,
        psd,
        snr_per_photon: signal / (psd * p.n_in),
        sensitivity: sensitivity(omega, cfg, co, omega_rot_sq, input)?,
        limit: limit.limit,
        ratio_to_vacuum: sensitivity_ratio(cfg, co, omega_rot_sq, input.squeeze()).ratio,
        signal_resonance: signal_resonance(cfg, co, omega_rot_sq),
        snr_per_photon_resonance: snr_per_photon_resonance(cfg, co, omega_rot_sq, input),
        sensitivity_resonance: sensitivity_resonance(cfg, co, omega_rot_sq, input),
        co_at_equality: limit.co_at_equality,
    })
}
