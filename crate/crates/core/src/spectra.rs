//! Noise power spectral densities of the measured quadrature and of the
//! homodyne photocurrent.
//!
//! The measured observable is the dimensionless position quadrature
//! `X = x / x_zpf` of the readout-coupled mechanical mode. Its noise budget
//! splits into
//!
//! * zero-point noise, `gamma_x |chi_x|^2`, from the x-mode thermal input at
//!   zero occupancy,
//! * back-action noise, `gamma_x C_o |chi_x(omega - omega_b) - chi_x(omega + omega_b)|^2`,
//!   from the quantum fluctuations of the drive,
//! * angular noise, `Omega^2 gamma_y |chi_x|^2 |chi_y|^2`, the y-mode thermal
//!   noise rotated into the measured mode,
//! * imprecision noise `1/G^2` with gain `G = 2 sqrt(gamma_x C_o)`, the
//!   detector shot noise referred back to `X`.
//!
//! A squeezed drive attenuates the back-action term and the photocurrent
//! shot floor by `exp(-2r)`; the imprecision term referred back to `X` keeps
//! its vacuum normalization. All spectra here require `n_th = 0`; finite
//! occupancy lives in the brute-force oracle only.

use num_complex::Complex;

use crate::error::{GyroError, Result};
use crate::params::{AngularVelocity, InputField, ValidatedConfig};
use crate::response::{chi_x, chi_y, Detuning};
use crate::scalar::{as_f64, lit, Real};

/// Per-frequency decomposition of the referred position noise
/// (all entries dimensionless times seconds).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NoiseBudget<F> {
    /// Zero-point noise of `X`.
    pub n_zpf: F,
    /// Back-action noise of `X`, before any squeeze attenuation.
    pub n_ba: F,
    /// Angular noise of `X`.
    pub n_ang: F,
    /// Imprecision noise `1/G^2`.
    pub n_im: F,
    /// Additional noise: attenuated back-action plus imprecision.
    pub n_add: F,
    /// Total referred noise `n_zpf + n_add + n_ang`.
    pub n_x_total: F,
    /// Whether the entries are symmetrized over `+-omega`.
    pub symmetrized: bool,
}

impl<F: Real> NoiseBudget<F> {
    /// Referred noise of physical origin (total minus imprecision): the part
    /// whose spectral integral equals the stationary variance of `X`.
    pub fn physical_total(&self) -> F {
        self.n_x_total - self.n_im
    }
}

/// Raw and symmetrized photocurrent PSD (dimensionless times seconds).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhotocurrentPsd<F> {
    /// One-frequency form, including the cross term between the measured
    /// quadrature and the drive fluctuations. Real up to rounding.
    pub raw: F,
    /// Symmetric form `shot + 4 gamma_x C_o nbar_X`; the cross term cancels.
    pub symmetric: F,
}

fn ensure_spectra_inputs<F: Real>(cfg: &ValidatedConfig<F>, co: F) -> Result<()> {
    if cfg.params().n_th != F::zero() {
        return Err(GyroError::ThermalOccupancyUnsupported {
            value: as_f64(cfg.params().n_th),
        });
    }
    if co.is_nan() || co <= F::zero() {
        return Err(GyroError::NonPositiveRate {
            name: "co",
            value: as_f64(co),
        });
    }
    Ok(())
}

/// Raw (single-frequency) components of the referred noise at `omega`.
fn budget_components<F: Real>(
    omega: F,
    cfg: &ValidatedConfig<F>,
    co: F,
    omega_rot_sq: AngularVelocity<F>,
) -> (F, F, F) {
    let p = cfg.params();
    let osq = omega_rot_sq.squared();
    let lower = Detuning::from_omega(omega, p.omega_b);
    let upper = Detuning(omega + p.omega_b);
    let chi_lower = chi_x(lower, osq, p.gamma_x, p.gamma_y);
    let chi_upper = chi_x(upper, osq, p.gamma_x, p.gamma_y);
    let n_zpf = p.gamma_x * chi_lower.norm_sqr();
    let n_ba = p.gamma_x * co * (chi_lower - chi_upper).norm_sqr();
    let n_ang = osq * p.gamma_y * chi_lower.norm_sqr() * chi_y(lower, p.gamma_y).norm_sqr();
    (n_zpf, n_ba, n_ang)
}

fn assemble<F: Real>(
    n_zpf: F,
    n_ba: F,
    n_ang: F,
    co: F,
    gamma_x: F,
    input: &InputField<F>,
    symmetrized: bool,
) -> NoiseBudget<F> {
    let n_im = (lit::<F>(4.0) * gamma_x * co).recip();
    let n_add = input.attenuation() * n_ba + n_im;
    NoiseBudget {
        n_zpf,
        n_ba,
        n_ang,
        n_im,
        n_add,
        n_x_total: n_zpf + n_add + n_ang,
        symmetrized,
    }
}

/// Referred noise budget at a single frequency (not symmetrized).
pub fn noise_budget<F: Real>(
    omega: F,
    cfg: &ValidatedConfig<F>,
    co: F,
    omega_rot_sq: AngularVelocity<F>,
    input: &InputField<F>,
) -> Result<NoiseBudget<F>> {
    ensure_spectra_inputs(cfg, co)?;
    let (n_zpf, n_ba, n_ang) = budget_components(omega, cfg, co, omega_rot_sq);
    Ok(assemble(n_zpf, n_ba, n_ang, co, cfg.params().gamma_x, input, false))
}

/// Symmetric referred noise budget, computed by explicit two-point
/// evaluation at `+-omega` rather than by assuming analytic symmetry.
pub fn noise_budget_symmetrized<F: Real>(
    omega: F,
    cfg: &ValidatedConfig<F>,
    co: F,
    omega_rot_sq: AngularVelocity<F>,
    input: &InputField<F>,
) -> Result<NoiseBudget<F>> {
    ensure_spectra_inputs(cfg, co)?;
    let half = lit::<F>(0.5);
    let (zp, bp, ap) = budget_components(omega, cfg, co, omega_rot_sq);
    let (zm, bm, am) = budget_components(-omega, cfg, co, omega_rot_sq);
    Ok(assemble(
        (zp + zm) * half,
        (bp + bm) * half,
        (ap + am) * half,
        co,
        cfg.params().gamma_x,
        input,
        true,
    ))
}

/// Cross term of the raw photocurrent PSD as a complex number; its real part
/// enters the PSD, and its imaginary part vanishes up to rounding because
/// `chi_x(-delta) = conj(chi_x(delta))`.
pub fn photocurrent_cross_term<F: Real>(
    omega: F,
    cfg: &ValidatedConfig<F>,
    co: F,
    omega_rot_sq: AngularVelocity<F>,
) -> Complex<F> {
    let p = cfg.params();
    let osq = omega_rot_sq.squared();
    let chi = |d: F| chi_x(Detuning(d), osq, p.gamma_x, p.gamma_y);
    let sum = chi(omega - p.omega_b) - chi(omega + p.omega_b) + chi(-omega + p.omega_b)
        - chi(-omega - p.omega_b);
    sum * (lit::<F>(2.0) * p.gamma_x * co)
}

/// Photocurrent PSD at `omega`.
///
/// The raw form carries the drive-quadrature cross term explicitly; the
/// symmetric form is assembled independently from the symmetrized budget so
/// that the cancellation of the cross term is a testable statement, not an
/// assumption.
pub fn photocurrent_psd<F: Real>(
    omega: F,
    cfg: &ValidatedConfig<F>,
    co: F,
    omega_rot_sq: AngularVelocity<F>,
    input: &InputField<F>,
) -> Result<PhotocurrentPsd<F>> {
    ensure_spectra_inputs(cfg, co)?;
    let p = cfg.params();
    let attn = input.attenuation();
    let gain_sq = lit::<F>(4.0) * p.gamma_x * co;

    let (n_zpf, n_ba, n_ang) = budget_components(omega, cfg, co, omega_rot_sq);
    let physical = n_zpf + attn * n_ba + n_ang;
    let raw = attn + gain_sq * physical + photocurrent_cross_term(omega, cfg, co, omega_rot_sq).re;

    let sym_budget = noise_budget_symmetrized(omega, cfg, co, omega_rot_sq, input)?;
    let symmetric = attn + gain_sq * sym_budget.physical_total();

    Ok(PhotocurrentPsd { raw, symmetric })
}

/// Low-damping (`gamma << omega_b`) closed forms of the symmetric budget at
/// the mechanical resonance.
///
/// Callers should consult [`ValidatedConfig::resonance_regime_ok`] before
/// trusting these values; the function itself never fails on regime.
pub fn resonance_budget<F: Real>(
    cfg: &ValidatedConfig<F>,
    co: F,
    omega_rot_sq: AngularVelocity<F>,
    input: &InputField<F>,
) -> Result<NoiseBudget<F>> {
    ensure_spectra_inputs(cfg, co)?;
    let p = cfg.params();
    let half = lit::<F>(0.5);
    let quarter = lit::<F>(0.25);
    let osq = omega_rot_sq.squared();
    let a = quarter * p.gamma_prod() + osq;
    // shared Lorentzian weight (gamma_y^2 / 4) / A^2
    let weight = quarter * p.gamma_y * p.gamma_y / (a * a);
    let n_zpf = half * p.gamma_x * weight;
    let n_ba = p.gamma_x * co * weight;
    let n_ang = lit::<F>(2.0) * osq / p.gamma_y * weight;
    Ok(assemble(n_zpf, n_ba, n_ang, co, p.gamma_x, input, true))
}

/// Standard-quantum-limit analysis at the mechanical resonance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SqlReport<F> {
    /// Cooperativity minimizing the additional noise:
    /// `exp(r) (gamma_x gamma_y / 4 + Omega^2) / (gamma_x gamma_y)`.
    pub co_star: F,
    /// `nbar_add - nbar_zpf` at `co_star`.
    pub gap: F,
    /// Whether the gap is nonpositive, i.e. the additional noise reaches the
    /// zero-point level.
    pub reaches_sql: bool,
    /// Squeeze parameter at which the gap changes sign at the
    /// angular-dominance boundary `Omega^2 = gamma_x gamma_y / 4` (ln 2).
    pub crossing_r: F,
}

/// Gap `nbar_add(omega_b) - nbar_zpf(omega_b)` at the optimal cooperativity,
/// as a function of `exp(-r)` and the rotation.
fn sql_gap<F: Real>(gamma_x: F, gamma_y: F, osq: F, e_minus_r: F) -> F {
    let quarter = lit::<F>(0.25);
    let a = quarter * gamma_x * gamma_y + osq;
    let q = (F::one() + lit::<F>(4.0) * osq / (gamma_x * gamma_y)).recip();
    gamma_y / (lit::<F>(2.0) * a) * (e_minus_r - q)
}

/// Optimal-cooperativity quantum-limit report; the vacuum and squeezed cases
/// share one code path parameterized by `exp(-r)`.
pub fn sql_report<F: Real>(
    cfg: &ValidatedConfig<F>,
    omega_rot_sq: AngularVelocity<F>,
    input: &InputField<F>,
) -> SqlReport<F> {
    let p = cfg.params();
    let quarter = lit::<F>(0.25);
    let osq = omega_rot_sq.squared();
    let a = quarter * p.gamma_prod() + osq;
    let e_minus_r = (-input.squeeze()).exp();
    let co_star = a / (p.gamma_prod() * e_minus_r);
    let gap = sql_gap(p.gamma_x, p.gamma_y, osq, e_minus_r);
    SqlReport {
        co_star,
        gap,
        reaches_sql: gap <= F::zero(),
        crossing_r: sql_crossing_r(p.gamma_x, p.gamma_y),
    }
}

/// Squeeze parameter at which the optimal-cooperativity gap changes sign at
/// the angular-dominance boundary `Omega^2 = gamma_x gamma_y / 4`, found by
/// bisection. Analytically this is ln 2, independent of the rates.
pub fn sql_crossing_r<F: Real>(gamma_x: F, gamma_y: F) -> F {
    let boundary = lit::<F>(0.25) * gamma_x * gamma_y;
    let gap_at = |r: F| sql_gap(gamma_x, gamma_y, boundary, (-r).exp());
    let (mut lo, mut hi) = (F::zero(), lit::<F>(5.0));
    debug_assert!(gap_at(lo) > F::zero() && gap_at(hi) < F::zero());
    for _ in 0..200 {
        let mid = (lo + hi) * lit(0.5);
        if gap_at(mid) > F::zero() {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo <= F::epsilon() * hi {
            break;
        }
    }
    (lo + hi) * lit(0.5)
}
