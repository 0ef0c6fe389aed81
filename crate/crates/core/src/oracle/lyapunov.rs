//! Stationary covariance of the coupled three-mode system, computed two
//! independent ways: by solving the continuous-time Lyapunov equation for
//! the full six-dimensional quadrature dynamics, and by integrating the
//! closed-form referred noise spectrum. Their agreement is the
//! Wiener-Khinchin cross-check of the spectra module.

use crate::error::{GyroError, Result};
use crate::params::{AngularVelocity, InputField, ValidatedConfig};
use crate::scalar::{as_f64, lit, Real};
use crate::spectra::noise_budget_symmetrized;

use super::linalg::{cholesky_is_positive_definite, solve_real};
use super::quad::adaptive_simpson;

const N: usize = 6;

/// Stationary variance of the measured quadrature by both routes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VarianceReport<F> {
    /// Lyapunov-equation route (exact dynamics, no adiabatic elimination).
    pub lyapunov: F,
    /// Spectral route: `(1/2 pi) integral of nbar_X` from the closed forms.
    pub spectral: F,
    /// `|lyapunov - spectral| / lyapunov`.
    pub relative_difference: F,
}

/// Drift matrix of the quadrature vector
/// `(X_a, P_a, X_x, P_x, X_y, P_y)` with `X = o + o_dag`, `P = -i (o - o_dag)`.
pub fn drift_matrix<F: Real>(
    cfg: &ValidatedConfig<F>,
    co: F,
    omega_rot_sq: AngularVelocity<F>,
) -> [[F; N]; N] {
    let p = cfg.params();
    let half = lit::<F>(0.5);
    let g = (co * p.kappa * p.gamma_x).sqrt() * half;
    let rot = omega_rot_sq.squared().sqrt();
    let z = F::zero();
    let two_g = lit::<F>(2.0) * g;
    [
        [-half * p.kappa, z, -two_g, z, z, z],
        [z, -half * p.kappa, z, z, z, z],
        [z, z, -half * p.gamma_x, p.omega_b, rot, z],
        [z, two_g, -p.omega_b, -half * p.gamma_x, z, rot],
        [z, z, -rot, z, -half * p.gamma_y, p.omega_b],
        [z, z, z, -rot, -p.omega_b, -half * p.gamma_y],
    ]
}

/// Symmetrized diffusion matrix `Q` in `dV/dt = A V + V A^T + Q`. The drive
/// quadratures carry the squeeze attenuation, the mechanical baths the
/// thermal occupancy.
fn diffusion_matrix<F: Real>(cfg: &ValidatedConfig<F>, input: &InputField<F>) -> [F; N] {
    let p = cfg.params();
    let attn = input.attenuation();
    let thermal = lit::<F>(2.0) * p.n_th + F::one();
    [
        p.kappa * attn,
        p.kappa * attn,
        p.gamma_x * thermal,
        p.gamma_x * thermal,
        p.gamma_y * thermal,
        p.gamma_y * thermal,
    ]
}

/// Solve `A V + V A^T = -Q` by vectorization (row-major `vec`).
fn solve_lyapunov<F: Real>(a: &[[F; N]; N], q_diag: &[F; N]) -> Result<Vec<F>> {
    let n2 = N * N;
    let mut big = vec![F::zero(); n2 * n2];
    for i in 0..N {
        for j in 0..N {
            let row = i * N + j;
            for k in 0..N {
                // (A V)[i][j] term: A[i][k] V[k][j]
                big[row * n2 + (k * N + j)] += a[i][k];
                // (V A^T)[i][j] term: V[i][k] A[j][k]
                big[row * n2 + (i * N + k)] += a[j][k];
            }
        }
    }
    let mut rhs = vec![F::zero(); n2];
    for i in 0..N {
        rhs[i * N + i] = -q_diag[i];
    }
    solve_real(&big, &rhs, n2)
}

/// Certify that `A` is Hurwitz: the Lyapunov equation with unit diffusion
/// must have a positive-definite solution.
pub(crate) fn certify_hurwitz<F: Real>(a: &[[F; N]; N]) -> Result<()> {
    let unit = [F::one(); N];
    let p = solve_lyapunov(a, &unit).map_err(|_| GyroError::UnstableSystem)?;
    // symmetrize before the definiteness test to shed rounding skew
    let mut sym = vec![F::zero(); N * N];
    for i in 0..N {
        for j in 0..N {
            sym[i * N + j] = (p[i * N + j] + p[j * N + i]) * lit(0.5);
        }
    }
    if cholesky_is_positive_definite(&sym, N) {
        Ok(())
    } else {
        Err(GyroError::UnstableSystem)
    }
}

/// Stationary variance of `X = b_x + b_x_dag` from the Lyapunov route alone;
/// accepts any `n_th >= 0`.
pub fn lyapunov_variance<F: Real>(
    cfg: &ValidatedConfig<F>,
    co: F,
    omega_rot_sq: AngularVelocity<F>,
    input: &InputField<F>,
) -> Result<F> {
    if cfg.params().n_th.is_nan() || cfg.params().n_th < F::zero() {
        return Err(GyroError::NegativeThermalOccupancy {
            value: as_f64(cfg.params().n_th),
        });
    }
    let a = drift_matrix(cfg, co, omega_rot_sq);
    certify_hurwitz(&a)?;
    let v = solve_lyapunov(&a, &diffusion_matrix(cfg, input))?;
    Ok(v[2 * N + 2])
}

/// Spectral route: `(1/pi) integral over [omega_b - L, omega_b + L]` of the
/// symmetric physical noise `nbar_X`, plus the analytic `1/delta^2` tail.
fn spectral_variance<F: Real>(
    cfg: &ValidatedConfig<F>,
    co: F,
    omega_rot_sq: AngularVelocity<F>,
    input: &InputField<F>,
) -> Result<F> {
    let p = cfg.params();
    let gamma_max = p.gamma_x.max(p.gamma_y);
    let window = (lit::<F>(1e3) * gamma_max).min(lit::<F>(0.5) * p.omega_b);
    let lo = p.omega_b - window;
    let hi = p.omega_b + window;
    // probe once to surface validation errors outside the integrand closure
    noise_budget_symmetrized(p.omega_b, cfg, co, omega_rot_sq, input)?;
    let integrand = |w: F| {
        noise_budget_symmetrized(w, cfg, co, omega_rot_sq, input)
            .map(|b| b.physical_total())
            .unwrap_or(F::nan())
    };
    let scale = F::one() + lit::<F>(2.0) * co * input.attenuation();
    let body = adaptive_simpson(integrand, lo, hi, lit::<F>(1e-10) * scale * gamma_max);
    // beyond the window nbar_X ~ c / delta^2 with c = gamma_x/2 + attn gamma_x co
    let tail_coeff = p.gamma_x * (lit::<F>(0.5) + input.attenuation() * co);
    let tail = lit::<F>(2.0) * tail_coeff / window;
    Ok((body + tail) / F::PI())
}

/// Stationary variance of `X` by both routes with their relative difference;
/// the spectral route uses the closed-form spectra and therefore requires
/// `n_th = 0`.
pub fn steady_state_variance<F: Real>(
    cfg: &ValidatedConfig<F>,
    co: F,
    omega_rot_sq: AngularVelocity<F>,
    input: &InputField<F>,
) -> Result<VarianceReport<F>> {
    let lyapunov = lyapunov_variance(cfg, co, omega_rot_sq, input)?;
    let spectral = spectral_variance(cfg, co, omega_rot_sq, input)?;
    Ok(VarianceReport {
        lyapunov,
        spectral,
        relative_difference: (lyapunov - spectral).abs() / lyapunov,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::{validate, GyroParams};

    fn config() -> ValidatedConfig<f64> {
        validate(GyroParams::default_normalized(), InputField::Vacuum).unwrap()
    }

    fn omega(osq: f64) -> AngularVelocity<f64> {
        AngularVelocity::from_squared(osq).unwrap()
    }

    #[test]
    fn decoupled_ground_state_has_unit_variance() {
        let cfg = config();
        let var = lyapunov_variance(&cfg, 0.0, omega(0.0), &InputField::Vacuum).unwrap();
        assert!((var - 1.0).abs() < 1e-9, "{var}");
    }

    #[test]
    fn thermal_occupancy_raises_the_variance_to_2n_plus_1() {
        let mut params = GyroParams::default_normalized();
        params.n_th = 0.7;
        let cfg = validate(params, InputField::Vacuum).unwrap();
        let var = lyapunov_variance(&cfg, 0.0, omega(0.0), &InputField::Vacuum).unwrap();
        assert!((var - 2.4).abs() < 1e-9, "{var}");
    }

    #[test]
    fn both_routes_agree_for_vacuum_and_squeezed_input() {
        let cfg = config();
        for input in [InputField::Vacuum, InputField::SqueezedVacuum { r: 1.0 }] {
            let rep = steady_state_variance(&cfg, 1.0, omega(0.3), &input).unwrap();
            assert!(
                rep.relative_difference < 1e-3,
                "{:?} diff {}",
                input,
                rep.relative_difference
            );
        }
    }

    #[test]
    fn variance_grows_with_cooperativity() {
        let cfg = config();
        let mut prev = 0.0;
        for co in [0.2, 0.5, 1.0, 2.0, 4.0] {
            let var = lyapunov_variance(&cfg, co, omega(0.2), &InputField::Vacuum).unwrap();
            assert!(var > prev, "co={co}: {var} <= {prev}");
            prev = var;
        }
    }

    #[test]
    fn squeezing_cools_the_back_action() {
        let cfg = config();
        let vac = lyapunov_variance(&cfg, 1.0, omega(0.0), &InputField::Vacuum).unwrap();
        let sq =
            lyapunov_variance(&cfg, 1.0, omega(0.0), &InputField::SqueezedVacuum { r: 1.0 })
                .unwrap();
        assert!(sq < vac, "{sq} vs {vac}");
        // deep squeezing removes the back-action entirely, leaving the zero-point variance
        let deep =
            lyapunov_variance(&cfg, 1.0, omega(0.0), &InputField::SqueezedVacuum { r: 10.0 })
                .unwrap();
        assert!((deep - 1.0).abs() < 1e-6, "{deep}");
    }

    #[test]
    fn hurwitz_certificate_rejects_unstable_drift() {
        let mut a = [[0.0f64; 6]; 6];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = -1.0;
        }
        assert!(certify_hurwitz(&a).is_ok());
        a[3][3] = 0.1; // one unstable direction
        assert!(matches!(certify_hurwitz(&a), Err(GyroError::UnstableSystem)));
    }
}
