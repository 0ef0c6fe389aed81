//! Runtime verification suite: re-runs the module invariants and the oracle
//! comparisons on demand (`gyro verify`). Quick mode uses fixed seeds and
//! small grids; full mode widens the sampling and repeats the slow oracle
//! comparisons at several scales.

use std::time::Instant;

use num_complex::Complex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use gyro_core::oracle::{
    exact_photocurrent_psd, exact_transfer_matrix, inertial_energy_drift, rotating_frame_check,
    rotating_frame_check_without_centrifugal, steady_state_variance, ClassicalOscillator,
    ClassicalState, Frame,
};
use gyro_core::*;

use std::result::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Level {
    Quick,
    Full,
}

/// Fault-injection hooks for exercising the suite itself; all false in
/// production use.
#[derive(Debug, Clone, Copy, Default)]
pub struct Hooks {
    /// Flip the sign of the imaginary part of `chi_x` inside the
    /// susceptibility checks.
    pub flip_chi_x_sign: bool,
}

#[derive(Debug, Clone)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub millis: u128,
}

pub struct VerifyReport {
    pub outcomes: Vec<CheckOutcome>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.outcomes.iter().all(|o| o.passed)
    }
}

type CheckResult = Result<String, String>;
type Check = (&'static str, fn(&Ctx) -> CheckResult);

struct Ctx {
    level: Level,
    hooks: Hooks,
}

impl Ctx {
    fn n(&self, quick: usize, full: usize) -> usize {
        match self.level {
            Level::Quick => quick,
            Level::Full => full,
        }
    }

    fn seed(&self) -> u64 {
        match self.level {
            Level::Quick => 42,
            Level::Full => 43,
        }
    }

    fn chi_x(&self, delta: f64, osq: f64, gx: f64, gy: f64) -> Complex<f64> {
        let value = chi_x(Detuning(delta), osq, gx, gy);
        if self.hooks.flip_chi_x_sign {
            value.conj()
        } else {
            value
        }
    }
}

fn config_with(gamma_x: f64, gamma_y: f64, omega_b: f64, kappa: f64) -> ValidatedConfig<f64> {
    let params = GyroParams {
        omega_b,
        kappa,
        gamma_x,
        gamma_y,
        g: (kappa * gamma_x).sqrt() / 2.0,
        n_in: 1.0,
        mass: 1.0,
        n_th: 0.0,
    };
    let options = ValidationOptions {
        adiabatic_threshold: 1.0,
        r_max: 6.0,
    };
    validate_with(params, InputField::Vacuum, options).unwrap()
}

fn omega(osq: f64) -> AngularVelocity<f64> {
    AngularVelocity::from_squared(osq).unwrap()
}

fn check_susceptibility_pairing_and_identity(ctx: &Ctx) -> CheckResult {
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed());
    let mut worst = 0.0f64;
    for _ in 0..ctx.n(200, 5000) {
        let delta = rng.gen_range(-1e3..1e3);
        let osq = rng.gen_range(0.0..1e4);
        let gx = rng.gen_range(1e-2..1e2);
        let gy = rng.gen_range(1e-2..1e2);
        let plus = ctx.chi_x(delta, osq, gx, gy);
        let minus = ctx.chi_x(-delta, osq, gx, gy);
        worst = worst.max((minus - plus.conj()).norm() / plus.norm());
        // definitional identity: chi_x * denominator = (i delta - gamma_y/2)
        let den = (Complex::new(-gx / 2.0, delta)) * (Complex::new(-gy / 2.0, delta)) + osq;
        let num = Complex::new(-gy / 2.0, delta);
        worst = worst.max((plus * den - num).norm() / num.norm());
    }
    if worst <= 1e-12 {
        Ok(format!("max deviation {worst:.2e}"))
    } else {
        Err(format!("pairing/identity deviation {worst:.2e} exceeds 1e-12"))
    }
}

fn check_susceptibility_derivative(ctx: &Ctx) -> CheckResult {
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed() + 1);
    let mut worst_fd = 0.0f64;
    let mut worst_alg = 0.0f64;
    for _ in 0..ctx.n(50, 500) {
        let delta = rng.gen_range(-10.0..10.0);
        let osq: f64 = rng.gen_range(0.0..5.0);
        let gx = rng.gen_range(0.1..5.0);
        let gy = rng.gen_range(0.1..5.0);
        let analytic = dchi_x_domega2(Detuning(delta), osq, gx, gy);
        let h = 1e-6 * osq.max(gx * gy);
        let fd = (chi_x(Detuning(delta), osq + h, gx, gy)
            - chi_x(Detuning(delta), (osq - h).max(0.0), gx, gy))
            / Complex::new(h + osq.min(h), 0.0);
        worst_fd = worst_fd.max((fd - analytic).norm() / analytic.norm());
        let alg = -chi_x(Detuning(delta), osq, gx, gy).powi(2) / Complex::new(-gy / 2.0, delta);
        worst_alg = worst_alg.max((alg - analytic).norm() / analytic.norm());
    }
    if worst_fd <= 1e-5 && worst_alg <= 1e-12 {
        Ok(format!("finite difference {worst_fd:.2e}, algebraic {worst_alg:.2e}"))
    } else {
        Err(format!(
            "derivative deviations: finite difference {worst_fd:.2e}, algebraic {worst_alg:.2e}"
        ))
    }
}

fn check_cooperativity_round_trip(ctx: &Ctx) -> CheckResult {
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed() + 2);
    let mut worst = 0.0f64;
    for _ in 0..ctx.n(50, 500) {
        let g: f64 = rng.gen_range(1e-3..1e6);
        let kappa = rng.gen_range(1e-2..1e10);
        let gamma_x = rng.gen_range(1e-3..1e3);
        let co = cooperativity(g, kappa, gamma_x).map_err(|e| e.to_string())?;
        let back = g_from_cooperativity(co, kappa, gamma_x).map_err(|e| e.to_string())?;
        worst = worst.max((back - g).abs() / g);
    }
    if worst <= 1e-12 {
        Ok(format!("max round-trip error {worst:.2e}"))
    } else {
        Err(format!("round-trip error {worst:.2e} exceeds 1e-12"))
    }
}

fn check_budget_decomposition(ctx: &Ctx) -> CheckResult {
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed() + 3);
    for _ in 0..ctx.n(100, 1000) {
        let cfg = config_with(
            rng.gen_range(0.3..3.0),
            rng.gen_range(0.3..3.0),
            1e6,
            1e9,
        );
        let co = rng.gen_range(0.05..5.0);
        let osq = omega(rng.gen_range(0.0..4.0));
        let input = InputField::SqueezedVacuum {
            r: rng.gen_range(0.0..2.0),
        };
        let w = 1e6 + rng.gen_range(-10.0..10.0);
        let b = noise_budget_symmetrized(w, &cfg, co, osq, &input).map_err(|e| e.to_string())?;
        if b.n_x_total != b.n_zpf + b.n_add + b.n_ang {
            return Err("decomposition identity violated".into());
        }
        if b.n_zpf < 0.0 || b.n_ba < 0.0 || b.n_ang < 0.0 || b.n_add < 0.0 {
            return Err("negative symmetric component".into());
        }
    }
    Ok("total = zpf + add + angular, all components nonnegative".into())
}

fn check_squeezed_reduces_to_vacuum(ctx: &Ctx) -> CheckResult {
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed() + 4);
    for _ in 0..ctx.n(50, 500) {
        let cfg = config_with(rng.gen_range(0.3..3.0), rng.gen_range(0.3..3.0), 1e6, 1e9);
        let co = rng.gen_range(0.1..4.0);
        let osq = omega(rng.gen_range(0.0..3.0));
        let w = 1e6 + rng.gen_range(-5.0..5.0);
        let vac = noise_budget_symmetrized(w, &cfg, co, osq, &InputField::Vacuum)
            .map_err(|e| e.to_string())?;
        let sq = noise_budget_symmetrized(w, &cfg, co, osq, &InputField::SqueezedVacuum { r: 0.0 })
            .map_err(|e| e.to_string())?;
        if vac != sq {
            return Err("r = 0 budget differs from vacuum budget".into());
        }
        let snr_v = snr_per_photon_resonance(&cfg, co, osq, &InputField::Vacuum);
        let snr_s = snr_per_photon_resonance(&cfg, co, osq, &InputField::SqueezedVacuum { r: 0.0 });
        if (snr_v - snr_s).abs() > 1e-12 * snr_v {
            return Err("r = 0 SNR differs from vacuum SNR".into());
        }
    }
    Ok("r = 0 reproduces vacuum in budgets and metrics".into())
}

fn check_psd_symmetrization(ctx: &Ctx) -> CheckResult {
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed() + 5);
    let mut worst = 0.0f64;
    for _ in 0..ctx.n(50, 500) {
        let cfg = config_with(rng.gen_range(0.3..3.0), rng.gen_range(0.3..3.0), 1e6, 1e9);
        let co = rng.gen_range(0.1..3.0);
        let osq = omega(rng.gen_range(0.0..2.0));
        let input = InputField::SqueezedVacuum {
            r: rng.gen_range(0.0..1.73),
        };
        let w = 1e6 + rng.gen_range(-8.0..8.0);
        let plus = photocurrent_psd(w, &cfg, co, osq, &input).map_err(|e| e.to_string())?;
        let minus = photocurrent_psd(-w, &cfg, co, osq, &input).map_err(|e| e.to_string())?;
        worst = worst.max((0.5 * (plus.raw + minus.raw) - plus.symmetric).abs() / plus.symmetric);
    }
    if worst <= 1e-10 {
        Ok(format!("max folded-raw deviation {worst:.2e}"))
    } else {
        Err(format!("folded-raw deviation {worst:.2e} exceeds 1e-10"))
    }
}

fn check_shot_floor(ctx: &Ctx) -> CheckResult {
    let cfg = config_with(1.0, 1.0, 1e6, 1e9);
    let far = 1e6 + 1e5;
    let rs: &[f64] = match ctx.level {
        Level::Quick => &[0.0, 1.0],
        Level::Full => &[0.0, 0.5, 1.0, 1.73],
    };
    for &r in rs {
        let input = if r == 0.0 {
            InputField::Vacuum
        } else {
            InputField::SqueezedVacuum { r }
        };
        let floor = (-2.0 * r).exp();
        let closed = photocurrent_psd(far, &cfg, 1.0, omega(0.0), &input)
            .map_err(|e| e.to_string())?
            .symmetric;
        let exact = exact_photocurrent_psd(far, &cfg, 1.0, omega(0.0), &input)
            .map_err(|e| e.to_string())?;
        if (closed - floor).abs() > 1e-6 || (exact - floor).abs() > 1e-6 {
            return Err(format!(
                "floor at r = {r}: closed {closed}, exact {exact}, expected {floor}"
            ));
        }
    }
    Ok("far-detuned PSD equals exp(-2r) for closed form and exact solve".into())
}

fn check_snr_range_boundary(ctx: &Ctx) -> CheckResult {
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed() + 6);
    let mut worst = 0.0f64;
    for _ in 0..ctx.n(50, 300) {
        let gamma_x = rng.gen_range(0.5..2.0);
        let gamma_y = rng.gen_range(0.5..2.0);
        let cfg = config_with(gamma_x, gamma_y, 1e6, 1e9);
        let r = rng.gen_range(0.0..1.73);
        let input = if rng.gen_bool(0.5) {
            InputField::Vacuum
        } else {
            InputField::SqueezedVacuum { r }
        };
        let co = co_min(&input) + rng.gen_range(0.0..4.0);
        let bound = omega_range(co, &input).map_err(|e| e.to_string())?;
        let snr = snr_per_photon_resonance(&cfg, co, omega(bound * gamma_x * gamma_y), &input);
        worst = worst.max((snr - 1.0).abs());
    }
    if worst <= 1e-8 {
        Ok(format!("max |SNR - 1| at the bound {worst:.2e}"))
    } else {
        Err(format!("|SNR - 1| at the bound reaches {worst:.2e}"))
    }
}

fn check_sensitivity_two_routes(ctx: &Ctx) -> CheckResult {
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed() + 7);
    let mut worst = 0.0f64;
    for _ in 0..ctx.n(20, 100) {
        let cfg = config_with(1.0, rng.gen_range(0.5..2.0), 1e6, 1e9);
        let co = rng.gen_range(0.1..3.0);
        let osq = omega(rng.gen_range(0.0..3.0));
        let input = InputField::SqueezedVacuum {
            r: rng.gen_range(0.0..1.5),
        };
        let w = 1e6 + rng.gen_range(-2.0..2.0);
        let analytic = sensitivity(w, &cfg, co, osq, &input).map_err(|e| e.to_string())?;
        let fd = sensitivity_finite_difference(w, &cfg, co, osq, &input)
            .map_err(|e| e.to_string())?;
        worst = worst.max((fd - analytic).abs() / analytic);
    }
    if worst <= 1e-4 {
        Ok(format!("max analytic-vs-finite-difference deviation {worst:.2e}"))
    } else {
        Err(format!("two-route deviation {worst:.2e} exceeds 1e-4"))
    }
}

fn check_sensitivity_limit_attainment(ctx: &Ctx) -> CheckResult {
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed() + 8);
    let mut worst = 0.0f64;
    for _ in 0..ctx.n(50, 300) {
        let cfg = config_with(1.0, 1.0, 1e6, 1e9);
        let osq = omega(rng.gen_range(0.0..4.0));
        let input = InputField::SqueezedVacuum {
            r: rng.gen_range(0.0..1.73),
        };
        let lim = sensitivity_limit(&cfg, osq, &input);
        let attained = sensitivity_resonance(&cfg, lim.co_at_equality, osq, &input);
        worst = worst.max((attained - lim.limit).abs() / lim.limit);
    }
    if worst <= 1e-10 {
        Ok(format!("max attainment error {worst:.2e}"))
    } else {
        Err(format!("limit attainment error {worst:.2e} exceeds 1e-10"))
    }
}

fn check_ratio_cap(ctx: &Ctx) -> CheckResult {
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed() + 9);
    let cfg = config_with(1.0, 1.0, 1e6, 1e9);
    for _ in 0..ctx.n(200, 2000) {
        let co = rng.gen_range(0.001..100.0);
        let osq = omega(rng.gen_range(0.0..10.0));
        let r = rng.gen_range(0.0..5.0);
        let sr = sensitivity_ratio(&cfg, co, osq, r);
        if sr.ratio > sr.bound + 1e-12 {
            return Err(format!("ratio {} above bound {}", sr.ratio, sr.bound));
        }
    }
    // the cap is attained at the optimal cooperativity
    let r = 1.0;
    let attained = sensitivity_ratio(&cfg, 0.25, omega(0.0), r);
    if (attained.ratio - attained.bound).abs() > 1e-12 {
        return Err("cap not attained at the optimal cooperativity".into());
    }
    Ok("ratio <= sqrt((1 + exp(-2r))/2) everywhere, equality at optimum".into())
}

fn check_adiabatic_agreement(ctx: &Ctx) -> CheckResult {
    let max_err = |ratio: f64, input: &InputField<f64>| -> Result<f64, String> {
        let omega_b = 1e6;
        let cfg = config_with(1.0, 1.0, omega_b, omega_b / ratio);
        let osq = omega(0.3);
        let mut worst = 0.0f64;
        let points = ctx.n(11, 41);
        for k in 0..points {
            let w = omega_b - 5.0 + 10.0 * k as f64 / (points - 1) as f64;
            let exact =
                exact_photocurrent_psd(w, &cfg, 1.0, osq, input).map_err(|e| e.to_string())?;
            let closed = photocurrent_psd(w, &cfg, 1.0, osq, input)
                .map_err(|e| e.to_string())?
                .symmetric;
            worst = worst.max(((exact - closed) / closed).abs());
        }
        Ok(worst)
    };

    let vacuum = max_err(1e-3, &InputField::Vacuum)?;
    if vacuum > 1e-2 {
        return Err(format!("vacuum error {vacuum:.2e} above 1% at ratio 1e-3"));
    }
    if ctx.level == Level::Quick {
        return Ok(format!("max error {vacuum:.2e} at omega_b/kappa = 1e-3"));
    }

    let squeezed = max_err(1e-3, &InputField::SqueezedVacuum { r: 1.0 })?;
    if squeezed > 1e-2 {
        return Err(format!("squeezed error {squeezed:.2e} above 1% at ratio 1e-3"));
    }
    // convergence is second order in omega_b/kappa: the measured PSD sees
    // the cavity only through even functions of omega/kappa
    let ratios = [1e-2, 1e-3, 1e-4];
    let mut errs = Vec::new();
    for &ratio in &ratios {
        errs.push(max_err(ratio, &InputField::Vacuum)?);
    }
    let slope = {
        let xs: Vec<f64> = ratios.iter().map(|r| r.ln()).collect();
        let ys: Vec<f64> = errs.iter().map(|e| e.ln()).collect();
        let xm = xs.iter().sum::<f64>() / 3.0;
        let ym = ys.iter().sum::<f64>() / 3.0;
        xs.iter()
            .zip(&ys)
            .map(|(x, y)| (x - xm) * (y - ym))
            .sum::<f64>()
            / xs.iter().map(|x| (x - xm).powi(2)).sum::<f64>()
    };
    if !(1.7..=2.3).contains(&slope) {
        return Err(format!("convergence slope {slope:.2} outside the quadratic window"));
    }
    Ok(format!(
        "errors {vacuum:.1e}/{squeezed:.1e} at 1e-3; quadratic convergence, slope {slope:.2}"
    ))
}

fn check_wiener_khinchin(ctx: &Ctx) -> CheckResult {
    let cfg = config_with(1.0, 1.0, 1e6, 1e9);
    let inputs: &[InputField<f64>] = match ctx.level {
        Level::Quick => &[InputField::Vacuum],
        Level::Full => &[InputField::Vacuum, InputField::SqueezedVacuum { r: 1.0 }],
    };
    let mut details = Vec::new();
    for input in inputs {
        let rep = steady_state_variance(&cfg, 1.0, omega(0.3), input).map_err(|e| e.to_string())?;
        if rep.relative_difference > 1e-3 {
            return Err(format!(
                "Lyapunov {} vs spectral {} differ by {:.2e}",
                rep.lyapunov, rep.spectral, rep.relative_difference
            ));
        }
        details.push(format!("{:.2e}", rep.relative_difference));
    }
    Ok(format!("route differences: {}", details.join(", ")))
}

fn check_transfer_conjugate_pairing(ctx: &Ctx) -> CheckResult {
    let cfg = config_with(0.8, 1.3, 1e6, 1e9);
    let osq = omega(0.6);
    let swap = [1usize, 0, 3, 2, 5, 4];
    let probes = ctx.n(3, 9);
    for k in 0..probes {
        let w = 1e6 - 4.0 + 8.0 * k as f64 / (probes - 1) as f64;
        let plus = exact_transfer_matrix(w, &cfg, 0.9, osq).map_err(|e| e.to_string())?;
        let minus = exact_transfer_matrix(-w, &cfg, 0.9, osq).map_err(|e| e.to_string())?;
        for pair in [(0usize, 1usize), (2, 3), (4, 5)] {
            for (j, &swapped) in swap.iter().enumerate() {
                let got = plus.rows[pair.1][swapped];
                let want = minus.rows[pair.0][j].conj();
                if (got - want).norm() > 1e-12 * want.norm().max(1e-30) {
                    return Err(format!("pairing broken in rows {pair:?}, column {j}"));
                }
            }
        }
    }
    Ok("dagger rows are conjugate frequency reflections of plain rows".into())
}

fn check_rotating_frame(ctx: &Ctx) -> CheckResult {
    let osc = ClassicalOscillator {
        mass: 1.0,
        k_x: 1.0,
        k_y: 1.0,
        x_e: 0.0,
        y_e: 0.0,
    };
    let initial = ClassicalState {
        x: 1.0,
        y: 0.0,
        p_x: 0.0,
        p_y: 0.3,
        frame: Frame::Rotating,
    };
    let period = 2.0 * std::f64::consts::PI;
    let periods = match ctx.level {
        Level::Quick => 10.0,
        Level::Full => 100.0,
    };
    let full = rotating_frame_check(&initial, &osc, 0.1, periods * period, 1e-3)
        .map_err(|e| e.to_string())?;
    if full.max_deviation > 1e-6 * full.amplitude {
        return Err(format!(
            "frame deviation {:.2e} above 1e-6 of amplitude {:.2}",
            full.max_deviation, full.amplitude
        ));
    }
    let ablated =
        rotating_frame_check_without_centrifugal(&initial, &osc, 0.1, periods * period, 1e-3)
            .map_err(|e| e.to_string())?;
    if ablated.max_deviation <= 100.0 * full.max_deviation {
        return Err(format!(
            "centrifugal ablation ratio {:.1} not above 100",
            ablated.max_deviation / full.max_deviation
        ));
    }
    if ctx.level == Level::Full {
        // energy conservation of the inertial integrator at zero rotation
        let start = ClassicalState {
            frame: Frame::Inertial,
            ..initial
        };
        let drift =
            inertial_energy_drift(&start, &osc, 1e3 * period, 1e-3).map_err(|e| e.to_string())?;
        if drift > 1e-8 {
            return Err(format!("energy drift {drift:.2e} above 1e-8"));
        }
    }
    Ok(format!(
        "deviation {:.1e}, ablation ratio {:.0}",
        full.max_deviation / full.amplitude,
        ablated.max_deviation / full.max_deviation
    ))
}

fn check_squeeze_db_convention(_ctx: &Ctx) -> CheckResult {
    let db = squeeze_db_from_r(1.7269f64);
    if (db - 15.0).abs() <= 0.05 {
        Ok(format!("r = 1.7269 maps to {db:.3} dB"))
    } else {
        Err(format!("r = 1.7269 maps to {db:.3} dB, expected 15.00 +/- 0.05"))
    }
}

/// Run every check at the requested level with optional fault injection.
pub fn run_verify(level: Level, hooks: Hooks) -> VerifyReport {
    let ctx = Ctx { level, hooks };
    let checks: Vec<Check> = vec![
        ("susceptibility-pairing-and-identity", check_susceptibility_pairing_and_identity),
        ("susceptibility-derivative", check_susceptibility_derivative),
        ("cooperativity-round-trip", check_cooperativity_round_trip),
        ("budget-decomposition", check_budget_decomposition),
        ("squeezed-r0-reduction", check_squeezed_reduces_to_vacuum),
        ("psd-symmetrization-cancellation", check_psd_symmetrization),
        ("shot-noise-floor", check_shot_floor),
        ("snr-range-boundary", check_snr_range_boundary),
        ("sensitivity-two-routes", check_sensitivity_two_routes),
        ("sensitivity-limit-attainment", check_sensitivity_limit_attainment),
        ("sensitivity-ratio-cap", check_ratio_cap),
        ("adiabatic-oracle-agreement", check_adiabatic_agreement),
        ("wiener-khinchin", check_wiener_khinchin),
        ("transfer-conjugate-pairing", check_transfer_conjugate_pairing),
        ("rotating-frame-oracle", check_rotating_frame),
        ("squeeze-db-convention", check_squeeze_db_convention),
    ];

    let outcomes = checks
        .into_iter()
        .map(|(name, check)| {
            let start = Instant::now();
            let result = check(&ctx);
            let millis = start.elapsed().as_millis();
            match result {
                Ok(detail) => CheckOutcome {
                    name,
                    passed: true,
                    detail,
                    millis,
                },
                Err(detail) => CheckOutcome {
                    name,
                    passed: false,
                    detail,
                    millis,
                },
            }
        })
        .collect();
    VerifyReport { outcomes }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quick_suite_passes_on_the_default_build() {
        let report = run_verify(Level::Quick, Hooks::default());
        for outcome in &report.outcomes {
            assert!(outcome.passed, "{}: {}", outcome.name, outcome.detail);
        }
    }

    #[test]
    fn injected_sign_flip_is_detected() {
        let report = run_verify(
            Level::Quick,
            Hooks {
                flip_chi_x_sign: true,
            },
        );
        assert!(!report.all_passed());
        let broken = report
            .outcomes
            .iter()
            .find(|o| o.name == "susceptibility-pairing-and-identity")
            .unwrap();
        assert!(!broken.passed, "the flipped susceptibility must fail its check");
    }
}
