//! Acceptance suite: one test per release criterion, each printing a
//! PASS/FAIL line (run with `--nocapture` to see them all).

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use gyro_core::oracle::{
    exact_photocurrent_psd, rotating_frame_check, rotating_frame_check_without_centrifugal,
    steady_state_variance, ClassicalOscillator, ClassicalState, Frame,
};
use gyro_core::*;

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
        adiabatic_threshold: 1.0, // the acceptance sweeps cross the default threshold on purpose
        r_max: 5.0,
    };
    validate_with(params, InputField::Vacuum, options).unwrap()
}

fn omega(osq: f64) -> AngularVelocity<f64> {
    AngularVelocity::from_squared(osq).unwrap()
}

fn report(criterion: &str, passed: bool, detail: &str, start: Instant) {
    let verdict = if passed { "PASS" } else { "FAIL" };
    println!(
        "criterion {criterion}: {verdict} - {detail} ({:.0} ms)",
        start.elapsed().as_secs_f64() * 1e3
    );
    assert!(passed, "criterion {criterion}: {detail}");
}

#[test]
fn criterion_01_snr_is_one_at_the_range_boundary() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut worst = 0.0f64;
    for _ in 0..100 {
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
        let bound = omega_range(co, &input).unwrap();
        let snr = snr_per_photon_resonance(&cfg, co, omega(bound * gamma_x * gamma_y), &input);
        worst = worst.max((snr - 1.0).abs());
    }
    report(
        "01",
        worst <= 1e-8 && start.elapsed().as_secs_f64() < 1.0,
        &format!("max |SNR - 1| at the range bound = {worst:.2e} over 100 draws"),
        start,
    );
}

#[test]
fn criterion_02_cooperativity_floors() {
    let start = Instant::now();
    let vacuum_floor = co_min(&InputField::<f64>::Vacuum);
    let r0_floor = co_min(&InputField::SqueezedVacuum { r: 0.0f64 });
    let strong_floor = co_min(&InputField::SqueezedVacuum { r: 1.73f64 });
    // reference derived the way the target constant 0.0348 was quoted:
    // 0.25 / (38.99 - 31.82)
    let reference = 0.25 / (38.99 - 31.82);
    let ok = vacuum_floor == 1.0 / 12.0
        && (r0_floor - 1.0 / 12.0).abs() < 1e-12
        && (strong_floor - reference).abs() / reference < 1e-3;
    report(
        "02",
        ok,
        &format!("floors: vacuum {vacuum_floor:.12}, r=0 {r0_floor:.12}, r=1.73 {strong_floor:.6}"),
        start,
    );
}

#[test]
fn criterion_03_standard_quantum_limit_behavior() {
    let start = Instant::now();
    let cfg = config_with(1.0, 1.0, 1e6, 1e9);

    let at_rest = sql_report(&cfg, omega(0.0), &InputField::Vacuum);
    let rotating = sql_report(&cfg, omega(0.25), &InputField::Vacuum);
    // (1/4) gamma_y / (gamma_x gamma_y / 4 + Omega^2) at Omega^2 = 1/4
    let expected_gap = 0.25 * 1.0 / 0.5;
    let vacuum_ok = at_rest.gap.abs() <= 1e-10 && (rotating.gap - expected_gap).abs() <= 1e-10;

    // bisection on r of the squeezed gap at the angular-dominance boundary
    let gap_at = |r: f64| {
        sql_report(&cfg, omega(0.25), &InputField::SqueezedVacuum { r }).gap
    };
    let (mut lo, mut hi) = (0.0f64, 5.0f64);
    assert!(gap_at(lo) > 0.0 && gap_at(hi) < 0.0);
    for _ in 0..60 {
        let mid = 0.5 * (lo + hi);
        if gap_at(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let crossing = 0.5 * (lo + hi);
    let crossing_ok = (crossing - 2.0f64.ln()).abs() <= 1e-6;

    report(
        "03",
        vacuum_ok && crossing_ok,
        &format!(
            "vacuum gaps ({:.2e}, {:.6}), squeezed sign change at r = {crossing:.8} (ln 2 = {:.8})",
            at_rest.gap,
            rotating.gap,
            2.0f64.ln()
        ),
        start,
    );
}

#[test]
fn criterion_04_sensitivity_limits_attained_at_optimal_cooperativity() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut worst = 0.0f64;
    for _ in 0..100 {
        let cfg = config_with(1.0, 1.0, 1e6, 1e9);
        let osq = omega(rng.gen_range(0.0..4.0));
        let r = rng.gen_range(0.0..1.73);
        let input = if rng.gen_bool(0.5) {
            InputField::Vacuum
        } else {
            InputField::SqueezedVacuum { r }
        };
        let lim = sensitivity_limit(&cfg, osq, &input);
        let attained = sensitivity_resonance(&cfg, lim.co_at_equality, osq, &input);
        worst = worst.max((attained - lim.limit).abs() / lim.limit);
    }
    let cfg = config_with(1.0, 1.0, 1e6, 1e9);
    let vacuum_value = sensitivity_resonance(&cfg, 0.25, omega(0.0), &InputField::Vacuum);
    let squeezed_value = sensitivity_resonance(
        &cfg,
        sensitivity_limit(&cfg, omega(0.0), &InputField::SqueezedVacuum { r: 2.0f64.ln() })
            .co_at_equality,
        omega(0.0),
        &InputField::SqueezedVacuum { r: 2.0f64.ln() },
    );
    let spots_ok = (vacuum_value - 0.125).abs() < 1e-12
        && (squeezed_value - 0.098821).abs() / 0.098821 < 1e-4;
    report(
        "04",
        worst <= 1e-10 && spots_ok,
        &format!(
            "max attainment error {worst:.2e}; spot values {vacuum_value:.6} / {squeezed_value:.6}"
        ),
        start,
    );
}

#[test]
fn criterion_05_squeezing_improvement_cap() {
    let start = Instant::now();
    let cfg = config_with(1.0, 1.0, 1e6, 1e9);
    let golden_max = |osq: AngularVelocity<f64>, r: f64| -> f64 {
        // golden-section search on log(co)
        let phi = (1.0 + 5.0f64.sqrt()) / 2.0;
        let f = |x: f64| sensitivity_ratio(&cfg, x.exp(), osq, r).ratio;
        let (mut a, mut b) = ((1e-4f64).ln(), (1e4f64).ln());
        let mut c = b - (b - a) / phi;
        let mut d = a + (b - a) / phi;
        while (b - a).abs() > 1e-10 {
            if f(c) > f(d) {
                b = d;
            } else {
                a = c;
            }
            c = b - (b - a) / phi;
            d = a + (b - a) / phi;
        }
        f(0.5 * (a + b))
    };

    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut worst = 0.0f64;
    for _ in 0..20 {
        let r: f64 = rng.gen_range(0.05..3.0);
        let osq = omega(rng.gen_range(0.0..4.0));
        let expected = ((1.0 + (-2.0 * r).exp()) / 2.0).sqrt();
        let got = golden_max(osq, r);
        worst = worst.max((got - expected).abs());
    }
    let deep = golden_max(omega(0.0), 20.0);
    let deep_ok = (deep - std::f64::consts::FRAC_1_SQRT_2).abs() <= 1e-6;
    report(
        "05",
        worst <= 1e-8 && deep_ok,
        &format!("max cap error {worst:.2e}; r = 20 maximum {deep:.8}"),
        start,
    );
}

fn adiabatic_max_relative_error(ratio: f64, input: &InputField<f64>) -> f64 {
    let omega_b = 1e6;
    let cfg = config_with(1.0, 1.0, omega_b, omega_b / ratio);
    let co = 1.0;
    let osq = omega(0.3);
    let mut worst = 0.0f64;
    for k in 0..=40 {
        let w = omega_b - 5.0 + 10.0 * (k as f64) / 40.0;
        let exact = exact_photocurrent_psd(w, &cfg, co, osq, input).unwrap();
        let closed = photocurrent_psd(w, &cfg, co, osq, input).unwrap().symmetric;
        worst = worst.max(((exact - closed) / closed).abs());
    }
    worst
}

#[test]
fn criterion_06a_exact_psd_matches_closed_form_within_one_percent() {
    let start = Instant::now();
    let vacuum = adiabatic_max_relative_error(1e-3, &InputField::Vacuum);
    let squeezed = adiabatic_max_relative_error(1e-3, &InputField::SqueezedVacuum { r: 1.0 });
    report(
        "06a",
        vacuum <= 1e-2 && squeezed <= 1e-2 && start.elapsed().as_secs_f64() < 10.0,
        &format!(
            "max relative error at omega_b/kappa = 1e-3: vacuum {vacuum:.2e}, squeezed {squeezed:.2e}"
        ),
        start,
    );
}

#[test]
fn criterion_06b_adiabatic_error_slope_in_specified_window() {
    // The elimination error in the symmetric photocurrent PSD converges at
    // second order in omega_b/kappa: at zero detuning the measured PSD only
    // sees the cavity filter through |1/(1 - 2 i w/kappa)|^2 and
    // conj(reflection) * filter^2 = -1/(1 + (2 w/kappa)^2), both even in
    // omega/kappa, so no first-order term survives. The specified slope
    // window [0.8, 1.2] assumes first-order convergence and cannot be met;
    // the measured slope is reported and asserted against the window as
    // specified.
    let start = Instant::now();
    let ratios = [1e-2, 1e-3, 1e-4];
    let errors: Vec<f64> = ratios
        .iter()
        .map(|&ratio| adiabatic_max_relative_error(ratio, &InputField::Vacuum))
        .collect();
    let xs: Vec<f64> = ratios.iter().map(|r| r.ln()).collect();
    let ys: Vec<f64> = errors.iter().map(|e| e.ln()).collect();
    let xm = xs.iter().sum::<f64>() / 3.0;
    let ym = ys.iter().sum::<f64>() / 3.0;
    let slope = xs
        .iter()
        .zip(&ys)
        .map(|(x, y)| (x - xm) * (y - ym))
        .sum::<f64>()
        / xs.iter().map(|x| (x - xm).powi(2)).sum::<f64>();
    report(
        "06b",
        (0.8..=1.2).contains(&slope),
        &format!(
            "log-log slope of the adiabatic PSD error = {slope:.3} (errors {errors:?}); \
             specified window [0.8, 1.2], measured convergence is second order"
        ),
        start,
    );
}

#[test]
fn criterion_07_wiener_khinchin_agreement() {
    let start = Instant::now();
    let cfg = validate(GyroParams::default_normalized(), InputField::Vacuum).unwrap();
    let mut details = Vec::new();
    let mut ok = true;
    for input in [InputField::Vacuum, InputField::SqueezedVacuum { r: 1.0 }] {
        let rep = steady_state_variance(&cfg, 1.0, omega(0.3), &input).unwrap();
        ok &= rep.relative_difference <= 1e-3;
        details.push(format!(
            "{:?}: lyapunov {:.6}, spectral {:.6}, diff {:.2e}",
            input, rep.lyapunov, rep.spectral, rep.relative_difference
        ));
    }
    report("07", ok, &details.join("; "), start);
}

#[test]
fn criterion_08_raw_psd_symmetrization_cancellation() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut worst = 0.0f64;
    for _ in 0..50 {
        let gamma_x = rng.gen_range(0.5..2.0);
        let gamma_y = rng.gen_range(0.5..2.0);
        let cfg = config_with(gamma_x, gamma_y, 1e6, 1e9);
        let co = rng.gen_range(0.1..3.0);
        let osq = omega(rng.gen_range(0.0..2.0));
        let r = rng.gen_range(0.0..1.73);
        let input = if rng.gen_bool(0.5) {
            InputField::Vacuum
        } else {
            InputField::SqueezedVacuum { r }
        };
        let w = 1e6 + rng.gen_range(-8.0..8.0);
        let plus = photocurrent_psd(w, &cfg, co, osq, &input).unwrap();
        let minus = photocurrent_psd(-w, &cfg, co, osq, &input).unwrap();
        let folded = 0.5 * (plus.raw + minus.raw);
        worst = worst.max((folded - plus.symmetric).abs() / plus.symmetric);
    }
    report(
        "08",
        worst <= 1e-10,
        &format!("max |folded raw - symmetric| / symmetric = {worst:.2e} over 50 draws"),
        start,
    );
}

#[test]
fn criterion_09_rotating_frame_agreement_and_centrifugal_ablation() {
    let start = Instant::now();
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
    let omega_rot = 0.1; // 0.1 * omega_x
    let full =
        rotating_frame_check(&initial, &osc, omega_rot, 100.0 * period, 1e-3).unwrap();
    let ablated =
        rotating_frame_check_without_centrifugal(&initial, &osc, omega_rot, 100.0 * period, 1e-3)
            .unwrap();
    let agree = full.max_deviation <= 1e-6 * full.amplitude;
    let ablation = ablated.max_deviation > 100.0 * full.max_deviation;
    report(
        "09",
        agree && ablation && start.elapsed().as_secs_f64() < 5.0,
        &format!(
            "frame deviation {:.2e} (amplitude {:.2}), centrifugal ablation ratio {:.0}",
            full.max_deviation,
            full.amplitude,
            ablated.max_deviation / full.max_deviation
        ),
        start,
    );
}

#[test]
fn criterion_11_squeeze_db_convention() {
    let start = Instant::now();
    let db = squeeze_db_from_r(1.7269f64);
    report(
        "11",
        (db - 15.00).abs() <= 0.05,
        &format!("10 log10(exp(2 * 1.7269)) = {db:.4} dB"),
        start,
    );
}
