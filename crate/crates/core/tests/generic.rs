//! The physics layer is generic over the scalar; exercise the `f32`
//! instantiation against `f64` at tolerances matching single precision.

use gyro_core::*;

#[test]
fn susceptibility_agrees_across_scalar_types() {
    for (delta, osq, gx, gy) in [(0.0f64, 0.0, 1.0, 1.0), (0.4, 0.3, 0.8, 1.7), (-2.0, 1.1, 2.0, 0.5)] {
        let wide = chi_x(Detuning(delta), osq, gx, gy);
        let narrow = chi_x(
            Detuning(delta as f32),
            osq as f32,
            gx as f32,
            gy as f32,
        );
        let diff = (wide.re - narrow.re as f64).abs() + (wide.im - narrow.im as f64).abs();
        assert!(diff <= 1e-5 * wide.norm(), "{wide} vs {narrow}");
    }
}

#[test]
fn bounds_and_metrics_work_at_f32() {
    let floor = co_min(&InputField32::Vacuum);
    assert!((floor - 1.0 / 12.0).abs() < 1e-6);
    let bound = omega_range(1.0f32, &InputField32::SqueezedVacuum { r: 1.73 }).unwrap();
    assert!((bound - 6.925).abs() < 1e-2, "{bound}");

    let params = GyroParams32 {
        omega_b: 1e4,
        kappa: 1e7,
        gamma_x: 1.0,
        gamma_y: 1.0,
        g: (1e7f32).sqrt() / 2.0,
        n_in: 1.0,
        mass: 1.0,
        n_th: 0.0,
    };
    let cfg = validate(params, InputField32::Vacuum).unwrap();
    let osq = AngularVelocity32::from_squared(0.0).unwrap();
    let snr = snr_per_photon_resonance(&cfg, 0.25f32, osq, &InputField32::Vacuum);
    assert!((snr - 4.0).abs() < 1e-4, "{snr}");
    let sens = sensitivity_resonance(&cfg, 0.25f32, osq, &InputField32::Vacuum);
    assert!((sens - 0.125).abs() < 1e-5, "{sens}");
}
