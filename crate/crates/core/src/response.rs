//! Mechanical susceptibilities.
//!
//! The rotation couples the two degenerate mechanical modes, so the measured
//! x mode responds through a dressed susceptibility `chi_x` while the y mode
//! keeps its bare Lorentzian response `chi_y`. Both follow the Fourier
//! convention `O(omega) = integral dt O(t) exp(+i omega t)`; the formulas are
//! transcribed in that convention and never re-derived in the opposite one,
//! since a convention flip silently negates imaginary parts.

use num_complex::Complex;

use crate::scalar::{lit, Real};

/// Frequency offset from the mechanical resonance, `delta = omega - omega_b` (rad/s).
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Detuning<F>(pub F);

impl<F: Real> Detuning<F> {
    /// Detuning of `omega` from the mechanical resonance `omega_b`.
    pub fn from_omega(omega: F, omega_b: F) -> Self {
        Detuning(omega - omega_b)
    }

    pub fn value(&self) -> F {
        self.0
    }
}

#[inline]
fn i_delta_minus_half<F: Real>(delta: F, gamma: F) -> Complex<F> {
    Complex::new(-gamma / lit(2.0), delta)
}

/// Denominator of the dressed susceptibility:
/// `(i delta - gamma_x/2)(i delta - gamma_y/2) + Omega^2`.
///
/// Never vanishes for real `delta`, positive rates, and `Omega^2 >= 0`.
#[inline]
pub fn chi_x_denominator<F: Real>(
    delta: Detuning<F>,
    omega_rot_sq: F,
    gamma_x: F,
    gamma_y: F,
) -> Complex<F> {
    let dx = i_delta_minus_half(delta.0, gamma_x);
    let dy = i_delta_minus_half(delta.0, gamma_y);
    dx * dy + Complex::new(omega_rot_sq, F::zero())
}

/// Dressed susceptibility of the measured mode (units: s):
///
/// `chi_x(delta) = (i delta - gamma_y/2) / [(i delta - gamma_x/2)(i delta - gamma_y/2) + Omega^2]`.
///
/// At zero rotation it reduces to the bare `1/(i delta - gamma_x/2)`.
pub fn chi_x<F: Real>(delta: Detuning<F>, omega_rot_sq: F, gamma_x: F, gamma_y: F) -> Complex<F> {
    i_delta_minus_half(delta.0, gamma_y) / chi_x_denominator(delta, omega_rot_sq, gamma_x, gamma_y)
}

/// Bare susceptibility of the undriven mode: `chi_y(delta) = 1/(i delta - gamma_y/2)` (units: s).
pub fn chi_y<F: Real>(delta: Detuning<F>, gamma_y: F) -> Complex<F> {
    i_delta_minus_half(delta.0, gamma_y).inv()
}

/// Derivative of [`chi_x`] with respect to the squared angular velocity
/// (units: s^3):
///
/// `d chi_x / d Omega^2 = -(i delta - gamma_y/2) / D^2 = -chi_x^2 / (i delta - gamma_y/2)`,
///
/// with `D` the denominator of `chi_x`. Needed by the sensitivity, which
/// differentiates the signal amplitude with respect to `Omega^2`.
pub fn dchi_x_domega2<F: Real>(
    delta: Detuning<F>,
    omega_rot_sq: F,
    gamma_x: F,
    gamma_y: F,
) -> Complex<F> {
    let den = chi_x_denominator(delta, omega_rot_sq, gamma_x, gamma_y);
    -i_delta_minus_half(delta.0, gamma_y) / (den * den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> Complex<f64> {
        Complex::new(re, im)
    }

    fn close(a: Complex<f64>, b: Complex<f64>, tol: f64) -> bool {
        (a - b).norm() <= tol * b.norm().max(1.0)
    }

    #[test]
    fn chi_x_on_resonance_without_rotation() {
        // (-1/2) / (1/4) = -2
        let v = chi_x(Detuning(0.0), 0.0, 1.0, 1.0);
        assert!(close(v, c(-2.0, 0.0), 1e-15), "{v}");
    }

    #[test]
    fn chi_x_on_resonance_with_rotation() {
        // (-1/2) / (1/4 + 1/4) = -1
        let v = chi_x(Detuning(0.0), 0.25, 1.0, 1.0);
        assert!(close(v, c(-1.0, 0.0), 1e-15), "{v}");
    }

    #[test]
    fn chi_x_factorizes_at_zero_rotation() {
        // for Omega = 0 the denominator factorizes, leaving 1/(i delta - gamma_x/2);
        // cross-check against chi_y times the numerator ratio
        let (delta, gx, gy) = (0.5, 1.0, 1.0);
        let lhs = chi_x(Detuning(delta), 0.0, gx, gy);
        let ratio = i_delta_minus_half(delta, gy) / i_delta_minus_half(delta, gx);
        let rhs = chi_y(Detuning(delta), gy) * ratio;
        assert!(close(lhs, rhs, 1e-14));
        assert!(close(lhs, c(-0.5, 0.5).inv(), 1e-14)); // 1/(0.5i - 0.5)
    }

    #[test]
    fn chi_y_values() {
        assert!(close(chi_y(Detuning(0.0), 1.0), c(-2.0, 0.0), 1e-15));
        let v = chi_y(Detuning(0.5f64), 1.0);
        assert!((v.norm_sqr() - 2.0).abs() < 1e-14); // 1/(0.25 + 0.25)
        let plus = chi_y(Detuning(3.7), 0.9);
        let minus = chi_y(Detuning(-3.7), 0.9);
        assert!(close(minus, plus.conj(), 1e-15));
    }

    #[test]
    fn dchi_x_on_resonance_without_rotation() {
        // -(-1/2) / (1/4)^2 = 8
        let v = dchi_x_domega2(Detuning(0.0), 0.0, 1.0, 1.0);
        assert!(close(v, c(8.0, 0.0), 1e-15), "{v}");
    }

    #[test]
    fn dchi_x_matches_central_finite_difference() {
        let (delta, osq, gx, gy): (f64, f64, f64, f64) = (0.3, 0.1, 1.0, 2.0);
        let h = 1e-6 * osq.max(gx * gy);
        let fd = (chi_x(Detuning(delta), osq + h, gx, gy)
            - chi_x(Detuning(delta), osq - h, gx, gy))
            / c(2.0 * h, 0.0);
        let analytic = dchi_x_domega2(Detuning(delta), osq, gx, gy);
        assert!(
            (fd - analytic).norm() / analytic.norm() < 1e-6,
            "fd {fd} vs analytic {analytic}"
        );
    }

    #[test]
    fn dchi_x_equals_minus_chi_squared_over_numerator() {
        let pts = [
            (0.17, 0.4, 0.8, 1.3),
            (-2.4, 1.9, 0.3, 0.7),
            (5.5, 0.01, 2.0, 0.5),
            (-0.02, 3.0, 1.1, 1.1),
            (1.0, 0.0, 0.6, 2.2),
        ];
        for (delta, osq, gx, gy) in pts {
            let chi = chi_x(Detuning(delta), osq, gx, gy);
            let expected = -chi * chi / i_delta_minus_half(delta, gy);
            let got = dchi_x_domega2(Detuning(delta), osq, gx, gy);
            assert!(
                (got - expected).norm() / expected.norm() < 1e-12,
                "at {delta} {osq} {gx} {gy}"
            );
        }
    }

    proptest! {
        #[test]
        fn chi_x_pairs_under_frequency_reflection(
            delta in -1e3f64..1e3,
            osq in 0.0f64..1e4,
            gx in 1e-3f64..1e2,
            gy in 1e-3f64..1e2,
        ) {
            let plus = chi_x(Detuning(delta), osq, gx, gy);
            let minus = chi_x(Detuning(-delta), osq, gx, gy);
            prop_assert!((minus - plus.conj()).norm() <= 1e-12 * plus.norm());
        }

        #[test]
        fn chi_x_denominator_never_vanishes(
            delta in -1e4f64..1e4,
            osq in 0.0f64..1e6,
            gx in 1e-3f64..1e3,
            gy in 1e-3f64..1e3,
        ) {
            let den = chi_x_denominator(Detuning(delta), osq, gx, gy);
            prop_assert!(den.norm() > 0.0);
        }

        #[test]
        fn chi_x_reduces_to_single_mode_at_zero_rotation(
            delta in -1e3f64..1e3,
            gx in 1e-3f64..1e2,
            gy in 1e-3f64..1e2,
        ) {
            let full = chi_x(Detuning(delta), 0.0, gx, gy);
            let bare = Complex::new(-gx / 2.0, delta).inv();
            prop_assert!((full - bare).norm() <= 1e-12 * bare.norm());
        }
    }
}
