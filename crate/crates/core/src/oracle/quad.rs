//! Adaptive Simpson quadrature for the spectral integrals.

use crate::scalar::{lit, Real};

fn simpson<F: Real>(fa: F, fm: F, fb: F, h: F) -> F {
    h / lit::<F>(6.0) * (fa + lit::<F>(4.0) * fm + fb)
}

#[allow(clippy::too_many_arguments)]
fn adapt<F: Real>(
    f: &impl Fn(F) -> F,
    a: F,
    b: F,
    fa: F,
    fm: F,
    fb: F,
    whole: F,
    tol: F,
    depth: usize,
) -> F {
    let half = lit::<F>(0.5);
    let m = (a + b) * half;
    let lm = (a + m) * half;
    let rm = (m + b) * half;
    let flm = f(lm);
    let frm = f(rm);
    let h = b - a;
    let left = simpson(fa, flm, fm, h * half);
    let right = simpson(fm, frm, fb, h * half);
    let refined = left + right;
    let err = refined - whole;
    if depth == 0 || err.abs() <= lit::<F>(15.0) * tol {
        return refined + err / lit(15.0);
    }
    adapt(f, a, m, fa, flm, fm, left, tol * half, depth - 1)
        + adapt(f, m, b, fm, frm, fb, right, tol * half, depth - 1)
}

/// Integrate `f` over `[a, b]` with the adaptive Simpson rule.
/// `tol` is an absolute tolerance on the integral.
pub fn adaptive_simpson<F: Real>(f: impl Fn(F) -> F, a: F, b: F, tol: F) -> F {
    let half = lit::<F>(0.5);
    let m = (a + b) * half;
    let (fa, fm, fb) = (f(a), f(m), f(b));
    let whole = simpson(fa, fm, fb, b - a);
    adapt(&f, a, b, fa, fm, fb, whole, tol, 48)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integrates_polynomial_exactly() {
        // Simpson is exact for cubics
        let got = adaptive_simpson(|x: f64| x * x * x - 2.0 * x + 1.0, -1.0, 3.0, 1e-12);
        let want = (81.0 / 4.0 - 9.0 + 3.0) - (1.0 / 4.0 - 1.0 - 1.0);
        assert!((got - want).abs() < 1e-10, "{got} vs {want}");
    }

    #[test]
    fn resolves_narrow_lorentzian_in_wide_window() {
        // integral of 1/(x^2 + w^2) over the real line is pi/w
        let w = 1e-2;
        let got = adaptive_simpson(|x: f64| 1.0 / (x * x + w * w), -1e3, 1e3, 1e-10);
        let want = std::f64::consts::PI / w - 2.0 / 1e3; // window minus tails ~ 2/L
        assert!((got - want).abs() / want < 1e-5, "{got} vs {want}");
    }
}
