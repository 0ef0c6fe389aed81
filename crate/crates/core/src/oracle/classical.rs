//! Classical-mechanics validation of the rotating-frame Hamiltonian.
//!
//! A two-mode oscillator on a platform rotating at `Omega` can be integrated
//! either in the inertial frame (with a time-dependent rotated potential) or
//! in the rotating frame (with Coriolis and centrifugal terms). Transforming
//! the inertial trajectory into the rotating frame must reproduce the
//! rotating-frame trajectory; dropping the centrifugal term breaks the
//! agreement, which is the point of keeping it.

use crate::error::{GyroError, Result};
use crate::scalar::{as_f64, lit, Real};

/// Which frame a classical state is expressed in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Frame {
    Inertial,
    Rotating,
}

/// Positions and conjugate momenta of the two-mode oscillator.
///
/// In the rotating frame the momenta are `p_x = m dx/dt - m Omega y` and
/// `p_y = m dy/dt + m Omega x`; in the inertial frame they are plain
/// `m (velocity)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClassicalState<F> {
    pub x: F,
    pub y: F,
    pub p_x: F,
    pub p_y: F,
    pub frame: Frame,
}

/// Mass, spring constants, and equilibrium positions of the oscillator.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClassicalOscillator<F> {
    pub mass: F,
    pub k_x: F,
    pub k_y: F,
    /// Equilibrium positions; the frame comparison assumes they sit at the
    /// rotation axis (zero), where both frames share them.
    pub x_e: F,
    pub y_e: F,
}

impl<F: Real> ClassicalOscillator<F> {
    pub fn omega_x(&self) -> F {
        (self.k_x / self.mass).sqrt()
    }

    pub fn omega_y(&self) -> F {
        (self.k_y / self.mass).sqrt()
    }
}

/// Result of the two-frame comparison.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FrameCheckReport<F> {
    /// Maximum position discrepancy between the transformed inertial
    /// trajectory and the rotating-frame trajectory.
    pub max_deviation: F,
    /// Maximum displacement along the rotating trajectory, for scaling.
    pub amplitude: F,
}

type State4<F> = [F; 4];

fn rk4_step<F: Real>(
    f: &impl Fn(F, &State4<F>) -> State4<F>,
    t: F,
    y: &State4<F>,
    dt: F,
) -> State4<F> {
    let half = lit::<F>(0.5);
    let sixth = F::one() / lit::<F>(6.0);
    let k1 = f(t, y);
    let mut y2 = *y;
    for i in 0..4 {
        y2[i] = y[i] + half * dt * k1[i];
    }
    let k2 = f(t + half * dt, &y2);
    let mut y3 = *y;
    for i in 0..4 {
        y3[i] = y[i] + half * dt * k2[i];
    }
    let k3 = f(t + half * dt, &y3);
    let mut y4 = *y;
    for i in 0..4 {
        y4[i] = y[i] + dt * k3[i];
    }
    let k4 = f(t + dt, &y4);
    let mut out = *y;
    for i in 0..4 {
        out[i] = y[i] + dt * sixth * (k1[i] + lit::<F>(2.0) * (k2[i] + k3[i]) + k4[i]);
    }
    out
}

/// Inertial-frame flow under the potential rotated by `theta(t) = Omega t`.
fn inertial_derivative<F: Real>(
    osc: &ClassicalOscillator<F>,
    omega_rot: F,
    t: F,
    s: &State4<F>,
) -> State4<F> {
    let theta = omega_rot * t;
    let (sin, cos) = theta.sin_cos();
    let u = s[0] - osc.x_e;
    let v = s[1] - osc.y_e;
    let a1 = u * cos + v * sin;
    let a2 = -u * sin + v * cos;
    [
        s[2] / osc.mass,
        s[3] / osc.mass,
        -(osc.k_x * a1 * cos - osc.k_y * a2 * sin),
        -(osc.k_x * a1 * sin + osc.k_y * a2 * cos),
    ]
}

/// Rotating-frame flow with Coriolis terms; the centrifugal force is
/// switchable so its effect can be measured by ablation.
fn rotating_derivative<F: Real>(
    osc: &ClassicalOscillator<F>,
    omega_rot: F,
    with_centrifugal: bool,
    s: &State4<F>,
) -> State4<F> {
    let vx = (s[2] + osc.mass * omega_rot * s[1]) / osc.mass;
    let vy = (s[3] - osc.mass * omega_rot * s[0]) / osc.mass;
    let mut dpx = omega_rot * (s[3] - osc.mass * omega_rot * s[0]) - osc.k_x * (s[0] - osc.x_e);
    let mut dpy = -omega_rot * (s[2] + osc.mass * omega_rot * s[1]) - osc.k_y * (s[1] - osc.y_e);
    if with_centrifugal {
        dpx += osc.mass * omega_rot * omega_rot * s[0];
        dpy += osc.mass * omega_rot * omega_rot * s[1];
    }
    [vx, vy, dpx, dpy]
}

/// Energy of an inertial-frame state at time `t` (kinetic plus rotated potential).
pub fn inertial_energy<F: Real>(
    osc: &ClassicalOscillator<F>,
    omega_rot: F,
    t: F,
    state: &ClassicalState<F>,
) -> F {
    let theta = omega_rot * t;
    let (sin, cos) = theta.sin_cos();
    let u = state.x - osc.x_e;
    let v = state.y - osc.y_e;
    let a1 = u * cos + v * sin;
    let a2 = -u * sin + v * cos;
    let half = lit::<F>(0.5);
    (state.p_x * state.p_x + state.p_y * state.p_y) / (lit::<F>(2.0) * osc.mass)
        + half * (osc.k_x * a1 * a1 + osc.k_y * a2 * a2)
}

/// Integrate an inertial-frame trajectory; returns sampled `(t, state)` pairs.
pub fn integrate_inertial<F: Real>(
    initial: &ClassicalState<F>,
    osc: &ClassicalOscillator<F>,
    omega_rot: F,
    duration: F,
    dt: F,
) -> Result<Vec<(F, ClassicalState<F>)>> {
    check_step(osc, omega_rot, dt)?;
    assert_eq!(initial.frame, Frame::Inertial);
    let f = |t: F, s: &State4<F>| inertial_derivative(osc, omega_rot, t, s);
    let mut s = [initial.x, initial.y, initial.p_x, initial.p_y];
    let steps = (duration / dt).ceil().to_usize().unwrap_or(0);
    let mut out = Vec::with_capacity(steps + 1);
    let mut t = F::zero();
    out.push((t, pack(&s, Frame::Inertial)));
    for _ in 0..steps {
        s = rk4_step(&f, t, &s, dt);
        t += dt;
        out.push((t, pack(&s, Frame::Inertial)));
    }
    Ok(out)
}

/// Integrate a rotating-frame trajectory; returns sampled `(t, state)` pairs.
pub fn integrate_rotating<F: Real>(
    initial: &ClassicalState<F>,
    osc: &ClassicalOscillator<F>,
    omega_rot: F,
    duration: F,
    dt: F,
    with_centrifugal: bool,
) -> Result<Vec<(F, ClassicalState<F>)>> {
    check_step(osc, omega_rot, dt)?;
    assert_eq!(initial.frame, Frame::Rotating);
    let f = |_t: F, s: &State4<F>| rotating_derivative(osc, omega_rot, with_centrifugal, s);
    let mut s = [initial.x, initial.y, initial.p_x, initial.p_y];
    let steps = (duration / dt).ceil().to_usize().unwrap_or(0);
    let mut out = Vec::with_capacity(steps + 1);
    let mut t = F::zero();
    out.push((t, pack(&s, Frame::Rotating)));
    for _ in 0..steps {
        s = rk4_step(&f, t, &s, dt);
        t += dt;
        out.push((t, pack(&s, Frame::Rotating)));
    }
    Ok(out)
}

fn pack<F: Real>(s: &State4<F>, frame: Frame) -> ClassicalState<F> {
    ClassicalState {
        x: s[0],
        y: s[1],
        p_x: s[2],
        p_y: s[3],
        frame,
    }
}

fn check_step<F: Real>(osc: &ClassicalOscillator<F>, omega_rot: F, dt: F) -> Result<()> {
    let fastest = osc.omega_x().max(osc.omega_y()).max(omega_rot.abs());
    let product = dt * fastest;
    if product >= lit(0.1) {
        return Err(GyroError::StepTooLarge {
            value: as_f64(product),
        });
    }
    Ok(())
}

/// Map an inertial-frame position into the rotating frame at angle `theta`.
fn rotate_into_frame<F: Real>(theta: F, x_o: F, y_o: F) -> (F, F) {
    let (sin, cos) = theta.sin_cos();
    (x_o * cos + y_o * sin, -x_o * sin + y_o * cos)
}

fn frame_check_impl<F: Real>(
    initial: &ClassicalState<F>,
    osc: &ClassicalOscillator<F>,
    omega_rot: F,
    duration: F,
    dt: F,
    with_centrifugal: bool,
) -> Result<FrameCheckReport<F>> {
    check_step(osc, omega_rot, dt)?;
    assert_eq!(initial.frame, Frame::Rotating);
    let f_inertial = |t: F, s: &State4<F>| inertial_derivative(osc, omega_rot, t, s);
    let f_rotating = |_t: F, s: &State4<F>| rotating_derivative(osc, omega_rot, with_centrifugal, s);

    // at t = 0 the frames coincide and the canonical momenta agree numerically
    let mut inertial = [initial.x, initial.y, initial.p_x, initial.p_y];
    let mut rotating = inertial;
    let steps = (duration / dt).ceil().to_usize().unwrap_or(0);
    let mut t = F::zero();
    let mut max_deviation = F::zero();
    let mut amplitude = F::zero();
    for _ in 0..=steps {
        let theta = omega_rot * t;
        let (xr, yr) = rotate_into_frame(theta, inertial[0], inertial[1]);
        let dev = ((xr - rotating[0]).powi(2) + (yr - rotating[1]).powi(2)).sqrt();
        max_deviation = max_deviation.max(dev);
        amplitude = amplitude.max((rotating[0] * rotating[0] + rotating[1] * rotating[1]).sqrt());
        inertial = rk4_step(&f_inertial, t, &inertial, dt);
        rotating = rk4_step(&f_rotating, t, &rotating, dt);
        t += dt;
    }
    Ok(FrameCheckReport {
        max_deviation,
        amplitude,
    })
}

/// Maximum relative energy drift of the inertial integrator over `duration`,
/// computed without storing the trajectory. Energy is conserved only for a
/// non-rotating potential, so this takes no rotation rate.
pub fn inertial_energy_drift<F: Real>(
    initial: &ClassicalState<F>,
    osc: &ClassicalOscillator<F>,
    duration: F,
    dt: F,
) -> Result<F> {
    check_step(osc, F::zero(), dt)?;
    assert_eq!(initial.frame, Frame::Inertial);
    let f = |t: F, s: &State4<F>| inertial_derivative(osc, F::zero(), t, s);
    let reference = inertial_energy(osc, F::zero(), F::zero(), initial);
    let mut s = [initial.x, initial.y, initial.p_x, initial.p_y];
    let steps = (duration / dt).ceil().to_usize().unwrap_or(0);
    let mut t = F::zero();
    let mut drift = F::zero();
    for _ in 0..steps {
        s = rk4_step(&f, t, &s, dt);
        t += dt;
        let state = pack(&s, Frame::Inertial);
        let energy = inertial_energy(osc, F::zero(), t, &state);
        drift = drift.max((energy - reference).abs() / reference);
    }
    Ok(drift)
}

/// Integrate the same motion in both frames and report the maximum position
/// discrepancy after mapping the inertial trajectory into the rotating frame.
/// The initial state is interpreted in the rotating frame.
pub fn rotating_frame_check<F: Real>(
    initial: &ClassicalState<F>,
    osc: &ClassicalOscillator<F>,
    omega_rot: F,
    duration: F,
    dt: F,
) -> Result<FrameCheckReport<F>> {
    frame_check_impl(initial, osc, omega_rot, duration, dt, true)
}

/// Same comparison with the centrifugal force removed from the
/// rotating-frame flow; the deviation it reports quantifies how wrong the
/// rotating-frame model becomes without that term.
pub fn rotating_frame_check_without_centrifugal<F: Real>(
    initial: &ClassicalState<F>,
    osc: &ClassicalOscillator<F>,
    omega_rot: F,
    duration: F,
    dt: F,
) -> Result<FrameCheckReport<F>> {
    frame_check_impl(initial, osc, omega_rot, duration, dt, false)
}
