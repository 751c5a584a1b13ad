//! One-mode reduction `G'' + G + G^3 = 0`, written as the planar system
//! `X' = Y`, `Y' = -X (1 + X^2)`.

use std::f64::consts::PI;

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum DuffingError {
    #[error("zero amplitude: the equilibrium has no period")]
    ZeroAmplitude,
    #[error("level-set parameter a must be nonzero")]
    ZeroLevel,
    #[error("step control must be positive and finite, got {0}")]
    InvalidTolerance(f64),
    #[error("quadrature needs at least one point")]
    NoQuadraturePoints,
    #[error("no return to the section within t = {horizon}")]
    NoReturn { horizon: f64 },
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct PhasePoint {
    pub x: f64,
    pub y: f64,
}

impl PhasePoint {
    pub fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Orbit {
    pub x0: f64,
    /// `(t, point)`, starting at `(0, (x0, 0))`.
    pub samples: Vec<(f64, PhasePoint)>,
}

impl Orbit {
    pub fn max_relative_energy_drift(&self) -> f64 {
        let e0 = energy(self.samples[0].1);
        if e0 == 0.0 {
            return 0.0;
        }
        self.samples
            .iter()
            .map(|(_, p)| ((energy(*p) - e0) / e0).abs())
            .fold(0.0, f64::max)
    }
}

pub const DEFAULT_TOLERANCE: f64 = 1e-12;
pub const DEFAULT_QUAD_POINTS: usize = 64;

pub fn energy(p: PhasePoint) -> f64 {
    p.y * p.y + p.x * p.x + 0.5 * p.x.powi(4)
}

pub fn vector_field(p: PhasePoint) -> PhasePoint {
    PhasePoint::new(p.y, -p.x * (1.0 + p.x * p.x))
}

fn rk4_step(p: PhasePoint, h: f64) -> PhasePoint {
    let add = |p: PhasePoint, k: PhasePoint, s: f64| PhasePoint::new(p.x + s * k.x, p.y + s * k.y);
    let k1 = vector_field(p);
    let k2 = vector_field(add(p, k1, h / 2.0));
    let k3 = vector_field(add(p, k2, h / 2.0));
    let k4 = vector_field(add(p, k3, h));
    PhasePoint::new(
        p.x + h / 6.0 * (k1.x + 2.0 * k2.x + 2.0 * k3.x + k4.x),
        p.y + h / 6.0 * (k1.y + 2.0 * k2.y + 2.0 * k3.y + k4.y),
    )
}

/// Fixed RK4 step whose local error is about `tol` on the orbit through
/// `(x0, 0)`; the linearized frequency there is `sqrt(1 + 3 x0^2 / 2)`.
pub fn step_size(x0: f64, tol: f64) -> Result<f64, DuffingError> {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(DuffingError::InvalidTolerance(tol));
    }
    Ok(tol.powf(0.2) / (1.0 + 1.5 * x0 * x0).sqrt())
}

/// RK4 flow from `(x0, 0)` on `[0, t_end]`. The step is the largest one
/// not exceeding [`step_size`] that divides `t_end` evenly.
pub fn integrate(x0: f64, t_end: f64, tol: f64) -> Result<Orbit, DuffingError> {
    let h_max = step_size(x0, tol)?;
    let start = PhasePoint::new(x0, 0.0);
    let mut samples = vec![(0.0, start)];
    if t_end <= 0.0 {
        return Ok(Orbit { x0, samples });
    }
    let steps = (t_end / h_max).ceil() as usize;
    let h = t_end / steps as f64;
    let mut p = start;
    samples.reserve(steps);
    for k in 1..=steps {
        p = rk4_step(p, h);
        samples.push((k as f64 * h, p));
    }
    Ok(Orbit { x0, samples })
}

/// `T = 4 int_0^{pi/2} dphi / sqrt(1 + x0^2 (1 + sin^2 phi) / 2)`, from
/// `X = |x0| sin phi` in the energy integral. The integrand is smooth and
/// periodic, so the trapezoidal rule over a full period converges
/// geometrically.
pub fn period(x0: f64, quad_points: usize) -> Result<f64, DuffingError> {
    if x0 == 0.0 {
        return Err(DuffingError::ZeroAmplitude);
    }
    if quad_points == 0 {
        return Err(DuffingError::NoQuadraturePoints);
    }
    let a2 = x0 * x0;
    let h = 2.0 * PI / quad_points as f64;
    let sum: f64 = (0..quad_points)
        .map(|k| {
            let s = (k as f64 * h).sin();
            1.0 / (1.0 + 0.5 * a2 * (1.0 + s * s)).sqrt()
        })
        .sum();
    Ok(h * sum)
}

/// Parametrization of the level set `E = a^2`; geometric, not the time flow.
pub fn level_set_point(a: f64, t: f64) -> Result<PhasePoint, DuffingError> {
    if a == 0.0 {
        return Err(DuffingError::ZeroLevel);
    }
    let c = t.cos();
    let x = a * 2f64.sqrt() * c / (1.0 + (1.0 + 2.0 * a * a * c * c).sqrt()).sqrt();
    Ok(PhasePoint::new(x, a * t.sin()))
}

/// `|gamma_a'(t)|^2`.
pub fn level_set_speed_sq(a: f64, t: f64) -> Result<f64, DuffingError> {
    if a == 0.0 {
        return Err(DuffingError::ZeroLevel);
    }
    let (s, c) = t.sin_cos();
    let r = (1.0 + 2.0 * a * a * c * c).sqrt();
    let q = 1.0 + r;
    // d/dt of a sqrt2 c q^{-1/2}, with dq/dt = -2 a^2 c s / r
    let dx = a * 2f64.sqrt() * (-s / q.sqrt() + c * a * a * c * s / (r * q.powf(1.5)));
    let dy = a * c;
    Ok(dx * dx + dy * dy)
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Closure {
    pub return_time: f64,
    pub gap: f64,
}

/// First return to `{Y = 0, X x0 > 0}`: sign-change bracketing on the RK4
/// grid, then Newton on the sub-step length inside the bracketing step.
pub fn orbit_closure(x0: f64, tol: f64) -> Result<Closure, DuffingError> {
    let estimate = period(x0, DEFAULT_QUAD_POINTS)?;
    let h = step_size(x0, tol)?;
    let horizon = 10.0 * estimate;
    let mut p = PhasePoint::new(x0, 0.0);
    let mut t = 0.0;
    while t < horizon {
        let next = rk4_step(p, h);
        // t = 0 lies on the section itself
        let crossed = t > 0.0 && p.y != 0.0 && p.y * next.y <= 0.0;
        if crossed && next.x * x0 > 0.0 {
            let s = refine_crossing(p, h);
            let end = rk4_step(p, s);
            return Ok(Closure {
                return_time: t + s,
                gap: (end.x - x0).abs(),
            });
        }
        p = next;
        t += h;
    }
    Err(DuffingError::NoReturn { horizon })
}

fn refine_crossing(p: PhasePoint, h: f64) -> f64 {
    let mut s = h * p.y / (p.y - rk4_step(p, h).y);
    for _ in 0..20 {
        let q = rk4_step(p, s);
        let slope = vector_field(q).y;
        if slope == 0.0 {
            break;
        }
        let ds = q.y / slope;
        s -= ds;
        if ds.abs() <= 1e-16 * h {
            break;
        }
    }
    s
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OracleTriangle {
    pub x0: f64,
    pub period_quadrature: f64,
    pub period_return: f64,
    pub period_series: f64,
    pub gap_quadrature_return: f64,
    pub gap_quadrature_series: f64,
    pub gap_return_series: f64,
    pub closure_gap: f64,
    pub energy_drift_100_periods: f64,
}

/// Compares the quadrature period, the first-return time and a period
/// `period_series` supplied by the caller (typically `2 pi / Omega(x0)`).
pub fn verify(x0: f64, period_series: f64, tol: f64) -> Result<OracleTriangle, DuffingError> {
    let period_quadrature = period(x0, DEFAULT_QUAD_POINTS)?;
    let closure = orbit_closure(x0, tol)?;
    let orbit = integrate(x0, 100.0 * period_quadrature, tol)?;
    Ok(OracleTriangle {
        x0,
        period_quadrature,
        period_return: closure.return_time,
        period_series,
        gap_quadrature_return: (period_quadrature - closure.return_time).abs(),
        gap_quadrature_series: (period_quadrature - period_series).abs(),
        gap_return_series: (closure.return_time - period_series).abs(),
        closure_gap: closure.gap,
        energy_drift_100_periods: orbit.max_relative_energy_drift(),
    })
}
