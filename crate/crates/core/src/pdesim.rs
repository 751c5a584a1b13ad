//! Sine-pseudospectral simulation of `f_tt - f_psipsi + f^3 / sin^2(psi) = 0`
//! on `[0, pi]` with Dirichlet ends, in the basis `sin((m+1) psi)`.
//!
//! With `f = sin(psi) g(cos psi)` and `g = sum a_m U_m`, the nonlinearity is
//! `sin(psi) g^3`, so no division by `sin(psi)` ever happens. Its sine
//! coefficients are `(2/pi) int sqrt(1-y^2) g^3 U_m dy`, evaluated by a
//! Gauss rule with `2N` nodes, exact for the degree `4N - 4` integrand.
//!
//! Time stepping is classical RK4 applied to the deviation from the free
//! linear flow of the initial data. The linear part is propagated
//! analytically, so rounding and truncation errors scale with the size of
//! the nonlinear correction instead of with the full state.

use std::f64::consts::PI;

use serde::Serialize;
use thiserror::Error;

use crate::modes::{chebyshev_u_table, gauss_chebyshev_u_rule};
use crate::resonant::{PerturbativeState, ResonantError};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum PdeError {
    #[error("at least one mode is required")]
    NoModes,
    #[error("time step must be positive and finite, got {0}")]
    InvalidStep(f64),
    #[error("time step {dt} does not resolve mode frequency {n_modes} (need dt * N <= 1)")]
    StepTooLarge { dt: f64, n_modes: usize },
    #[error("final time must be nonnegative and finite, got {0}")]
    InvalidTime(f64),
    #[error("coefficient norm blew up to {norm} at t = {t}")]
    Instability { t: f64, norm: f64 },
    #[error("Hardy exponent must lie in 1..=6, got {0}")]
    InvalidExponent(u32),
    #[error("coefficient vectors have lengths {a} and {v}")]
    LengthMismatch { a: usize, v: usize },
    #[error(transparent)]
    Resonant(#[from] ResonantError),
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpectralState {
    pub a: Vec<f64>,
    pub v: Vec<f64>,
    pub t: f64,
}

impl SpectralState {
    pub fn zeros(n_modes: usize) -> Self {
        Self {
            a: vec![0.0; n_modes],
            v: vec![0.0; n_modes],
            t: 0.0,
        }
    }

    pub fn new(a: Vec<f64>, v: Vec<f64>) -> Result<Self, PdeError> {
        if a.len() != v.len() {
            return Err(PdeError::LengthMismatch {
                a: a.len(),
                v: v.len(),
            });
        }
        if a.is_empty() {
            return Err(PdeError::NoModes);
        }
        Ok(Self { a, v, t: 0.0 })
    }

    pub fn n_modes(&self) -> usize {
        self.a.len()
    }

    /// `f(t, psi)`.
    pub fn eval(&self, psi: f64) -> f64 {
        self.a
            .iter()
            .enumerate()
            .map(|(m, a)| a * ((m + 1) as f64 * psi).sin())
            .sum()
    }

    fn norm(&self) -> f64 {
        self.a
            .iter()
            .chain(&self.v)
            .map(|x| x * x)
            .sum::<f64>()
            .sqrt()
    }
}

/// Collocation data for `n_modes` coefficients on `nodes` Gauss points.
#[derive(Clone, Debug)]
pub struct SpectralGrid {
    n_modes: usize,
    weights: Vec<f64>,
    /// `U_m(y_k)`, node-major.
    basis: Vec<Vec<f64>>,
}

impl SpectralGrid {
    /// Dealiased grid: `2N` nodes.
    pub fn new(n_modes: usize) -> Self {
        Self::with_nodes(n_modes, 2 * n_modes.max(1))
    }

    pub fn with_nodes(n_modes: usize, nodes: usize) -> Self {
        let (ys, weights) = gauss_chebyshev_u_rule(nodes.max(1));
        let basis = ys.iter().map(|&y| chebyshev_u_table(n_modes, y)).collect();
        Self {
            n_modes,
            weights,
            basis,
        }
    }

    pub fn n_modes(&self) -> usize {
        self.n_modes
    }

    /// `g(y_k) = sum_m a_m U_m(y_k)`.
    fn synthesize(&self, a: &[f64]) -> impl Iterator<Item = f64> + '_ {
        let a = a.to_vec();
        self.basis
            .iter()
            .map(move |row| row.iter().zip(&a).map(|(u, c)| u * c).sum())
    }

    /// Sine coefficients of `f^3 / sin^2(psi)`.
    pub fn nonlinearity(&self, a: &[f64]) -> Vec<f64> {
        let mut out = vec![0.0; self.n_modes];
        for ((g, w), row) in self.synthesize(a).zip(&self.weights).zip(&self.basis) {
            let s = 2.0 / PI * w * g * g * g;
            for (o, u) in out.iter_mut().zip(row) {
                *o += s * u;
            }
        }
        out
    }

    /// `int_0^pi sin^2(psi) |g|^p dpsi`.
    fn weighted_power(&self, a: &[f64], p: u32) -> f64 {
        self.synthesize(a)
            .zip(&self.weights)
            .map(|(g, w)| w * g.abs().powi(p as i32))
            .sum()
    }
}

/// Sine coefficients of `f^3 / sin^2(psi)` on the dealiased grid.
pub fn nonlinearity(a: &[f64]) -> Vec<f64> {
    SpectralGrid::new(a.len()).nonlinearity(a)
}

/// `(da, dv)` with `da = v`, `dv_m = -(m+1)^2 a_m - N(a)_m`.
pub fn rhs(state: &SpectralState) -> (Vec<f64>, Vec<f64>) {
    rhs_on(&SpectralGrid::new(state.n_modes()), state)
}

fn rhs_on(grid: &SpectralGrid, state: &SpectralState) -> (Vec<f64>, Vec<f64>) {
    let nl = grid.nonlinearity(&state.a);
    let dv = state
        .a
        .iter()
        .zip(&nl)
        .enumerate()
        .map(|(m, (a, n))| -(((m + 1) * (m + 1)) as f64) * a - n)
        .collect();
    (state.v.clone(), dv)
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct EnergyReport {
    pub kinetic: f64,
    pub gradient: f64,
    pub potential: f64,
    pub total: f64,
}

/// `E = (1/2) int (f_t^2 + f_psi^2 + (1/2) f^4 / sin^2 psi) dpsi`; the
/// potential term is exact once `quad_points >= 2N`.
pub fn energy_report(state: &SpectralState, quad_points: usize) -> EnergyReport {
    energy_on(
        &SpectralGrid::with_nodes(state.n_modes(), quad_points),
        state,
    )
}

fn energy_on(grid: &SpectralGrid, state: &SpectralState) -> EnergyReport {
    let (kinetic, gradient) = quadratic_parts(&state.a, &state.v);
    let potential = 0.25 * grid.weighted_power(&state.a, 4);
    EnergyReport {
        kinetic,
        gradient,
        potential,
        total: kinetic + gradient + potential,
    }
}

/// Kinetic and gradient energies by Parseval.
fn quadratic_parts(a: &[f64], v: &[f64]) -> (f64, f64) {
    let kinetic = PI / 4.0 * v.iter().map(|x| x * x).sum::<f64>();
    let gradient = PI / 4.0
        * a.iter()
            .enumerate()
            .map(|(m, x)| ((m + 1) * (m + 1)) as f64 * x * x)
            .sum::<f64>();
    (kinetic, gradient)
}

/// `a_m = sum_l eps^l f_l^(m)(0)`, `v = 0`.
pub fn project_initial(
    state: &PerturbativeState,
    epsilon: f64,
    n_modes: usize,
) -> Result<SpectralState, PdeError> {
    if n_modes == 0 {
        return Err(PdeError::NoModes);
    }
    Ok(SpectralState {
        a: state.initial_amplitudes(epsilon, n_modes),
        v: vec![0.0; n_modes],
        t: 0.0,
    })
}

/// Free linear flow `a_m cos(w t) + v_m sin(w t) / w` of fixed data.
struct LinearFlow {
    a0: Vec<f64>,
    v0: Vec<f64>,
}

impl LinearFlow {
    fn at(&self, t: f64) -> (Vec<f64>, Vec<f64>) {
        let mut a = Vec::with_capacity(self.a0.len());
        let mut v = Vec::with_capacity(self.a0.len());
        for (m, (a0, v0)) in self.a0.iter().zip(&self.v0).enumerate() {
            let w = (m + 1) as f64;
            let (s, c) = (w * t).sin_cos();
            a.push(a0 * c + v0 * s / w);
            v.push(-a0 * w * s + v0 * c);
        }
        (a, v)
    }

    /// `flow(t) - flow(0)`, without cancellation near full periods.
    fn displacement(&self, t: f64) -> (Vec<f64>, Vec<f64>) {
        let mut da = Vec::with_capacity(self.a0.len());
        let mut dv = Vec::with_capacity(self.a0.len());
        for (m, (a0, v0)) in self.a0.iter().zip(&self.v0).enumerate() {
            let w = (m + 1) as f64;
            let s = (w * t).sin();
            let cm1 = -2.0 * (0.5 * w * t).sin().powi(2);
            da.push(a0 * cm1 + v0 * s / w);
            dv.push(-a0 * w * s + v0 * cm1);
        }
        (da, dv)
    }
}

/// Deviation `(d, e)` from the linear flow obeys `d' = e`,
/// `e_m' = -w_m^2 d_m - N(flow + d)_m`.
struct Deviation<'g> {
    grid: &'g SpectralGrid,
    flow: LinearFlow,
}

impl Deviation<'_> {
    fn derivative(&self, t: f64, d: &[f64], e: &[f64]) -> (Vec<f64>, Vec<f64>) {
        let (base, _) = self.flow.at(t);
        let full: Vec<f64> = base.iter().zip(d).map(|(b, x)| b + x).collect();
        let nl = self.grid.nonlinearity(&full);
        let de = d
            .iter()
            .zip(&nl)
            .enumerate()
            .map(|(m, (x, n))| -(((m + 1) * (m + 1)) as f64) * x - n)
            .collect();
        (e.to_vec(), de)
    }

    fn step(&self, t: f64, h: f64, d: &mut [f64], e: &mut [f64]) {
        let shift = |x: &[f64], k: &[f64], s: f64| -> Vec<f64> {
            x.iter().zip(k).map(|(x, k)| x + s * k).collect()
        };
        let (k1d, k1e) = self.derivative(t, d, e);
        let (k2d, k2e) = self.derivative(
            t + h / 2.0,
            &shift(d, &k1d, h / 2.0),
            &shift(e, &k1e, h / 2.0),
        );
        let (k3d, k3e) = self.derivative(
            t + h / 2.0,
            &shift(d, &k2d, h / 2.0),
            &shift(e, &k2e, h / 2.0),
        );
        let (k4d, k4e) = self.derivative(t + h, &shift(d, &k3d, h), &shift(e, &k3e, h));
        for i in 0..d.len() {
            d[i] += h / 6.0 * (k1d[i] + 2.0 * k2d[i] + 2.0 * k3d[i] + k4d[i]);
            e[i] += h / 6.0 * (k1e[i] + 2.0 * k2e[i] + 2.0 * k3e[i] + k4e[i]);
        }
    }
}

/// Outcome of a run: the final state plus its exact offset from the start.
#[derive(Clone, Debug)]
struct Run {
    end: SpectralState,
    delta_a: Vec<f64>,
    delta_v: Vec<f64>,
    max_energy_drift: f64,
}

fn validate_step(n_modes: usize, t_end: f64, dt: f64) -> Result<usize, PdeError> {
    if n_modes == 0 {
        return Err(PdeError::NoModes);
    }
    if !(dt > 0.0 && dt.is_finite()) {
        return Err(PdeError::InvalidStep(dt));
    }
    if dt * n_modes as f64 > 1.0 {
        return Err(PdeError::StepTooLarge { dt, n_modes });
    }
    if !(t_end >= 0.0 && t_end.is_finite()) {
        return Err(PdeError::InvalidTime(t_end));
    }
    Ok((t_end / dt).ceil() as usize)
}

fn run<F>(state0: &SpectralState, t_end: f64, dt: f64, mut observe: F) -> Result<Run, PdeError>
where
    F: FnMut(&SpectralState, &EnergyReport),
{
    let n = state0.n_modes();
    let steps = validate_step(n, t_end, dt)?;
    let grid = SpectralGrid::new(n);
    let system = Deviation {
        grid: &grid,
        flow: LinearFlow {
            a0: state0.a.clone(),
            v0: state0.v.clone(),
        },
    };
    let e0 = energy_on(&grid, state0);
    let limit = 1e6 * (1.0 + state0.norm());
    let mut d = vec![0.0; n];
    let mut e = vec![0.0; n];
    let mut current = state0.clone();
    let mut max_energy_drift: f64 = 0.0;
    observe(&current, &e0);

    let h = if steps == 0 {
        0.0
    } else {
        t_end / steps as f64
    };
    for k in 0..steps {
        let t = k as f64 * h;
        system.step(t, h, &mut d, &mut e);
        let t_next = (k + 1) as f64 * h;
        let (base_a, base_v) = system.flow.at(t_next);
        current = SpectralState {
            a: base_a.iter().zip(&d).map(|(b, x)| b + x).collect(),
            v: base_v.iter().zip(&e).map(|(b, x)| b + x).collect(),
            t: state0.t + t_next,
        };
        let norm = current.norm();
        if !norm.is_finite() || norm > limit {
            return Err(PdeError::Instability { t: current.t, norm });
        }
        let report = energy_on(&grid, &current);
        if e0.total > 0.0 {
            max_energy_drift = max_energy_drift.max(((report.total - e0.total) / e0.total).abs());
        }
        observe(&current, &report);
    }

    let (mut delta_a, mut delta_v) = system.flow.displacement(h * steps as f64);
    for i in 0..n {
        delta_a[i] += d[i];
        delta_v[i] += e[i];
    }
    Ok(Run {
        end: current,
        delta_a,
        delta_v,
        max_energy_drift,
    })
}

/// RK4 to `t_end` with the largest step `<= dt` dividing it evenly.
pub fn simulate(state0: &SpectralState, t_end: f64, dt: f64) -> Result<SpectralState, PdeError> {
    Ok(run(state0, t_end, dt, |_, _| {})?.end)
}

/// As [`simulate`], calling `observe` on the initial state and after every step.
pub fn simulate_observed<F>(
    state0: &SpectralState,
    t_end: f64,
    dt: f64,
    observe: F,
) -> Result<SpectralState, PdeError>
where
    F: FnMut(&SpectralState, &EnergyReport),
{
    Ok(run(state0, t_end, dt, observe)?.end)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PeriodicityReport {
    pub epsilon: f64,
    pub order: usize,
    pub n_modes: usize,
    pub dt: f64,
    pub period: f64,
    pub periodicity_error: f64,
    pub energy_drift: f64,
}

/// Integrates the order-`order` initial data over `T = 2 pi / Omega(eps)`,
/// with `Omega` from the same truncation, and measures the return defect in
/// the energy norm relative to the initial state.
pub fn periodicity_run(
    state: &PerturbativeState,
    epsilon: f64,
    order: usize,
    n_modes: usize,
    dt: f64,
) -> Result<PeriodicityReport, PdeError> {
    let truncated = state.truncated(order)?;
    let period = 2.0 * PI / truncated.frequency(epsilon)?;
    let initial = project_initial(&truncated, epsilon, n_modes)?;
    let out = run(&initial, period, dt, |_, _| {})?;
    let (k0, g0) = quadratic_parts(&initial.a, &initial.v);
    let (kd, gd) = quadratic_parts(&out.delta_a, &out.delta_v);
    let scale = (k0 + g0).sqrt();
    let periodicity_error = if scale == 0.0 {
        0.0
    } else {
        (kd + gd).sqrt() / scale
    };
    Ok(PeriodicityReport {
        epsilon,
        order,
        n_modes,
        dt,
        period,
        periodicity_error,
        energy_drift: out.max_energy_drift,
    })
}

pub fn periodicity_error(
    state: &PerturbativeState,
    epsilon: f64,
    order: usize,
    n_modes: usize,
    dt: f64,
) -> Result<f64, PdeError> {
    Ok(periodicity_run(state, epsilon, order, n_modes, dt)?.periodicity_error)
}

/// Least-squares slope of `ln(error)` against `ln(eps)`.
pub fn log_log_slope(points: &[(f64, f64)]) -> f64 {
    let n = points.len() as f64;
    let xs: Vec<f64> = points.iter().map(|p| p.0.ln()).collect();
    let ys: Vec<f64> = points.iter().map(|p| p.1.ln()).collect();
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    sxy / sxx
}

/// `(int |f|^p sin^{2-p})^{1/p} / (||f_psi||_2 + ||f||_2)`, zero for the zero state.
pub fn hardy_diagnostic(state: &SpectralState, p: u32) -> Result<f64, PdeError> {
    if !(1..=6).contains(&p) {
        return Err(PdeError::InvalidExponent(p));
    }
    let n = state.n_modes();
    // odd powers of |g| are not polynomial; oversample
    let grid = SpectralGrid::with_nodes(n, 8 * n + 32);
    let left = grid.weighted_power(&state.a, p).powf(1.0 / p as f64);
    let (_, grad) = quadratic_parts(&state.a, &state.v);
    let l2 = (PI / 2.0 * state.a.iter().map(|x| x * x).sum::<f64>()).sqrt();
    let right = (2.0 * grad).sqrt() + l2;
    if right == 0.0 {
        return Ok(0.0);
    }
    Ok(left / right)
}
