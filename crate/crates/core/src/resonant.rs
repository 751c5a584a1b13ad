//! Order-by-order construction of the time-periodic expansion
//! `f = sum_l eps^l f_l(tau, psi)`, `f_l = sum_m f_l^(m)(tau) e_m(psi)`,
//! `tau = Omega t`, `Omega^2 = sum_l theta_l eps^l`.
//!
//! Each mode amplitude obeys a forced harmonic oscillator
//! `f'' + w_m^2 f = S_l^(m)` with zero initial velocity, solved in closed
//! form by the Duhamel integral. At order `l` the shift `theta_{l-1}` is
//! chosen to cancel the secular term of the dominant mode, and the data
//! `f_{l-2}^(m)(0)`, `m >= 1`, are chosen to cancel the secular terms of the
//! remaining modes. Unknowns enter affinely, so every cancellation is solved
//! exactly from two probe assemblies.

use std::borrow::Cow;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::modes::{self, ModesError};
use crate::rational::{self, Rational};
use crate::trigpoly::{Parity, SecularTrigPoly, TrigPolyError};

/// Modes probed for forced data when the automatic cutoff finds no wider
/// coupling range.
pub const AUTO_PROBE_MODES: usize = 3;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ResonantError {
    #[error("order {order} requested but the expansion only reaches order {reached}")]
    IncompleteState { order: usize, reached: usize },
    #[error("invalid order {0}: orders start at 1")]
    InvalidOrder(usize),
    #[error("free datum given for order {0}; only orders >= 2 carry free data")]
    InvalidFreeDatum(usize),
    #[error("secular coefficient at order {order} does not depend on theta_{}", order - 1)]
    DegenerateSlope { order: usize },
    #[error("obstruction coefficient vanishes at order {order}, mode {mode}")]
    VanishingObstruction { order: usize, mode: usize },
    #[error("secular terms at order {order}, mode {mode} cannot be cancelled: {residue}")]
    UnresolvedSecular {
        order: usize,
        mode: usize,
        residue: String,
    },
    #[error("Omega^2({epsilon}) = {value} is not positive")]
    NegativeOmegaSquared { epsilon: f64, value: f64 },
    #[error(transparent)]
    Trig(#[from] TrigPolyError),
    #[error(transparent)]
    Modes(#[from] ModesError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum ModeCutoff {
    /// Keep every mode the cubic coupling can reach from the nonzero ones.
    #[default]
    Automatic,
    /// Keep modes `0..=M`.
    Fixed(usize),
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct ExpansionConfig {
    pub free_data: BTreeMap<usize, Rational>,
    pub cutoff: ModeCutoff,
}

impl ExpansionConfig {
    pub fn with_free_datum(mut self, order: usize, value: Rational) -> Self {
        self.free_data.insert(order, value);
        self
    }

    pub fn with_cutoff(mut self, cutoff: ModeCutoff) -> Self {
        self.cutoff = cutoff;
        self
    }

    /// `f_l^(0)(0)`; one for the seed order, zero unless configured otherwise.
    pub fn free_datum(&self, order: usize) -> Rational {
        if order == 1 {
            return Rational::one();
        }
        self.free_data
            .get(&order)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }
}

/// Values substituted for the unknowns of one order during assembly.
#[derive(Clone, Debug, PartialEq)]
pub struct Trial {
    /// Candidate for `theta_{l-1}`.
    pub theta: Rational,
    /// Candidate for `f_{l-2}^(m)(0)` (modes `m >= 1`, orders `l >= 4`);
    /// `None` keeps the registered value.
    pub data: Option<Rational>,
}

impl Trial {
    pub fn theta(theta: Rational) -> Self {
        Self { theta, data: None }
    }

    pub fn with_data(theta: Rational, data: Rational) -> Self {
        Self {
            theta,
            data: Some(data),
        }
    }
}

/// One entry of the forced-data log: `f_{order}^(mode)(0) = value`, fixed
/// while cancelling secular terms at order `order + 2`.
#[derive(Clone, Debug, PartialEq)]
pub struct ForcedDatum {
    pub order: usize,
    pub mode: usize,
    pub value: Rational,
    /// Coefficient of `tau sin(w_m tau)` per unit datum.
    pub obstruction: Rational,
    /// Part of the assembled `f_{order+2}^(mode)` proportional to the datum.
    pub response: SecularTrigPoly,
}

/// `Omega^2(eps) = sum_l theta_l eps^l`.
#[derive(Clone, Debug, PartialEq)]
pub struct FrequencySeries {
    thetas: Vec<Rational>,
}

impl FrequencySeries {
    pub fn new(thetas: Vec<Rational>) -> Self {
        Self { thetas }
    }

    pub fn thetas(&self) -> &[Rational] {
        &self.thetas
    }

    /// Keeps `theta_0 .. theta_{count-1}`.
    pub fn truncated(&self, count: usize) -> Self {
        Self::new(self.thetas.iter().take(count).cloned().collect())
    }

    pub fn omega_squared(&self, epsilon: f64) -> f64 {
        // Horner from the top coefficient
        self.thetas
            .iter()
            .rev()
            .fold(0.0, |acc, th| acc * epsilon + rational::to_f64(th))
    }

    pub fn frequency(&self, epsilon: f64) -> Result<f64, ResonantError> {
        let value = self.omega_squared(epsilon);
        if value <= 0.0 || !value.is_finite() {
            return Err(ResonantError::NegativeOmegaSquared { epsilon, value });
        }
        Ok(value.sqrt())
    }
}

#[derive(Clone, Debug)]
pub struct PerturbativeState {
    config: ExpansionConfig,
    max_order: usize,
    polys: BTreeMap<(usize, usize), SecularTrigPoly>,
    thetas: Vec<Rational>,
    data: BTreeMap<(usize, usize), Rational>,
    forced_log: Vec<ForcedDatum>,
}

fn omega_rational(m: usize) -> Rational {
    Rational::from_integer(BigInt::from(modes::omega(m)))
}

impl PerturbativeState {
    /// `f_1 = cos(tau) e_0`, `theta_0 = 1`.
    pub fn seed() -> Self {
        Self::seed_with(ExpansionConfig::default()).expect("default config is valid")
    }

    pub fn seed_with(config: ExpansionConfig) -> Result<Self, ResonantError> {
        if let Some((&order, _)) = config.free_data.iter().find(|(&o, _)| o < 2) {
            return Err(ResonantError::InvalidFreeDatum(order));
        }
        let mut polys = BTreeMap::new();
        polys.insert((1, 0), SecularTrigPoly::cos(1));
        let mut data = BTreeMap::new();
        data.insert((1, 0), Rational::one());
        Ok(Self {
            config,
            max_order: 1,
            polys,
            thetas: vec![Rational::one()],
            data,
            forced_log: Vec::new(),
        })
    }

    /// Seeds and advances until `order` is reached.
    pub fn expand(order: usize, config: ExpansionConfig) -> Result<Self, ResonantError> {
        if order == 0 {
            return Err(ResonantError::InvalidOrder(order));
        }
        let mut state = Self::seed_with(config)?;
        while state.max_order < order {
            state.advance()?;
        }
        Ok(state)
    }

    pub fn config(&self) -> &ExpansionConfig {
        &self.config
    }

    pub fn max_order(&self) -> usize {
        self.max_order
    }

    /// `theta_0 .. theta_{max_order-1}`.
    pub fn thetas(&self) -> &[Rational] {
        &self.thetas
    }

    pub fn frequency_series(&self) -> FrequencySeries {
        FrequencySeries::new(self.thetas.clone())
    }

    pub fn forced_data_log(&self) -> &[ForcedDatum] {
        &self.forced_log
    }

    pub fn free_datum(&self, order: usize) -> Rational {
        self.config.free_datum(order)
    }

    /// Registered initial datum `f_order^(mode)(0)`.
    pub fn datum(&self, order: usize, mode: usize) -> Rational {
        self.data
            .get(&(order, mode))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Stored `f_order^(mode)`; zero when absent.
    pub fn poly(&self, order: usize, mode: usize) -> Cow<'_, SecularTrigPoly> {
        match self.polys.get(&(order, mode)) {
            Some(p) => Cow::Borrowed(p),
            None => Cow::Owned(SecularTrigPoly::zero()),
        }
    }

    /// Nonzero stored polynomials of one order, by mode.
    pub fn order_polys(&self, order: usize) -> impl Iterator<Item = (usize, &SecularTrigPoly)> {
        self.polys
            .range((order, 0)..(order + 1, 0))
            .map(|(&(_, m), p)| (m, p))
    }

    fn highest_active_mode(&self, below_order: usize) -> usize {
        let from_polys = self
            .polys
            .keys()
            .filter(|(l, _)| *l < below_order)
            .map(|&(_, m)| m);
        let from_data = self
            .data
            .iter()
            .filter(|((l, _), v)| *l < below_order && !v.is_zero())
            .map(|(&(_, m), _)| m);
        from_polys.chain(from_data).max().unwrap_or(0)
    }

    /// Modes assembled at `order`.
    pub fn modes_at(&self, order: usize) -> Vec<usize> {
        let top = match self.config.cutoff {
            ModeCutoff::Fixed(m) => m,
            // C_ijk^(m) vanishes for m > i + j + k
            ModeCutoff::Automatic => (3 * self.highest_active_mode(order)).max(AUTO_PROBE_MODES),
        };
        (0..=top).collect()
    }

    fn check_buildable(&self, order: usize) -> Result<(), ResonantError> {
        if order < 2 {
            return Err(ResonantError::InvalidOrder(order));
        }
        if order > self.max_order + 1 {
            return Err(ResonantError::IncompleteState {
                order,
                reached: self.max_order,
            });
        }
        Ok(())
    }

    fn view<'a>(&'a self, order: usize, mode: usize, trial: &'a Trial) -> OrderView<'a> {
        let override_data = match &trial.data {
            Some(d) if mode >= 1 && order >= 4 => Some(d),
            _ => None,
        };
        OrderView {
            state: self,
            order,
            mode,
            theta: &trial.theta,
            data: override_data,
        }
    }

    /// `N_l^(m) = w_m sum theta_nu f_mu^(m) - (1/w_m) sum C_ijk^(m) f_mu^(i) f_nu^(j) f_rho^(k)`.
    pub fn nonlinear_source(
        &self,
        order: usize,
        mode: usize,
        trial: &Trial,
    ) -> Result<SecularTrigPoly, ResonantError> {
        self.check_buildable(order)?;
        let view = self.view(order, mode, trial);
        let w = omega_rational(mode);
        let linear = view.shift_sum(|p| p.into_owned());
        let cubic = view.cubic_projection();
        Ok(&linear.scale(&w) - &cubic.scale(&w.recip()))
    }

    /// Right-hand side `S_l^(m)` of `f'' + w_m^2 f = S`.
    pub fn oscillator_source(
        &self,
        order: usize,
        mode: usize,
        trial: &Trial,
    ) -> Result<SecularTrigPoly, ResonantError> {
        if order == 1 {
            return Ok(SecularTrigPoly::zero());
        }
        self.check_buildable(order)?;
        let view = self.view(order, mode, trial);
        let shifts = view.shift_sum(|p| p.differentiate().differentiate());
        let cubic = view.cubic_projection();
        Ok(-(shifts + cubic))
    }

    /// Candidate `f_l^(m)` with the trial values substituted.
    pub fn assemble_order(
        &self,
        order: usize,
        mode: usize,
        trial: &Trial,
    ) -> Result<SecularTrigPoly, ResonantError> {
        self.check_buildable(order)?;
        let view = self.view(order, mode, trial);
        let w = modes::omega(mode);
        let cos_w = SecularTrigPoly::cos(w);

        let initial = if mode == 0 {
            self.config.free_datum(order)
        } else {
            // fixed later, when order + 2 is cancelled
            Rational::zero()
        };
        let mut out = cos_w.scale(&initial);
        for nu in 1..order {
            let theta = view.theta(nu);
            if theta.is_zero() {
                continue;
            }
            let lower = view.poly(order - nu, mode);
            let correction = &cos_w.scale(&lower.value_at_zero()) - lower.as_ref();
            out += &correction.scale(&theta);
        }
        let source = self.nonlinear_source(order, mode, trial)?;
        out += &SecularTrigPoly::duhamel(w, &source)?;
        Ok(out)
    }

    fn theta_for(&self, order: usize) -> Option<Rational> {
        self.thetas.get(order - 1).cloned()
    }

    /// `theta_{l-1}` cancelling the secular part of `f_l^(0)`.
    pub fn solve_shift(&self, order: usize) -> Result<Rational, ResonantError> {
        let at = |theta: i64| -> Result<SecularTrigPoly, ResonantError> {
            Ok(self
                .assemble_order(order, 0, &Trial::theta(rational::int(theta)))?
                .secular_part())
        };
        let base = at(0)?;
        let slope = &at(1)? - &base;
        if slope.is_zero() {
            return Err(ResonantError::DegenerateSlope { order });
        }
        solve_affine(&base, &slope).ok_or_else(|| ResonantError::UnresolvedSecular {
            order,
            mode: 0,
            residue: base.to_string(),
        })
    }

    /// `f_{l-2}^(m)(0)` cancelling the secular part of `f_l^(m)`, `m >= 1`.
    pub fn solve_forced_data(
        &self,
        order: usize,
        mode: usize,
    ) -> Result<ForcedDatum, ResonantError> {
        if order < 4 || mode == 0 {
            return Err(ResonantError::InvalidOrder(order));
        }
        let theta = match self.theta_for(order) {
            Some(t) => t,
            None => self.solve_shift(order)?,
        };
        self.solve_forced_with(order, mode, &theta)
    }

    fn solve_forced_with(
        &self,
        order: usize,
        mode: usize,
        theta: &Rational,
    ) -> Result<ForcedDatum, ResonantError> {
        let at = |d: i64| {
            self.assemble_order(
                order,
                mode,
                &Trial::with_data(theta.clone(), rational::int(d)),
            )
        };
        let p0 = at(0)?;
        let response = &at(1)? - &p0;
        let base = p0.secular_part();
        let slope = response.secular_part();
        let w = modes::omega(mode);
        let obstruction = slope.coeff(1, w, Parity::Sin);
        if slope.is_zero() {
            if base.is_zero() {
                return Ok(ForcedDatum {
                    order: order - 2,
                    mode,
                    value: Rational::zero(),
                    obstruction,
                    response,
                });
            }
            return Err(ResonantError::VanishingObstruction { order, mode });
        }
        let value =
            solve_affine(&base, &slope).ok_or_else(|| ResonantError::UnresolvedSecular {
                order,
                mode,
                residue: base.to_string(),
            })?;
        Ok(ForcedDatum {
            order: order - 2,
            mode,
            value,
            obstruction,
            response,
        })
    }

    /// Builds order `max_order + 1`: shift first, then forced data, then the
    /// final periodic polynomials of every retained mode.
    pub fn advance(&mut self) -> Result<(), ResonantError> {
        let order = self.max_order + 1;
        let theta = self.solve_shift(order)?;
        let window = self.modes_at(order);

        let mut forced = Vec::new();
        if order >= 4 {
            for &m in window.iter().filter(|&&m| m >= 1) {
                forced.push(self.solve_forced_with(order, m, &theta)?);
            }
        }
        let mut touched = false;
        for fd in &forced {
            let key = (fd.order, fd.mode);
            let old = self.datum(fd.order, fd.mode);
            if fd.value != old {
                let w = modes::omega(fd.mode);
                let delta = SecularTrigPoly::cos(w).scale(&(&fd.value - &old));
                let updated = &*self.poly(fd.order, fd.mode) + &delta;
                self.store(fd.order, fd.mode, updated);
                touched = true;
            }
            if fd.value.is_zero() {
                self.data.remove(&key);
            } else {
                self.data.insert(key, fd.value.clone());
            }
        }
        self.forced_log.extend(forced);
        if touched {
            // order - 1 sees the new data through the theta_1 coupling
            self.rebuild_order(order - 1)?;
        }

        self.thetas.push(theta.clone());
        self.max_order = order;
        self.rebuild_order(order)?;
        let free = self.config.free_datum(order);
        if !free.is_zero() {
            self.data.insert((order, 0), free);
        }
        Ok(())
    }

    fn store(&mut self, order: usize, mode: usize, poly: SecularTrigPoly) {
        if poly.is_zero() {
            self.polys.remove(&(order, mode));
        } else {
            self.polys.insert((order, mode), poly);
        }
    }

    /// Re-assembles an already solved order with its registered unknowns.
    fn rebuild_order(&mut self, order: usize) -> Result<(), ResonantError> {
        if order < 2 {
            return Ok(());
        }
        let theta = self.thetas[order - 1].clone();
        let trial = Trial::theta(theta);
        let mut built = Vec::new();
        for m in self.modes_at(order) {
            let p = self.assemble_order(order, m, &trial)?;
            if !p.is_periodic() {
                return Err(ResonantError::UnresolvedSecular {
                    order,
                    mode: m,
                    residue: p.secular_part().to_string(),
                });
            }
            built.push((m, p));
        }
        let stale: Vec<_> = self.order_polys(order).map(|(m, _)| m).collect();
        for m in stale {
            self.polys.remove(&(order, m));
        }
        for (m, p) in built {
            self.store(order, m, p);
        }
        Ok(())
    }

    /// `f'' + w_m^2 f - S_l^(m)` for the stored solution.
    pub fn residual(&self, order: usize, mode: usize) -> Result<SecularTrigPoly, ResonantError> {
        self.residual_with(order, mode, None)
    }

    /// Residual with `theta_{l-1}` replaced by `theta` when given.
    pub fn residual_with(
        &self,
        order: usize,
        mode: usize,
        theta: Option<Rational>,
    ) -> Result<SecularTrigPoly, ResonantError> {
        if order == 0 {
            return Err(ResonantError::InvalidOrder(order));
        }
        if order > self.max_order {
            return Err(ResonantError::IncompleteState {
                order,
                reached: self.max_order,
            });
        }
        let f = self.poly(order, mode);
        let w2 = omega_rational(mode).pow(2);
        let lhs = &f.differentiate().differentiate() + &f.scale(&w2);
        let theta = theta.unwrap_or_else(|| self.thetas[order - 1].clone());
        let source = self.oscillator_source(order, mode, &Trial::theta(theta))?;
        Ok(&lhs - &source)
    }

    /// Modes that carry content or were assembled at some order.
    pub fn active_modes(&self) -> Vec<usize> {
        let top = (1..=self.max_order)
            .flat_map(|l| self.modes_at(l))
            .max()
            .unwrap_or(0);
        (0..=top).collect()
    }

    pub fn frequency(&self, epsilon: f64) -> Result<f64, ResonantError> {
        self.frequency_series().frequency(epsilon)
    }

    /// Truncated series `sum_l eps^l sum_m f_l^(m)(Omega t) e_m(psi)`.
    pub fn evaluate_solution(&self, epsilon: f64, t: f64, psi: f64) -> Result<f64, ResonantError> {
        modes::eigen_eval(0, psi)?;
        if epsilon == 0.0 {
            return Ok(0.0);
        }
        let tau = self.frequency(epsilon)? * t;
        let mut total = 0.0;
        for (&(order, mode), p) in &self.polys {
            total += epsilon.powi(order as i32) * p.eval(tau) * modes::eigen_eval(mode, psi)?;
        }
        Ok(total)
    }

    /// The expansion cut back to `order`.
    pub fn truncated(&self, order: usize) -> Result<Self, ResonantError> {
        if order == 0 {
            return Err(ResonantError::InvalidOrder(order));
        }
        if order > self.max_order {
            return Err(ResonantError::IncompleteState {
                order,
                reached: self.max_order,
            });
        }
        let keep = |&(l, _): &(usize, usize)| l <= order;
        Ok(Self {
            config: self.config.clone(),
            max_order: order,
            polys: self
                .polys
                .iter()
                .filter(|(k, _)| keep(k))
                .map(|(k, p)| (*k, p.clone()))
                .collect(),
            thetas: self.thetas[..order].to_vec(),
            data: self
                .data
                .iter()
                .filter(|(k, _)| keep(k))
                .map(|(k, v)| (*k, v.clone()))
                .collect(),
            forced_log: self
                .forced_log
                .iter()
                .filter(|fd| fd.order + 2 <= order)
                .cloned()
                .collect(),
        })
    }

    /// Mode amplitudes of the series at `tau = 0`, modes `0..n_modes`.
    pub fn initial_amplitudes(&self, epsilon: f64, n_modes: usize) -> Vec<f64> {
        let mut a = vec![0.0; n_modes];
        for (&(order, mode), p) in &self.polys {
            if mode < n_modes {
                a[mode] += epsilon.powi(order as i32) * rational::to_f64(&p.value_at_zero());
            }
        }
        a
    }
}

/// Lower-order data with the unknowns of one order substituted.
struct OrderView<'a> {
    state: &'a PerturbativeState,
    order: usize,
    mode: usize,
    theta: &'a Rational,
    data: Option<&'a Rational>,
}

impl<'a> OrderView<'a> {
    fn theta(&self, nu: usize) -> Rational {
        if nu == self.order - 1 {
            self.theta.clone()
        } else {
            self.state.thetas[nu].clone()
        }
    }

    fn poly(&self, order: usize, mode: usize) -> Cow<'a, SecularTrigPoly> {
        let stored = self.state.poly(order, mode);
        match self.data {
            Some(d) if order + 2 == self.order && mode == self.mode => {
                let old = self.state.datum(order, mode);
                let delta = SecularTrigPoly::cos(modes::omega(mode)).scale(&(d - &old));
                Cow::Owned(stored.as_ref() + &delta)
            }
            _ => stored,
        }
    }

    /// Nonzero mode polynomials of a lower order.
    fn order_polys(&self, order: usize) -> Vec<(usize, Cow<'a, SecularTrigPoly>)> {
        let mut out: Vec<(usize, Cow<'a, SecularTrigPoly>)> = self
            .state
            .order_polys(order)
            .map(|(m, _)| (m, self.poly(order, m)))
            .collect();
        if self.data.is_some()
            && order + 2 == self.order
            && !out.iter().any(|(m, _)| *m == self.mode)
        {
            out.push((self.mode, self.poly(order, self.mode)));
        }
        out.retain(|(_, p)| !p.is_zero());
        out
    }

    /// `sum_{nu=1}^{l-1} theta_nu g(f_{l-nu}^(m))`.
    fn shift_sum<F>(&self, g: F) -> SecularTrigPoly
    where
        F: Fn(Cow<'a, SecularTrigPoly>) -> SecularTrigPoly,
    {
        let mut out = SecularTrigPoly::zero();
        for nu in 1..self.order {
            let theta = self.theta(nu);
            if theta.is_zero() {
                continue;
            }
            let lower = self.poly(self.order - nu, self.mode);
            if lower.is_zero() {
                continue;
            }
            out += &g(lower).scale(&theta);
        }
        out
    }

    /// `sum_{ijk} C_ijk^(m) sum_{mu+nu+rho=l} f_mu^(i) f_nu^(j) f_rho^(k)`.
    fn cubic_projection(&self) -> SecularTrigPoly {
        let table = modes::shared_table();
        let l = self.order;
        let by_order: Vec<Vec<(usize, Cow<'a, SecularTrigPoly>)>> = (0..l)
            .map(|o| {
                if o == 0 {
                    Vec::new()
                } else {
                    self.order_polys(o)
                }
            })
            .collect();
        let mut out = SecularTrigPoly::zero();
        for mu in 1..l {
            for nu in 1..l - mu {
                let rho = l - mu - nu;
                if rho == 0 {
                    continue;
                }
                for (i, fi) in &by_order[mu] {
                    for (j, fj) in &by_order[nu] {
                        let mut pair: Option<SecularTrigPoly> = None;
                        for (k, fk) in &by_order[rho] {
                            let c = table.get(*i, *j, *k, self.mode);
                            if c == 0 {
                                continue;
                            }
                            let pair = pair.get_or_insert_with(|| fi.as_ref() * fj.as_ref());
                            let coeff = Rational::from_integer(BigInt::from(c));
                            out += &(&*pair * fk.as_ref()).scale(&coeff);
                        }
                    }
                }
            }
        }
        out
    }
}

/// Solves `base + x * slope = 0` exactly; `None` when no single `x` works.
fn solve_affine(base: &SecularTrigPoly, slope: &SecularTrigPoly) -> Option<Rational> {
    let (key, s) = slope.iter().next()?;
    let b = base.coeff(key.power, key.frequency, key.parity);
    let x = -(b / s);
    (base + &slope.scale(&x)).is_zero().then_some(x)
}
