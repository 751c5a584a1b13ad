//! Exact secular trigonometric polynomials in the time variable `tau`.
//!
//! A [`SecularTrigPoly`] is a finite sum of monomials
//! `c * tau^p * cos(w*tau)` and `c * tau^p * sin(w*tau)` with rational `c`
//! and nonnegative integer `p`, `w`. Terms are kept in a canonical form:
//! one entry per `(power, frequency, parity)` key, no zero coefficients, and
//! no `sin(0*tau)` terms. Two polynomials are equal iff their term maps are.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::rational::{self, Rational};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TrigPolyError {
    #[error("duhamel integral needs a positive frequency")]
    ZeroFrequency,
    #[error("source contains a secular term of power {power}; use the general integration path")]
    SecularSource { power: u32 },
    #[error("cannot parse polynomial: {0}")]
    Parse(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Cos,
    Sin,
}

impl Parity {
    fn name(self) -> &'static str {
        match self {
            Parity::Cos => "cos",
            Parity::Sin => "sin",
        }
    }
}

/// Sort key of a monomial. Field order fixes the canonical ordering.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TermKey {
    pub power: u32,
    pub frequency: u32,
    pub parity: Parity,
}

impl TermKey {
    pub fn new(power: u32, frequency: u32, parity: Parity) -> Self {
        Self {
            power,
            frequency,
            parity,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrigTerm {
    pub power: u32,
    pub frequency: u32,
    pub parity: Parity,
    pub coeff: Rational,
}

/// Structured form of one term, used for JSON output and golden files.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRecord {
    pub power: u32,
    pub frequency: u32,
    pub parity: Parity,
    pub numerator: String,
    pub denominator: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SecularTrigPoly {
    terms: BTreeMap<TermKey, Rational>,
}

impl SecularTrigPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(0, 0, Parity::Cos, c)
    }

    /// `cos(w*tau)`
    pub fn cos(frequency: u32) -> Self {
        Self::monomial(0, frequency, Parity::Cos, Rational::one())
    }

    /// `sin(w*tau)`; zero for `w = 0`.
    pub fn sin(frequency: u32) -> Self {
        Self::monomial(0, frequency, Parity::Sin, Rational::one())
    }

    pub fn monomial(power: u32, frequency: u32, parity: Parity, coeff: Rational) -> Self {
        let mut p = Self::zero();
        p.add_term(TermKey::new(power, frequency, parity), coeff);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = TrigTerm>>(terms: I) -> Self {
        let mut p = Self::zero();
        for t in terms {
            p.add_term(TermKey::new(t.power, t.frequency, t.parity), t.coeff);
        }
        p
    }

    /// Accumulates `coeff` into the term at `key`, keeping the canonical form.
    fn add_term(&mut self, key: TermKey, coeff: Rational) {
        if coeff.is_zero() || (key.parity == Parity::Sin && key.frequency == 0) {
            return;
        }
        match self.terms.get_mut(&key) {
            Some(existing) => {
                *existing += coeff;
                if existing.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, coeff);
            }
        }
    }

    /// Adds `coeff * tau^power * cos(freq*tau)` for a signed frequency.
    fn add_cos_signed(&mut self, power: u32, freq: i64, coeff: Rational) {
        self.add_term(
            TermKey::new(power, freq.unsigned_abs() as u32, Parity::Cos),
            coeff,
        );
    }

    /// Adds `coeff * tau^power * sin(freq*tau)` for a signed frequency.
    fn add_sin_signed(&mut self, power: u32, freq: i64, coeff: Rational) {
        let coeff = if freq < 0 { -coeff } else { coeff };
        self.add_term(
            TermKey::new(power, freq.unsigned_abs() as u32, Parity::Sin),
            coeff,
        );
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&TermKey, &Rational)> {
        self.terms.iter()
    }

    pub fn terms(&self) -> Vec<TrigTerm> {
        self.terms
            .iter()
            .map(|(k, c)| TrigTerm {
                power: k.power,
                frequency: k.frequency,
                parity: k.parity,
                coeff: c.clone(),
            })
            .collect()
    }

    pub fn coeff(&self, power: u32, frequency: u32, parity: Parity) -> Rational {
        self.terms
            .get(&TermKey::new(power, frequency, parity))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn max_power(&self) -> u32 {
        self.terms.keys().map(|k| k.power).max().unwrap_or(0)
    }

    pub fn max_frequency(&self) -> u32 {
        self.terms.keys().map(|k| k.frequency).max().unwrap_or(0)
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        if factor.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(k, c)| (*k, c * factor)).collect(),
        }
    }

    /// All terms with `tau`-power at least one.
    pub fn secular_part(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| k.power >= 1)
                .map(|(k, c)| (*k, c.clone()))
                .collect(),
        }
    }

    pub fn periodic_part(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| k.power == 0)
                .map(|(k, c)| (*k, c.clone()))
                .collect(),
        }
    }

    pub fn is_periodic(&self) -> bool {
        self.terms.keys().all(|k| k.power == 0)
    }

    pub fn has_sine_terms(&self) -> bool {
        self.terms.keys().any(|k| k.parity == Parity::Sin)
    }

    /// Exact value at `tau = 0`.
    pub fn value_at_zero(&self) -> Rational {
        self.terms
            .iter()
            .filter(|(k, _)| k.power == 0 && k.parity == Parity::Cos)
            .fold(Rational::zero(), |acc, (_, c)| acc + c)
    }

    pub fn differentiate(&self) -> Self {
        let mut out = Self::zero();
        for (k, c) in &self.terms {
            let w = Rational::from_integer(BigInt::from(k.frequency));
            if k.power > 0 {
                let p = Rational::from_integer(BigInt::from(k.power));
                out.add_term(TermKey::new(k.power - 1, k.frequency, k.parity), c * p);
            }
            match k.parity {
                Parity::Cos => {
                    out.add_term(TermKey::new(k.power, k.frequency, Parity::Sin), -(c * &w))
                }
                Parity::Sin => {
                    out.add_term(TermKey::new(k.power, k.frequency, Parity::Cos), c * &w)
                }
            }
        }
        out
    }

    /// An antiderivative, chosen without integration constant.
    fn antiderivative(&self) -> Self {
        let mut out = Self::zero();
        for (k, c) in &self.terms {
            out += &antiderivative_of_monomial(k.power, k.frequency, k.parity).scale(c);
        }
        out
    }

    /// `u(tau) = int_0^tau sin(w (tau - s)) source(s) ds` for a periodic source.
    ///
    /// `u` solves `u'' + w^2 u = w * source` with `u(0) = u'(0) = 0`.
    pub fn duhamel(omega: u32, source: &Self) -> Result<Self, TrigPolyError> {
        if omega == 0 {
            return Err(TrigPolyError::ZeroFrequency);
        }
        if !source.is_periodic() {
            return Err(TrigPolyError::SecularSource {
                power: source.max_power(),
            });
        }
        Self::duhamel_general(omega, source)
    }

    /// Same integral as [`SecularTrigPoly::duhamel`] but accepts sources with
    /// secular terms, through repeated integration by parts.
    pub fn duhamel_general(omega: u32, source: &Self) -> Result<Self, TrigPolyError> {
        if omega == 0 {
            return Err(TrigPolyError::ZeroFrequency);
        }
        // sin(w(t-s)) = sin(wt)cos(ws) - cos(wt)sin(ws)
        let cos_w = Self::cos(omega);
        let sin_w = Self::sin(omega);
        let definite = |integrand: Self| {
            let anti = integrand.antiderivative();
            let at_zero = anti.value_at_zero();
            anti - Self::constant(at_zero)
        };
        let cos_part = definite(&cos_w * source);
        let sin_part = definite(&sin_w * source);
        Ok(&sin_w * &cos_part - &cos_w * &sin_part)
    }

    pub fn eval(&self, tau: f64) -> f64 {
        self.terms
            .iter()
            .map(|(k, c)| {
                let trig = match k.parity {
                    Parity::Cos => (k.frequency as f64 * tau).cos(),
                    Parity::Sin => (k.frequency as f64 * tau).sin(),
                };
                rational::to_f64(c) * tau.powi(k.power as i32) * trig
            })
            .sum()
    }

    pub fn to_records(&self) -> Vec<TermRecord> {
        self.terms
            .iter()
            .map(|(k, c)| TermRecord {
                power: k.power,
                frequency: k.frequency,
                parity: k.parity,
                numerator: c.numer().to_string(),
                denominator: c.denom().to_string(),
            })
            .collect()
    }

    pub fn from_records(records: &[TermRecord]) -> Result<Self, TrigPolyError> {
        let mut p = Self::zero();
        for r in records {
            let num: BigInt = r
                .numerator
                .parse()
                .map_err(|_| TrigPolyError::Parse(r.numerator.clone()))?;
            let den: BigInt = r
                .denominator
                .parse()
                .map_err(|_| TrigPolyError::Parse(r.denominator.clone()))?;
            if den.is_zero() {
                return Err(TrigPolyError::Parse("zero denominator".into()));
            }
            p.add_term(
                TermKey::new(r.power, r.frequency, r.parity),
                Rational::new(num, den),
            );
        }
        Ok(p)
    }
}

fn antiderivative_of_monomial(power: u32, frequency: u32, parity: Parity) -> SecularTrigPoly {
    use SecularTrigPoly as P;
    if frequency == 0 {
        return match parity {
            Parity::Cos => P::monomial(
                power + 1,
                0,
                Parity::Cos,
                Rational::new(BigInt::one(), BigInt::from(power + 1)),
            ),
            Parity::Sin => P::zero(),
        };
    }
    let inv_w = Rational::new(BigInt::one(), BigInt::from(frequency));
    let p_over_w = Rational::new(BigInt::from(power), BigInt::from(frequency));
    match parity {
        // int t^p cos(wt) = t^p sin(wt)/w - (p/w) int t^(p-1) sin(wt)
        Parity::Cos => {
            let mut out = P::monomial(power, frequency, Parity::Sin, inv_w);
            if power > 0 {
                out -=
                    &antiderivative_of_monomial(power - 1, frequency, Parity::Sin).scale(&p_over_w);
            }
            out
        }
        // int t^p sin(wt) = -t^p cos(wt)/w + (p/w) int t^(p-1) cos(wt)
        Parity::Sin => {
            let mut out = P::monomial(power, frequency, Parity::Cos, -inv_w);
            if power > 0 {
                out +=
                    &antiderivative_of_monomial(power - 1, frequency, Parity::Cos).scale(&p_over_w);
            }
            out
        }
    }
}

impl AddAssign<&SecularTrigPoly> for SecularTrigPoly {
    fn add_assign(&mut self, rhs: &SecularTrigPoly) {
        for (k, c) in &rhs.terms {
            self.add_term(*k, c.clone());
        }
    }
}

impl SubAssign<&SecularTrigPoly> for SecularTrigPoly {
    fn sub_assign(&mut self, rhs: &SecularTrigPoly) {
        for (k, c) in &rhs.terms {
            self.add_term(*k, -c.clone());
        }
    }
}

impl Add<&SecularTrigPoly> for &SecularTrigPoly {
    type Output = SecularTrigPoly;
    fn add(self, rhs: &SecularTrigPoly) -> SecularTrigPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for SecularTrigPoly {
    type Output = SecularTrigPoly;
    fn add(mut self, rhs: SecularTrigPoly) -> SecularTrigPoly {
        self += &rhs;
        self
    }
}

impl Sub<&SecularTrigPoly> for &SecularTrigPoly {
    type Output = SecularTrigPoly;
    fn sub(self, rhs: &SecularTrigPoly) -> SecularTrigPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for SecularTrigPoly {
    type Output = SecularTrigPoly;
    fn sub(mut self, rhs: SecularTrigPoly) -> SecularTrigPoly {
        self -= &rhs;
        self
    }
}

impl Neg for &SecularTrigPoly {
    type Output = SecularTrigPoly;
    fn neg(self) -> SecularTrigPoly {
        SecularTrigPoly {
            terms: self.terms.iter().map(|(k, c)| (*k, -c.clone())).collect(),
        }
    }
}

impl Neg for SecularTrigPoly {
    type Output = SecularTrigPoly;
    fn neg(self) -> SecularTrigPoly {
        -&self
    }
}

impl Mul<&SecularTrigPoly> for &SecularTrigPoly {
    type Output = SecularTrigPoly;

    fn mul(self, rhs: &SecularTrigPoly) -> SecularTrigPoly {
        let half = Rational::new(BigInt::one(), BigInt::from(2));
        let mut out = SecularTrigPoly::zero();
        for (ka, ca) in &self.terms {
            for (kb, cb) in &rhs.terms {
                let c = ca * cb * &half;
                let power = ka.power + kb.power;
                let a = ka.frequency as i64;
                let b = kb.frequency as i64;
                match (ka.parity, kb.parity) {
                    (Parity::Cos, Parity::Cos) => {
                        out.add_cos_signed(power, a - b, c.clone());
                        out.add_cos_signed(power, a + b, c);
                    }
                    (Parity::Sin, Parity::Sin) => {
                        out.add_cos_signed(power, a - b, c.clone());
                        out.add_cos_signed(power, a + b, -c);
                    }
                    (Parity::Sin, Parity::Cos) => {
                        out.add_sin_signed(power, a + b, c.clone());
                        out.add_sin_signed(power, a - b, c);
                    }
                    (Parity::Cos, Parity::Sin) => {
                        out.add_sin_signed(power, a + b, c.clone());
                        out.add_sin_signed(power, a - b, -c);
                    }
                }
            }
        }
        out
    }
}

impl Mul for SecularTrigPoly {
    type Output = SecularTrigPoly;
    fn mul(self, rhs: SecularTrigPoly) -> SecularTrigPoly {
        &self * &rhs
    }
}

/// Canonical text: `num/den * tau^p * cos(w*tau)` terms joined by `" + "`,
/// `"0"` for the zero polynomial.
impl fmt::Display for SecularTrigPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(k, c)| {
                format!(
                    "{}/{} * tau^{} * {}({}*tau)",
                    c.numer(),
                    c.denom(),
                    k.power,
                    k.parity.name(),
                    k.frequency
                )
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl FromStr for SecularTrigPoly {
    type Err = TrigPolyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "0" {
            return Ok(Self::zero());
        }
        let bad = || TrigPolyError::Parse(s.to_string());
        let mut p = Self::zero();
        for term in s.split(" + ") {
            let fields: Vec<&str> = term.split(" * ").collect();
            let [coeff, power, trig] = fields.as_slice() else {
                return Err(bad());
            };
            let coeff = rational::parse_rational(coeff).ok_or_else(bad)?;
            let power: u32 = power
                .strip_prefix("tau^")
                .and_then(|p| p.parse().ok())
                .ok_or_else(bad)?;
            let (parity, rest) = if let Some(rest) = trig.strip_prefix("cos(") {
                (Parity::Cos, rest)
            } else if let Some(rest) = trig.strip_prefix("sin(") {
                (Parity::Sin, rest)
            } else {
                return Err(bad());
            };
            let frequency: u32 = rest
                .strip_suffix("*tau)")
                .and_then(|w| w.parse().ok())
                .ok_or_else(bad)?;
            p.add_term(TermKey::new(power, frequency, parity), coeff);
        }
        Ok(p)
    }
}

/// Largest absolute coefficient, handy for diagnostics.
pub fn max_abs_coeff(p: &SecularTrigPoly) -> Rational {
    p.iter()
        .map(|(_, c)| c.abs())
        .fold(Rational::zero(), |a, b| if b > a { b } else { a })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};
    use std::f64::consts::PI;

    fn cos(w: u32) -> SecularTrigPoly {
        SecularTrigPoly::cos(w)
    }

    fn sin(w: u32) -> SecularTrigPoly {
        SecularTrigPoly::sin(w)
    }

    fn mono(p: u32, w: u32, parity: Parity, c: Rational) -> SecularTrigPoly {
        SecularTrigPoly::monomial(p, w, parity, c)
    }

    #[test]
    fn additive_inverse_and_identity() {
        assert!((cos(1) + -cos(1)).is_zero());
        let p = cos(3).scale(&rat(1, 32)) + cos(1).scale(&rat(-1, 32));
        assert_eq!(&p + &SecularTrigPoly::zero(), p);
    }

    #[test]
    fn table_shape_by_addition() {
        // (1/32)cos 3t - (1/32)cos t + f cos t with f = 5
        let p = cos(3).scale(&rat(1, 32)) + cos(1).scale(&rat(-1, 32)) + cos(1).scale(&int(5));
        assert_eq!(p.coeff(0, 1, Parity::Cos), rat(159, 32));
        assert_eq!(p.coeff(0, 3, Parity::Cos), rat(1, 32));
        assert_eq!(p.len(), 2);
    }

    #[test]
    fn products() {
        let sq = &cos(1) * &cos(1);
        assert_eq!(
            sq,
            SecularTrigPoly::constant(rat(1, 2)) + cos(2).scale(&rat(1, 2))
        );
        let cube = &sq * &cos(1);
        assert_eq!(cube, cos(1).scale(&rat(3, 4)) + cos(3).scale(&rat(1, 4)));
        assert_eq!(&sin(2) * &cos(2), sin(4).scale(&rat(1, 2)));
    }

    #[test]
    fn product_matches_pointwise_evaluation() {
        // brute-force check of the product-to-sum table on sin(2t)cos(2t)
        let prod = &sin(2) * &cos(2);
        for i in 0..50 {
            let t = 0.37 * i as f64 - 3.0;
            let lhs = (2.0 * t).sin() * (2.0 * t).cos();
            assert!((prod.eval(t) - lhs).abs() < 1e-14);
        }
    }

    #[test]
    fn sine_of_zero_frequency_is_dropped() {
        assert!(sin(0).is_zero());
        // sin(t) * sin(t) produces cos(0) terms only
        let p = &sin(1) * &sin(1);
        assert!(!p.has_sine_terms());
        // sin(t) cos(t) = sin(2t)/2, the sin(0) partner vanishes
        assert_eq!((&sin(1) * &cos(1)).len(), 1);
    }

    #[test]
    fn derivatives() {
        assert_eq!(cos(1).differentiate(), -sin(1));
        let t_sin = mono(1, 1, Parity::Sin, int(1));
        assert_eq!(
            t_sin.differentiate(),
            sin(1) + mono(1, 1, Parity::Cos, int(1))
        );
        // u = t sin t / 2 solves u'' + u = cos t
        let u = t_sin.scale(&rat(1, 2));
        assert_eq!(&u.differentiate().differentiate() + &u, cos(1));
    }

    #[test]
    fn duhamel_resonant_and_nonresonant() {
        let d = SecularTrigPoly::duhamel(1, &cos(1)).unwrap();
        assert_eq!(d, mono(1, 1, Parity::Sin, rat(1, 2)));

        let d = SecularTrigPoly::duhamel(1, &sin(1)).unwrap();
        assert_eq!(
            d,
            mono(1, 1, Parity::Cos, rat(-1, 2)) + sin(1).scale(&rat(1, 2))
        );

        let d = SecularTrigPoly::duhamel(1, &cos(3)).unwrap();
        assert_eq!(d, (cos(1) - cos(3)).scale(&rat(1, 8)));

        let src = &cos(3) * &(&cos(1) * &cos(1));
        let d = SecularTrigPoly::duhamel(3, &src).unwrap();
        let expected = cos(3).scale(&rat(-3, 64))
            + cos(1).scale(&rat(3, 32))
            + cos(5).scale(&rat(-3, 64))
            + mono(1, 3, Parity::Sin, rat(1, 4));
        assert_eq!(d, expected);
    }

    #[test]
    fn duhamel_constant_source() {
        // int_0^t sin(w(t-s)) ds = (1 - cos wt)/w
        let d = SecularTrigPoly::duhamel(2, &SecularTrigPoly::constant(int(1))).unwrap();
        assert_eq!(
            d,
            (SecularTrigPoly::constant(int(1)) - cos(2)).scale(&rat(1, 2))
        );
    }

    #[test]
    fn duhamel_rejects_bad_input() {
        assert_eq!(
            SecularTrigPoly::duhamel(0, &cos(1)),
            Err(TrigPolyError::ZeroFrequency)
        );
        let secular = mono(2, 1, Parity::Sin, int(1));
        assert_eq!(
            SecularTrigPoly::duhamel(1, &secular),
            Err(TrigPolyError::SecularSource { power: 2 })
        );
        assert!(SecularTrigPoly::duhamel_general(1, &secular).is_ok());
    }

    #[test]
    fn duhamel_general_on_secular_source() {
        let src = mono(1, 1, Parity::Sin, rat(1, 2)) + mono(2, 3, Parity::Cos, int(2));
        for w in 1..4 {
            let u = SecularTrigPoly::duhamel_general(w, &src).unwrap();
            let w2 = Rational::from_integer(BigInt::from(w * w));
            let w1 = Rational::from_integer(BigInt::from(w));
            let check = &u.differentiate().differentiate() + &u.scale(&w2);
            assert_eq!(check, src.scale(&w1));
            assert!(u.value_at_zero().is_zero());
            assert!(u.differentiate().value_at_zero().is_zero());
        }
    }

    #[test]
    fn secular_filter() {
        let p = mono(1, 1, Parity::Sin, rat(1, 2)) + cos(3);
        assert_eq!(p.secular_part(), mono(1, 1, Parity::Sin, rat(1, 2)));
        assert!(cos(1).secular_part().is_zero());
        assert!(!p.is_periodic());
        assert!(cos(1).is_periodic());
    }

    #[test]
    fn evaluation() {
        assert_eq!(cos(1).eval(0.0), 1.0);
        let p = mono(1, 1, Parity::Sin, rat(1, 2));
        assert!((p.eval(PI / 2.0) - PI / 4.0).abs() < 1e-15);
    }

    #[test]
    fn canonical_text() {
        let p = mono(1, 1, Parity::Sin, rat(1, 2)) + cos(3).scale(&rat(-1, 32));
        assert_eq!(
            p.to_string(),
            "-1/32 * tau^0 * cos(3*tau) + 1/2 * tau^1 * sin(1*tau)"
        );
        assert_eq!(p.to_string().parse::<SecularTrigPoly>().unwrap(), p);
        assert_eq!(SecularTrigPoly::zero().to_string(), "0");
        assert!("cos(t)".parse::<SecularTrigPoly>().is_err());
    }

    #[test]
    fn records_roundtrip() {
        let p = mono(2, 5, Parity::Cos, rat(-7, 3)) + sin(4);
        let recs = p.to_records();
        let r = recs.iter().find(|r| r.power == 2).unwrap();
        assert_eq!((r.numerator.as_str(), r.denominator.as_str()), ("-7", "3"));
        assert_eq!(SecularTrigPoly::from_records(&recs).unwrap(), p);
    }
}
