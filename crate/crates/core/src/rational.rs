//! Helpers around arbitrary-precision rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

/// Exact coefficient type used throughout the perturbation engine.
pub type Rational = BigRational;

/// Builds `num/den` from machine integers. Panics on a zero denominator.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// Parses `"n"`, `"-n"` or `"n/d"` into a reduced rational.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = den.parse().ok()?;
    if den.is_zero() {
        return None;
    }
    Some(Rational::new(num, den))
}

/// Lossy conversion for numerical evaluation.
pub fn to_f64(value: &Rational) -> f64 {
    value.to_f64().unwrap_or_else(|| {
        // numerator or denominator beyond f64 range: fall back to a scaled quotient
        let n = value.numer().to_f64().unwrap_or(f64::NAN);
        let d = value.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!(parse_rational("3/4"), Some(rat(3, 4)));
        assert_eq!(parse_rational("-6/8"), Some(rat(-3, 4)));
        assert_eq!(parse_rational(" 7 "), Some(int(7)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("x"), None);
    }

    #[test]
    fn display_is_reduced() {
        assert_eq!(rat(9, 128).to_string(), "9/128");
        assert_eq!(rat(4, 2).to_string(), "2");
        assert_eq!(rat(-3, 128).to_string(), "-3/128");
    }
}
