//! Helpers around `BigRational`, which is already kept in lowest terms with a
//! positive denominator.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use super::AlgebraError;
use crate::{Exponent, Rational};

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn exp_to_rational(e: Exponent) -> Rational {
    rat(*e.numer(), *e.denom())
}

pub fn rational_to_exp(r: &Rational) -> Option<Exponent> {
    Some(Exponent::new(r.numer().to_i64()?, r.denom().to_i64()?))
}

/// The integer value of `r`, if it is one.
pub fn as_integer(r: &Rational) -> Option<BigInt> {
    r.is_integer().then(|| r.numer().clone())
}

pub fn as_i64(r: &Rational) -> Option<i64> {
    as_integer(r)?.to_i64()
}

/// Parses `"n"`, `"-n"`, `"n/d"` or `"-n/d"`.
pub fn parse_rational(s: &str) -> Result<Rational, AlgebraError> {
    let bad = || AlgebraError::Parse(s.to_string());
    let t = s.trim();
    let (n, d) = match t.split_once('/') {
        Some((n, d)) => (n, d),
        None => (t, "1"),
    };
    let n: BigInt = n.trim().parse().map_err(|_| bad())?;
    let d: BigInt = d.trim().parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

/// Renders integers bare and everything else as `n/d`.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_exponent(s: &str) -> Result<Exponent, AlgebraError> {
    let r = parse_rational(s)?;
    rational_to_exp(&r).ok_or_else(|| AlgebraError::Parse(s.to_string()))
}

pub fn format_exponent(e: Exponent) -> String {
    format!("{}/{}", e.numer(), e.denom())
}
