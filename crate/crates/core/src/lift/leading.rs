use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::LiftError;
use crate::jacobi::{lift_input_cached, LiftInputId, STANDARD_QPREC};
use crate::{Exponent, IntSeries};

/// Leading monomial `q^A r^B s^C` of an exponential lift.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LeadingExponents {
    pub a: Exponent,
    pub b: Exponent,
    pub c: Exponent,
}

/// `A = Σf(0,l)/24`, `B = ½Σ_{l>0} l·f(0,l)`, `C = ¼Σl²f(0,l)`.
///
/// For index 6 the second formula `C = (6/24)Σf(0,l)` is also evaluated; a
/// disagreement is an error rather than a choice.
pub fn leading_exponents_of(form: &IntSeries) -> Result<LeadingExponents, LiftError> {
    let (mut s0, mut s1, mut s2) = (BigInt::zero(), BigInt::zero(), BigInt::zero());
    for (r, c) in form.slice(Exponent::zero()) {
        let l = BigInt::from(r.to_integer());
        s0 += &c;
        if r > Exponent::zero() {
            s1 += &l * &c;
        }
        s2 += &l * &l * &c;
    }
    let small = |v: BigInt| {
        v.to_i64().ok_or(LiftError::NonIntegerExponentData { n: 0, l: 0, value: v.to_string() })
    };
    let (s0, s1, s2) = (small(s0)?, small(s1)?, small(s2)?);
    let a = Exponent::new(s0, 24);
    let c = Exponent::new(s2, 4);
    let linear = a * form.index();
    if c != linear {
        return Err(LiftError::ExponentFormulaDisagreement { quad: c.to_string(), linear: linear.to_string() });
    }
    Ok(LeadingExponents { a, b: Exponent::new(s1, 2), c })
}

pub fn leading_exponents(id: LiftInputId) -> Result<LeadingExponents, LiftError> {
    leading_exponents_of(&*lift_input_cached(id, STANDARD_QPREC)?)
}
