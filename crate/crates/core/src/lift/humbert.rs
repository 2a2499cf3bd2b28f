use num_bigint::BigInt;
use num_traits::Zero;

use super::LiftError;
use crate::jacobi::{fourier_coeff, lift_input_cached, JacobiError, LiftInputId, STANDARD_QPREC};
use crate::{Exponent, IntSeries};

/// A Humbert surface `H_Δ(b)` with its `a = (b² − Δ)/24`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HumbertQuery {
    pub delta: i64,
    pub b: i64,
    pub a: i64,
}

impl HumbertQuery {
    /// `Δ = 4, b = 1` is replaced by the equivalent `b = 2`.
    pub fn new(delta: i64, b: i64) -> Result<Self, LiftError> {
        let b = if delta == 4 && b == 1 { 2 } else { b };
        let num = b * b - delta;
        if !matches!(delta, 1 | 4) || num % 24 != 0 {
            return Err(LiftError::InvalidQuery { delta, b });
        }
        Ok(HumbertQuery { delta, b, a: num / 24 })
    }

    /// Largest `d` with `d²Δ ≤ 36`; beyond it every term vanishes.
    pub fn d_max(&self) -> i64 {
        (1..).take_while(|d| d * d * self.delta <= 36).last().unwrap_or(0)
    }
}

/// `m_{Δ,b} = Σ_{d ≥ 1} f(d²a, db)` through the reduced coefficient lookup.
pub fn humbert_multiplicity_of(form: &IntSeries, delta: i64, b: i64) -> Result<BigInt, LiftError> {
    let hq = HumbertQuery::new(delta, b)?;
    let mut m = BigInt::zero();
    for d in 1..=hq.d_max() {
        m += fourier_coeff(form, d * d * hq.a, d * hq.b)?;
    }
    Ok(m)
}

pub fn humbert_multiplicity(id: LiftInputId, delta: i64, b: i64) -> Result<BigInt, LiftError> {
    let form = lift_input_cached(id, STANDARD_QPREC)?;
    humbert_multiplicity_of(&form, delta, b)
}

/// The same sum read straight from stored coefficients for `d = 1..6`,
/// without the `24n − l²` reduction. Needs `qprec > 36a`.
pub fn humbert_multiplicity_raw(form: &IntSeries, delta: i64, b: i64) -> Result<BigInt, LiftError> {
    let hq = HumbertQuery::new(delta, b)?;
    let mut m = BigInt::zero();
    for d in 1..=6i64 {
        let (n, l) = (d * d * hq.a, d * hq.b);
        let q = Exponent::from_integer(n);
        if q >= form.qprec() {
            return Err(JacobiError::InsufficientPrecision { n, l, needed: n, qprec: form.qprec().to_string() }.into());
        }
        m += form.coeff(q, Exponent::from_integer(l));
    }
    Ok(m)
}
