//! Truncated Borcherds products in `q, r, s`.
//!
//! Truncation is by the weighted degree `qexp + sexp`. Every factor
//! `1 − qⁿ r^l s^{6m}` other than the pure `r` ones has positive degree
//! `n + 6m`, so all factors of degree at least the remaining room can be
//! dropped without affecting the trusted range.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use super::{leading_exponents_of, LiftError};
use crate::algebra::linalg;
use crate::algebra::rational::format_exponent;
use crate::jacobi::{lift_input_cached, LiftInputId, STANDARD_QPREC};
use crate::{Exponent, IntSeries};

/// Weighted-degree bound used by default: covers every monomial with
/// `qexp ≤ A + 2` and `sexp ≤ C + 6` for all three lifts.
pub const DEFAULT_BOUND: i64 = 14;

type Key = (Exponent, Exponent, Exponent);

/// Truncated three-variable expansion, trusted for `qexp + sexp < bound`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TripleSeries {
    coeffs: BTreeMap<Key, BigInt>,
    bound: Exponent,
}

fn degree(k: &Key) -> Exponent {
    k.0 + k.2
}

impl TripleSeries {
    pub fn new(coeffs: BTreeMap<Key, BigInt>, bound: Exponent) -> Self {
        let mut s = TripleSeries { coeffs, bound };
        s.coeffs.retain(|k, c| !c.is_zero() && degree(k) < bound);
        s
    }

    pub fn bound(&self) -> Exponent {
        self.bound
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, q: Exponent, r: Exponent, s: Exponent) -> BigInt {
        self.coeffs.get(&(q, r, s)).cloned().unwrap_or_default()
    }

    /// Terms in lexicographic order of `(qexp, rexp, sexp)`.
    pub fn iter(&self) -> impl Iterator<Item = (&Key, &BigInt)> {
        self.coeffs.iter()
    }

    pub fn min_degree(&self) -> Option<Exponent> {
        self.coeffs.keys().map(degree).min()
    }

    /// Smallest q-exponent and smallest s-exponent occurring.
    pub fn min_q_s(&self) -> Option<(Exponent, Exponent)> {
        let q = self.coeffs.keys().map(|k| k.0).min()?;
        let s = self.coeffs.keys().map(|k| k.2).min()?;
        Some((q, s))
    }

    pub fn truncate(&self, bound: Exponent) -> Self {
        TripleSeries::new(self.coeffs.clone(), bound.min(self.bound))
    }

    /// Product with trusted bound `min(b₁ + d₂, b₂ + d₁)`, `dᵢ` the minimal degrees.
    pub fn mul(&self, o: &Self) -> Self {
        let d1 = self.min_degree().unwrap_or(self.bound);
        let d2 = o.min_degree().unwrap_or(o.bound);
        let bound = (self.bound + d2).min(o.bound + d1);
        let mut out: BTreeMap<Key, BigInt> = BTreeMap::new();
        for (ka, ca) in &self.coeffs {
            for (kb, cb) in &o.coeffs {
                let k = (ka.0 + kb.0, ka.1 + kb.1, ka.2 + kb.2);
                if degree(&k) < bound {
                    *out.entry(k).or_default() += ca * cb;
                }
            }
        }
        TripleSeries::new(out, bound)
    }

    /// Multiplies by `(1 − x)^e` with `x = q^n r^l s^{6m}`, expanding the
    /// generalised binomial series up to the bound.
    fn mul_power(&mut self, x: Key, e: &BigInt) {
        let dx = degree(&x);
        let mut add: BTreeMap<Key, BigInt> = BTreeMap::new();
        for (k, c) in &self.coeffs {
            // c_j = (−1)^j binom(e, j), built incrementally
            let mut cj = BigInt::one();
            let mut j = 0i64;
            loop {
                let deg = degree(k) + dx * (j + 1);
                if dx.is_zero() && j + 1 > e.to_i64().unwrap_or(0) {
                    break;
                }
                if !dx.is_zero() && deg >= self.bound {
                    break;
                }
                cj = -(cj * (e - BigInt::from(j))) / BigInt::from(j + 1);
                j += 1;
                if cj.is_zero() {
                    break;
                }
                let jj = Exponent::from_integer(j);
                let key = (k.0 + x.0 * jj, k.1 + x.1 * jj, k.2 + x.2 * jj);
                *add.entry(key).or_default() += &cj * c;
            }
        }
        for (k, v) in add {
            *self.coeffs.entry(k).or_default() += v;
        }
        self.coeffs.retain(|_, c| !c.is_zero());
    }

    /// Versioned JSON export, coefficients sorted by `(q, r, s)`.
    pub fn to_json(&self, form: &str) -> Value {
        let coeffs: Vec<Value> = self
            .coeffs
            .iter()
            .map(|(k, c)| json!([format_exponent(k.0), format_exponent(k.1), format_exponent(k.2), c.to_string()]))
            .collect();
        json!({"version": 1, "form": form, "bound": format_exponent(self.bound), "coeffs": coeffs})
    }
}

fn exponent_at(form: &IntSeries, n: i64) -> Result<Vec<(i64, BigInt)>, LiftError> {
    let q = Exponent::from_integer(n);
    if q >= form.qprec() {
        return Err(crate::jacobi::JacobiError::InsufficientPrecision {
            n,
            l: 0,
            needed: n,
            qprec: form.qprec().to_string(),
        }
        .into());
    }
    form.slice(q)
        .into_iter()
        .map(|(r, c)| {
            if r.is_integer() {
                Ok((r.to_integer(), c))
            } else {
                Err(LiftError::NonIntegerExponentData { n, l: 0, value: format!("r^{r}") })
            }
        })
        .collect()
}

/// `q^A r^B s^C Π_{(n,l,m)>0} (1 − qⁿ r^l s^{6m})^{f(nm,l)}` to weighted degree
/// below `bound`, where `(n,l,m) > 0` means `m > 0`, or `m = 0, n > 0`, or
/// `n = m = 0, l < 0`.
pub fn exp_lift_truncated_of(form: &IntSeries, bound: Exponent) -> Result<TripleSeries, LiftError> {
    let lead = leading_exponents_of(form)?;
    let mut t = TripleSeries::new(BTreeMap::from([((lead.a, lead.b, lead.c), BigInt::one())]), bound);
    let room = bound - (lead.a + lead.c);
    if room <= Exponent::zero() {
        return Ok(TripleSeries::new(BTreeMap::new(), bound));
    }
    let ei = Exponent::from_integer;
    // pure r factors: finite only for nonnegative integer exponents
    for (l, e) in exponent_at(form, 0)? {
        if l < 0 && !e.is_zero() {
            if e.is_negative() {
                return Err(LiftError::InfiniteFactor { l, exponent: e.to_string() });
            }
            t.mul_power((Exponent::zero(), ei(l), Exponent::zero()), &e);
        }
    }
    let mut m = 0i64;
    while ei(6 * m) < room {
        let mut n = if m == 0 { 1 } else { 0 };
        while ei(n + 6 * m) < room {
            for (l, e) in exponent_at(form, n * m)? {
                if !e.is_zero() {
                    t.mul_power((ei(n), ei(l), ei(6 * m)), &e);
                }
            }
            n += 1;
        }
        m += 1;
    }
    Ok(t)
}

pub fn exp_lift_truncated(id: LiftInputId, bound: Exponent) -> Result<TripleSeries, LiftError> {
    exp_lift_truncated_of(&*lift_input_cached(id, STANDARD_QPREC)?, bound)
}

/// Rank over `Q` of the coefficient matrix on the union of monomials,
/// all series cut to their common trusted bound.
pub fn lift_rank(series: &[&TripleSeries]) -> usize {
    let Some(bound) = series.iter().map(|s| s.bound).min() else { return 0 };
    let cut: Vec<TripleSeries> = series.iter().map(|s| s.truncate(bound)).collect();
    let mut keys: Vec<Key> = cut.iter().flat_map(|s| s.coeffs.keys().copied()).collect();
    keys.sort();
    keys.dedup();
    let rows: Vec<Vec<BigInt>> = cut.iter().map(|s| keys.iter().map(|k| s.coeffs.get(k).cloned().unwrap_or_default()).collect()).collect();
    linalg::rank(&rows)
}
