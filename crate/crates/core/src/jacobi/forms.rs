//! Standard building blocks and the weak Jacobi forms of weight 0.
//!
//! Everything is built over the integers except `φ₀,₁`, whose theta
//! quotients need rational intermediate coefficients.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::Zero;

use super::{JacobiError, Series};
use crate::scalar::Coeff;
use crate::{Exponent, IntSeries, QRSeries, Rational};

/// Precision of cached standard forms.
pub const STANDARD_QPREC: i64 = 8;

fn ex(n: i64, d: i64) -> Exponent {
    Exponent::new(n, d)
}

fn ei(n: i64) -> Exponent {
    Exponent::from_integer(n)
}

/// Dedekind eta, `q^{1/24} Σ_k (−1)^k q^{k(3k−1)/2}`.
pub fn eta<C: Coeff>(qprec: Exponent) -> Series<C> {
    let mut terms = Vec::new();
    for sign in [1i64, -1] {
        let mut k = if sign == 1 { 0 } else { -1 };
        loop {
            let e = ex(1, 24) + ei(k * (3 * k - 1) / 2);
            if e >= qprec {
                break;
            }
            let c = if k % 2 == 0 { 1 } else { -1 };
            terms.push((e, Exponent::zero(), C::from_i64(c)));
            k += sign;
        }
    }
    Series::from_terms(terms, qprec, ex(1, 2), Exponent::zero())
}

/// Odd Jacobi theta at `z ↦ a·z` from the triple product
/// `q^{1/8}(r^{a/2} − r^{−a/2}) Π (1 − qⁿr^a)(1 − qⁿr^{−a})(1 − qⁿ)`.
pub fn theta_odd<C: Coeff>(a: i64, qprec: Exponent) -> Result<Series<C>, JacobiError> {
    if !(1..=3).contains(&a) {
        return Err(JacobiError::Unsupported(format!("theta_odd with a = {a}")));
    }
    let lead = ex(1, 8);
    let mut s = Series::from_terms(
        [(lead, ex(a, 2), C::one()), (lead, ex(-a, 2), -C::one())],
        qprec,
        ex(1, 2),
        ex(a * a, 2),
    );
    let minus = -C::one();
    let mut n = 1;
    while lead + ei(n) < qprec {
        s = s
            .mul_binomial(ei(n), ei(a), &minus)
            .mul_binomial(ei(n), ei(-a), &minus)
            .mul_binomial(ei(n), Exponent::zero(), &minus);
        n += 1;
    }
    Ok(s)
}

/// Even theta functions `θ₂, θ₃, θ₄`, as two-variable series or (with
/// `two_variable = false`) as theta constants.
pub fn theta_even<C: Coeff>(j: u8, two_variable: bool, qprec: Exponent) -> Result<Series<C>, JacobiError> {
    if !(2..=4).contains(&j) {
        return Err(JacobiError::Unsupported(format!("theta_{j}")));
    }
    let half = ex(1, 2);
    let index = if two_variable { half } else { Exponent::zero() };
    // ν²/2 < qprec forces |ν| < √(2·qprec)
    let k = (2.0 * (*qprec.numer() as f64) / (*qprec.denom() as f64)).max(0.0).sqrt() as i64 + 2;
    let mut terms = Vec::new();
    for m in -k..=k {
        let nu = if j == 2 { ex(2 * m + 1, 2) } else { ei(m) };
        let q = nu * nu * half;
        let sign = if j == 4 && m % 2 != 0 { -1 } else { 1 };
        let r = if two_variable { nu } else { Exponent::zero() };
        terms.push((q, r, C::from_i64(sign)));
    }
    Ok(Series::from_terms(terms, qprec, half, index))
}

fn sigma3(n: i64) -> i64 {
    (1..=n).filter(|d| n % d == 0).map(|d| d * d * d).sum()
}

/// `E₄ = 1 + 240 Σ σ₃(n) qⁿ`.
pub fn eisenstein4<C: Coeff>(qprec: Exponent) -> Series<C> {
    let mut terms = vec![(Exponent::zero(), Exponent::zero(), C::one())];
    let mut n = 1;
    while ei(n) < qprec {
        terms.push((ei(n), Exponent::zero(), C::from_i64(240 * sigma3(n))));
        n += 1;
    }
    Series::from_terms(terms, qprec, ei(4), Exponent::zero())
}

/// `φ₋₂,₁ = ϑ(τ,z)²/η⁶`, normalised so the `q⁰` slice is `r − 2 + r⁻¹`.
pub fn phi_m2_1<C: Coeff>(qprec: Exponent) -> Result<Series<C>, JacobiError> {
    let work = qprec + 1;
    let th = theta_odd::<C>(1, work)?;
    let e6 = eta::<C>(work).pow(6);
    Ok(th.pow(2).exact_div(&e6)?.truncate(qprec))
}

fn integral(s: &QRSeries) -> Result<IntSeries, JacobiError> {
    s.try_map(|c: &Rational| {
        if c.is_integer() {
            Ok(c.numer().clone())
        } else {
            Err(JacobiError::NonIntegral(c.to_string()))
        }
    })
}

fn phi01(work: Exponent) -> Result<IntSeries, JacobiError> {
    let mut acc: Option<QRSeries> = None;
    for j in [2, 3, 4] {
        let num = theta_even::<Rational>(j, true, work)?.pow(2);
        let den = theta_even::<Rational>(j, false, work)?.pow(2);
        let t = num.exact_div(&den)?;
        acc = Some(match acc {
            None => t,
            Some(a) => a.add(&t),
        });
    }
    let four = Rational::from_integer(4.into());
    integral(&acc.expect("three summands").scale(&four))
}

fn build_weak(k: u8, work: Exponent) -> Result<IntSeries, JacobiError> {
    match k {
        1 => phi01(work),
        2 => {
            let p1 = phi01(work)?;
            let pm = phi_m2_1::<BigInt>(work)?;
            let e4 = eisenstein4::<BigInt>(work);
            let diff = p1.pow(2).sub(&e4.mul(&pm.pow(2)));
            diff.div_scalar(&BigInt::from(24))
        }
        3 => {
            let t2 = theta_odd::<BigInt>(2, work)?;
            let t1 = theta_odd::<BigInt>(1, work)?;
            Ok(t2.exact_div(&t1)?.pow(2))
        }
        4 => {
            let t3 = theta_odd::<BigInt>(3, work)?;
            let t1 = theta_odd::<BigInt>(1, work)?;
            t3.exact_div(&t1)
        }
        _ => Err(JacobiError::Unsupported(format!("phi_0,{k}"))),
    }
}

/// Symmetric Laurent polynomial from `(l, c)` pairs with `l ≥ 0`.
fn sym(pairs: &[(i64, i64)]) -> Vec<(i64, i64)> {
    let mut v: Vec<(i64, i64)> = pairs.iter().flat_map(|&(l, c)| if l == 0 { vec![(0, c)] } else { vec![(-l, c), (l, c)] }).collect();
    v.sort();
    v
}

/// Printed `q⁰` and `q¹` slices each construction must reproduce.
fn golden(k: u8) -> [Vec<(i64, i64)>; 2] {
    match k {
        1 => [sym(&[(1, 1), (0, 10)]), sym(&[(2, 10), (1, -64), (0, 108)])],
        2 => [sym(&[(1, 1), (0, 4)]), sym(&[(3, 1), (2, -8), (1, -1), (0, 16)])],
        3 => [sym(&[(1, 1), (0, 2)]), sym(&[(3, -2), (2, -2), (1, 2), (0, 4)])],
        _ => [sym(&[(1, 1), (0, 1)]), sym(&[(4, -1), (3, -1), (1, 1), (0, 2)])],
    }
}

fn render(v: &[(i64, i64)]) -> String {
    let parts: Vec<String> = v.iter().map(|(l, c)| format!("{c}r^{l}")).collect();
    parts.join(" ")
}

fn check_golden(k: u8, s: &IntSeries) -> Result<(), JacobiError> {
    for (level, want) in golden(k).iter().enumerate() {
        if ei(level as i64) >= s.qprec() {
            continue;
        }
        let got: Vec<(i64, i64)> = s
            .slice(ei(level as i64))
            .into_iter()
            .map(|(r, c)| {
                let c: i64 = c.try_into().unwrap_or(i64::MAX);
                (if r.is_integer() { r.to_integer() } else { i64::MAX }, c)
            })
            .collect();
        if &got != want {
            return Err(JacobiError::ConstructionMismatch {
                form: format!("phi_0,{k}"),
                slice: format!("q^{level}"),
                expected: render(want),
                actual: render(&got),
            });
        }
    }
    Ok(())
}

/// `φ₀,k` for `k ∈ {1,2,3,4}`; weight 0, index `k`, integer coefficients.
///
/// Fails with `ConstructionMismatch` if the `q⁰`/`q¹` slices differ from the
/// known expansions.
pub fn weak_jacobi<C: Coeff>(k: u8, qprec: Exponent) -> Result<Series<C>, JacobiError> {
    let s = build_weak(k, qprec + 1)?.truncate(qprec);
    if !s.has_integral_exponents() {
        return Err(JacobiError::NonIntegral(format!("exponents of phi_0,{k}")));
    }
    check_golden(k, &s)?;
    Ok(s.cast(C::from_bigint))
}

/// The three weight-0 index-6 inputs of the exponential lifts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LiftInputId {
    /// `5φ₀,₃² − 4φ₀,₂φ₀,₄`
    Phi3,
    /// `φ₀,₃²`
    Phi3P,
    /// `3φ₀,₃² − 2φ₀,₂φ₀,₄`
    Phi3PP,
}

impl LiftInputId {
    pub const ALL: [LiftInputId; 3] = [LiftInputId::Phi3, LiftInputId::Phi3P, LiftInputId::Phi3PP];

    pub fn name(self) -> &'static str {
        match self {
            LiftInputId::Phi3 => "phi3",
            LiftInputId::Phi3P => "phi3p",
            LiftInputId::Phi3PP => "phi3pp",
        }
    }

    /// Name of the lifted form.
    pub fn lift_name(self) -> &'static str {
        match self {
            LiftInputId::Phi3 => "F3",
            LiftInputId::Phi3P => "F3p",
            LiftInputId::Phi3PP => "F3pp",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s.to_ascii_lowercase().as_str() {
            "phi3" | "f3" => Some(LiftInputId::Phi3),
            "phi3p" | "f3p" => Some(LiftInputId::Phi3P),
            "phi3pp" | "f3pp" => Some(LiftInputId::Phi3PP),
            _ => None,
        }
    }

    /// `(x, y)` with the form equal to `x·φ₀,₃² − y·φ₀,₂φ₀,₄`.
    fn mix(self) -> (i64, i64) {
        match self {
            LiftInputId::Phi3 => (5, 4),
            LiftInputId::Phi3P => (1, 0),
            LiftInputId::Phi3PP => (3, 2),
        }
    }
}

impl fmt::Display for LiftInputId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The named lift input at the given precision.
pub fn lift_input<C: Coeff>(id: LiftInputId, qprec: Exponent) -> Result<Series<C>, JacobiError> {
    let p3 = weak_jacobi::<BigInt>(3, qprec)?;
    let a = p3.pow(2);
    let (x, y) = id.mix();
    let s = if y == 0 {
        a.scale(&BigInt::from(x))
    } else {
        let b = weak_jacobi::<BigInt>(2, qprec)?.mul(&weak_jacobi::<BigInt>(4, qprec)?);
        a.scale(&BigInt::from(x)).sub(&b.scale(&BigInt::from(y)))
    };
    Ok(s.truncate(qprec).cast(C::from_bigint))
}

type Memo = Mutex<HashMap<(LiftInputId, i64), Arc<IntSeries>>>;

/// Process-wide write-once memo of integral lift inputs at integer precision.
pub fn lift_input_cached(id: LiftInputId, qprec: i64) -> Result<Arc<IntSeries>, JacobiError> {
    static MEMO: OnceLock<Memo> = OnceLock::new();
    let memo = MEMO.get_or_init(Default::default);
    if let Some(s) = memo.lock().expect("memo poisoned").get(&(id, qprec)) {
        return Ok(s.clone());
    }
    let s = Arc::new(lift_input::<BigInt>(id, ei(qprec))?);
    let mut m = memo.lock().expect("memo poisoned");
    Ok(m.entry((id, qprec)).or_insert(s).clone())
}

/// `f(n, l)` of an index-6 form, reduced to a stored coefficient via the
/// invariance under `24n − l²` and `l mod 12` up to sign.
pub fn fourier_coeff<C: Coeff>(form: &Series<C>, n: i64, l: i64) -> Result<C, JacobiError> {
    if form.index() != ei(6) {
        return Err(JacobiError::IndexMismatch(form.index().to_string()));
    }
    let mut lr = l.rem_euclid(12);
    if lr > 6 {
        lr -= 12;
    }
    let num = 24 * n - l * l + lr * lr;
    debug_assert_eq!(num % 24, 0);
    let nr = num / 24;
    if nr < 0 {
        return Ok(C::zero());
    }
    if ei(nr) >= form.qprec() {
        return Err(JacobiError::InsufficientPrecision { n, l, needed: nr, qprec: form.qprec().to_string() });
    }
    Ok(form.coeff(ei(nr), ei(lr)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn theta_two_support() {
        let t = theta_even::<BigInt>(2, true, ei(3)).unwrap();
        // (n + 1/2)²/2 < 3 for n + 1/2 ∈ {±1/2, ±3/2}
        assert_eq!(t.len(), 4);
        assert_eq!(t.coeff(ex(1, 8), ex(1, 2)), BigInt::one());
        assert_eq!(t.coeff(ex(1, 8), ex(-1, 2)), BigInt::one());
        assert_eq!(t.coeff(ex(9, 8), ex(3, 2)), BigInt::one());
    }

    #[test]
    fn sigma3_small() {
        assert_eq!((1..=5).map(sigma3).collect::<Vec<_>>(), vec![1, 9, 28, 73, 126]);
    }

    #[test]
    fn reduction_hits_zero_for_negative_norm() {
        let s = lift_input::<BigInt>(LiftInputId::Phi3, ei(2)).unwrap();
        assert!(fourier_coeff(&s, 0, 7).unwrap().is_zero());
        assert!(fourier_coeff(&s, -1, 0).unwrap().is_zero());
    }
}
