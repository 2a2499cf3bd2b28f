//! Truncated Laurent series in `q` and `r` with rational exponents.
//!
//! Exponents are stored on a per-series integer lattice `(Z/qd) × (Z/rd)`, so
//! the inner loops add machine integers instead of reducing fractions. The
//! public surface speaks exact rationals only.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use num_traits::{One, Zero};

use super::JacobiError;
use crate::scalar::Coeff;
use crate::Exponent;

/// Truncated series `Σ c(a,b) q^a r^b`, trusted for `a < qprec`.
#[derive(Clone, PartialEq, Eq)]
pub struct Series<C> {
    qd: i64,
    rd: i64,
    terms: BTreeMap<(i64, i64), C>,
    qprec: Exponent,
    weight: Exponent,
    index: Exponent,
}

/// Smallest integer `n` with `n ≥ e·d`; lattice keys below it are trusted.
fn lattice_limit(e: Exponent, d: i64) -> i64 {
    (e * d).ceil().to_integer()
}

fn lift_key(k: i64, from: i64, to: i64) -> i64 {
    k * (to / from)
}

impl<C: Coeff> Series<C> {
    pub fn zero(qprec: Exponent, weight: Exponent, index: Exponent) -> Self {
        Series { qd: 1, rd: 1, terms: BTreeMap::new(), qprec, weight, index }
    }

    /// The constant 1, trusted up to `qprec`.
    pub fn one(qprec: Exponent) -> Self {
        Self::monomial(Exponent::zero(), Exponent::zero(), C::one(), qprec)
    }

    pub fn monomial(q: Exponent, r: Exponent, c: C, qprec: Exponent) -> Self {
        Self::from_terms([(q, r, c)], qprec, Exponent::zero(), Exponent::zero())
    }

    /// Builds a series from `(qexp, rexp, coeff)` triples. Repeated exponents
    /// accumulate; zero coefficients and terms at or past `qprec` are dropped.
    pub fn from_terms(
        terms: impl IntoIterator<Item = (Exponent, Exponent, C)>,
        qprec: Exponent,
        weight: Exponent,
        index: Exponent,
    ) -> Self {
        let terms: Vec<_> = terms.into_iter().filter(|t| t.0 < qprec).collect();
        let qd = terms.iter().fold(qprec.denom().to_owned(), |acc, t| acc.lcm(t.0.denom()));
        let rd = terms.iter().fold(1i64, |acc, t| acc.lcm(t.1.denom()));
        let mut map: BTreeMap<(i64, i64), C> = BTreeMap::new();
        for (q, r, c) in terms {
            let key = ((q * qd).to_integer(), (r * rd).to_integer());
            *map.entry(key).or_insert_with(C::zero) += &c;
        }
        map.retain(|_, c| !c.is_zero());
        let mut s = Series { qd, rd, terms: map, qprec, weight, index };
        s.normalize();
        s
    }

    fn from_lattice(
        qd: i64,
        rd: i64,
        mut terms: BTreeMap<(i64, i64), C>,
        qprec: Exponent,
        weight: Exponent,
        index: Exponent,
    ) -> Self {
        terms.retain(|_, c| !c.is_zero());
        let mut s = Series { qd, rd, terms, qprec, weight, index };
        s.normalize();
        s
    }

    /// Shrinks the lattice to the smallest denominators that still hold
    /// every stored exponent.
    fn normalize(&mut self) {
        let gq = self.terms.keys().fold(self.qd, |g, k| g.gcd(&k.0));
        let gr = self.terms.keys().fold(self.rd, |g, k| g.gcd(&k.1));
        if gq == 1 && gr == 1 {
            return;
        }
        let old = std::mem::take(&mut self.terms);
        self.terms = old.into_iter().map(|((q, r), c)| ((q / gq, r / gr), c)).collect();
        self.qd /= gq;
        self.rd /= gr;
    }

    fn relattice(&self, qd: i64, rd: i64) -> BTreeMap<(i64, i64), C> {
        if qd == self.qd && rd == self.rd {
            return self.terms.clone();
        }
        self.terms
            .iter()
            .map(|(&(q, r), c)| ((lift_key(q, self.qd, qd), lift_key(r, self.rd, rd)), c.clone()))
            .collect()
    }

    pub fn qprec(&self) -> Exponent {
        self.qprec
    }

    pub fn weight(&self) -> Exponent {
        self.weight
    }

    pub fn index(&self) -> Exponent {
        self.index
    }

    /// Replaces the weight/index bookkeeping.
    pub fn with_meta(mut self, weight: Exponent, index: Exponent) -> Self {
        self.weight = weight;
        self.index = index;
        self
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn key_of(&self, q: Exponent, r: Exponent) -> Option<(i64, i64)> {
        let (a, b) = (q * self.qd, r * self.rd);
        (a.is_integer() && b.is_integer()).then(|| (a.to_integer(), b.to_integer()))
    }

    /// Stored coefficient, or `None` when absent (zero).
    pub fn get(&self, q: Exponent, r: Exponent) -> Option<&C> {
        self.key_of(q, r).and_then(|k| self.terms.get(&k))
    }

    /// Coefficient of `q^q r^r`; zero when not stored.
    pub fn coeff(&self, q: Exponent, r: Exponent) -> C {
        self.get(q, r).cloned().unwrap_or_else(C::zero)
    }

    /// Terms in lexicographic order of `(qexp, rexp)`.
    pub fn iter(&self) -> impl Iterator<Item = (Exponent, Exponent, &C)> + '_ {
        let (qd, rd) = (self.qd, self.rd);
        self.terms
            .iter()
            .map(move |(&(q, r), c)| (Exponent::new(q, qd), Exponent::new(r, rd), c))
    }

    pub fn min_qexp(&self) -> Option<Exponent> {
        self.terms.keys().next().map(|k| Exponent::new(k.0, self.qd))
    }

    /// Distinct q-exponents carrying a nonzero term, ascending.
    pub fn q_levels(&self) -> Vec<Exponent> {
        let mut out: Vec<Exponent> = Vec::new();
        for &(q, _) in self.terms.keys() {
            let e = Exponent::new(q, self.qd);
            if out.last() != Some(&e) {
                out.push(e);
            }
        }
        out
    }

    /// The Laurent polynomial in `r` at `q^q`, ascending in `r`.
    pub fn slice(&self, q: Exponent) -> Vec<(Exponent, C)> {
        let Some((k, _)) = self.key_of(q, Exponent::zero()) else {
            return Vec::new();
        };
        self.terms
            .range((k, i64::MIN)..=(k, i64::MAX))
            .map(|(&(_, r), c)| (Exponent::new(r, self.rd), c.clone()))
            .collect()
    }

    /// Drops every term at or beyond `qprec` (which may only decrease).
    pub fn truncate(&self, qprec: Exponent) -> Self {
        let qprec = qprec.min(self.qprec);
        let mut s = self.clone();
        s.terms.retain(|k, _| Exponent::new(k.0, s.qd) < qprec);
        s.qprec = qprec;
        s.normalize();
        s
    }

    fn assert_compatible(&self, o: &Self) {
        assert!(
            self.weight == o.weight && self.index == o.index,
            "adding series of weight/index {}/{} and {}/{}",
            self.weight,
            self.index,
            o.weight,
            o.index
        );
    }

    pub fn add(&self, o: &Self) -> Self {
        self.assert_compatible(o);
        let (qd, rd) = (self.qd.lcm(&o.qd), self.rd.lcm(&o.rd));
        let mut terms = self.relattice(qd, rd);
        for ((q, r), c) in o.relattice(qd, rd) {
            *terms.entry((q, r)).or_insert_with(C::zero) += &c;
        }
        let qprec = self.qprec.min(o.qprec);
        terms.retain(|k, _| Exponent::new(k.0, qd) < qprec);
        Self::from_lattice(qd, rd, terms, qprec, self.weight, self.index)
    }

    pub fn neg(&self) -> Self {
        let mut s = self.clone();
        for c in s.terms.values_mut() {
            *c = -c.clone();
        }
        s
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn scale(&self, k: &C) -> Self {
        let mut s = self.clone();
        for c in s.terms.values_mut() {
            *c = c.mul_ref(k);
        }
        s.terms.retain(|_, c| !c.is_zero());
        s
    }

    /// Exact division of every coefficient by `k`.
    pub fn div_scalar(&self, k: &C) -> Result<Self, JacobiError> {
        let mut s = self.clone();
        for c in s.terms.values_mut() {
            *c = c.try_div(k).ok_or(JacobiError::NonExactDivision)?;
        }
        Ok(s)
    }

    fn min_or_prec(&self) -> Exponent {
        self.min_qexp().unwrap_or(self.qprec)
    }

    /// Grouped by q-level: `(q, [(r, c)])` on the given lattice.
    fn levels(terms: &BTreeMap<(i64, i64), C>) -> Vec<(i64, Vec<(i64, C)>)> {
        let mut out: Vec<(i64, Vec<(i64, C)>)> = Vec::new();
        for (&(q, r), c) in terms {
            match out.last_mut() {
                Some((lq, v)) if *lq == q => v.push((r, c.clone())),
                _ => out.push((q, vec![(r, c.clone())])),
            }
        }
        out
    }

    pub fn mul(&self, o: &Self) -> Self {
        let qprec = (self.qprec + o.min_or_prec()).min(o.qprec + self.min_or_prec());
        let (qd, rd) = (self.qd.lcm(&o.qd), self.rd.lcm(&o.rd));
        let limit = lattice_limit(qprec, qd);
        let a = Self::levels(&self.relattice(qd, rd));
        let b = Self::levels(&o.relattice(qd, rd));
        let mut acc: BTreeMap<(i64, i64), C> = BTreeMap::new();
        for (qa, sa) in &a {
            for (qb, sb) in &b {
                let q = qa + qb;
                if q >= limit {
                    break;
                }
                for (ra, ca) in sa {
                    for (rb, cb) in sb {
                        let p = ca.mul_ref(cb);
                        match acc.get_mut(&(q, ra + rb)) {
                            Some(slot) => *slot += &p,
                            None => {
                                acc.insert((q, ra + rb), p);
                            }
                        }
                    }
                }
            }
        }
        Self::from_lattice(qd, rd, acc, qprec, self.weight + o.weight, self.index + o.index)
    }

    /// `self^k` for `k ≥ 1`; `k = 0` gives 1 at the relative precision of `self`.
    pub fn pow(&self, k: u32) -> Self {
        if k == 0 {
            let rel = self.qprec - self.min_or_prec();
            return Self::one(rel);
        }
        let mut base = self.clone();
        let mut acc: Option<Self> = None;
        let mut e = k;
        loop {
            if e & 1 == 1 {
                acc = Some(match acc {
                    None => base.clone(),
                    Some(a) => a.mul(&base),
                });
            }
            e >>= 1;
            if e == 0 {
                break;
            }
            base = base.mul(&base);
        }
        acc.expect("k ≥ 1")
    }

    /// Exact quotient `self / o`, level by level in `q`.
    ///
    /// At each step the lowest q-slice of the remainder is divided, as a
    /// Laurent polynomial in `r`, by the lowest q-slice of `o`.
    pub fn exact_div(&self, o: &Self) -> Result<Self, JacobiError> {
        let beta = o.min_qexp().ok_or(JacobiError::ZeroDivisor)?;
        let alpha = self.min_or_prec();
        let qprec = (self.qprec - beta).min(o.qprec - beta + alpha - beta);
        let (qd, rd) = (self.qd.lcm(&o.qd), self.rd.lcm(&o.rd));
        let beta_k = (beta * qd).to_integer();
        // remainder levels at or beyond this never feed a trusted quotient term
        let rem_limit = lattice_limit(qprec + beta, qd);
        let blevels = Self::levels(&o.relattice(qd, rd));
        let (b0q, b0) = &blevels[0];
        debug_assert_eq!(*b0q, beta_k);
        let (b0_lo, b0_hi) = (b0[0].0, b0[b0.len() - 1].0);
        let b0_lead = &b0[b0.len() - 1].1;

        let mut rem = self.relattice(qd, rd);
        rem.retain(|k, _| k.0 < rem_limit);
        let mut quot: BTreeMap<(i64, i64), C> = BTreeMap::new();
        while let Some((&(e, _), _)) = rem.iter().next() {
            // pull out the lowest level
            let mut level: BTreeMap<i64, C> = BTreeMap::new();
            let keys: Vec<(i64, i64)> = rem.range((e, i64::MIN)..=(e, i64::MAX)).map(|(k, _)| *k).collect();
            for k in keys {
                let c = rem.remove(&k).expect("present");
                level.insert(k.1, c);
            }
            let lo = *level.keys().next().expect("nonempty");
            let mut qslice: Vec<(i64, C)> = Vec::new();
            while let Some((&top, ctop)) = level.iter().next_back() {
                let shift = top - b0_hi;
                if shift + b0_lo < lo {
                    return Err(JacobiError::NonExactDivision);
                }
                let c = ctop.try_div(b0_lead).ok_or(JacobiError::NonExactDivision)?;
                for (rb, cb) in b0 {
                    let k = shift + rb;
                    let p = c.mul_ref(cb);
                    let slot = level.entry(k).or_insert_with(C::zero);
                    *slot -= &p;
                    if slot.is_zero() {
                        level.remove(&k);
                    }
                }
                qslice.push((shift, c));
            }
            let qlevel = e - beta_k;
            for (qb, sb) in &blevels[1..] {
                let target = qlevel + qb;
                if target >= rem_limit {
                    break;
                }
                for (shift, c) in &qslice {
                    for (rb, cb) in sb {
                        let p = c.mul_ref(cb);
                        let key = (target, shift + rb);
                        let slot = rem.entry(key).or_insert_with(C::zero);
                        *slot -= &p;
                        if slot.is_zero() {
                            rem.remove(&key);
                        }
                    }
                }
            }
            for (shift, c) in qslice {
                quot.insert((qlevel, shift), c);
            }
        }
        Ok(Self::from_lattice(qd, rd, quot, qprec, self.weight - o.weight, self.index - o.index))
    }

    /// `self · (1 + c·q^a r^b)` for `a > 0`; precision is unchanged.
    pub fn mul_binomial(&self, a: Exponent, b: Exponent, c: &C) -> Self {
        let (qd, rd) = (self.qd.lcm(a.denom()), self.rd.lcm(b.denom()));
        let (ka, kb) = ((a * qd).to_integer(), (b * rd).to_integer());
        let limit = lattice_limit(self.qprec, qd);
        let mut terms = self.relattice(qd, rd);
        let shifted: Vec<((i64, i64), C)> = terms
            .iter()
            .filter(|(k, _)| k.0 + ka < limit)
            .map(|(k, v)| ((k.0 + ka, k.1 + kb), v.mul_ref(c)))
            .collect();
        for (k, v) in shifted {
            *terms.entry(k).or_insert_with(C::zero) += &v;
        }
        Self::from_lattice(qd, rd, terms, self.qprec, self.weight, self.index)
    }

    /// Same terms, converted coefficientwise into another ring.
    pub fn cast<D: Coeff>(&self, f: impl Fn(&C) -> D) -> Series<D> {
        let terms = self.terms.iter().map(|(k, c)| (*k, f(c))).collect();
        Series::from_lattice(self.qd, self.rd, terms, self.qprec, self.weight, self.index)
    }

    /// Converts coefficients, failing on the first one `f` rejects.
    pub fn try_map<D: Coeff, E>(&self, f: impl Fn(&C) -> Result<D, E>) -> Result<Series<D>, E> {
        let mut terms = BTreeMap::new();
        for (k, c) in &self.terms {
            terms.insert(*k, f(c)?);
        }
        Ok(Series::from_lattice(self.qd, self.rd, terms, self.qprec, self.weight, self.index))
    }

    /// Substitutes `r ↦ 1`, summing each q-slice.
    pub fn at_r_one(&self) -> Self {
        let mut terms: BTreeMap<(i64, i64), C> = BTreeMap::new();
        for (&(q, _), c) in &self.terms {
            *terms.entry((q, 0)).or_insert_with(C::zero) += c;
        }
        Self::from_lattice(self.qd, 1, terms, self.qprec, self.weight, Exponent::zero())
    }

    /// Every stored exponent is an integer.
    pub fn has_integral_exponents(&self) -> bool {
        self.qd == 1 && self.rd == 1
    }

    /// One q-level as an r-polynomial, e.g. `r^{±1}+4`.
    pub fn slice_pretty(&self, q: Exponent) -> String
    where
        C: fmt::Display,
    {
        format_slice(&self.slice(q))
    }

    /// Human-readable rendering, one parenthesised r-polynomial per q-level,
    /// with symmetric pairs collapsed to `r^{±l}`.
    pub fn to_pretty(&self) -> String
    where
        C: fmt::Display,
    {
        let mut parts = Vec::new();
        for q in self.q_levels() {
            let slice = self.slice(q);
            let poly = format_slice(&slice);
            let qpart = if q.is_zero() {
                String::new()
            } else if q.is_one() {
                "q".to_string()
            } else if q.is_integer() {
                format!("q^{}", q)
            } else {
                format!("q^{{{}}}", q)
            };
            parts.push(format!("{qpart}({poly})"));
        }
        let tail = if self.qprec.is_one() {
            "O(q)".to_string()
        } else if self.qprec.is_integer() {
            format!("O(q^{})", self.qprec)
        } else {
            format!("O(q^{{{}}})", self.qprec)
        };
        parts.push(tail);
        parts.join(" + ")
    }
}

fn format_r(r: Exponent, sym: bool) -> String {
    let pm = if sym { "±" } else { "" };
    if r.is_zero() {
        String::new()
    } else if sym && r.is_one() {
        "r^{±1}".to_string()
    } else if r.is_integer() && !sym {
        if r.is_one() {
            "r".to_string()
        } else {
            format!("r^{{{}}}", r)
        }
    } else {
        format!("r^{{{pm}{}}}", r)
    }
}

fn push_term<C: Coeff + fmt::Display>(out: &mut String, c: &C, mono: &str) {
    let s = c.to_string();
    let (neg, mag) = match s.strip_prefix('-') {
        Some(m) => (true, m.to_string()),
        None => (false, s),
    };
    if out.is_empty() {
        if neg {
            out.push('-');
        }
    } else {
        out.push(if neg { '-' } else { '+' });
    }
    if mono.is_empty() {
        out.push_str(&mag);
    } else if mag != "1" {
        out.push_str(&mag);
        out.push_str(mono);
    } else {
        out.push_str(mono);
    }
}

fn format_slice<C: Coeff + fmt::Display>(slice: &[(Exponent, C)]) -> String {
    let find = |r: Exponent| slice.iter().find(|t| t.0 == r).map(|t| &t.1);
    let symmetric = slice.iter().all(|(r, c)| find(-*r) == Some(c));
    let mut out = String::new();
    if symmetric {
        for (r, c) in slice.iter().rev().filter(|t| t.0 >= Exponent::zero()) {
            push_term(&mut out, c, &format_r(*r, !r.is_zero()));
        }
    } else {
        for (r, c) in slice.iter().rev() {
            push_term(&mut out, c, &format_r(*r, false));
        }
    }
    out
}

impl<C: Coeff + fmt::Display> fmt::Debug for Series<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Series[w={}, k={}] {}", self.weight, self.index, self.to_pretty())
    }
}
