//! Canonical divisors of the three lifted forms on the compactified quotient.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::{cusp_vanishing_order, humbert_multiplicity_of, leading_exponents_of, Cusp, LiftError};
use crate::algebra::linalg;
use crate::jacobi::{lift_input_cached, LiftInputId, STANDARD_QPREC};
use crate::IntSeries;

/// Branch components (two over the discriminant-1 classes, five over the
/// discriminant-4 classes, three of those lying over one class) and the two
/// boundary classes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ComponentId {
    HZ0,
    HZ1,
    HZ1P,
    HZ1PP,
    HZ2,
    HZ3,
    HZ4,
    D1,
    D2,
}

impl ComponentId {
    pub const ALL: [ComponentId; 9] = [
        ComponentId::HZ0,
        ComponentId::HZ1,
        ComponentId::HZ1P,
        ComponentId::HZ1PP,
        ComponentId::HZ2,
        ComponentId::HZ3,
        ComponentId::HZ4,
        ComponentId::D1,
        ComponentId::D2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ComponentId::HZ0 => "HZ0",
            ComponentId::HZ1 => "HZ1",
            ComponentId::HZ1P => "HZ1P",
            ComponentId::HZ1PP => "HZ1PP",
            ComponentId::HZ2 => "HZ2",
            ComponentId::HZ3 => "HZ3",
            ComponentId::HZ4 => "HZ4",
            ComponentId::D1 => "D1",
            ComponentId::D2 => "D2",
        }
    }
}

impl fmt::Display for ComponentId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Formal integer combination of components; zero coefficients are not stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct DivisorRecord {
    pub coeffs: BTreeMap<ComponentId, i64>,
}

impl DivisorRecord {
    pub fn from_pairs(pairs: &[(ComponentId, i64)]) -> Self {
        let mut d = DivisorRecord::default();
        for &(c, v) in pairs {
            *d.coeffs.entry(c).or_default() += v;
        }
        d.coeffs.retain(|_, v| *v != 0);
        d
    }

    pub fn get(&self, c: ComponentId) -> i64 {
        self.coeffs.get(&c).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_effective(&self) -> bool {
        self.coeffs.values().all(|v| *v >= 0)
    }

    pub fn sub(&self, o: &Self) -> Self {
        let pairs: Vec<(ComponentId, i64)> = ComponentId::ALL.iter().map(|&c| (c, self.get(c) - o.get(c))).collect();
        DivisorRecord::from_pairs(&pairs)
    }

    fn vector(&self) -> Vec<i64> {
        ComponentId::ALL.iter().map(|&c| self.get(c)).collect()
    }
}

impl fmt::Display for DivisorRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (c, v) in &self.coeffs {
            let sign = if *v < 0 { "-" } else if out.is_empty() { "" } else { "+" };
            let mag = v.abs();
            if mag == 1 {
                out.push_str(&format!("{sign}{c}"));
            } else {
                out.push_str(&format!("{sign}{mag}{c}"));
            }
        }
        f.write_str(&out)
    }
}

/// Assembles `Div(ω)`: each branch component carries its Humbert
/// multiplicity minus one (every branching has order 2), each boundary class
/// its vanishing order minus one.
pub fn canonical_divisor_from(m11: i64, m15: i64, m42: i64, ord_d1: i64, ord_d2: i64) -> Result<DivisorRecord, LiftError> {
    use ComponentId::*;
    let raw = [
        (HZ0, m11 - 1),
        (HZ2, m15 - 1),
        (HZ1, m42 - 1),
        (HZ1P, m42 - 1),
        (HZ1PP, m42 - 1),
        (HZ3, m42 - 1),
        (HZ4, m42 - 1),
        (D1, ord_d1 - 1),
        (D2, ord_d2 - 1),
    ];
    if let Some((c, v)) = raw.iter().find(|(_, v)| *v < 0) {
        return Err(LiftError::NegativeCoefficient(c.to_string(), *v));
    }
    Ok(DivisorRecord::from_pairs(&raw))
}

fn small(v: BigInt) -> Result<i64, LiftError> {
    v.to_i64().ok_or(LiftError::NonIntegerExponentData { n: 0, l: 0, value: v.to_string() })
}

pub fn canonical_divisor(id: LiftInputId) -> Result<DivisorRecord, LiftError> {
    canonical_divisor_of(&*lift_input_cached(id, STANDARD_QPREC)?)
}

pub fn canonical_divisor_of(form: &IntSeries) -> Result<DivisorRecord, LiftError> {
    let lead = leading_exponents_of(form)?;
    canonical_divisor_from(
        small(humbert_multiplicity_of(form, 1, 1)?)?,
        small(humbert_multiplicity_of(form, 1, 5)?)?,
        small(humbert_multiplicity_of(form, 4, 2)?)?,
        cusp_vanishing_order(&lead, Cusp::D1)?,
        cusp_vanishing_order(&lead, Cusp::D2)?,
    )
}

/// Formal consequences of a list of canonical divisors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Relation {
    /// `Σ kᵢ·Div(ωᵢ) = 0` as formal sums, `kᵢ` indexed like the input.
    Identity(Vec<i64>),
    /// A combination of components linearly equivalent to zero, from the
    /// difference of two canonical divisors (content removed, first nonzero
    /// coefficient positive).
    Picard(DivisorRecord),
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Relation::Identity(k) => {
                let (lhs, rhs): (Vec<_>, Vec<_>) = k.iter().enumerate().filter(|(_, v)| **v != 0).partition(|(_, v)| **v > 0);
                let side = |v: Vec<(usize, &i64)>| {
                    let t: Vec<String> = v
                        .iter()
                        .map(|(i, c)| if c.abs() == 1 { format!("w{i}") } else { format!("{}w{i}", c.abs()) })
                        .collect();
                    if t.is_empty() { "0".to_string() } else { t.join("+") }
                };
                write!(f, "{} = {}", side(lhs), side(rhs))
            }
            Relation::Picard(d) => write!(f, "{d} ~ 0"),
        }
    }
}

/// Integer relations among the records, then one Picard relation per
/// distinct pairwise difference. A single record yields the zero relation
/// from comparing it with itself.
pub fn divisor_relations(records: &[DivisorRecord]) -> Vec<Relation> {
    let mut out = Vec::new();
    if records.len() > 1 {
        let rows: Vec<Vec<BigInt>> = (0..ComponentId::ALL.len())
            .map(|i| records.iter().map(|r| BigInt::from(r.vector()[i])).collect())
            .collect();
        for k in linalg::integer_kernel(&rows) {
            out.push(Relation::Identity(k.iter().map(|v| v.to_i64().expect("small")).collect()));
        }
    }
    let mut seen: Vec<DivisorRecord> = Vec::new();
    let pairs: Vec<(usize, usize)> = if records.len() == 1 {
        vec![(0, 0)]
    } else {
        (0..records.len()).flat_map(|i| (i + 1..records.len()).map(move |j| (i, j))).collect()
    };
    for (i, j) in pairs {
        let d = records[j].sub(&records[i]);
        let v: Vec<BigInt> = d.vector().into_iter().map(BigInt::from).collect();
        let v = linalg::normalize_content(v);
        let pairs: Vec<(ComponentId, i64)> =
            ComponentId::ALL.iter().zip(&v).map(|(&c, x)| (c, x.to_i64().expect("small"))).collect();
        let rel = DivisorRecord::from_pairs(&pairs);
        if !seen.contains(&rel) {
            seen.push(rel.clone());
            out.push(Relation::Picard(rel));
        }
    }
    if out.iter().all(|r| matches!(r, Relation::Identity(_))) && records.is_empty() {
        out.push(Relation::Picard(DivisorRecord::default()));
    }
    out.retain(|r| !matches!(r, Relation::Identity(k) if k.iter().all(Zero::is_zero)));
    out
}
