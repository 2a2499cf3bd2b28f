use std::fmt;

use num_integer::Integer;

use super::{LeadingExponents, LiftError};

/// The two classes of boundary divisors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Cusp {
    D1,
    D2,
}

impl Cusp {
    pub fn parse(s: &str) -> Option<Self> {
        match s.to_ascii_uppercase().as_str() {
            "D1" => Some(Cusp::D1),
            "D2" => Some(Cusp::D2),
            _ => None,
        }
    }
}

impl fmt::Display for Cusp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Cusp::D1 => "D1",
            Cusp::D2 => "D2",
        })
    }
}

/// `r = gcd(6, v₁, v₃)` for a primitive isotropic vector, and its class:
/// `r ∈ {1, 6}` give `D1`, `r ∈ {2, 3}` give `D2`.
pub fn cusp_invariant(v: [i64; 4]) -> Result<(i64, Cusp), LiftError> {
    if v.iter().fold(0i64, |g, x| g.gcd(x)) != 1 {
        return Err(LiftError::NonPrimitiveVector(v));
    }
    let r = 6i64.gcd(&v[0]).gcd(&v[2]);
    let class = if r == 1 || r == 6 { Cusp::D1 } else { Cusp::D2 };
    Ok((r, class))
}

/// Order of vanishing along a boundary class: `6A` in `t₁ = q^{1/6}` for
/// `D1`, the `s`-exponent `C` for `D2`.
pub fn cusp_vanishing_order(lead: &LeadingExponents, cusp: Cusp) -> Result<i64, LiftError> {
    let v = match cusp {
        Cusp::D1 => lead.a * 6,
        Cusp::D2 => lead.c,
    };
    if !v.is_integer() {
        return Err(LiftError::NonIntegerExponentData { n: 0, l: 0, value: v.to_string() });
    }
    Ok(v.to_integer())
}
