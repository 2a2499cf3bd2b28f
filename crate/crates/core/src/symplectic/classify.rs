use std::fmt;

use super::groups::to_integer;
use super::SymplecticError;
use crate::algebra::{reduce_poly_mod, ResiduePoly};
use crate::SpMatrix;

/// Reduction of `det(M − xI)` modulo 6.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CharpolyClass {
    /// `(1 − x)⁴`.
    Unipotent,
    /// `(1 − x²)²`.
    Zeta,
    Other,
}

impl CharpolyClass {
    pub fn residues(self) -> Option<ResiduePoly> {
        match self {
            CharpolyClass::Unipotent => Some(ResiduePoly::from_i64s(6, &[1, -4, 6, -4, 1])),
            CharpolyClass::Zeta => Some(ResiduePoly::from_i64s(6, &[1, 0, -2, 0, 1])),
            CharpolyClass::Other => None,
        }
    }
}

impl fmt::Display for CharpolyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CharpolyClass::Unipotent => "UNIPOTENT_CLASS",
            CharpolyClass::Zeta => "ZETA_CLASS",
            CharpolyClass::Other => "OTHER",
        })
    }
}

pub fn charpoly_mod6_class(m: &SpMatrix) -> Result<CharpolyClass, SymplecticError> {
    let cp = to_integer(m)?.charpoly();
    let r = reduce_poly_mod(&cp, 6).expect("6 is a valid modulus");
    for c in [CharpolyClass::Unipotent, CharpolyClass::Zeta] {
        if c.residues().as_ref() == Some(&r) {
            return Ok(c);
        }
    }
    Ok(CharpolyClass::Other)
}

/// Least `k ≤ max` with `Mᵏ = I`.
pub fn torsion_order(m: &SpMatrix, max: u32) -> Result<u32, SymplecticError> {
    let mut p = m.clone();
    for k in 1..=max {
        if p.is_identity() {
            return Ok(k);
        }
        p = &p * m;
    }
    Err(SymplecticError::NotFound(max))
}
