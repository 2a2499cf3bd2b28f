//! 4×4 symplectic matrices over `Q(√6)`.
//!
//! The symplectic form is `J = [[0, I₂], [−I₂, 0]]` and groups act on the
//! Siegel upper half-space by `Z ↦ (AZ + B)(CZ + D)⁻¹`.

mod action;
mod classify;
mod factor;
mod groups;
pub mod io;
mod sample;

pub use action::{act, catalog, fixed_relation_check, sample_point_on, HumbertRelation, SiegelPoint};
pub use classify::{charpoly_mod6_class, torsion_order, CharpolyClass};
pub use factor::{factorize_nat, FactorToken, FactorWord, LAMBDA_MU_BOUND};
pub use groups::{
    builtin, heis_t, heisenberg, in_group, is_symplectic, j, j1, j2, j_form, nu6, nu6_inv, p_prime, to_integer,
    to_rational, GroupId, BUILTIN_NAMES,
};
pub use sample::{sample_gamma_nat, sample_group_element, SampleGroup};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymplecticError {
    #[error("entry {0} has a √6 component where a rational is required")]
    IrrationalEntry(String),
    #[error("entry {0} is not an integer")]
    NonIntegral(String),
    #[error("matrix {0} is not in SL(2, Z)")]
    NonUnimodular(String),
    #[error("CZ + D is singular at the sample point")]
    SingularDenominator,
    #[error("not a point of the Siegel upper half-space")]
    NotInUpperHalfSpace,
    #[error("discriminant {0} is not an integer")]
    NonIntegerDiscriminant(String),
    #[error("no valid sample point on the relation after {0} attempts")]
    DegenerateRelation(usize),
    #[error("no group element found after {0} attempts")]
    SamplingExhausted(usize),
    #[error("factorization search exhausted: {0}")]
    SearchBudgetExceeded(String),
    #[error("matrix is not in {0}")]
    NotInGroup(String),
    #[error("unknown builtin matrix {0:?}")]
    UnknownBuiltin(String),
    #[error("unknown group {0:?}")]
    UnknownGroup(String),
    #[error("torsion order exceeds {0}")]
    NotFound(u32),
    #[error("matrix format: {0}")]
    Format(String),
}
