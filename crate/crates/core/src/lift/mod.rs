//! From index-6 Jacobi forms to Siegel data: Humbert multiplicities, the
//! truncated Borcherds product, cusp orders and canonical divisors.

mod cusp;
mod divisor;
mod humbert;
mod leading;
mod product;

pub use cusp::{cusp_invariant, cusp_vanishing_order, Cusp};
pub use divisor::{
    canonical_divisor, canonical_divisor_from, canonical_divisor_of, divisor_relations, ComponentId, DivisorRecord, Relation,
};
pub use humbert::{humbert_multiplicity, humbert_multiplicity_of, humbert_multiplicity_raw, HumbertQuery};
pub use leading::{leading_exponents, leading_exponents_of, LeadingExponents};
pub use product::{exp_lift_truncated, exp_lift_truncated_of, lift_rank, TripleSeries, DEFAULT_BOUND};

use thiserror::Error;

use crate::jacobi::JacobiError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LiftError {
    #[error(transparent)]
    Jacobi(#[from] JacobiError),
    #[error("no integer a with b² − 24a = Δ for Δ = {delta}, b = {b}")]
    InvalidQuery { delta: i64, b: i64 },
    #[error("exponent f({n},{l}) = {value} is not a usable integer")]
    NonIntegerExponentData { n: i64, l: i64, value: String },
    #[error("factor (1 − r^{l})^{exponent} has no finite expansion")]
    InfiniteFactor { l: i64, exponent: String },
    #[error("canonical divisor coefficient of {0} is negative ({1})")]
    NegativeCoefficient(String, i64),
    #[error("vector {0:?} is not primitive")]
    NonPrimitiveVector([i64; 4]),
    #[error("s-exponent formulas disagree: ¼Σl²f = {quad}, (t/24)Σf = {linear}")]
    ExponentFormulaDisagreement { quad: String, linear: String },
}
