//! Finite quotients of `SL(2, Z)` and the eta multiplier.

mod branch;
mod eta;
mod psl2;

pub use branch::{branch_component_count, BranchReport, ClassIndex, CLAIMED_COUNTS};
pub use eta::{
    character_trivial_at, character_triviality, dedekind_sum, eta_multiplier_sq, eta_multiplier_sq_checked,
    eta_multiplier_sq_numeric, sample_pm_gamma6, sample_sl2, ORACLE_MAX_ENTRY,
};
pub use psl2::{block_image, closure, enumerate_psl2, subgroup_index, PSL2Elt};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FiniteError {
    #[error("matrix {0} does not have determinant 1")]
    NotUnimodular(String),
    #[error("modulus must be positive")]
    InvalidModulus,
    #[error("formula gives exponent {formula} but the numerical value is {numeric} for {matrix}")]
    OracleDisagreement { matrix: String, formula: u8, numeric: String },
    #[error("numerical oracle is not applicable: {0}")]
    OracleOutOfRange(String),
    #[error("exhibited element {name} fails verification: {reason}")]
    BadWitness { name: String, reason: String },
    #[error(transparent)]
    Symplectic(#[from] crate::symplectic::SymplecticError),
}
