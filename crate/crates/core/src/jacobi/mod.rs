//! Fourier–Jacobi expansions: the series ring and the standard forms.

mod forms;
pub mod io;
mod series;

pub use forms::{
    eisenstein4, eta, fourier_coeff, lift_input, lift_input_cached, phi_m2_1, theta_even, theta_odd,
    weak_jacobi, LiftInputId, STANDARD_QPREC,
};
pub use series::Series;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum JacobiError {
    #[error("series division leaves a remainder")]
    NonExactDivision,
    #[error("division by the zero series")]
    ZeroDivisor,
    #[error("{form}: {slice} slice is {actual}, expected {expected}")]
    ConstructionMismatch { form: String, slice: String, expected: String, actual: String },
    #[error("coefficient f({n},{l}) needs q^{needed} but the series is trusted below q^{qprec}")]
    InsufficientPrecision { n: i64, l: i64, needed: i64, qprec: String },
    #[error("form has index {0}, expected 6")]
    IndexMismatch(String),
    #[error("non-integral coefficient {0}")]
    NonIntegral(String),
    #[error("unsupported parameter: {0}")]
    Unsupported(String),
    #[error("malformed series file: {0}")]
    Format(String),
}
