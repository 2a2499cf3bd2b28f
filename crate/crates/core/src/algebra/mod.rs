//! Exact scalars, polynomials and small dense linear algebra.

mod gauss;
pub mod linalg;
mod matrix;
mod modp;
mod poly;
mod quad;
pub mod rational;

pub use gauss::GaussNum;
pub use matrix::{Mat2, Mat4};
pub use modp::{poly_divides_mod_p, PolyModP, ResiduePoly};
pub use poly::{reduce_poly_mod, Poly};
pub use quad::QuadNum;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("polynomials live over different moduli ({0} vs {1})")]
    ModulusMismatch(u64, u64),
    #[error("division by the zero polynomial")]
    ZeroDivisor,
    #[error("coefficient {0} is not an integer")]
    NonIntegralCoefficient(String),
    #[error("modulus {0} is not allowed here")]
    InvalidModulus(u64),
    #[error("cannot parse rational from {0:?}")]
    Parse(String),
}
