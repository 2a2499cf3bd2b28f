//! Exact computations on the moduli space of bilevel-6 abelian surfaces.
//!
//! The crate is organised in layers:
//!
//! * [`algebra`]: rationals, `Q(√6)`, Gaussian rationals, polynomials over
//!   `Z`, `Q` and `F_p`, small dense linear algebra.
//! * [`jacobi`]: truncated two-variable Fourier–Jacobi series and the weak
//!   Jacobi forms feeding the exponential lifts.
//! * [`lift`]: Humbert multiplicities, truncated Borcherds products, cusp
//!   orders and canonical divisors.
//! * [`symplectic`]: 4×4 symplectic matrices over `Q(√6)`, congruence group
//!   patterns, the Siegel action and a constructive factorization.
//! * [`finite`]: `PSL(2, Z/N)`, subgroup indices and the eta multiplier.
//!
//! Containers are generic over the scalar ([`Series<C>`](jacobi::Series),
//! [`Mat4<T>`](algebra::Mat4), [`Poly<T>`](algebra::Poly)); the aliases below
//! fix the instantiations used throughout.

pub mod algebra;
pub mod finite;
pub mod jacobi;
pub mod lift;
pub mod scalar;
pub mod symplectic;

/// Arbitrary precision integer.
pub type Integer = num_bigint::BigInt;
/// Arbitrary precision rational, always reduced.
pub type Rational = num_rational::BigRational;
/// Series exponents: small exact rationals.
pub type Exponent = num_rational::Ratio<i64>;

pub type IntPoly = algebra::Poly<Integer>;
pub type RatPoly = algebra::Poly<Rational>;
pub type QuadPoly = algebra::Poly<algebra::QuadNum>;
pub type SpMatrix = algebra::Mat4<algebra::QuadNum>;
pub type IntMatrix2 = algebra::Mat2<Integer>;
pub type GaussMatrix2 = algebra::Mat2<algebra::GaussNum>;
/// Series with rational coefficients; the general user-facing series type.
pub type QRSeries = jacobi::Series<Rational>;
/// Series with integer coefficients; the fast path for integral forms.
pub type IntSeries = jacobi::Series<Integer>;
