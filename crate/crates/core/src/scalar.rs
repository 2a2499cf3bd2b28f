//! Scalar traits shared by the generic containers.
//!
//! Matrices, polynomials and series are written once against these traits and
//! instantiated at the concrete types listed in the crate root.

use std::fmt::Debug;
use std::ops::{AddAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::Rational;

/// A commutative ring with value semantics.
pub trait Ring:
    Clone + PartialEq + Debug + Zero + One + Neg<Output = Self> + Sub<Output = Self>
{
}

impl<T> Ring for T where
    T: Clone + PartialEq + Debug + Zero + One + Neg<Output = Self> + Sub<Output = Self>
{
}

/// A ring in which every nonzero element is invertible.
pub trait Field: Ring {
    fn inv(&self) -> Option<Self>;

    fn div_exact(&self, other: &Self) -> Option<Self> {
        other.inv().map(|i| self.clone() * i)
    }
}

impl Field for Rational {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }
}

impl Field for f64 {
    fn inv(&self) -> Option<Self> {
        if *self == 0.0 {
            None
        } else {
            Some(1.0 / self)
        }
    }
}

/// Coefficients of truncated series.
///
/// In-place accumulation by reference keeps the bignum inner loops free of
/// needless clones. `try_div` is exact division: `None` means the quotient
/// does not exist in the ring.
pub trait Coeff: Ring + Send + Sync + for<'a> AddAssign<&'a Self> + for<'a> SubAssign<&'a Self> {
    fn mul_ref(&self, other: &Self) -> Self;
    fn try_div(&self, other: &Self) -> Option<Self>;
    fn to_rational(&self) -> Rational;
    fn from_i64(v: i64) -> Self;
    fn from_bigint(v: &num_bigint::BigInt) -> Self;
}

impl Coeff for BigInt {
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }

    fn try_div(&self, other: &Self) -> Option<Self> {
        if other.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(other);
        r.is_zero().then_some(q)
    }

    fn to_rational(&self) -> Rational {
        Rational::from_integer(self.clone())
    }

    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }

    fn from_bigint(v: &BigInt) -> Self {
        v.clone()
    }
}

impl Coeff for Rational {
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }

    fn try_div(&self, other: &Self) -> Option<Self> {
        self.div_exact(other)
    }

    fn to_rational(&self) -> Rational {
        self.clone()
    }

    fn from_i64(v: i64) -> Self {
        Rational::from_integer(BigInt::from(v))
    }

    fn from_bigint(v: &BigInt) -> Self {
        Rational::from_integer(v.clone())
    }
}
