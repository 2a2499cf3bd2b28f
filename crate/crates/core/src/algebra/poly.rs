use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::{AlgebraError, QuadNum, ResiduePoly};
use crate::scalar::Ring;
use crate::{IntPoly, Rational};

/// Dense univariate polynomial, lowest degree first, trailing zeros stripped.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

impl<T: Ring> Poly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn constant(c: T) -> Self {
        Poly::new(vec![c])
    }

    /// The indeterminate `x`.
    pub fn x() -> Self {
        Poly::new(vec![T::zero(), T::one()])
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> Poly<U> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Poly::one(), |acc, _| acc * self.clone())
    }
}

impl<T: Ring> Add for Poly<T> {
    type Output = Poly<T>;
    fn add(self, o: Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }
}

impl<T: Ring> Sub for Poly<T> {
    type Output = Poly<T>;
    fn sub(self, o: Poly<T>) -> Poly<T> {
        self + (-o)
    }
}

impl<T: Ring> Neg for Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        Poly { coeffs: self.coeffs.into_iter().map(|c| -c).collect() }
    }
}

impl<T: Ring> Mul for Poly<T> {
    type Output = Poly<T>;
    fn mul(self, o: Poly<T>) -> Poly<T> {
        if self.coeffs.is_empty() || o.coeffs.is_empty() {
            return Poly::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(out)
    }
}

impl<T: Ring> Zero for Poly<T> {
    fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<T: Ring> One for Poly<T> {
    fn one() -> Self {
        Poly::constant(T::one())
    }
}

impl<T: Ring + fmt::Display> fmt::Display for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => format!("({c})"),
                1 => format!("({c})x"),
                _ => format!("({c})x^{i}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

impl IntPoly {
    pub fn from_i64s(c: &[i64]) -> Self {
        Poly::new(c.iter().map(|&v| BigInt::from(v)).collect())
    }

    /// Integer polynomial from one over Q(√6); fails on any non-integral coefficient.
    pub fn try_from_quad(p: &Poly<QuadNum>) -> Result<Self, AlgebraError> {
        let coeffs = p
            .coeffs()
            .iter()
            .map(|c| match c.as_rational() {
                Some(r) if r.is_integer() => Ok(r.numer().clone()),
                _ => Err(AlgebraError::NonIntegralCoefficient(c.to_string())),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Poly::new(coeffs))
    }

    pub fn try_from_rational(p: &Poly<Rational>) -> Result<Self, AlgebraError> {
        let coeffs = p
            .coeffs()
            .iter()
            .map(|r| {
                if r.is_integer() {
                    Ok(r.numer().clone())
                } else {
                    Err(AlgebraError::NonIntegralCoefficient(r.to_string()))
                }
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Poly::new(coeffs))
    }
}

/// Coefficientwise reduction into `[0, n)`.
pub fn reduce_poly_mod(f: &IntPoly, n: u64) -> Result<ResiduePoly, AlgebraError> {
    if n < 2 {
        return Err(AlgebraError::InvalidModulus(n));
    }
    let m = BigInt::from(n);
    let coeffs = f
        .coeffs()
        .iter()
        .map(|c| c.mod_floor(&m).to_u64().expect("residue fits"))
        .collect();
    Ok(ResiduePoly::new(n, coeffs))
}
