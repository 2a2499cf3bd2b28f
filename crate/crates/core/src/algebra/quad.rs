use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::rational::format_rational;
use crate::scalar::Field;
use crate::Rational;

/// `a + b·√6` with rational `a`, `b`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct QuadNum {
    pub a: Rational,
    pub b: Rational,
}

impl QuadNum {
    pub fn new(a: Rational, b: Rational) -> Self {
        QuadNum { a, b }
    }

    pub fn rational(a: Rational) -> Self {
        QuadNum { a, b: Rational::zero() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::rational(super::rational::int(n))
    }

    /// `√6` itself.
    pub fn sqrt6() -> Self {
        QuadNum { a: Rational::zero(), b: Rational::one() }
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        self.is_rational().then_some(&self.a)
    }

    pub fn conj(&self) -> Self {
        QuadNum { a: self.a.clone(), b: -self.b.clone() }
    }

    /// Field norm `a² − 6b²`.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - Rational::from_integer(6.into()) * &self.b * &self.b
    }
}

impl fmt::Display for QuadNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", format_rational(&self.a));
        }
        let mag = self.b.abs();
        let coeff = if mag.is_one() { String::new() } else { format_rational(&mag) };
        let sign = if self.b.is_negative() { "-" } else { "+" };
        if self.a.is_zero() {
            return write!(f, "{}{coeff}√6", if self.b.is_negative() { "-" } else { "" });
        }
        write!(f, "{}{sign}{coeff}√6", format_rational(&self.a))
    }
}

impl Add for QuadNum {
    type Output = QuadNum;
    fn add(self, o: QuadNum) -> QuadNum {
        QuadNum { a: self.a + o.a, b: self.b + o.b }
    }
}

impl Sub for QuadNum {
    type Output = QuadNum;
    fn sub(self, o: QuadNum) -> QuadNum {
        QuadNum { a: self.a - o.a, b: self.b - o.b }
    }
}

impl Mul for QuadNum {
    type Output = QuadNum;
    fn mul(self, o: QuadNum) -> QuadNum {
        let six = Rational::from_integer(6.into());
        QuadNum {
            a: &self.a * &o.a + six * &self.b * &o.b,
            b: &self.a * &o.b + &self.b * &o.a,
        }
    }
}

impl Neg for QuadNum {
    type Output = QuadNum;
    fn neg(self) -> QuadNum {
        QuadNum { a: -self.a, b: -self.b }
    }
}

impl Div for QuadNum {
    type Output = QuadNum;
    fn div(self, o: QuadNum) -> QuadNum {
        self.div_exact(&o).expect("division by zero in Q(√6)")
    }
}

impl Zero for QuadNum {
    fn zero() -> Self {
        QuadNum::default()
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for QuadNum {
    fn one() -> Self {
        QuadNum::rational(Rational::one())
    }
}

impl Field for QuadNum {
    fn inv(&self) -> Option<Self> {
        let n = self.norm();
        // √6 is irrational, so the norm vanishes only at zero.
        if n.is_zero() {
            return None;
        }
        let c = self.conj();
        Some(QuadNum { a: c.a / &n, b: c.b / n })
    }
}

impl From<Rational> for QuadNum {
    fn from(r: Rational) -> Self {
        QuadNum::rational(r)
    }
}
