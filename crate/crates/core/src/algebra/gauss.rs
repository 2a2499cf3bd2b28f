use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::rational::format_rational;
use crate::scalar::Field;
use crate::Rational;

/// Gaussian rational `re + i·im`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct GaussNum {
    pub re: Rational,
    pub im: Rational,
}

impl GaussNum {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussNum { re, im }
    }

    pub fn real(re: Rational) -> Self {
        GaussNum { re, im: Rational::zero() }
    }

    pub fn conj(&self) -> Self {
        GaussNum { re: self.re.clone(), im: -self.im.clone() }
    }

    pub fn abs_sq(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }
}

impl fmt::Display for GaussNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.im.is_negative() { "-" } else { "+" };
        write!(f, "{}{}{}i", format_rational(&self.re), sign, format_rational(&self.im.abs()))
    }
}

impl Add for GaussNum {
    type Output = GaussNum;
    fn add(self, o: GaussNum) -> GaussNum {
        GaussNum { re: self.re + o.re, im: self.im + o.im }
    }
}

impl Sub for GaussNum {
    type Output = GaussNum;
    fn sub(self, o: GaussNum) -> GaussNum {
        GaussNum { re: self.re - o.re, im: self.im - o.im }
    }
}

impl Mul for GaussNum {
    type Output = GaussNum;
    fn mul(self, o: GaussNum) -> GaussNum {
        GaussNum {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }
}

impl Neg for GaussNum {
    type Output = GaussNum;
    fn neg(self) -> GaussNum {
        GaussNum { re: -self.re, im: -self.im }
    }
}

impl Div for GaussNum {
    type Output = GaussNum;
    fn div(self, o: GaussNum) -> GaussNum {
        self.div_exact(&o).expect("division by zero in Q(i)")
    }
}

impl Zero for GaussNum {
    fn zero() -> Self {
        GaussNum::default()
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussNum {
    fn one() -> Self {
        GaussNum::real(Rational::one())
    }
}

impl Field for GaussNum {
    fn inv(&self) -> Option<Self> {
        let n = self.abs_sq();
        if n.is_zero() {
            return None;
        }
        Some(GaussNum { re: &self.re / &n, im: -(&self.im / &n) })
    }
}
