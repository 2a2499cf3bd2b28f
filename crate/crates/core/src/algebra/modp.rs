use std::fmt;

use super::AlgebraError;

/// Residue list modulo an arbitrary `n ≥ 2`, lowest degree first, trailing
/// zeros stripped. No division is attempted over such rings.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ResiduePoly {
    pub n: u64,
    pub coeffs: Vec<u64>,
}

impl ResiduePoly {
    pub fn new(n: u64, coeffs: Vec<u64>) -> Self {
        let mut coeffs: Vec<u64> = coeffs.into_iter().map(|c| c % n).collect();
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        ResiduePoly { n, coeffs }
    }

    /// Reduces signed integer coefficients.
    pub fn from_i64s(n: u64, c: &[i64]) -> Self {
        let m = n as i64;
        ResiduePoly::new(n, c.iter().map(|&v| v.rem_euclid(m) as u64).collect())
    }
}

impl fmt::Display for ResiduePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.coeffs.iter().map(u64::to_string).collect();
        write!(f, "[{}] mod {}", body.join(","), self.n)
    }
}

/// Polynomial over the prime field `F_p`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PolyModP {
    p: u64,
    coeffs: Vec<u64>,
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

impl PolyModP {
    pub fn new(p: u64, coeffs: &[i64]) -> Result<Self, AlgebraError> {
        if !is_prime(p) {
            return Err(AlgebraError::InvalidModulus(p));
        }
        let r = ResiduePoly::from_i64s(p, coeffs);
        Ok(PolyModP { p, coeffs: r.coeffs })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Remainder of Euclidean division by `d`.
    pub fn rem(&self, d: &PolyModP) -> Result<PolyModP, AlgebraError> {
        if self.p != d.p {
            return Err(AlgebraError::ModulusMismatch(d.p, self.p));
        }
        let lead = *d.coeffs.last().ok_or(AlgebraError::ZeroDivisor)?;
        let p = self.p;
        let inv = pow_mod(lead, p - 2, p);
        let dd = d.coeffs.len() - 1;
        let mut r = self.coeffs.clone();
        while r.len() > dd {
            let top = r.len() - 1;
            let factor = r[top] * inv % p;
            if factor != 0 {
                let shift = top - dd;
                for (i, &c) in d.coeffs.iter().enumerate() {
                    r[shift + i] = (r[shift + i] + p - factor * c % p) % p;
                }
            }
            r.pop();
        }
        while r.last() == Some(&0) {
            r.pop();
        }
        Ok(PolyModP { p, coeffs: r })
    }
}

/// Whether `divisor` divides `dividend` in `F_p[x]`.
pub fn poly_divides_mod_p(divisor: &PolyModP, dividend: &PolyModP) -> Result<bool, AlgebraError> {
    Ok(dividend.rem(divisor)?.is_zero())
}
