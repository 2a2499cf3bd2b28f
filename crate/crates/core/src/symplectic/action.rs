//! Siegel action on exact points and Humbert relations.

use std::fmt;

use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::groups::to_rational;
use super::SymplecticError;
use crate::algebra::rational::format_rational;
use crate::algebra::{GaussNum, Mat2};
use crate::{GaussMatrix2, Rational, SpMatrix};

/// `Z = [[τ₁, τ₂], [τ₂, τ₃]]` with `Im Z > 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SiegelPoint {
    pub t1: GaussNum,
    pub t2: GaussNum,
    pub t3: GaussNum,
}

impl SiegelPoint {
    pub fn new(t1: GaussNum, t2: GaussNum, t3: GaussNum) -> Result<Self, SymplecticError> {
        let p = SiegelPoint { t1, t2, t3 };
        if p.is_valid() {
            Ok(p)
        } else {
            Err(SymplecticError::NotInUpperHalfSpace)
        }
    }

    pub fn is_valid(&self) -> bool {
        self.t1.im.is_positive() && (&self.t1.im * &self.t3.im - &self.t2.im * &self.t2.im).is_positive()
    }

    fn matrix(&self) -> GaussMatrix2 {
        Mat2::new(self.t1.clone(), self.t2.clone(), self.t2.clone(), self.t3.clone())
    }
}

impl fmt::Display for SiegelPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.t1, self.t2, self.t3)
    }
}

fn block(m: &crate::algebra::Mat4<Rational>, r: usize, c: usize) -> GaussMatrix2 {
    let e = |i: usize, j: usize| GaussNum::real(m.0[r + i][c + j].clone());
    Mat2::new(e(0, 0), e(0, 1), e(1, 0), e(1, 1))
}

fn add2(x: &GaussMatrix2, y: &GaussMatrix2) -> GaussMatrix2 {
    let e = |i: usize, j: usize| x.0[i][j].clone() + y.0[i][j].clone();
    Mat2::new(e(0, 0), e(0, 1), e(1, 0), e(1, 1))
}

/// `(AZ + B)(CZ + D)⁻¹`, exactly.
pub fn act(m: &SpMatrix, z: &SiegelPoint) -> Result<SiegelPoint, SymplecticError> {
    let r = to_rational(m)?;
    let (a, b, c, d) = (block(&r, 0, 0), block(&r, 0, 2), block(&r, 2, 0), block(&r, 2, 2));
    let zm = z.matrix();
    let num = add2(&(&a * &zm), &b);
    let den = add2(&(&c * &zm), &d).inverse().ok_or(SymplecticError::SingularDenominator)?;
    let w = &num * &den;
    if w.0[0][1] != w.0[1][0] {
        return Err(SymplecticError::NotInUpperHalfSpace);
    }
    let [[t1, t2], [_, t3]] = w.0;
    SiegelPoint::new(t1, t2, t3)
}

/// `aτ₁ + bτ₂ + cτ₃ + d(τ₂² − τ₁τ₃) + e = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HumbertRelation {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub d: Rational,
    pub e: Rational,
}

impl HumbertRelation {
    pub fn new(a: i64, b: i64, c: i64, d: i64, e: i64) -> Self {
        let r = |v: i64| Rational::from_integer(v.into());
        HumbertRelation { a: r(a), b: r(b), c: r(c), d: r(d), e: r(e) }
    }

    /// `b² − 4ac − 4de`.
    pub fn discriminant(&self) -> Result<i64, SymplecticError> {
        let four = Rational::from_integer(4.into());
        let v = &self.b * &self.b - &four * &self.a * &self.c - &four * &self.d * &self.e;
        if !v.is_integer() {
            return Err(SymplecticError::NonIntegerDiscriminant(format_rational(&v)));
        }
        Ok(v.to_integer().try_into().map_err(|_| SymplecticError::NonIntegerDiscriminant(v.to_string()))?)
    }

    pub fn eval(&self, z: &SiegelPoint) -> GaussNum {
        let g = |x: &Rational| GaussNum::real(x.clone());
        let quad = z.t2.clone() * z.t2.clone() - z.t1.clone() * z.t3.clone();
        g(&self.a) * z.t1.clone() + g(&self.b) * z.t2.clone() + g(&self.c) * z.t3.clone() + g(&self.d) * quad + g(&self.e)
    }
}

impl fmt::Display for HumbertRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (c, name) in [(&self.a, "τ1"), (&self.b, "τ2"), (&self.c, "τ3"), (&self.d, "(τ2²−τ1τ3)"), (&self.e, "")] {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "−" } else if out.is_empty() { "" } else { "+" };
            let mag = c.abs();
            let coeff = if mag.is_one() && !name.is_empty() { String::new() } else { format_rational(&mag) };
            out.push_str(&format!("{sign}{coeff}{name}"));
        }
        write!(f, "{{{out}=0}}")
    }
}

/// The fixed loci of `ζ₀,…,ζ₄` (discriminants 1, 4, 1, 4, 4) and of `ζ[0,1;0]`.
pub fn catalog() -> Vec<(&'static str, HumbertRelation)> {
    vec![
        ("ZETA0", HumbertRelation::new(0, 1, 0, 0, 0)),
        ("ZETA1", HumbertRelation::new(6, -2, 0, 0, 0)),
        ("ZETA2", HumbertRelation::new(6, -7, 2, 0, 0)),
        ("ZETA3", HumbertRelation::new(0, 2, 1, 0, 0)),
        ("ZETA4", HumbertRelation::new(0, 2, 1, 0, -6)),
        ("ZETA_HEIS", HumbertRelation::new(0, 2, 0, 1, 0)),
    ]
}

fn small_rational<R: Rng>(rng: &mut R, lo: i64, hi: i64) -> Rational {
    let den: i64 = rng.gen_range(1..=8);
    let num: i64 = rng.gen_range(lo * den..=hi * den);
    Rational::new(num.into(), den.into())
}

/// Diagonal coordinates get a positive imaginary part, `τ₂` any sign.
fn sample_gauss<R: Rng>(rng: &mut R, diagonal: bool) -> GaussNum {
    let re = small_rational(rng, -3, 3);
    let mut im = small_rational(rng, if diagonal { 0 } else { -4 }, 4);
    if im.is_zero() {
        im = Rational::one();
    }
    GaussNum::new(re, im)
}

/// A random point of `ℍ₂` on the relation, solving it linearly for one
/// coordinate and rejecting points outside the upper half-space.
pub fn sample_point_on<R: Rng>(rel: &HumbertRelation, rng: &mut R) -> Result<SiegelPoint, SymplecticError> {
    const ATTEMPTS: usize = 1000;
    let g = |x: &Rational| GaussNum::real(x.clone());
    for _ in 0..ATTEMPTS {
        let p = if !rel.a.is_zero() || !rel.d.is_zero() {
            let (t2, t3) = (sample_gauss(rng, false), sample_gauss(rng, true));
            let lin = g(&rel.a) - g(&rel.d) * t3.clone();
            if lin.is_zero() {
                continue;
            }
            let rest = g(&rel.b) * t2.clone() + g(&rel.c) * t3.clone() + g(&rel.d) * t2.clone() * t2.clone() + g(&rel.e);
            SiegelPoint { t1: -rest / lin, t2, t3 }
        } else if !rel.c.is_zero() {
            let (t1, t2) = (sample_gauss(rng, true), sample_gauss(rng, false));
            let t3 = -(g(&rel.b) * t2.clone() + g(&rel.e)) / g(&rel.c);
            SiegelPoint { t1, t2, t3 }
        } else if !rel.b.is_zero() {
            let (t1, t3) = (sample_gauss(rng, true), sample_gauss(rng, true));
            SiegelPoint { t1, t2: -g(&rel.e) / g(&rel.b), t3 }
        } else {
            return Err(SymplecticError::DegenerateRelation(0));
        };
        if p.is_valid() {
            debug_assert!(rel.eval(&p).is_zero());
            return Ok(p);
        }
    }
    Err(SymplecticError::DegenerateRelation(ATTEMPTS))
}

/// True iff `M` fixes every sampled point of the relation.
pub fn fixed_relation_check(m: &SpMatrix, rel: &HumbertRelation, samples: usize, seed: u64) -> Result<bool, SymplecticError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let z = sample_point_on(rel, &mut rng)?;
        if act(m, &z)? != z {
            return Ok(false);
        }
    }
    Ok(true)
}
