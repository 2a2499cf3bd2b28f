//! The multiplier of `η²`, a character of `SL(2, Z)` with values in the 12th
//! roots of unity: `η²(gτ) = e^{2πi·w(g)/12}·(cτ + d)·η²(τ)`.
//!
//! `w` is computed from Dedekind sums and cross-checked against a direct
//! high-precision evaluation of the product.

use astro_float::{BigFloat, Consts, RoundingMode};
use num_integer::Integer as _;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::FiniteError;
use crate::algebra::GaussNum;
use crate::{IntMatrix2, Integer, Rational};

/// Largest matrix entry the numerical oracle accepts; cost grows linearly.
pub const ORACLE_MAX_ENTRY: i64 = 2000;

/// `s(h, k)` for `k > 0`, `gcd(h, k) = 1`, by reciprocity.
pub fn dedekind_sum(h: &Integer, k: &Integer) -> Rational {
    assert!(k.is_positive(), "dedekind_sum needs k > 0");
    let mut acc = Rational::zero();
    let mut sign = Rational::one();
    let (mut h, mut k) = (h.mod_floor(k), k.clone());
    let quarter = Rational::new(1.into(), 4.into());
    let twelfth = Rational::new(1.into(), 12.into());
    while !h.is_zero() {
        // s(h,k) = (h/k + k/h + 1/(hk))/12 − 1/4 − s(k mod h, h)
        let hk = &h * &k;
        let term = (Rational::new(h.clone(), k.clone()) + Rational::new(k.clone(), h.clone()) + Rational::new(1.into(), hk))
            * twelfth.clone()
            - quarter.clone();
        acc += sign.clone() * term;
        sign = -sign;
        let next = k.mod_floor(&h);
        k = h;
        h = next;
    }
    acc
}

fn check_det(g: &IntMatrix2) -> Result<(), FiniteError> {
    if g.det().is_one() {
        Ok(())
    } else {
        Err(FiniteError::NotUnimodular(g.to_string()))
    }
}

fn mod12(v: &Integer) -> u8 {
    v.mod_floor(&Integer::from(12)).to_u8().expect("residue")
}

/// `w(g) mod 12` in closed form.
pub fn eta_multiplier_sq(g: &IntMatrix2) -> Result<u8, FiniteError> {
    check_det(g)?;
    let [[a, b], [c, d]] = &g.0;
    if c.is_zero() {
        // g = ±Tᵇ: η²(τ + b) = e^{2πib/12}η²(τ), and (cτ + d) = −1 for −I
        return Ok(if d.is_one() { mod12(b) } else { mod12(&(Integer::from(6) - b)) });
    }
    if c.is_negative() {
        let neg = IntMatrix2::new(-a.clone(), -b.clone(), -c.clone(), -d.clone());
        return Ok((eta_multiplier_sq(&neg)? + 6) % 12);
    }
    let w = Rational::new(a + d, c.clone()) - Rational::from_integer(12.into()) * dedekind_sum(d, c) - Rational::from_integer(3.into());
    assert!(w.is_integer(), "12·s(d,c) − (a+d)/c is integral for c > 0");
    Ok(mod12(&w.to_integer()))
}

#[derive(Clone)]
struct Cx {
    re: BigFloat,
    im: BigFloat,
}

struct Ctx {
    p: usize,
    rm: RoundingMode,
    cc: Consts,
}

impl Ctx {
    fn int(&self, v: i64) -> BigFloat {
        BigFloat::from_i64(v, self.p)
    }

    fn rational(&self, r: &Rational) -> BigFloat {
        let n = r.numer().to_i64().expect("oracle inputs are small");
        let d = r.denom().to_i64().expect("oracle inputs are small");
        self.int(n).div(&self.int(d), self.p, self.rm)
    }

    fn add(&self, x: &Cx, y: &Cx) -> Cx {
        Cx { re: x.re.add(&y.re, self.p, self.rm), im: x.im.add(&y.im, self.p, self.rm) }
    }

    fn sub(&self, x: &Cx, y: &Cx) -> Cx {
        Cx { re: x.re.sub(&y.re, self.p, self.rm), im: x.im.sub(&y.im, self.p, self.rm) }
    }

    fn mul(&self, x: &Cx, y: &Cx) -> Cx {
        let (p, rm) = (self.p, self.rm);
        let re = x.re.mul(&y.re, p, rm).sub(&x.im.mul(&y.im, p, rm), p, rm);
        let im = x.re.mul(&y.im, p, rm).add(&x.im.mul(&y.re, p, rm), p, rm);
        Cx { re, im }
    }

    fn abs_sq(&self, x: &Cx) -> BigFloat {
        let (p, rm) = (self.p, self.rm);
        x.re.mul(&x.re, p, rm).add(&x.im.mul(&x.im, p, rm), p, rm)
    }

    fn div(&self, x: &Cx, y: &Cx) -> Cx {
        let (p, rm) = (self.p, self.rm);
        let n = self.abs_sq(y);
        let conj = Cx { re: y.re.clone(), im: y.im.neg() };
        let t = self.mul(x, &conj);
        Cx { re: t.re.div(&n, p, rm), im: t.im.div(&n, p, rm) }
    }

    /// `e^{2πi·t}` for real rational `t`, reduced mod 1 first.
    fn unit(&mut self, t: &Rational) -> Cx {
        let frac = t - t.floor();
        let (p, rm) = (self.p, self.rm);
        let two_pi = self.cc.pi(p, rm).mul(&self.int(2), p, rm);
        let ang = two_pi.mul(&self.rational(&frac), p, rm);
        Cx { re: ang.cos(p, rm, &mut self.cc), im: ang.sin(p, rm, &mut self.cc) }
    }

    /// `e^{−2π·y}`.
    fn decay(&mut self, y: &Rational) -> BigFloat {
        let (p, rm) = (self.p, self.rm);
        let two_pi = self.cc.pi(p, rm).mul(&self.int(2), p, rm);
        two_pi.mul(&self.rational(y), p, rm).neg().exp(p, rm, &mut self.cc)
    }

    fn scale(&self, x: &Cx, s: &BigFloat) -> Cx {
        Cx { re: x.re.mul(s, self.p, self.rm), im: x.im.mul(s, self.p, self.rm) }
    }

    /// `e^{2πiτ·t}` for rational `t ≥ 0`.
    fn qpow(&mut self, tau: &GaussNum, t: &Rational) -> Cx {
        let u = self.unit(&(&tau.re * t));
        let s = self.decay(&(&tau.im * t));
        self.scale(&u, &s)
    }

    /// `η(τ)² = e^{2πiτ/12}·(Σ_k (−1)^k q^{k(3k−1)/2})²`.
    fn eta_sq(&mut self, tau: &GaussNum) -> Cx {
        let q = self.qpow(tau, &Rational::one());
        let q3 = self.mul(&self.mul(&q, &q), &q);
        let one = Cx { re: self.int(1), im: self.int(0) };
        // exponents needed: |q|^N < 2^{−p}
        let y = tau.im.to_f64().expect("finite");
        let n_max = (self.p as f64 * std::f64::consts::LN_2 / (2.0 * std::f64::consts::PI * y)).ceil() as i64 + 1;
        let mut sum = one.clone();
        // k ≥ 1: steps 3k+1 → q^{1}, q^{4}, …; k ≤ −1: steps 3m+2 → q^{2}, q^{5}, …
        for (first_step, exp0) in [(q.clone(), 1i64), (self.mul(&q, &q), 2i64)] {
            let mut step = first_step;
            let mut power = one.clone();
            let mut e = 0i64;
            let mut inc = exp0;
            let mut k = 1;
            while e + inc <= n_max {
                power = self.mul(&power, &step);
                e += inc;
                sum = if k % 2 == 1 { self.sub(&sum, &power) } else { self.add(&sum, &power) };
                step = self.mul(&step, &q3);
                inc += 3;
                k += 1;
            }
        }
        let pre = self.qpow(tau, &Rational::new(1.into(), 12.into()));
        self.mul(&pre, &self.mul(&sum, &sum))
    }
}

/// `w(g)` from a direct evaluation at `τ = −d/c + i/|c|` (or `τ = i` when
/// `c = 0`), rounded to the nearest 12th root of unity; rejected if the
/// distance exceeds `10⁻²⁰`.
pub fn eta_multiplier_sq_numeric(g: &IntMatrix2) -> Result<u8, FiniteError> {
    check_det(g)?;
    let small: Vec<i64> = g.0.iter().flatten().map(|x| x.to_i64().unwrap_or(i64::MAX)).collect();
    if small.iter().any(|v| v.abs() > ORACLE_MAX_ENTRY) {
        return Err(FiniteError::OracleOutOfRange(format!("entries of {g} exceed {ORACLE_MAX_ENTRY}")));
    }
    let [a, b, c, d] = [small[0], small[1], small[2], small[3]];
    let r = |n: i64, den: i64| Rational::new(n.into(), den.into());
    let tau = if c == 0 { GaussNum::new(r(0, 1), r(1, 1)) } else { GaussNum::new(r(-d, c), r(1, c.abs())) };
    let num = GaussNum::real(r(a, 1)) * tau.clone() + GaussNum::real(r(b, 1));
    let den = GaussNum::real(r(c, 1)) * tau.clone() + GaussNum::real(r(d, 1));
    let gtau = num / den.clone();
    let p = 192 + (c.unsigned_abs() as usize) / 2;
    let mut ctx = Ctx { p, rm: RoundingMode::ToEven, cc: Consts::new().expect("constants cache") };
    let lhs = ctx.eta_sq(&gtau);
    let rhs0 = ctx.eta_sq(&tau);
    let den_c = Cx { re: ctx.rational(&den.re), im: ctx.rational(&den.im) };
    let rhs = ctx.mul(&den_c, &rhs0);
    let ratio = ctx.div(&lhs, &rhs);
    let tol = BigFloat::from_f64(1e-40, p);
    let mut best: Option<(u8, BigFloat)> = None;
    for j in 0..12u8 {
        let w = ctx.unit(&r(j as i64, 12));
        let dist = ctx.abs_sq(&ctx.sub(&ratio, &w));
        if best.as_ref().map_or(true, |(_, bd)| dist.cmp(bd) == Some(-1)) {
            best = Some((j, dist));
        }
    }
    let (j, dist) = best.expect("twelve candidates");
    if dist.cmp(&tol) != Some(-1) {
        return Err(FiniteError::OracleDisagreement {
            matrix: g.to_string(),
            formula: eta_multiplier_sq(g)?,
            numeric: format!("{} + {}i", ratio.re, ratio.im),
        });
    }
    Ok(j)
}

/// Closed form, confirmed by the numerical oracle; any disagreement is an error.
pub fn eta_multiplier_sq_checked(g: &IntMatrix2) -> Result<u8, FiniteError> {
    let f = eta_multiplier_sq(g)?;
    let n = eta_multiplier_sq_numeric(g)?;
    if f != n {
        return Err(FiniteError::OracleDisagreement { matrix: g.to_string(), formula: f, numeric: n.to_string() });
    }
    Ok(f)
}

fn m2(a: i64, b: i64, c: i64, d: i64) -> IntMatrix2 {
    IntMatrix2::new(a.into(), b.into(), c.into(), d.into())
}

fn max_entry(g: &IntMatrix2) -> Integer {
    g.0.iter().flatten().map(|x| x.abs()).max().expect("four entries")
}

fn inverse(g: &IntMatrix2) -> IntMatrix2 {
    let [[a, b], [c, d]] = g.0.clone();
    IntMatrix2::new(d, -b, -c, a)
}

/// Random word of length `len` in `S`, `T`, `T⁻¹`, resampled until every
/// entry is at most `ORACLE_MAX_ENTRY`.
pub fn sample_sl2<R: Rng>(len: usize, rng: &mut R) -> IntMatrix2 {
    let gens = [m2(0, -1, 1, 0), m2(1, 1, 0, 1), m2(1, -1, 0, 1)];
    loop {
        let mut g = IntMatrix2::identity();
        for _ in 0..len {
            g = &g * &gens[rng.gen_range(0..gens.len())];
        }
        if max_entry(&g) <= Integer::from(ORACLE_MAX_ENTRY) {
            return g;
        }
    }
}

/// Random element of `±Γ(6)`: a product of one to three conjugates
/// `h·T^{±6}·h⁻¹`, `h·L^{±6}·h⁻¹` with short conjugators `h`, times `−I`
/// with probability one half. Validated by the congruence test.
pub fn sample_pm_gamma6<R: Rng>(rng: &mut R) -> IntMatrix2 {
    let elementary = [m2(1, 6, 0, 1), m2(1, -6, 0, 1), m2(1, 0, 6, 1), m2(1, 0, -6, 1)];
    let six = Integer::from(6);
    loop {
        let mut g = IntMatrix2::identity();
        for _ in 0..rng.gen_range(1..=3) {
            let h = sample_sl2(rng.gen_range(0..=3), rng);
            let e = &elementary[rng.gen_range(0..elementary.len())];
            g = &g * &(&(&h * e) * &inverse(&h));
        }
        if rng.gen_bool(0.5) {
            g = IntMatrix2::new(-g.0[0][0].clone(), -g.0[0][1].clone(), -g.0[1][0].clone(), -g.0[1][1].clone());
        }
        let sign = if g.0[0][0].mod_floor(&six).is_one() { Integer::one() } else { -Integer::one() };
        let congruent = (0..2).all(|i| (0..2).all(|j| {
            let want = if i == j { sign.clone() } else { Integer::zero() };
            (&g.0[i][j] - want).is_multiple_of(&six)
        }));
        if congruent && max_entry(&g) <= Integer::from(ORACLE_MAX_ENTRY) {
            return g;
        }
    }
}

/// `χ_D` at `g` through `η²`: trivial iff `w(g)·D/2 ≡ 0 mod 12`.
pub fn character_trivial_at(d: u32, g: &IntMatrix2) -> Result<bool, FiniteError> {
    if d % 2 == 1 {
        return Err(FiniteError::OracleOutOfRange(format!("odd D = {d} does not factor through η²")));
    }
    let w = eta_multiplier_sq_checked(g)? as u32;
    Ok(w * (d / 2) % 12 == 0)
}

/// Triviality of `χ_D` on `samples` random elements of `±Γ(6)`.
pub fn character_triviality(d: u32, samples: usize, seed: u64) -> Result<bool, FiniteError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let g = sample_pm_gamma6(&mut rng);
        if !character_trivial_at(d, &g)? {
            return Ok(false);
        }
    }
    Ok(true)
}
