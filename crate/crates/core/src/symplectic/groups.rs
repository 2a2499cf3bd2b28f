//! Embeddings, builtin matrices and congruence-pattern membership.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Zero};

use super::SymplecticError;
use crate::algebra::{Mat4, QuadNum};
use crate::{IntMatrix2, Integer, Rational, SpMatrix};

fn q(n: i64) -> QuadNum {
    QuadNum::from_int(n)
}

pub(crate) fn from_i64(rows: [[i64; 4]; 4]) -> SpMatrix {
    Mat4::from_fn(|i, j| q(rows[i][j]))
}

pub(crate) fn from_integer(m: &Mat4<Integer>) -> SpMatrix {
    m.map(|x| QuadNum::rational(Rational::from_integer(x.clone())))
}

/// Rational entries, or `IrrationalEntry` naming the first offending position.
pub fn to_rational(m: &SpMatrix) -> Result<Mat4<Rational>, SymplecticError> {
    for i in 0..4 {
        for j in 0..4 {
            if !m.0[i][j].is_rational() {
                return Err(SymplecticError::IrrationalEntry(format!("({i},{j}) = {}", m.0[i][j])));
            }
        }
    }
    Ok(m.map(|x| x.a.clone()))
}

pub fn to_integer(m: &SpMatrix) -> Result<Mat4<Integer>, SymplecticError> {
    let r = to_rational(m)?;
    for i in 0..4 {
        for j in 0..4 {
            if !r.0[i][j].is_integer() {
                return Err(SymplecticError::NonIntegral(format!("({i},{j}) = {}", r.0[i][j])));
            }
        }
    }
    Ok(r.map(|x| x.to_integer()))
}

/// The form `[[0, I₂], [−I₂, 0]]`.
pub fn j_form() -> SpMatrix {
    from_i64([[0, 0, 1, 0], [0, 0, 0, 1], [-1, 0, 0, 0], [0, -1, 0, 0]])
}

/// Exact test `MᵀJM = J`.
pub fn is_symplectic(m: &SpMatrix) -> bool {
    let jf = j_form();
    &(&m.transpose() * &jf) * m == jf
}

/// `[m,n;k]`.
pub fn heisenberg(m: i64, n: i64, k: i64) -> SpMatrix {
    heisenberg_big(&m.into(), &n.into(), &k.into())
}

pub(crate) fn heisenberg_int(m: &Integer, n: &Integer, k: &Integer) -> Mat4<Integer> {
    let z = Integer::zero;
    let o = Integer::one;
    Mat4([
        [o(), m.clone(), z(), z()],
        [z(), o(), z(), z()],
        [z(), n.clone(), o(), z()],
        [n.clone(), k.clone(), -m.clone(), o()],
    ])
}

pub(crate) fn heisenberg_big(m: &Integer, n: &Integer, k: &Integer) -> SpMatrix {
    from_integer(&heisenberg_int(m, n, k))
}

/// `ν₆(J₆[m,n;k]J₆⁻¹)`, the transposed Heisenberg elements in the conjugated group.
pub fn heis_t(m: i64, n: i64, k: i64) -> SpMatrix {
    from_integer(&heis_t_int(&m.into(), &n.into(), &k.into()))
}

pub(crate) fn heis_t_int(m: &Integer, n: &Integer, k: &Integer) -> Mat4<Integer> {
    let z = Integer::zero;
    let o = Integer::one;
    let six = Integer::from(6);
    Mat4([
        [o(), z(), z(), -n.clone()],
        [-(&six * m), o(), -(&six * n), -(&six * k)],
        [z(), z(), o(), m.clone()],
        [z(), z(), z(), o()],
    ])
}

fn check_sl2(g: &IntMatrix2) -> Result<(), SymplecticError> {
    if g.det().is_one() {
        Ok(())
    } else {
        Err(SymplecticError::NonUnimodular(g.to_string()))
    }
}

pub(crate) fn j1_int(g: &IntMatrix2) -> Mat4<Integer> {
    let [[a, b], [c, d]] = g.0.clone();
    let z = Integer::zero;
    let o = Integer::one;
    Mat4([[a, z(), c, z()], [z(), o(), z(), z()], [b, z(), d, z()], [z(), z(), z(), o()]])
}

/// `g` in the first and third rows and columns.
pub fn j1(g: &IntMatrix2) -> Result<SpMatrix, SymplecticError> {
    check_sl2(g)?;
    Ok(from_integer(&j1_int(g)))
}

/// `g` in the second and fourth rows and columns.
pub fn j2(g: &IntMatrix2) -> Result<SpMatrix, SymplecticError> {
    check_sl2(g)?;
    let [[a, b], [c, d]] = g.0.clone();
    let z = Integer::zero;
    let o = Integer::one;
    Ok(from_integer(&Mat4([[o(), z(), z(), z()], [z(), a, z(), c], [z(), z(), o(), z()], [z(), b, z(), d]])))
}

/// Jacobi group embedding `(g, h) ↦ j₁(g)·h`.
pub fn j(g: &IntMatrix2, h: (i64, i64, i64)) -> Result<SpMatrix, SymplecticError> {
    Ok(&j1(g)? * &heisenberg(h.0, h.1, h.2))
}

fn r6(inverse: bool) -> [Rational; 4] {
    let six = if inverse { Rational::new(1.into(), 6.into()) } else { Rational::from_integer(6.into()) };
    [Rational::one(), Rational::one(), Rational::one(), six]
}

fn conj_diag(m: &SpMatrix, d: &[Rational; 4]) -> SpMatrix {
    Mat4::from_fn(|i, j| {
        let f = d[i].clone() / d[j].clone();
        m.0[i][j].clone() * QuadNum::rational(f)
    })
}

/// `R₆MR₆⁻¹` with `R₆ = diag(1,1,1,6)`.
pub fn nu6(m: &SpMatrix) -> SpMatrix {
    conj_diag(m, &r6(false))
}

pub fn nu6_inv(m: &SpMatrix) -> SpMatrix {
    conj_diag(m, &r6(true))
}

/// The unipotent `[[1,0,4n,2n],[0,1,2n,n],[0,0,1,0],[0,0,0,1]]`.
pub fn p_prime(n: i64) -> SpMatrix {
    from_i64([[1, 0, 4 * n, 2 * n], [0, 1, 2 * n, n], [0, 0, 1, 0], [0, 0, 0, 1]])
}

pub const BUILTIN_NAMES: [&str; 17] = [
    "ZETA",
    "V6",
    "J6",
    "R6",
    "THETA",
    "ZETA0",
    "ZETA1",
    "ZETA2",
    "ZETA3",
    "ZETA4",
    "BETA",
    "BETAP",
    "BETA_PRINTED",
    "BETAP_PRINTED",
    "I",
    "J6_TILDE",
    "ZETA_HEIS",
];

/// Named matrices.
///
/// `BETA`/`BETAP` are rebuilt so that they commute with `ζ₂` and reduce to
/// the stated classes; the matrices as printed are kept under `*_PRINTED`
/// and are not symplectic.
pub fn builtin(name: &str) -> Result<SpMatrix, SymplecticError> {
    let zeta = from_i64([[-1, 0, 0, 0], [0, 1, 0, 0], [0, 0, -1, 0], [0, 0, 0, 1]]);
    let s = IntMatrix2::new(0.into(), 1.into(), (-1).into(), 0.into());
    Ok(match name {
        "ZETA" | "ZETA0" => zeta,
        "V6" => {
            let r = QuadNum::sqrt6();
            let ri = QuadNum::new(Rational::zero(), Rational::new(1.into(), 6.into()));
            let z = QuadNum::zero;
            Mat4([[z(), ri.clone(), z(), z()], [r.clone(), z(), z(), z()], [z(), z(), z(), r], [z(), z(), ri, z()]])
        }
        "I" => j1(&s)?,
        "J6" => {
            let i = j1(&s)?;
            let v = builtin("V6")?;
            &(&(&i * &v) * &i) * &v
        }
        "J6_TILDE" => nu6(&builtin("J6")?),
        "R6" => from_i64([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 6]]),
        "THETA" => from_i64([[1, -1, 0, 0], [-1, 2, 0, 0], [0, 0, 2, 1], [0, 0, 1, 1]]),
        "ZETA1" => &zeta * &heisenberg(-6, 0, 0).transpose(),
        "ZETA2" => from_i64([[-7, 4, 0, 0], [-12, 7, 0, 0], [0, 0, -7, -12], [0, 0, 4, 7]]),
        "ZETA3" => &zeta * &heisenberg(1, 0, 0),
        "ZETA4" => from_i64([[-1, -1, 0, 6], [0, 1, -6, 0], [0, 0, -1, 0], [0, 0, -1, 1]]),
        "ZETA_HEIS" => &zeta * &heisenberg(0, 1, 0),
        "BETA" => from_i64([[-42, 26, 25, 42], [-78, 49, 42, 72], [107, -70, -42, -78], [-70, 46, 26, 49]]),
        "BETAP" => from_i64([[-65, 36, 25, 42], [-108, 61, 42, 72], [59, -34, -24, -42], [-34, 20, 14, 25]]),
        "BETA_PRINTED" => from_i64([[-18, 14, 25, 42], [-42, 31, 42, 72], [107, -70, -18, -42], [-70, 46, -14, 31]]),
        "BETAP_PRINTED" => from_i64([[23, -30, 25, 42], [24, -5, 42, 72], [59, -34, 0, -6], [-34, 20, -6, 7]]),
        _ => return Err(SymplecticError::UnknownBuiltin(name.to_string())),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GroupId {
    Sp4Z,
    /// Paramodular group of level `t`.
    GammaT(i64),
    GammaNat(i64),
    GammaBil(i64),
    /// `ν₆(Γ₆^♮)`.
    GammaNatTilde,
    /// `j(Γ(6) ⋉ H(Z))`.
    JGamma6Heis,
    Heisenberg,
    Principal(u64),
}

impl fmt::Display for GroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupId::Sp4Z => f.write_str("SP4Z"),
            GroupId::GammaT(t) => write!(f, "GAMMA_T({t})"),
            GroupId::GammaNat(t) => write!(f, "GAMMA_NAT({t})"),
            GroupId::GammaBil(t) => write!(f, "GAMMA_BIL({t})"),
            GroupId::GammaNatTilde => f.write_str("GAMMA_NAT_TILDE"),
            GroupId::JGamma6Heis => f.write_str("J_GAMMA6_HEIS"),
            GroupId::Heisenberg => f.write_str("HEISENBERG"),
            GroupId::Principal(n) => write!(f, "PRINCIPAL({n})"),
        }
    }
}

impl FromStr for GroupId {
    type Err = SymplecticError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || SymplecticError::UnknownGroup(s.to_string());
        let u = s.trim().to_ascii_uppercase();
        let arg = |prefix: &str| -> Option<i64> {
            let rest = u.strip_prefix(prefix)?.strip_prefix('(')?.strip_suffix(')')?;
            rest.trim().parse().ok().filter(|t: &i64| *t >= 1)
        };
        Ok(match u.as_str() {
            "SP4Z" => GroupId::Sp4Z,
            "GAMMA_NAT_TILDE" => GroupId::GammaNatTilde,
            "J_GAMMA6_HEIS" => GroupId::JGamma6Heis,
            "HEISENBERG" => GroupId::Heisenberg,
            _ => {
                if let Some(t) = arg("GAMMA_T") {
                    GroupId::GammaT(t)
                } else if let Some(t) = arg("GAMMA_NAT") {
                    GroupId::GammaNat(t)
                } else if let Some(t) = arg("GAMMA_BIL") {
                    GroupId::GammaBil(t)
                } else if let Some(n) = arg("PRINCIPAL") {
                    GroupId::Principal(n as u64)
                } else {
                    return Err(bad());
                }
            }
        })
    }
}

fn in_multiple(x: &Rational, m: &Rational) -> bool {
    (x / m).is_integer()
}

fn is_integral(m: &Mat4<Rational>) -> bool {
    m.0.iter().flatten().all(|x| x.is_integer())
}

fn nat_pattern(t: i64) -> [[Rational; 4]; 4] {
    let (o, tt, t2) = (Rational::one(), Rational::from_integer(t.into()), Rational::from_integer((t * t).into()));
    [
        [tt.clone(), o.clone(), tt.clone(), tt.clone()],
        [tt.clone(), tt.clone(), tt.clone(), t2],
        [tt.clone(), o.clone(), tt.clone(), tt.clone()],
        [o.clone(), o.clone(), o, tt],
    ]
}

fn paramodular_pattern(t: i64) -> [[Rational; 4]; 4] {
    let (o, tt) = (Rational::one(), Rational::from_integer(t.into()));
    let inv = Rational::new(1.into(), t.into());
    [
        [o.clone(), o.clone(), o.clone(), tt.clone()],
        [tt.clone(), o.clone(), tt.clone(), tt.clone()],
        [o.clone(), o.clone(), o.clone(), tt.clone()],
        [o.clone(), inv, o.clone(), o],
    ]
}

fn fits(m: &Mat4<Rational>, pat: &[[Rational; 4]; 4]) -> bool {
    (0..4).all(|i| (0..4).all(|j| in_multiple(&m.0[i][j], &pat[i][j])))
}

fn in_nat(m: &Mat4<Rational>, t: i64) -> bool {
    is_integral(m) && fits(&m.sub(&Mat4::identity()), &nat_pattern(t))
}

/// Reads `(g, h)` off a matrix of the form `j₁(g)·[m,n;k]`, if it is one.
pub(crate) fn j_coordinates(m: &Mat4<Integer>) -> Option<(IntMatrix2, (Integer, Integer, Integer))> {
    let g = IntMatrix2::new(m.0[0][0].clone(), m.0[2][0].clone(), m.0[0][2].clone(), m.0[2][2].clone());
    if !g.det().is_one() {
        return None;
    }
    let gi = IntMatrix2::new(g.0[1][1].clone(), -g.0[0][1].clone(), -g.0[1][0].clone(), g.0[0][0].clone());
    let h = &j1_int(&gi) * m;
    let (a, b, c) = (h.0[0][1].clone(), h.0[2][1].clone(), h.0[3][1].clone());
    (heisenberg_int(&a, &b, &c) == h).then_some((g, (a, b, c)))
}

/// Membership by the printed congruence patterns. Pattern groups require
/// rational entries; a `√6` component is an error, not a `false`.
///
/// `ν₆`-conjugated elements preserve the conjugated form rather than `J`,
/// so `GAMMA_NAT_TILDE` conjugates back before any test.
pub fn in_group(m: &SpMatrix, g: GroupId) -> Result<bool, SymplecticError> {
    if g == GroupId::GammaNatTilde {
        return in_group(&nu6_inv(m), GroupId::GammaNat(6));
    }
    let r = to_rational(m)?;
    if !is_symplectic(m) {
        return Ok(false);
    }
    Ok(match g {
        GroupId::Sp4Z => is_integral(&r),
        GroupId::GammaT(t) => fits(&r, &paramodular_pattern(t)),
        GroupId::GammaNat(t) => in_nat(&r, t),
        GroupId::GammaBil(t) => {
            let zeta = to_rational(&builtin("ZETA")?)?;
            in_nat(&r, t) || in_nat(&(&zeta * &r), t)
        }
        GroupId::GammaNatTilde => unreachable!("handled above"),
        GroupId::JGamma6Heis => {
            if !is_integral(&r) {
                return Ok(false);
            }
            let mi = r.map(|x| x.to_integer());
            match j_coordinates(&mi) {
                Some((g, _)) => {
                    let six = BigInt::from(6);
                    let e = |i: usize, jj: usize, want: i64| (&g.0[i][jj] - BigInt::from(want)).is_multiple_of(&six);
                    e(0, 0, 1) && e(0, 1, 0) && e(1, 0, 0) && e(1, 1, 1)
                }
                None => false,
            }
        }
        GroupId::Heisenberg => {
            if !is_integral(&r) {
                return Ok(false);
            }
            let mi = r.map(|x| x.to_integer());
            heisenberg_int(&mi.0[0][1], &mi.0[2][1], &mi.0[3][1]) == mi
        }
        GroupId::Principal(n) => {
            if n == 0 {
                return Ok(false);
            }
            let nn = Rational::from_integer(n.into());
            is_integral(&r) && r.sub(&Mat4::identity()).0.iter().flatten().all(|x| in_multiple(x, &nn))
        }
    })
}

/// Inverse of an integer symplectic matrix, `−J·Mᵀ·J`.
pub(crate) fn sp_inverse_int(m: &Mat4<Integer>) -> Mat4<Integer> {
    let jf = to_integer(&j_form()).expect("integral");
    (&(&jf * &m.transpose()) * &jf).neg()
}
