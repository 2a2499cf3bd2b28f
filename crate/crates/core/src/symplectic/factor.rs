//! Constructive factorization of `ν₆(Γ₆^♮)` into `J̃₆ = ν₆(J₆)` and
//! `ν₆(j(Γ(6) ⋉ H(Z)))`.
//!
//! Right multiplication by Heisenberg-type elements normalises the second
//! row to `(r₀, 1, r₂, r₃)`; a transposed Heisenberg element `β̃` then clears
//! it to `(0,1,0,0)`, and what is left lies in `ν₆(j(Γ(6) ⋉ H(Z)))`.

use std::fmt;

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use super::groups::{from_integer, heis_t_int, heisenberg_int, in_group, j1_int, j_coordinates, nu6, nu6_inv, to_integer};
use super::{GroupId, SymplecticError};
use crate::algebra::Mat4;
use crate::{IntMatrix2, Integer, SpMatrix};

/// `|λ|, |μ|` bound of the search that makes `gcd(γ̃₂₁, γ̃₂₃) = 6`.
pub const LAMBDA_MU_BOUND: i64 = 36;

type Triple = (Integer, Integer, Integer);

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FactorToken {
    /// `ν₆(J₆) = [[0, −I], [I, 0]]`.
    J6Tilde,
    /// `−I₄ = J̃₆²`.
    Sign,
    /// `ν₆([m,n;k])`.
    Heis(Triple),
    /// `ν₆(J₆[m,n;k]J₆⁻¹) = J̃₆·ν₆([m,n;k])·J̃₆⁻¹`.
    HeisT(Triple),
    /// `ν₆(j(g, [m,n;k]))` with `g ∈ Γ(6)`.
    Gamma6 { g: IntMatrix2, h: Triple },
}

fn neg3(t: &Triple) -> Triple {
    (-t.0.clone(), -t.1.clone(), -t.2.clone())
}

fn tri(a: i64, b: i64, c: i64) -> Triple {
    (a.into(), b.into(), c.into())
}

impl FactorToken {
    pub fn matrix(&self) -> Mat4<Integer> {
        let nu = |m: &Mat4<Integer>| to_integer(&nu6(&from_integer(m))).expect("integral");
        match self {
            FactorToken::J6Tilde => {
                let i = |v: i64| Integer::from(v);
                Mat4::from_fn(|r, c| match (r, c) {
                    (0, 2) | (1, 3) => i(-1),
                    (2, 0) | (3, 1) => i(1),
                    _ => i(0),
                })
            }
            FactorToken::Sign => Mat4::<Integer>::identity().neg(),
            FactorToken::Heis(h) => nu(&heisenberg_int(&h.0, &h.1, &h.2)),
            FactorToken::HeisT(h) => heis_t_int(&h.0, &h.1, &h.2),
            FactorToken::Gamma6 { g, h } => nu(&(&j1_int(g) * &heisenberg_int(&h.0, &h.1, &h.2))),
        }
    }

    fn is_identity(&self) -> bool {
        match self {
            FactorToken::Heis(h) | FactorToken::HeisT(h) => h.0.is_zero() && h.1.is_zero() && h.2.is_zero(),
            FactorToken::Gamma6 { g, h } => g == &IntMatrix2::identity() && h.0.is_zero() && h.1.is_zero() && h.2.is_zero(),
            _ => false,
        }
    }

    pub fn to_json(&self) -> Value {
        let t = |h: &Triple| json!([h.0.to_string(), h.1.to_string(), h.2.to_string()]);
        match self {
            FactorToken::J6Tilde => json!({"token": "J6TILDE"}),
            FactorToken::Sign => json!({"token": "SIGN"}),
            FactorToken::Heis(h) => json!({"token": "HEIS", "h": t(h)}),
            FactorToken::HeisT(h) => json!({"token": "HEIST", "h": t(h)}),
            FactorToken::Gamma6 { g, h } => {
                let gm: Vec<Vec<String>> = g.0.iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect();
                json!({"token": "GAMMA6", "g": gm, "h": t(h)})
            }
        }
    }
}

impl fmt::Display for FactorToken {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FactorToken::J6Tilde => f.write_str("J6~"),
            FactorToken::Sign => f.write_str("-I"),
            FactorToken::Heis(h) => write!(f, "H[{},{};{}]", h.0, h.1, h.2),
            FactorToken::HeisT(h) => write!(f, "HT[{},{};{}]", h.0, h.1, h.2),
            FactorToken::Gamma6 { g, h } => write!(f, "G6({g},[{},{};{}])", h.0, h.1, h.2),
        }
    }
}

/// Ordered product of tokens.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FactorWord {
    pub tokens: Vec<FactorToken>,
}

impl FactorWord {
    pub fn product(&self) -> SpMatrix {
        from_integer(&self.tokens.iter().fold(Mat4::identity(), |acc, t| &acc * &t.matrix()))
    }

    /// Rewrites every token in terms of `J̃₆` and `ν₆(j(Γ(6) ⋉ H(Z)))` only.
    pub fn expand(&self) -> FactorWord {
        let mut out = Vec::new();
        for t in &self.tokens {
            match t {
                FactorToken::Sign => out.extend([FactorToken::J6Tilde, FactorToken::J6Tilde]),
                FactorToken::Heis(h) => out.push(FactorToken::Gamma6 { g: IntMatrix2::identity(), h: h.clone() }),
                FactorToken::HeisT(h) => out.extend([
                    FactorToken::J6Tilde,
                    FactorToken::Gamma6 { g: IntMatrix2::identity(), h: h.clone() },
                    FactorToken::J6Tilde,
                    FactorToken::J6Tilde,
                    FactorToken::J6Tilde,
                ]),
                other => out.push(other.clone()),
            }
        }
        FactorWord { tokens: out }
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    pub fn to_json(&self) -> Value {
        Value::Array(self.tokens.iter().map(FactorToken::to_json).collect())
    }
}

impl fmt::Display for FactorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.tokens.is_empty() {
            return f.write_str("I");
        }
        let parts: Vec<String> = self.tokens.iter().map(|t| t.to_string()).collect();
        f.write_str(&parts.join(" · "))
    }
}

fn row_mul(row: &[Integer; 4], m: &Mat4<Integer>) -> [Integer; 4] {
    std::array::from_fn(|j| (0..4).fold(Integer::zero(), |acc, i| acc + &row[i] * &m.0[i][j]))
}

fn gcd_is_six(row: &[Integer; 4]) -> bool {
    row[0].gcd(&row[2]) == Integer::from(6)
}

struct State {
    cur: Mat4<Integer>,
    /// Inverses of the applied right multipliers, in application order.
    undo: Vec<Vec<FactorToken>>,
}

impl State {
    fn row(&self) -> [Integer; 4] {
        self.cur.0[1].clone()
    }

    /// `cur ← cur · Π forward`; `inverse` must multiply to its inverse.
    fn apply(&mut self, forward: &[FactorToken], inverse: Vec<FactorToken>) {
        for t in forward {
            self.cur = &self.cur * &t.matrix();
        }
        self.undo.push(inverse);
    }
}

/// The multiplier `ν₆([μ,0;0] J₆ [0,λ;0] J₆⁻¹)` and its inverse.
fn lambda_mu(l: i64, m: i64) -> (Vec<FactorToken>, Vec<FactorToken>) {
    (
        vec![FactorToken::Heis(tri(m, 0, 0)), FactorToken::HeisT(tri(0, l, 0))],
        vec![FactorToken::HeisT(tri(0, -l, 0)), FactorToken::Heis(tri(-m, 0, 0))],
    )
}

fn search_lambda_mu(row: &[Integer; 4]) -> Option<(i64, i64)> {
    for radius in 0..=LAMBDA_MU_BOUND {
        for l in -radius..=radius {
            for m in -radius..=radius {
                if l.abs().max(m.abs()) != radius {
                    continue;
                }
                let (fwd, _) = lambda_mu(l, m);
                let mat = fwd.iter().fold(Mat4::identity(), |acc, t| &acc * &t.matrix());
                if gcd_is_six(&row_mul(row, &mat)) {
                    return Some((l, m));
                }
            }
        }
    }
    None
}

fn sixth(v: &Integer) -> Integer {
    v / Integer::from(6)
}

/// Fallback when no `(λ, μ)` in the box works: three explicit Heisenberg
/// moves that reach `gcd(x₁, x₃) = 1`.
fn constructive_gcd(st: &mut State) -> Result<(), SymplecticError> {
    let budget = |what: &str| SymplecticError::SearchBudgetExceeded(what.to_string());
    let one = Integer::one();
    // (a) gcd(A, x₁, x₃) = 1 via ν₆([0,t;0]): x₁ += 6t·x₄, A += 6t·x₃
    let ok_a = |r: &[Integer; 4]| r[1].gcd(&sixth(&r[0])).gcd(&sixth(&r[2])) == one;
    if !ok_a(&st.row()) {
        let t = (1..=10_000i64)
            .flat_map(|t| [t, -t])
            .find(|&t| ok_a(&row_mul(&st.row(), &FactorToken::Heis(tri(0, t, 0)).matrix())))
            .ok_or_else(|| budget("no t with gcd(A, x1, x3) = 1"))?;
        st.apply(&[FactorToken::Heis(tri(0, t, 0))], vec![FactorToken::Heis(tri(0, -t, 0))]);
    }
    // (b) x₁ ≠ 0 via HeisT(−1,0,0): x₁ += A
    if st.row()[0].is_zero() {
        st.apply(&[FactorToken::HeisT(tri(-1, 0, 0))], vec![FactorToken::HeisT(tri(1, 0, 0))]);
    }
    // (c) gcd(x₁, x₃ − nA) = 1 via HeisT(0,n,0); some n < |x₁| works
    let row = st.row();
    let (x1, x3, a) = (sixth(&row[0]), sixth(&row[2]), row[1].clone());
    let mut n = Integer::zero();
    while x1.gcd(&(&x3 - &n * &a)) != one {
        n += 1;
        if n > x1.abs() {
            return Err(budget("no n with gcd(x1, x3 - nA) = 1"));
        }
    }
    let h = (Integer::zero(), n.clone(), Integer::zero());
    st.apply(&[FactorToken::HeisT(h.clone())], vec![FactorToken::HeisT(neg3(&h))]);
    Ok(())
}

/// Factorizes `γ̃ ∈ ν₆(Γ₆^♮)`. The returned word multiplies back to `γ̃`
/// exactly; this is checked before returning.
pub fn factorize_nat(m: &SpMatrix) -> Result<FactorWord, SymplecticError> {
    if !in_group(m, GroupId::GammaNatTilde)? {
        return Err(SymplecticError::NotInGroup(GroupId::GammaNatTilde.to_string()));
    }
    let mut st = State { cur: to_integer(m)?, undo: Vec::new() };
    let e2 = [Integer::zero(), Integer::one(), Integer::zero(), Integer::zero()];
    let mut beta = None;
    if st.row() != e2 {
        if !st.row()[1].is_one() {
            if !gcd_is_six(&st.row()) {
                match search_lambda_mu(&st.row()) {
                    Some((l, mu)) => {
                        let (fwd, inv) = lambda_mu(l, mu);
                        st.apply(&fwd, inv);
                    }
                    None => constructive_gcd(&mut st)?,
                }
            }
            // second row (6x₁, 6x₂+1, 6x₃, 6x₄) with gcd(x₁, x₃) = 1
            let row = st.row();
            let (x1, x3, x2) = (sixth(&row[0]), sixth(&row[2]), sixth(&(&row[1] - Integer::one())));
            let eg = x1.extended_gcd(&x3);
            debug_assert!(eg.gcd.is_one());
            let h = (&eg.x * -&x2, &eg.y * -&x2, Integer::zero());
            st.apply(&[FactorToken::Heis(h.clone())], vec![FactorToken::Heis(neg3(&h))]);
        }
        let row = st.row();
        if !row[1].is_one() {
            return Err(SymplecticError::SearchBudgetExceeded(format!("(2,2) entry is {}", row[1])));
        }
        let b = (-sixth(&row[0]), -sixth(&row[2]), -sixth(&row[3]));
        st.cur = &st.cur * &FactorToken::HeisT(neg3(&b)).matrix();
        beta = Some(FactorToken::HeisT(b));
    }
    let rest = to_integer(&nu6_inv(&from_integer(&st.cur)))?;
    let (g, h) = j_coordinates(&rest).ok_or_else(|| SymplecticError::NotInGroup("j(Γ(6) ⋉ H(Z))".into()))?;
    let six = Integer::from(6);
    let congruent = (0..2).all(|i| (0..2).all(|j| (&g.0[i][j] - Integer::from((i == j) as i64)).is_multiple_of(&six)));
    if !congruent {
        return Err(SymplecticError::NotInGroup(format!("Γ(6): {g}")));
    }
    let mut tokens = vec![FactorToken::Gamma6 { g, h }];
    tokens.extend(beta);
    for inv in st.undo.into_iter().rev() {
        tokens.extend(inv);
    }
    tokens.retain(|t| !t.is_identity());
    let word = FactorWord { tokens };
    if word.product() != *m {
        return Err(SymplecticError::SearchBudgetExceeded("reconstruction mismatch".into()));
    }
    Ok(word)
}
