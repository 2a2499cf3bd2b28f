use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use num_integer::Integer as _;
use num_traits::{One, ToPrimitive};

use super::FiniteError;
use crate::algebra::Mat4;
use crate::{IntMatrix2, Integer};

/// Element of `PSL(2, Z/N)`, stored as the lexicographically smaller of
/// `±M` with entries in `0..N`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PSL2Elt {
    pub n: u64,
    pub m: [[u64; 2]; 2],
}

impl PSL2Elt {
    /// Canonical class of `[[a, b], [c, d]]`; the determinant must be 1 mod N.
    pub fn new(n: u64, a: i64, b: i64, c: i64, d: i64) -> Result<Self, FiniteError> {
        if n == 0 {
            return Err(FiniteError::InvalidModulus);
        }
        let r = |v: i64| v.rem_euclid(n as i64) as u64;
        let m = [[r(a), r(b)], [r(c), r(d)]];
        let det = (m[0][0] * m[1][1] % n + n - m[0][1] * m[1][0] % n) % n;
        if det != 1 % n {
            return Err(FiniteError::NotUnimodular(format!("[[{a},{b}],[{c},{d}]] mod {n}")));
        }
        Ok(Self::canonical(n, m))
    }

    fn canonical(n: u64, m: [[u64; 2]; 2]) -> Self {
        let neg = m.map(|row| row.map(|x| (n - x) % n));
        PSL2Elt { n, m: m.min(neg) }
    }

    pub fn identity(n: u64) -> Self {
        Self::canonical(n, [[1 % n, 0], [0, 1 % n]])
    }

    pub fn mul(&self, o: &Self) -> Self {
        let n = self.n;
        let (a, b) = (&self.m, &o.m);
        let e = |i: usize, j: usize| (a[i][0] * b[0][j] + a[i][1] * b[1][j]) % n;
        Self::canonical(n, [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]])
    }

    pub fn inverse(&self) -> Self {
        let n = self.n;
        let m = &self.m;
        Self::canonical(n, [[m[1][1], (n - m[0][1]) % n], [(n - m[1][0]) % n, m[0][0]]])
    }

    /// Reduction of an integer matrix of determinant 1.
    pub fn reduce(g: &IntMatrix2, n: u64) -> Result<Self, FiniteError> {
        if !g.det().is_one() {
            return Err(FiniteError::NotUnimodular(g.to_string()));
        }
        let nn = Integer::from(n);
        let r = |x: &Integer| x.mod_floor(&nn).to_i64().expect("small residue");
        PSL2Elt::new(n, r(&g.0[0][0]), r(&g.0[0][1]), r(&g.0[1][0]), r(&g.0[1][1]))
    }
}

impl fmt::Display for PSL2Elt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = &self.m;
        write!(f, "±[[{},{}],[{},{}]] mod {}", m[0][0], m[0][1], m[1][0], m[1][1], self.n)
    }
}

/// All classes, sorted.
pub fn enumerate_psl2(n: u64) -> Result<Vec<PSL2Elt>, FiniteError> {
    if n == 0 {
        return Err(FiniteError::InvalidModulus);
    }
    let mut out = BTreeSet::new();
    let k = n as i64;
    for a in 0..k {
        for b in 0..k {
            for c in 0..k {
                for d in 0..k {
                    if (a * d - b * c).rem_euclid(k) == 1 % k {
                        out.insert(PSL2Elt::new(n, a, b, c, d)?);
                    }
                }
            }
        }
    }
    Ok(out.into_iter().collect())
}

/// Subgroup generated by `gens`, by breadth-first closure.
pub fn closure(gens: &[PSL2Elt], n: u64) -> BTreeSet<PSL2Elt> {
    let mut seen = BTreeSet::from([PSL2Elt::identity(n)]);
    let mut queue: VecDeque<PSL2Elt> = VecDeque::from([PSL2Elt::identity(n)]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = x.mul(g);
            if seen.insert(y) {
                queue.push_back(y);
            }
        }
    }
    seen
}

/// `|PSL(2, Z/N)| / |⟨gens⟩|`.
pub fn subgroup_index(gens: &[PSL2Elt], n: u64) -> Result<u64, FiniteError> {
    if let Some(g) = gens.iter().find(|g| g.n != n) {
        return Err(FiniteError::NotUnimodular(format!("{g} is not mod {n}")));
    }
    let total = enumerate_psl2(n)?.len() as u64;
    let sub = closure(gens, n).len() as u64;
    Ok(total / sub)
}

/// Image of a 4×4 matrix via its `(1,3)×(1,3)` block `[[M₁₁, M₁₃], [M₃₁, M₃₃]]`.
/// The block only needs determinant 1 modulo `n`.
pub fn block_image(m: &Mat4<Integer>, n: u64) -> Result<PSL2Elt, FiniteError> {
    if n == 0 {
        return Err(FiniteError::InvalidModulus);
    }
    let nn = Integer::from(n);
    let r = |i: usize, j: usize| m.0[i][j].mod_floor(&nn).to_i64().expect("small residue");
    PSL2Elt::new(n, r(0, 0), r(0, 2), r(2, 0), r(2, 2))
}
