//! Branch components over each `ζᵢ` class: the index in `PSL(2, Z/6)` of the
//! image of the centralizer, via `[[M₁₁, M₁₃], [M₃₁, M₃₃]] mod 6`.
//!
//! The index is pinned from both sides. Exhibited centralizing elements give
//! an upper bound (the index of the subgroup they generate). A linear
//! relation satisfied by the whole rational commutant, combined with the
//! integrality pattern of `Γ₆`, gives a lower bound (the index of the
//! subgroup cut out by the resulting parity condition).

use num_traits::{ToPrimitive, Zero};

use super::psl2::{block_image, closure, enumerate_psl2, PSL2Elt};
use super::FiniteError;
use crate::algebra::linalg::integer_kernel;
use crate::algebra::Mat4;
use crate::symplectic::{builtin, heisenberg, in_group, is_symplectic, j1, to_integer, GroupId};
use crate::{IntMatrix2, Integer, SpMatrix};

/// Counts as stated for `ζ₀, …, ζ₄`.
pub const CLAIMED_COUNTS: [u64; 5] = [1, 3, 1, 1, 1];

const N: u64 = 6;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassIndex {
    pub name: &'static str,
    /// Verified centralizing elements of `Γ₆`.
    pub witnesses: Vec<(String, Mat4<Integer>)>,
    /// Index of the subgroup generated by the witness images.
    pub generated_index: u64,
    /// Index forced by the commutant relation.
    pub lower_bound: u64,
    /// `Some(k)` when both bounds agree.
    pub index: Option<u64>,
    /// Elements displayed as centralizing that fail to commute with `ζᵢ`.
    pub rejected: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchReport {
    pub classes: Vec<ClassIndex>,
    /// Sum of the determined indices; `None` if any class is undetermined.
    pub total: Option<u64>,
    pub claimed: [u64; 5],
}

impl BranchReport {
    pub fn counts(&self) -> Vec<Option<u64>> {
        self.classes.iter().map(|c| c.index).collect()
    }

    pub fn matches_claim(&self) -> bool {
        self.counts().iter().zip(self.claimed).all(|(c, k)| *c == Some(k))
    }
}

fn m2(a: i64, b: i64, c: i64, d: i64) -> IntMatrix2 {
    IntMatrix2::new(a.into(), b.into(), c.into(), d.into())
}

fn int(rows: [[i64; 4]; 4]) -> Mat4<Integer> {
    Mat4::from_fn(|i, j| Integer::from(rows[i][j]))
}

fn from_int(m: &Mat4<Integer>) -> SpMatrix {
    m.map(|x| crate::algebra::QuadNum::rational(crate::Rational::from_integer(x.clone())))
}

/// `[[a,0,b,3b],[3(a−1),1,3b,0],[c,0,d,3(d−1)],[0,0,0,1]]`.
fn zeta1_form(a: i64, b: i64, c: i64, d: i64) -> Mat4<Integer> {
    int([[a, 0, b, 3 * b], [3 * (a - 1), 1, 3 * b, 0], [c, 0, d, 3 * (d - 1)], [0, 0, 0, 1]])
}

/// `δ·j₁(g)·δ⁻¹` with `δ = [−1/2, 0; 0]`, for `g` with `a, d` odd and
/// `4 | c` (the entry landing at `(3,1)`).
fn zeta3_form(g: &IntMatrix2) -> Result<Mat4<Integer>, FiniteError> {
    let v: Vec<i64> = g.0.iter().flatten().map(|x| x.to_i64().expect("small")).collect();
    let (a, b, c, d) = (v[0], v[1], v[2], v[3]);
    if a % 2 == 0 || d % 2 == 0 || c % 4 != 0 {
        return Err(FiniteError::BadWitness { name: "ZETA3".into(), reason: format!("{g} does not conjugate integrally") });
    }
    // j₁ puts the lower-left entry of its argument at (3,1)
    Ok(int([[a, (a - 1) / 2, b, 0], [0, 1, 0, 0], [c, c / 2, d, 0], [c / 2, c / 4, (d - 1) / 2, 1]]))
}

fn commutes(m: &SpMatrix, z: &SpMatrix) -> bool {
    &(m * z) == &(z * m)
}

fn verify_witness(class: &'static str, label: &str, m: &Mat4<Integer>, zeta: &SpMatrix) -> Result<(), FiniteError> {
    let s = from_int(m);
    let bad = |reason: &str| FiniteError::BadWitness { name: format!("{class}:{label}"), reason: reason.to_string() };
    if !is_symplectic(&s) {
        return Err(bad("not symplectic"));
    }
    if !in_group(&s, GroupId::GammaT(6))? {
        return Err(bad("not in the paramodular group of level 6"));
    }
    if !commutes(&s, zeta) {
        return Err(bad("does not commute"));
    }
    Ok(())
}

/// Rows of `Mζ − ζM = 0` in the 16 unknowns `M_{ij}` (index `4i + j`).
fn commutant_kernel(zeta: &Mat4<Integer>) -> Vec<Vec<Integer>> {
    let mut rows = Vec::new();
    for i in 0..4 {
        for j in 0..4 {
            let mut row = vec![Integer::zero(); 16];
            for k in 0..4 {
                row[4 * i + k] += &zeta.0[k][j];
                row[4 * k + j] -= &zeta.0[i][k];
            }
            rows.push(row);
        }
    }
    integer_kernel(&rows)
}

/// Whether `Σ coeff·M_{ij}` vanishes on the whole rational commutant.
fn relation_holds(kernel: &[Vec<Integer>], functional: &[((usize, usize), i64)]) -> bool {
    kernel.iter().all(|v| functional.iter().map(|&((i, j), c)| &v[4 * i + j] * Integer::from(c)).sum::<Integer>().is_zero())
}

/// Index of `{x : pred(x)}` in `PSL(2, Z/6)`; `pred` must cut out a subgroup.
fn predicate_index(pred: impl Fn(&PSL2Elt) -> bool) -> Result<u64, FiniteError> {
    let all = enumerate_psl2(N)?;
    let sub = all.iter().filter(|x| pred(x)).count() as u64;
    Ok(all.len() as u64 / sub)
}

fn generated_index(witnesses: &[(String, Mat4<Integer>)]) -> Result<u64, FiniteError> {
    let gens = witnesses.iter().map(|(_, m)| block_image(m, N)).collect::<Result<Vec<_>, _>>()?;
    Ok(enumerate_psl2(N)?.len() as u64 / closure(&gens, N).len() as u64)
}

/// Lower bound from a relation `M_src = k·M_dst` on the commutant, where
/// `Γ₆` forces `M_dst ∈ q·Z` and so `M_src ∈ kq·Z`: the block entry at
/// `block` is then even, which is an index-3 condition.
struct ParityBound {
    functional: [((usize, usize), i64); 2],
    block: (usize, usize),
}

fn lower_bound(zeta: &Mat4<Integer>, bound: Option<ParityBound>) -> Result<u64, FiniteError> {
    let Some(b) = bound else { return Ok(1) };
    if !relation_holds(&commutant_kernel(zeta), &b.functional) {
        return Ok(1);
    }
    predicate_index(|x| x.m[b.block.0][b.block.1] % 2 == 0)
}

fn class(
    name: &'static str,
    witnesses: Vec<(String, Mat4<Integer>)>,
    bound: Option<ParityBound>,
    rejected: Vec<String>,
) -> Result<ClassIndex, FiniteError> {
    let zeta = builtin(name)?;
    for (label, m) in &witnesses {
        verify_witness(name, label, m, &zeta)?;
    }
    let generated = generated_index(&witnesses)?;
    let lower = lower_bound(&to_integer(&zeta)?, bound)?;
    Ok(ClassIndex {
        name,
        witnesses,
        generated_index: generated,
        lower_bound: lower,
        index: (generated == lower).then_some(generated),
        rejected,
    })
}

fn j1_int(g: &IntMatrix2) -> Result<Mat4<Integer>, FiniteError> {
    Ok(to_integer(&j1(g)?)?)
}

/// Displayed `j(γ, [0,0;0])` elements that do not commute with `ζ`.
fn rejected_j1(zeta: &SpMatrix, conj: Option<(&SpMatrix, &SpMatrix)>) -> Result<Vec<String>, FiniteError> {
    let mut out = Vec::new();
    for (label, g) in [("j(S)", m2(0, -1, 1, 0)), ("j(T)", m2(1, 1, 0, 1))] {
        let mut m = j1(&g)?;
        if let Some((t, ti)) = conj {
            m = &(t * &m) * ti;
        }
        if !commutes(&m, zeta) {
            out.push(label.to_string());
        }
    }
    Ok(out)
}

/// Per-class indices for `ζ₀, …, ζ₄`. Every witness is checked to be an
/// integral symplectic element of `Γ₆` commuting with its `ζᵢ`.
pub fn branch_component_count() -> Result<BranchReport, FiniteError> {
    let (s, t) = (m2(0, -1, 1, 0), m2(1, 1, 0, 1));
    let zeta0 = vec![("j(S)".to_string(), j1_int(&s)?), ("j(T)".to_string(), j1_int(&t)?)];

    let zeta1 = [(1, 2, 0, 1), (1, 0, 1, 1), (1, 0, 6, 1), (3, 2, 4, 3)]
        .into_iter()
        .map(|(a, b, c, d)| (format!("γ=[[{a},{b}],[{c},{d}]]"), zeta1_form(a, b, c, d)))
        .collect();
    // M₀₂ = M₀₃/3 with M₀₃ ∈ 6Z
    let zeta1_bound = ParityBound { functional: [((0, 2), 3), ((0, 3), -1)], block: (0, 1) };

    let zeta2 = vec![("β".to_string(), to_integer(&builtin("BETA")?)?), ("β′".to_string(), to_integer(&builtin("BETAP")?)?)];

    let zeta3: Vec<(String, Mat4<Integer>)> = [m2(1, 1, 0, 1), m2(1, 0, 4, 1)]
        .iter()
        .map(|g| Ok((format!("δj(γ)δ⁻¹, γ={g}"), zeta3_form(g)?)))
        .collect::<Result<_, FiniteError>>()?;
    // M₂₀ = 2·M₂₁ with M₂₁ ∈ Z
    let parity_20 = || ParityBound { functional: [((2, 0), 1), ((2, 1), -2)], block: (1, 0) };

    let t6 = heisenberg(0, 0, 6).transpose();
    let t6i = heisenberg(0, 0, -6).transpose();
    let zeta4 = zeta3
        .iter()
        .map(|(label, m)| Ok((format!("ᵀ[0,0;6]·{label}·ᵀ[0,0;6]⁻¹"), to_integer(&(&(&t6 * &from_int(m)) * &t6i))?)))
        .collect::<Result<_, FiniteError>>()?;

    let classes = vec![
        class("ZETA0", zeta0, None, rejected_j1(&builtin("ZETA0")?, None)?)?,
        class("ZETA1", zeta1, Some(zeta1_bound), vec![])?,
        class("ZETA2", zeta2, None, vec![])?,
        class("ZETA3", zeta3, Some(parity_20()), rejected_j1(&builtin("ZETA3")?, None)?)?,
        class("ZETA4", zeta4, Some(parity_20()), rejected_j1(&builtin("ZETA4")?, Some((&t6, &t6i)))?)?,
    ];
    let total = classes.iter().map(|c| c.index).sum::<Option<u64>>();
    Ok(BranchReport { classes, total, claimed: CLAIMED_COUNTS })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parity_subgroups_have_index_three() {
        assert_eq!(predicate_index(|x| x.m[0][1] % 2 == 0).unwrap(), 3);
        assert_eq!(predicate_index(|x| x.m[1][0] % 2 == 0).unwrap(), 3);
    }

    #[test]
    fn zeta_class_indices() {
        let r = branch_component_count().unwrap();
        let idx: Vec<_> = r.classes.iter().map(|c| (c.generated_index, c.lower_bound)).collect();
        assert_eq!(idx, vec![(1, 1), (3, 3), (1, 1), (3, 3), (3, 3)]);
        assert_eq!(r.total, Some(11));
        assert!(!r.matches_claim());
    }

    #[test]
    fn displayed_j_elements_fail_for_zeta3_and_zeta4() {
        let r = branch_component_count().unwrap();
        assert!(r.classes[0].rejected.is_empty());
        assert_eq!(r.classes[3].rejected, vec!["j(S)", "j(T)"]);
        assert_eq!(r.classes[4].rejected, vec!["j(S)", "j(T)"]);
    }

    #[test]
    fn zeta3_form_rejects_non_integral_conjugates() {
        assert!(zeta3_form(&m2(0, -1, 1, 0)).is_err());
    }

    #[test]
    fn commutant_of_zeta0_has_no_parity_relation() {
        let z = to_integer(&builtin("ZETA0").unwrap()).unwrap();
        let k = commutant_kernel(&z);
        assert_eq!(k.len(), 8);
        assert!(!relation_holds(&k, &[((2, 0), 1), ((2, 1), -2)]));
    }
}
