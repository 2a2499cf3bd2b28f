//! The check registry.
//!
//! Ids are `<result>.<topic>[.<detail>]`. A check returns both sides as
//! strings and passes iff they are equal; an `Err` is reported as an error.
//! Dual-route checks put one route on each side.

use std::sync::Arc;

use bilevel::algebra::{poly_divides_mod_p, PolyModP, QuadNum};
use bilevel::finite::{
    block_image, branch_component_count, character_triviality, enumerate_psl2, eta_multiplier_sq_checked,
    subgroup_index, PSL2Elt,
};
use bilevel::jacobi::{fourier_coeff, lift_input, LiftInputId};
use bilevel::lift::{
    canonical_divisor_of, cusp_invariant, cusp_vanishing_order, divisor_relations, exp_lift_truncated_of,
    humbert_multiplicity_of, humbert_multiplicity_raw, leading_exponents_of, lift_rank, Cusp, DivisorRecord,
    Relation, TripleSeries, DEFAULT_BOUND,
};
use bilevel::symplectic::{
    builtin, catalog, charpoly_mod6_class, factorize_nat, fixed_relation_check, in_group, nu6, p_prime,
    sample_group_element, to_integer, torsion_order, CharpolyClass, GroupId, HumbertRelation,
};
use bilevel::{Exponent, IntMatrix2, IntSeries, Rational, SpMatrix};
use num_bigint::BigInt;

use crate::forms::FormSource;
use crate::report::Provenance;

pub struct Ctx {
    /// Per-check seed.
    pub seed: u64,
    pub forms: FormSource,
}

pub struct Outcome {
    pub expected: String,
    pub actual: String,
}

type Run = Arc<dyn Fn(&Ctx) -> Result<Outcome, String> + Send + Sync>;

pub struct Check {
    pub id: &'static str,
    pub provenance: Provenance,
    pub randomized: bool,
    /// Expected side reported when the check errors out.
    pub expected_hint: String,
    pub run: Run,
}

use Provenance::{Derived, Printed, Trivial};

/// Constant expected value.
fn fixed<F>(id: &'static str, provenance: Provenance, expected: &str, f: F) -> Check
where
    F: Fn(&Ctx) -> Result<String, String> + Send + Sync + 'static,
{
    let e = expected.to_string();
    let e2 = e.clone();
    Check {
        id,
        provenance,
        randomized: false,
        expected_hint: e,
        run: Arc::new(move |ctx| Ok(Outcome { expected: e2.clone(), actual: f(ctx)? })),
    }
}

fn seeded(mut c: Check) -> Check {
    c.randomized = true;
    c
}

/// Both sides computed, by independent routes.
fn dual<F>(id: &'static str, provenance: Provenance, f: F) -> Check
where
    F: Fn(&Ctx) -> Result<Outcome, String> + Send + Sync + 'static,
{
    Check { id, provenance, randomized: false, expected_hint: "(computed)".to_string(), run: Arc::new(f) }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn form(ctx: &Ctx, name: &str) -> Result<Arc<IntSeries>, String> {
    ctx.forms.int_form(name).map_err(err)
}

fn lift_form(ctx: &Ctx, id: LiftInputId) -> Result<Arc<IntSeries>, String> {
    ctx.forms.lift_input(id).map_err(err)
}

fn slice(ctx: &Ctx, name: &str, q: i64) -> Result<String, String> {
    Ok(form(ctx, name)?.slice_pretty(Exponent::from_integer(q)))
}

fn lifts(ctx: &Ctx) -> Result<Vec<TripleSeries>, String> {
    LiftInputId::ALL
        .iter()
        .map(|&id| exp_lift_truncated_of(&*lift_form(ctx, id)?, Exponent::from_integer(DEFAULT_BOUND)).map_err(err))
        .collect()
}

fn divisors(ctx: &Ctx) -> Result<Vec<DivisorRecord>, String> {
    LiftInputId::ALL.iter().map(|&id| canonical_divisor_of(&*lift_form(ctx, id)?).map_err(err)).collect()
}

fn humbert_row(f: impl Fn(i64, i64) -> Result<BigInt, String>) -> Result<String, String> {
    let row = [(1, 1), (1, 5), (4, 2)].iter().map(|&(d, b)| f(d, b).map(|m| m.to_string())).collect::<Result<Vec<_>, _>>()?;
    Ok(format!("[{}]", row.join(",")))
}

fn joined<T: ToString>(v: impl IntoIterator<Item = T>) -> String {
    v.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn m2(a: i64, b: i64, c: i64, d: i64) -> IntMatrix2 {
    IntMatrix2::new(a.into(), b.into(), c.into(), d.into())
}

fn sp(rows: [[(i64, i64); 4]; 4]) -> SpMatrix {
    bilevel::algebra::Mat4::from_fn(|i, j| {
        let (n, d) = rows[i][j];
        QuadNum::rational(Rational::new(n.into(), d.into()))
    })
}

fn fixed_on(m: &SpMatrix, rel: &HumbertRelation, seed: u64) -> Result<String, String> {
    let ok = fixed_relation_check(m, rel, 10, seed).map_err(err)?;
    Ok(if ok { "fixed on 10 points".to_string() } else { "moved".to_string() })
}

fn relation(name: &str) -> HumbertRelation {
    catalog().into_iter().find(|(n, _)| *n == name).expect("catalogued").1
}

fn class_count(ctx: &Ctx, zeta: bool, want: CharpolyClass) -> Result<String, String> {
    const N: u64 = 1000;
    let z = builtin("ZETA").map_err(err)?;
    let mut hits = 0;
    for i in 0..N {
        let g = sample_group_element(GroupId::GammaNat(6), 8, ctx.seed.wrapping_add(i)).map_err(err)?;
        let m = if zeta { &z * &g } else { g };
        if charpoly_mod6_class(&m).map_err(err)? == want {
            hits += 1;
        }
    }
    Ok(format!("{hits}/{N} {want}"))
}

fn poly_fact(p: u64, divisor: &[i64]) -> Result<String, String> {
    let dividend = PolyModP::new(p, &[1, -4, 6, -4, 1]).map_err(err)?;
    let d = PolyModP::new(p, divisor).map_err(err)?;
    Ok(poly_divides_mod_p(&d, &dividend).map_err(err)?.to_string())
}

/// Counts monic divisors of `(1 − x)⁴` over `F_p` in each degree 1..4 by
/// trying every monic polynomial; only `(x − 1)^k` should appear.
fn monic_divisor_counts(p: u64) -> Result<Vec<usize>, String> {
    let dividend = PolyModP::new(p, &[1, -4, 6, -4, 1]).map_err(err)?;
    let mut counts = Vec::new();
    for deg in 1..=4u32 {
        let mut n = 0;
        for code in 0..p.pow(deg) {
            let mut c: Vec<i64> = (0..deg).map(|i| ((code / p.pow(i)) % p) as i64).collect();
            c.push(1);
            if poly_divides_mod_p(&PolyModP::new(p, &c).map_err(err)?, &dividend).map_err(err)? {
                n += 1;
            }
        }
        counts.push(n);
    }
    Ok(counts)
}

fn lead_str(s: &IntSeries) -> Result<String, String> {
    let l = leading_exponents_of(s).map_err(err)?;
    Ok(format!("({},{},{})", l.a, l.b, l.c))
}

fn vanishing(ctx: &Ctx, cusp: Cusp) -> Result<String, String> {
    let orders = LiftInputId::ALL
        .iter()
        .map(|&id| {
            let lead = leading_exponents_of(&*lift_form(ctx, id)?).map_err(err)?;
            cusp_vanishing_order(&lead, cusp).map_err(err)
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(joined(orders))
}

fn int_block(m: &SpMatrix) -> Result<PSL2Elt, String> {
    block_image(&to_integer(m).map_err(err)?, 6).map_err(err)
}

fn jacobi_checks(out: &mut Vec<Check>) {
    let golden: [(&'static str, &'static str, i64, &'static str); 6] = [
        ("sec2.phi02.q0", "phi02", 0, "r^{±1}+4"),
        ("sec2.phi02.q1", "phi02", 1, "r^{±3}-8r^{±2}-r^{±1}+16"),
        ("sec2.phi03.q0", "phi03", 0, "r^{±1}+2"),
        ("sec2.phi03.q1", "phi03", 1, "-2r^{±3}-2r^{±2}+2r^{±1}+4"),
        ("sec2.phi04.q0", "phi04", 0, "r^{±1}+1"),
        ("sec2.phi04.q1", "phi04", 1, "-r^{±4}-r^{±3}+r^{±1}+2"),
    ];
    for (id, name, q, want) in golden {
        out.push(fixed(id, Printed, want, move |ctx| slice(ctx, name, q)));
    }
    out.push(fixed("prop3.1.phi3.q0", Printed, "r^{±2}+6", |ctx| slice(ctx, "phi3", 0)));
    out.push(fixed("prop3.1.phi3pp.q0", Printed, "r^{±2}+2r^{±1}+6", |ctx| slice(ctx, "phi3pp", 0)));
    out.push(fixed("sec2.lift_inputs.identity", Derived, "0 nonzero coefficients", |ctx| {
        let [a, b, c] = LiftInputId::ALL.map(|id| lift_form(ctx, id));
        let (a, b, c) = (a?, b?, c?);
        let d = a.add(&b).sub(&c.scale(&BigInt::from(2)));
        Ok(format!("{} nonzero coefficients", d.len()))
    }));

    let fs: [(&'static str, LiftInputId, i64, i64, &'static str, Provenance); 5] = [
        ("prop3.1.f15.F3", LiftInputId::Phi3, 1, 5, "4", Printed),
        ("prop3.1.f15.F3p", LiftInputId::Phi3P, 1, 5, "0", Printed),
        ("prop3.1.f15.F3pp", LiftInputId::Phi3PP, 1, 5, "2", Printed),
        ("prop3.1.f4_10.F3", LiftInputId::Phi3, 4, 10, "1", Printed),
        ("prop3.1.fneg.F3", LiftInputId::Phi3, -1, 0, "0", Trivial),
    ];
    for (id, form_id, n, l, want, prov) in fs {
        out.push(fixed(id, prov, want, move |ctx| {
            Ok(fourier_coeff(&*lift_form(ctx, form_id)?, n, l).map_err(err)?.to_string())
        }));
    }
}

fn lift_checks(out: &mut Vec<Check>) {
    let table: [(LiftInputId, [&'static str; 3]); 3] =
        [(LiftInputId::Phi3, ["1", "5", "1"]), (LiftInputId::Phi3P, ["5", "1", "1"]), (LiftInputId::Phi3PP, ["3", "3", "1"])];
    let ids: [[&'static str; 3]; 3] = [
        ["prop3.1.m11.F3", "prop3.1.m15.F3", "prop3.1.m42.F3"],
        ["prop3.1.m11.F3p", "prop3.1.m15.F3p", "prop3.1.m42.F3p"],
        ["prop3.1.m11.F3pp", "prop3.1.m15.F3pp", "prop3.1.m42.F3pp"],
    ];
    for ((form_id, wants), row_ids) in table.into_iter().zip(ids) {
        for ((delta, b), (want, id)) in [(1, 1), (1, 5), (4, 2)].into_iter().zip(wants.into_iter().zip(row_ids)) {
            out.push(fixed(id, Printed, want, move |ctx| {
                Ok(humbert_multiplicity_of(&*lift_form(ctx, form_id)?, delta, b).map_err(err)?.to_string())
            }));
        }
    }
    out.push(dual("prop3.1.matrix.raw_oracle", Derived, |ctx| {
        let mut reduced = Vec::new();
        let mut raw = Vec::new();
        for id in LiftInputId::ALL {
            let f = lift_form(ctx, id)?;
            reduced.push(humbert_row(|d, b| humbert_multiplicity_of(&f, d, b).map_err(err))?);
            let big: IntSeries = lift_input(id, Exponent::from_integer(37)).map_err(err)?;
            raw.push(humbert_row(|d, b| humbert_multiplicity_raw(&big, d, b).map_err(err))?);
        }
        Ok(Outcome { expected: format!("[{}]", reduced.join(",")), actual: format!("[{}]", raw.join(",")) })
    }));

    let leads: [(&'static str, LiftInputId, &'static str); 3] = [
        ("sec3.leading.F3", LiftInputId::Phi3, "(1/3,1,2)"),
        ("sec3.leading.F3p", LiftInputId::Phi3P, "(2/3,3,4)"),
        ("sec3.leading.F3pp", LiftInputId::Phi3PP, "(1/2,2,3)"),
    ];
    for (id, form_id, want) in leads {
        out.push(fixed(id, Printed, want, move |ctx| lead_str(&*lift_form(ctx, form_id)?)));
    }
    out.push(fixed("sec3.leading.c_equals_6a", Derived, "true,true,true", |ctx| {
        let v = LiftInputId::ALL
            .iter()
            .map(|&id| {
                let l = leading_exponents_of(&*lift_form(ctx, id)?).map_err(err)?;
                Ok(l.c == l.a * 6)
            })
            .collect::<Result<Vec<_>, String>>()?;
        Ok(joined(v))
    }));
    out.push(fixed("thm3.3.vanishing.D1", Printed, "2,4,3", |ctx| vanishing(ctx, Cusp::D1)));
    out.push(fixed("thm3.3.vanishing.D2", Printed, "2,4,3", |ctx| vanishing(ctx, Cusp::D2)));

    out.push(fixed("prop3.5.leading_coeff", Trivial, "1,1,1", |ctx| {
        let ls = lifts(ctx)?;
        let v = LiftInputId::ALL
            .iter()
            .zip(&ls)
            .map(|(&id, t)| {
                let l = leading_exponents_of(&*lift_form(ctx, id)?).map_err(err)?;
                let lowest = t.min_degree() == Some(l.a + l.c);
                Ok(if lowest { t.coeff(l.a, l.b, l.c).to_string() } else { "not leading".to_string() })
            })
            .collect::<Result<Vec<_>, String>>()?;
        Ok(joined(v))
    }));
    out.push(fixed("cor3.4.product_identity", Printed, "equal", |ctx| {
        let ls = lifts(ctx)?;
        let lhs = ls[0].mul(&ls[1]);
        let rhs = ls[2].mul(&ls[2]);
        let bound = lhs.bound().min(rhs.bound());
        let (lhs, rhs) = (lhs.truncate(bound), rhs.truncate(bound));
        if lhs.is_empty() {
            return Err("product is empty below the common bound".into());
        }
        Ok(if lhs == rhs { "equal".to_string() } else { format!("differ below weighted degree {}", bound) })
    }));
    out.push(fixed("prop3.5.rank", Printed, "3", |ctx| {
        let ls = lifts(ctx)?;
        Ok(lift_rank(&ls.iter().collect::<Vec<_>>()).to_string())
    }));
    out.push(fixed("thmA.pg", Printed, "p_g >= 3", |ctx| {
        let ls = lifts(ctx)?;
        let rank = lift_rank(&ls.iter().collect::<Vec<_>>());
        let ds = divisors(ctx)?;
        if !ds.iter().all(DivisorRecord::is_effective) {
            return Ok("a canonical divisor is not effective".into());
        }
        Ok(format!("p_g >= {rank}"))
    }));

    let divs: [(&'static str, usize, &'static str); 3] = [
        ("thm3.3.divisor.omega0", 0, "4HZ2+D1+D2"),
        ("thm3.3.divisor.omega1", 1, "4HZ0+3D1+3D2"),
        ("thm3.3.divisor.omega2", 2, "2HZ0+2HZ2+2D1+2D2"),
    ];
    for (id, k, want) in divs {
        out.push(fixed(id, Printed, want, move |ctx| Ok(divisors(ctx)?[k].to_string())));
    }
    out.push(fixed("thm3.3.effective", Printed, "true,true,true", |ctx| {
        Ok(joined(divisors(ctx)?.iter().map(DivisorRecord::is_effective)))
    }));
    out.push(fixed("thm3.3.divisor.sum_relation", Printed, "w0+w1 = 2w2", |ctx| {
        let rels = divisor_relations(&divisors(ctx)?);
        let ids: Vec<String> = rels.iter().filter(|r| matches!(r, Relation::Identity(_))).map(|r| r.to_string()).collect();
        Ok(if ids.is_empty() { "no identity".into() } else { ids.join("; ") })
    }));
    out.push(fixed("cor3.4.relation", Printed, "2HZ0-2HZ2+D1+D2 ~ 0", |ctx| {
        let d = divisors(ctx)?;
        let rels = divisor_relations(&[d[0].clone(), d[1].clone()]);
        let pic: Vec<String> = rels.iter().filter(|r| matches!(r, Relation::Picard(_))).map(|r| r.to_string()).collect();
        Ok(pic.join("; "))
    }));

    out.push(fixed("sec3.cusp.v1", Printed, "r=1 D1", |_| {
        let (r, c) = cusp_invariant([0, 0, 1, 0]).map_err(err)?;
        Ok(format!("r={r} {c}"))
    }));
    out.push(fixed("sec3.cusp.v2", Printed, "r=2 D2", |_| {
        let (r, c) = cusp_invariant([0, 0, 2, 1]).map_err(err)?;
        Ok(format!("r={r} {c}"))
    }));
}

fn lemma_checks(out: &mut Vec<Check>) {
    out.push(fixed("lemma1.1.polydiv.f2", Printed, "false", |_| poly_fact(2, &[1, 1, 1])));
    out.push(fixed("lemma1.1.polydiv.f3.deg1", Printed, "false", |_| poly_fact(3, &[1, 1])));
    out.push(fixed("lemma1.1.polydiv.f3.deg4", Printed, "false", |_| poly_fact(3, &[1, 1, 1, 1, 1])));
    out.push(fixed("lemma1.1.polydiv.exhaustive", Derived, "F2:1,1,1,1 F3:1,1,1,1", |_| {
        Ok(format!("F2:{} F3:{}", joined(monic_divisor_counts(2)?), joined(monic_divisor_counts(3)?)))
    }));
    out.push(seeded(fixed("lemma1.1.charpoly.unipotent", Printed, "1000/1000 UNIPOTENT_CLASS", |ctx| {
        class_count(ctx, false, CharpolyClass::Unipotent)
    })));
    out.push(seeded(fixed("lemma1.1.charpoly.zeta", Printed, "1000/1000 ZETA_CLASS", |ctx| {
        class_count(ctx, true, CharpolyClass::Zeta)
    })));
    for (id, name) in [("lemma1.1.torsion.zeta", "ZETA"), ("lemma1.1.torsion.zeta_heis", "ZETA_HEIS")] {
        out.push(fixed(id, Printed, "2", move |_| Ok(torsion_order(&builtin(name).map_err(err)?, 12).map_err(err)?.to_string())));
    }
    for (id, name, rel, disc) in [
        ("lemma1.1.fixed.zeta", "ZETA", "ZETA0", 1),
        ("lemma1.1.fixed.zeta_heis", "ZETA_HEIS", "ZETA_HEIS", 4),
    ] {
        let want: &'static str = if disc == 1 { "fixed on 10 points; discriminant 1" } else { "fixed on 10 points; discriminant 4" };
        out.push(seeded(fixed(id, Printed, want, move |ctx| {
            let r = relation(rel);
            let fixed = fixed_on(&builtin(name).map_err(err)?, &r, ctx.seed)?;
            Ok(format!("{fixed}; discriminant {}", r.discriminant().map_err(err)?))
        })));
    }
}

fn prop21_checks(out: &mut Vec<Check>) {
    out.push(dual("prop2.1.j6_identity", Printed, |_| {
        let printed = sp([
            [(0, 1), (0, 1), (-1, 1), (0, 1)],
            [(0, 1), (0, 1), (0, 1), (-6, 1)],
            [(1, 1), (0, 1), (0, 1), (0, 1)],
            [(0, 1), (1, 6), (0, 1), (0, 1)],
        ]);
        let i = builtin("I").map_err(err)?;
        let v = builtin("V6").map_err(err)?;
        let computed = &(&(&i * &v) * &i) * &v;
        Ok(Outcome { expected: printed.to_string(), actual: computed.to_string() })
    }));
    out.push(dual("prop2.1.nu6_j6", Printed, |_| {
        let z = (0, 1);
        let printed = sp([[z, z, (-1, 1), z], [z, z, z, (-1, 1)], [(1, 1), z, z, z], [z, (1, 1), z, z]]);
        let computed = nu6(&builtin("J6").map_err(err)?);
        Ok(Outcome { expected: printed.to_string(), actual: computed.to_string() })
    }));
    out.push(seeded(fixed("prop2.1.factorize.roundtrip", Derived, "200/200 round-trips", |ctx| {
        const N: u64 = 200;
        let mut ok = 0;
        for i in 0..N {
            let m = sample_group_element(GroupId::GammaNatTilde, 8, ctx.seed.wrapping_add(i)).map_err(err)?;
            let w = factorize_nat(&m).map_err(err)?;
            if w.product() == m && w.expand().product() == m {
                ok += 1;
            }
        }
        Ok(format!("{ok}/{N} round-trips"))
    })));
    for (id, d) in [("prop2.1.eta.D8", 8u32), ("prop2.1.eta.D12", 12), ("prop2.1.eta.D16", 16)] {
        out.push(seeded(fixed(id, Printed, "trivial on 500 samples", move |ctx| {
            let t = character_triviality(d, 500, ctx.seed).map_err(err)?;
            Ok(if t { "trivial on 500 samples".into() } else { "nontrivial".into() })
        })));
    }
    out.push(fixed("prop2.1.eta.generators", Derived, "1,6,9", |_| {
        let v = [m2(1, 1, 0, 1), m2(-1, 0, 0, -1), m2(0, -1, 1, 0)]
            .iter()
            .map(|g| eta_multiplier_sq_checked(g).map_err(err))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(joined(v))
    }));
    out.push(fixed("prop2.1.eta.off_gamma6", Derived, "false", |_| {
        Ok(bilevel::finite::character_trivial_at(8, &m2(1, 1, 0, 1)).map_err(err)?.to_string())
    }));
}

fn prop32_checks(out: &mut Vec<Check>) {
    out.push(fixed("prop3.2.psl2.order", Derived, "72", |_| Ok(enumerate_psl2(6).map_err(err)?.len().to_string())));
    out.push(dual("prop3.2.beta.images", Printed, |_| {
        let want = [PSL2Elt::new(6, 0, 1, -1, 0).map_err(err)?, PSL2Elt::new(6, -1, -1, 1, 0).map_err(err)?];
        let got = [int_block(&builtin("BETA").map_err(err)?)?, int_block(&builtin("BETAP").map_err(err)?)?];
        Ok(Outcome { expected: format!("{}; {}", want[0], want[1]), actual: format!("{}; {}", got[0], got[1]) })
    }));
    out.push(fixed("prop3.2.beta.generate", Printed, "1", |_| {
        let gens = [int_block(&builtin("BETA").map_err(err)?)?, int_block(&builtin("BETAP").map_err(err)?)?];
        Ok(subgroup_index(&gens, 6).map_err(err)?.to_string())
    }));
    out.push(fixed("prop3.2.stabilizer.index", Printed, "3", |_| {
        // upper-right entry even: generated by [[1,2],[0,1]], [[1,0],[1,1]], −I
        let gens = [
            PSL2Elt::new(6, 1, 2, 0, 1).map_err(err)?,
            PSL2Elt::new(6, 1, 0, 1, 1).map_err(err)?,
            PSL2Elt::new(6, -1, 0, 0, -1).map_err(err)?,
        ];
        Ok(subgroup_index(&gens, 6).map_err(err)?.to_string())
    }));
    out.push(fixed("prop3.2.branch_count", Printed, "7 = 1+3+1+1+1", |_| {
        let r = branch_component_count().map_err(err)?;
        let parts: Vec<String> = r.counts().iter().map(|c| c.map_or("?".to_string(), |v| v.to_string())).collect();
        let total = r.total.map_or("?".to_string(), |t| t.to_string());
        Ok(format!("{total} = {}", parts.join("+")))
    }));
    out.push(fixed("prop3.2.discriminants", Printed, "1,4,1,4,4", |_| {
        let v = catalog().into_iter().take(5).map(|(_, r)| r.discriminant().map_err(err)).collect::<Result<Vec<_>, _>>()?;
        Ok(joined(v))
    }));
    for (id, name) in [
        ("sec3.fixed.zeta0", "ZETA0"),
        ("sec3.fixed.zeta1", "ZETA1"),
        ("sec3.fixed.zeta2", "ZETA2"),
        ("sec3.fixed.zeta3", "ZETA3"),
        ("sec3.fixed.zeta4", "ZETA4"),
    ] {
        out.push(seeded(fixed(id, Printed, "fixed on 10 points", move |ctx| {
            fixed_on(&builtin(name).map_err(err)?, &relation(name), ctx.seed)
        })));
    }
    out.push(seeded(fixed("sec3.fixed.zeta0_other_relation", Derived, "moved", |ctx| {
        fixed_on(&builtin("ZETA0").map_err(err)?, &relation("ZETA3"), ctx.seed)
    })));
    out.push(fixed("thm3.3.unipotent.min_n", Printed, "36", |_| {
        for n in 1..=72 {
            if in_group(&p_prime(n), GroupId::GammaBil(6)).map_err(err)? {
                return Ok(n.to_string());
            }
        }
        Ok("none up to 72".into())
    }));
}

/// Every registered check, in registration order.
pub fn registry() -> Vec<Check> {
    let mut out = Vec::new();
    jacobi_checks(&mut out);
    lift_checks(&mut out);
    lemma_checks(&mut out);
    prop21_checks(&mut out);
    prop32_checks(&mut out);
    out
}
