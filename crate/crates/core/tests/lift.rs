use bilevel::jacobi::{lift_input, lift_input_cached, LiftInputId, STANDARD_QPREC};
use bilevel::lift::*;
use bilevel::{Exponent, IntSeries};
use num_bigint::BigInt;

fn ei(n: i64) -> Exponent {
    Exponent::from_integer(n)
}

fn ex(n: i64, d: i64) -> Exponent {
    Exponent::new(n, d)
}

const MATRIX: [[i64; 3]; 3] = [[1, 5, 1], [5, 1, 1], [3, 3, 1]];
const COLUMNS: [(i64, i64); 3] = [(1, 1), (1, 5), (4, 2)];

#[test]
fn multiplicity_matrix() {
    for (id, row) in LiftInputId::ALL.into_iter().zip(MATRIX) {
        for ((d, b), want) in COLUMNS.into_iter().zip(row) {
            assert_eq!(humbert_multiplicity(id, d, b).unwrap(), BigInt::from(want), "{id} m({d},{b})");
        }
    }
}

#[test]
fn raw_sum_agrees_with_reduction() {
    // b and −b give the same surface; Δ = 4, b = 1 is read as b = 2
    let queries = [(1, 1), (1, -1), (1, 5), (1, -5), (4, 2), (4, -2), (4, 1)];
    for id in LiftInputId::ALL {
        let big: IntSeries = lift_input(id, ei(37)).unwrap();
        let small = lift_input_cached(id, STANDARD_QPREC).unwrap();
        for (d, b) in queries {
            assert_eq!(
                humbert_multiplicity_raw(&big, d, b).unwrap(),
                humbert_multiplicity_of(&small, d, b).unwrap(),
                "{id} ({d},{b})"
            );
        }
        assert!(humbert_multiplicity_raw(&small, 1, 5).is_err());
    }
}

#[test]
fn invalid_humbert_queries() {
    for (d, b) in [(1, 2), (4, 3), (2, 1), (9, 3)] {
        assert_eq!(HumbertQuery::new(d, b), Err(LiftError::InvalidQuery { delta: d, b }));
    }
    assert_eq!(HumbertQuery::new(4, 1).unwrap().b, 2);
    assert_eq!(HumbertQuery::new(1, 5).unwrap().a, 1);
    assert_eq!(HumbertQuery::new(1, 1).unwrap().d_max(), 6);
    assert_eq!(HumbertQuery::new(4, 2).unwrap().d_max(), 3);
}

#[test]
fn leading_exponents_and_cusp_orders() {
    let want = [(ex(1, 3), ei(1), ei(2)), (ex(2, 3), ei(3), ei(4)), (ex(1, 2), ei(2), ei(3))];
    let orders = [2, 4, 3];
    for ((id, (a, b, c)), o) in LiftInputId::ALL.into_iter().zip(want).zip(orders) {
        let l = leading_exponents(id).unwrap();
        assert_eq!((l.a, l.b, l.c), (a, b, c), "{id}");
        assert_eq!(cusp_vanishing_order(&l, Cusp::D1).unwrap(), o);
        assert_eq!(cusp_vanishing_order(&l, Cusp::D2).unwrap(), o);
    }
}

#[test]
fn cusp_invariants() {
    assert_eq!(cusp_invariant([0, 0, 1, 0]).unwrap(), (1, Cusp::D1));
    assert_eq!(cusp_invariant([0, 0, 2, 1]).unwrap(), (2, Cusp::D2));
    assert_eq!(cusp_invariant([3, 1, 0, 0]).unwrap(), (3, Cusp::D2));
    assert_eq!(cusp_invariant([6, 1, 0, 0]).unwrap(), (6, Cusp::D1));
    assert_eq!(cusp_invariant([2, 0, 4, 0]), Err(LiftError::NonPrimitiveVector([2, 0, 4, 0])));
    assert_eq!(Cusp::parse("d2"), Some(Cusp::D2));
    assert_eq!(Cusp::parse("D3"), None);
}

#[test]
fn canonical_divisors_and_relations() {
    let ds: Vec<DivisorRecord> = LiftInputId::ALL.iter().map(|&id| canonical_divisor(id).unwrap()).collect();
    let shown: Vec<String> = ds.iter().map(|d| d.to_string()).collect();
    assert_eq!(shown, ["4HZ2+D1+D2", "4HZ0+3D1+3D2", "2HZ0+2HZ2+2D1+2D2"]);
    assert!(ds.iter().all(DivisorRecord::is_effective));

    let rels = divisor_relations(&ds);
    assert_eq!(rels[0], Relation::Identity(vec![1, 1, -2]));
    assert_eq!(rels[0].to_string(), "w0+w1 = 2w2");
    let picard: Vec<String> = rels.iter().filter(|r| matches!(r, Relation::Picard(_))).map(|r| r.to_string()).collect();
    // every pairwise difference gives the same relation up to sign and content
    assert_eq!(picard, ["2HZ0-2HZ2+D1+D2 ~ 0"]);
}

#[test]
fn divisor_assembly_rejects_missing_components() {
    assert!(matches!(canonical_divisor_from(0, 1, 1, 1, 1), Err(LiftError::NegativeCoefficient(..))));
    let d = canonical_divisor_from(1, 1, 2, 1, 1).unwrap();
    assert_eq!(d.to_string(), "HZ1+HZ1P+HZ1PP+HZ3+HZ4");
    assert_eq!(divisor_relations(&[d.clone()]), vec![Relation::Picard(DivisorRecord::default())]);
    assert!(d.sub(&d).is_zero());
}

fn lifts() -> Vec<TripleSeries> {
    LiftInputId::ALL.iter().map(|&id| exp_lift_truncated(id, ei(DEFAULT_BOUND)).unwrap()).collect()
}

#[test]
fn products_start_at_the_leading_monomial() {
    for (id, t) in LiftInputId::ALL.into_iter().zip(lifts()) {
        let l = leading_exponents(id).unwrap();
        assert_eq!(t.min_degree(), Some(l.a + l.c));
        assert_eq!(t.min_q_s(), Some((l.a, l.c)));
        assert_eq!(t.coeff(l.a, l.b, l.c), BigInt::from(1));
    }
}

#[test]
fn product_identity_and_rank() {
    let ls = lifts();
    let lhs = ls[0].mul(&ls[1]);
    let rhs = ls[2].mul(&ls[2]);
    let bound = lhs.bound().min(rhs.bound());
    let (lhs, rhs) = (lhs.truncate(bound), rhs.truncate(bound));
    assert!(lhs.len() > 100, "{}", lhs.len());
    assert_eq!(lhs, rhs);
    assert_ne!(ls[0].mul(&ls[0]).truncate(bound), rhs);
    assert_eq!(lift_rank(&ls.iter().collect::<Vec<_>>()), 3);
    assert_eq!(lift_rank(&[&ls[0], &ls[0]]), 1);
    assert_eq!(lift_rank(&[]), 0);
}

#[test]
fn products_are_symmetric_under_swapping_q_and_s() {
    // coefficient of q^a r^b s^c equals that of q^{c/6} r^b s^{6a}
    for t in lifts() {
        let mut compared = 0;
        for ((a, b, c), v) in t.iter() {
            let (a2, c2) = (*c / 6, *a * 6);
            if a2 + c2 < t.bound() {
                assert_eq!(&t.coeff(a2, *b, c2), v, "({a},{b},{c})");
                compared += 1;
            }
        }
        assert!(compared >= 20, "{compared}");
    }
}

#[test]
fn truncation_is_consistent() {
    let ls = lifts();
    let coarse: Vec<TripleSeries> =
        LiftInputId::ALL.iter().map(|&id| exp_lift_truncated(id, ei(8)).unwrap()).collect();
    for (fine, coarse) in ls.iter().zip(&coarse) {
        assert_eq!(&fine.truncate(ei(8)), coarse);
    }
}

#[test]
fn product_export_is_sorted() {
    let t = exp_lift_truncated(LiftInputId::Phi3P, ei(6)).unwrap();
    let v = t.to_json("F3p");
    assert_eq!(v["version"], 1);
    assert_eq!(v["bound"], "6/1");
    let keys: Vec<(Exponent, Exponent, Exponent)> = t.iter().map(|(k, _)| *k).collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
    assert_eq!(v["coeffs"].as_array().unwrap().len(), t.len());
}
