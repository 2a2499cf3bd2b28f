use bilevel::finite::*;
use bilevel::symplectic::builtin;
use bilevel::symplectic::to_integer;
use bilevel::{IntMatrix2, Rational};
use num_integer::Integer as _;
use num_traits::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn m2(a: i64, b: i64, c: i64, d: i64) -> IntMatrix2 {
    IntMatrix2::new(a.into(), b.into(), c.into(), d.into())
}

#[test]
fn psl2_orders() {
    assert_eq!(enumerate_psl2(6).unwrap().len(), 72);
    assert_eq!(enumerate_psl2(2).unwrap().len(), 6);
    assert_eq!(enumerate_psl2(3).unwrap().len(), 12);
    assert_eq!(enumerate_psl2(1).unwrap().len(), 1);
    assert_eq!(enumerate_psl2(0), Err(FiniteError::InvalidModulus));
}

#[test]
fn psl2_normalization_identifies_sign() {
    let a = PSL2Elt::new(6, 1, 1, 0, 1).unwrap();
    let b = PSL2Elt::new(6, -1, -1, 0, -1).unwrap();
    assert_eq!(a, b);
    assert_eq!(a.mul(&a.inverse()), PSL2Elt::identity(6));
    assert!(PSL2Elt::new(6, 2, 0, 0, 2).is_err());
}

#[test]
fn psl2_closed_and_lagrange() {
    let all = enumerate_psl2(6).unwrap();
    let set: std::collections::BTreeSet<_> = all.iter().copied().collect();
    for x in &all {
        assert!(set.contains(&x.inverse()));
        for y in all.iter().step_by(7) {
            assert!(set.contains(&x.mul(y)));
        }
    }
    for x in &all {
        assert_eq!(72 % closure(&[*x], 6).len(), 0);
    }
}

#[test]
fn psl2_six_order_statistics_match_crt() {
    // element orders in PSL(2,Z/6) ≅ (SL(2,Z/2) × SL(2,Z/3))/±1
    let order = |x: &PSL2Elt, n: u64| {
        let mut y = *x;
        let mut k = 1;
        while y != PSL2Elt::identity(n) {
            y = y.mul(x);
            k += 1;
        }
        k
    };
    let mut direct = std::collections::BTreeMap::new();
    for x in enumerate_psl2(6).unwrap() {
        *direct.entry(order(&x, 6)).or_insert(0) += 1;
    }
    let mut crt = std::collections::BTreeMap::new();
    for a in enumerate_psl2(2).unwrap() {
        for b in enumerate_psl2(3).unwrap() {
            let o = order(&a, 2).lcm(&order(&b, 3));
            *crt.entry(o).or_insert(0) += 1;
        }
    }
    assert_eq!(direct, crt);
}

#[test]
fn subgroup_indices() {
    assert_eq!(subgroup_index(&[PSL2Elt::identity(6)], 6).unwrap(), 72);
    let beta = block_image(&to_integer(&builtin("BETA").unwrap()).unwrap(), 6).unwrap();
    let betap = block_image(&to_integer(&builtin("BETAP").unwrap()).unwrap(), 6).unwrap();
    assert_eq!(beta, PSL2Elt::new(6, 0, 1, -1, 0).unwrap());
    assert_eq!(betap, PSL2Elt::new(6, -1, -1, 1, 0).unwrap());
    assert_eq!(subgroup_index(&[beta, betap], 6).unwrap(), 1);
    // transposed Γ₀(2): generated by L = [[1,0],[1,1]], T², and a 3-part
    let gens = [PSL2Elt::new(6, 1, 0, 1, 1).unwrap(), PSL2Elt::new(6, 1, 2, 0, 1).unwrap()];
    assert_eq!(subgroup_index(&gens, 6).unwrap(), 3);
    assert!(subgroup_index(&[PSL2Elt::identity(2)], 6).is_err());
}

#[test]
fn printed_betas_reduce_as_stated() {
    // blocks of the printed matrices are the stated classes even though the
    // matrices themselves are not symplectic
    let beta = block_image(&to_integer(&builtin("BETA_PRINTED").unwrap()).unwrap(), 6).unwrap();
    assert_eq!(beta, PSL2Elt::new(6, 0, 1, -1, 0).unwrap());
}

#[test]
fn branch_counts_from_verified_elements() {
    let r = branch_component_count().unwrap();
    assert_eq!(r.counts(), vec![Some(1), Some(3), Some(1), Some(3), Some(3)]);
    assert_eq!(r.total, Some(11));
    assert_eq!(r.claimed, [1, 3, 1, 1, 1]);
    assert!(!r.matches_claim());
}

#[test]
fn dedekind_sum_reciprocity_matches_definition() {
    // s(h,k) = Σ_{r=1}^{k−1} ((r/k))((hr/k))
    let saw = |x: Rational| -> Rational {
        if x.is_integer() {
            Rational::zero()
        } else {
            x.clone() - x.floor() - Rational::new(1.into(), 2.into())
        }
    };
    for k in 1..40i64 {
        for h in -40..40i64 {
            if h.gcd(&k) != 1 {
                continue;
            }
            let naive: Rational =
                (1..k).map(|r| saw(Rational::new(r.into(), k.into())) * saw(Rational::new((h * r).into(), k.into()))).sum();
            assert_eq!(dedekind_sum(&h.into(), &k.into()), naive, "s({h},{k})");
        }
    }
}

#[test]
fn eta_exponents_of_generators() {
    assert_eq!(eta_multiplier_sq(&m2(1, 0, 0, 1)).unwrap(), 0);
    assert_eq!(eta_multiplier_sq(&m2(1, 1, 0, 1)).unwrap(), 1);
    assert_eq!(eta_multiplier_sq(&m2(-1, 0, 0, -1)).unwrap(), 6);
    assert_eq!(eta_multiplier_sq(&m2(0, -1, 1, 0)).unwrap(), 9);
    assert!(matches!(eta_multiplier_sq(&m2(2, 0, 0, 1)), Err(FiniteError::NotUnimodular(_))));
}

#[test]
fn eta_numeric_oracle_on_generators() {
    assert_eq!(eta_multiplier_sq_numeric(&m2(1, 0, 0, 1)).unwrap(), 0);
    assert_eq!(eta_multiplier_sq_numeric(&m2(1, 1, 0, 1)).unwrap(), 1);
    assert_eq!(eta_multiplier_sq_numeric(&m2(-1, 0, 0, -1)).unwrap(), 6);
    assert_eq!(eta_multiplier_sq_numeric(&m2(0, -1, 1, 0)).unwrap(), 9);
    assert_eq!(eta_multiplier_sq_numeric(&m2(0, 1, -1, 0)).unwrap(), 3);
}

#[test]
fn eta_formula_agrees_with_oracle_on_random_words() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..200 {
        let g = sample_sl2(12, &mut rng);
        eta_multiplier_sq_checked(&g).unwrap();
    }
}

#[test]
fn oracle_refuses_large_entries() {
    let g = m2(1, 0, 3001, 1);
    assert!(matches!(eta_multiplier_sq_numeric(&g), Err(FiniteError::OracleOutOfRange(_))));
    assert!(eta_multiplier_sq(&g).is_ok());
}

#[test]
fn character_order_on_sl2() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut seen = [std::collections::BTreeSet::new(), std::collections::BTreeSet::new(), std::collections::BTreeSet::new()];
    for i in 0..200 {
        let w = eta_multiplier_sq(&sample_sl2(10 + i % 2, &mut rng)).unwrap() as u32;
        for (slot, d) in seen.iter_mut().zip([8u32, 12, 16]) {
            slot.insert(w * d / 2 % 12);
        }
    }
    assert_eq!(seen[0], [0, 4, 8].into());
    assert_eq!(seen[1], [0, 6].into());
    assert_eq!(seen[2], [0, 4, 8].into());
}

#[test]
fn pm_gamma6_samples_are_congruent() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..100 {
        let g = sample_pm_gamma6(&mut rng);
        let six = bilevel::Integer::from(6);
        assert!(g.0[0][1].is_multiple_of(&six) && g.0[1][0].is_multiple_of(&six));
        let a = g.0[0][0].mod_floor(&six);
        assert!(a == 1.into() || a == 5.into());
    }
}

#[test]
fn characters_trivial_on_pm_gamma6() {
    for d in [8, 12, 16] {
        assert!(character_triviality(d, 100, d as u64).unwrap());
    }
}

#[test]
fn character_nontrivial_off_gamma6() {
    assert!(!character_trivial_at(8, &m2(1, 1, 0, 1)).unwrap());
    assert!(character_trivial_at(24, &m2(1, 1, 0, 1)).unwrap());
    assert!(character_trivial_at(7, &m2(1, 1, 0, 1)).is_err());
}
