use bilevel::algebra::{GaussNum, Mat4, QuadNum};
use bilevel::symplectic::*;
use bilevel::{IntMatrix2, Rational, SpMatrix};
use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn b(name: &str) -> SpMatrix {
    builtin(name).unwrap()
}

fn int_entries(m: &SpMatrix) -> Vec<Vec<i64>> {
    let i = to_integer(m).unwrap();
    i.0.iter().map(|r| r.iter().map(|x| i64::try_from(x.clone()).unwrap()).collect()).collect()
}

fn g(a: i64, bb: i64, c: i64, d: i64) -> IntMatrix2 {
    IntMatrix2::new(a.into(), bb.into(), c.into(), d.into())
}

/// A point off every relation in the catalog.
fn point(seed: u64) -> SiegelPoint {
    let r = |n: i64, d: i64| Rational::new(n.into(), d.into());
    let s = (seed % 97) as i64;
    SiegelPoint::new(
        GaussNum::new(r(s, 7), r(3, 2)),
        GaussNum::new(r(-1, 5), r(1, 3)),
        GaussNum::new(r(2, 3), r(2 + s % 5, 1)),
    )
    .unwrap()
}

#[test]
fn symplectic_builtins() {
    for name in BUILTIN_NAMES {
        let m = b(name);
        let want = !name.ends_with("_PRINTED") && name != "R6";
        assert_eq!(is_symplectic(&m), want, "{name}");
    }
    assert!(matches!(builtin("ZETA9"), Err(SymplecticError::UnknownBuiltin(_))));
}

#[test]
fn j6_and_its_conjugate() {
    let j6 = to_rational(&b("J6")).unwrap();
    let r = |n: i64, d: i64| Rational::new(n.into(), d.into());
    let want = [[0, 0, -1, 0], [0, 0, 0, -6], [1, 0, 0, 0], [0, 0, 0, 0]];
    for (i, row) in want.iter().enumerate() {
        for (k, &v) in row.iter().enumerate() {
            let e = if (i, k) == (3, 1) { r(1, 6) } else { r(v, 1) };
            assert_eq!(j6.0[i][k], e, "({i},{k})");
        }
    }
    assert!(to_integer(&b("J6")).is_err());
    assert_eq!(
        int_entries(&b("J6_TILDE")),
        [[0, 0, -1, 0], [0, 0, 0, -1], [1, 0, 0, 0], [0, 1, 0, 0]].iter().map(|r| r.to_vec()).collect::<Vec<_>>()
    );
    assert_eq!(&b("J6_TILDE") * &b("J6_TILDE"), Mat4::identity().neg());
    // conjugating J̃₆ back gives J₆, which has a 1/6 entry
    assert!(!in_group(&b("J6_TILDE"), GroupId::GammaNatTilde).unwrap());
    assert_eq!(nu6_inv(&nu6(&b("J6"))), b("J6"));
}

#[test]
fn congruence_patterns() {
    let zeta = b("ZETA");
    assert!(in_group(&zeta, GroupId::Sp4Z).unwrap());
    assert!(!in_group(&zeta, GroupId::GammaNat(6)).unwrap());
    assert!(in_group(&zeta, GroupId::GammaBil(6)).unwrap());
    assert!(in_group(&heisenberg(2, -1, 5), GroupId::Heisenberg).unwrap());
    assert!(in_group(&heisenberg(2, -1, 5), GroupId::GammaNat(6)).unwrap());
    assert!(in_group(&j(&g(7, 6, 36, 31), (1, 2, 3)).unwrap(), GroupId::JGamma6Heis).unwrap());
    assert!(!in_group(&j(&g(1, 1, 0, 1), (0, 0, 0)).unwrap(), GroupId::JGamma6Heis).unwrap());
    assert!(in_group(&Mat4::identity(), GroupId::Principal(6)).unwrap());
    assert!(!in_group(&zeta, GroupId::Principal(6)).unwrap());
    for name in ["ZETA0", "ZETA1", "ZETA2", "ZETA3", "ZETA4"] {
        assert!(in_group(&b(name), GroupId::GammaT(6)).unwrap(), "{name}");
    }
    assert!(matches!(in_group(&b("V6"), GroupId::Sp4Z), Err(SymplecticError::IrrationalEntry(_))));
    assert!(j1(&g(1, 1, 1, 1)).is_err());
}

#[test]
fn first_unipotent_in_the_bilevel_group() {
    let hits: Vec<i64> = (1..=80).filter(|&n| in_group(&p_prime(n), GroupId::GammaBil(6)).unwrap()).collect();
    assert_eq!(hits, [36, 72]);
    assert!((1..=80).all(|n| is_symplectic(&p_prime(n))));
}

#[test]
fn involutions_and_their_classes() {
    for name in ["ZETA", "ZETA_HEIS", "ZETA1", "ZETA2", "ZETA3", "ZETA4"] {
        assert_eq!(torsion_order(&b(name), 12).unwrap(), 2, "{name}");
    }
    assert_eq!(torsion_order(&Mat4::identity(), 12).unwrap(), 1);
    assert!(torsion_order(&heisenberg(1, 0, 0), 12).is_err());
    assert_eq!(charpoly_mod6_class(&b("ZETA")).unwrap(), CharpolyClass::Zeta);
    assert_eq!(charpoly_mod6_class(&heisenberg(1, 0, 0)).unwrap(), CharpolyClass::Unipotent);
    assert_eq!(charpoly_mod6_class(&b("THETA")).unwrap(), CharpolyClass::Other);
    assert_eq!(CharpolyClass::Zeta.to_string(), "ZETA_CLASS");
}

#[test]
fn fixed_loci() {
    let discs: Vec<i64> = catalog().iter().map(|(_, r)| r.discriminant().unwrap()).collect();
    assert_eq!(discs, [1, 4, 1, 4, 4, 4]);
    for (name, rel) in catalog() {
        assert!(fixed_relation_check(&b(name), &rel, 10, 7).unwrap(), "{name} on {rel}");
    }
    let other = &catalog()[3].1;
    assert!(!fixed_relation_check(&b("ZETA0"), other, 10, 7).unwrap());
    assert_eq!(catalog()[0].1.to_string(), "{τ2=0}");
    assert!(matches!(
        sample_point_on(&HumbertRelation::new(0, 0, 0, 0, 1), &mut ChaCha8Rng::seed_from_u64(0)),
        Err(SymplecticError::DegenerateRelation(_))
    ));
}

#[test]
fn points_off_the_half_space_are_rejected() {
    let r = |v: i64| Rational::from_integer(v.into());
    let z = GaussNum::new(r(0), r(-1));
    assert_eq!(SiegelPoint::new(z.clone(), GaussNum::zero(), z), Err(SymplecticError::NotInUpperHalfSpace));
}

#[test]
fn group_names_round_trip() {
    for s in ["SP4Z", "GAMMA_T(6)", "GAMMA_NAT(6)", "GAMMA_BIL(6)", "GAMMA_NAT_TILDE", "J_GAMMA6_HEIS", "HEISENBERG", "PRINCIPAL(3)"] {
        let id: GroupId = s.parse().unwrap();
        assert_eq!(id.to_string(), s);
    }
    assert_eq!("gamma_nat(6)".parse::<GroupId>().unwrap(), GroupId::GammaNat(6));
    for s in ["GAMMA_T(0)", "GAMMA_T", "NOPE", "GAMMA_NAT(x)"] {
        assert!(s.parse::<GroupId>().is_err(), "{s}");
    }
}

#[test]
fn matrix_json_round_trip() {
    for name in ["V6", "J6", "BETA", "ZETA4"] {
        let m = b(name);
        assert_eq!(io::from_json(&io::to_json(&m)).unwrap(), m, "{name}");
    }
}

#[test]
fn factor_tokens_expand_to_the_same_product() {
    let m = nu6(&heisenberg(1, 0, 0));
    let w = factorize_nat(&m).unwrap();
    assert_eq!(w.product(), m);
    assert_eq!(w.expand().product(), m);
    assert!(factorize_nat(&b("ZETA")).is_err());
    assert_eq!(FactorWord::default().to_string(), "I");
    assert_eq!(FactorToken::Sign.matrix(), Mat4::identity().neg());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn samples_lie_in_their_groups(seed in any::<u64>(), len in 1usize..10) {
        for grp in [GroupId::GammaNat(6), GroupId::GammaNatTilde, GroupId::GammaBil(6)] {
            let m = sample_group_element(grp, len, seed).unwrap();
            prop_assert!(in_group(&m, grp).unwrap());
        }
        let m = sample_group_element(GroupId::GammaNat(6), len, seed).unwrap();
        prop_assert!(is_symplectic(&m));
        prop_assert_eq!(charpoly_mod6_class(&m).unwrap(), CharpolyClass::Unipotent);
        prop_assert_eq!(charpoly_mod6_class(&(&b("ZETA") * &m)).unwrap(), CharpolyClass::Zeta);
        let n = sample_group_element(GroupId::GammaNat(6), len, seed ^ 1).unwrap();
        prop_assert!(in_group(&(&m * &n), GroupId::GammaNat(6)).unwrap());
        prop_assert_eq!(nu6_inv(&nu6(&m)), m);
    }

    #[test]
    fn action_is_a_group_action(seed in any::<u64>(), len in 1usize..6) {
        let m = sample_group_element(GroupId::GammaNat(6), len, seed).unwrap();
        let n = sample_group_element(GroupId::GammaBil(6), len, seed.wrapping_add(1)).unwrap();
        let z = point(seed);
        prop_assert_eq!(act(&Mat4::identity(), &z).unwrap(), z.clone());
        let mn = act(&(&m * &n), &z).unwrap();
        prop_assert!(mn.is_valid());
        prop_assert_eq!(mn, act(&m, &act(&n, &z).unwrap()).unwrap());
    }

    #[test]
    fn factorization_round_trips(seed in any::<u64>(), len in 1usize..8) {
        let m = sample_group_element(GroupId::GammaNatTilde, len, seed).unwrap();
        let w = factorize_nat(&m).unwrap();
        prop_assert_eq!(w.product(), m.clone());
        let e = w.expand();
        let basic = e.tokens.iter().all(|t| matches!(t, FactorToken::J6Tilde | FactorToken::Gamma6 { .. }));
        prop_assert!(basic, "{}", e);
        prop_assert_eq!(e.product(), m);
    }
}

#[test]
fn quad_entries_survive_conjugation() {
    let v = b("V6");
    let back = nu6_inv(&nu6(&v));
    assert_eq!(back, v);
    assert_eq!(v.0[1][0], QuadNum::sqrt6());
    assert!(v.0[0][0].is_zero() && !QuadNum::one().is_zero());
}
