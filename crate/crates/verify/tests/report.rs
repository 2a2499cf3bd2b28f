use std::fs;

use bilevel_verify::forms::{build_cache, cache_path, clear_cache, read_cached, FormSource, CACHED_FORMS};
use bilevel_verify::report::{check_ids, derive_seed, run_all, run_check, run_selected, RunError, RunOptions, Status};
use serde_json::Value;

#[test]
fn ids_are_unique_and_sorted() {
    let ids = check_ids();
    let mut d = ids.clone();
    d.dedup();
    assert_eq!(d, ids);
    for want in [
        "lemma1.1.polydiv.f2",
        "prop2.1.factorize.roundtrip",
        "prop3.1.m15.F3",
        "thm3.3.divisor.omega2",
        "cor3.4.relation",
        "prop3.5.rank",
        "thmA.pg",
    ] {
        assert!(ids.contains(&want), "{want}");
    }
}

#[test]
fn single_check_passes_with_printed_value() {
    let r = run_check("prop3.1.m11.F3", &RunOptions::default()).unwrap();
    assert_eq!(r.status, Status::Pass);
    assert_eq!(r.expected, "1");
    assert_eq!(r.seed, None);
    assert_eq!(r.elapsed_ms, None);
}

#[test]
fn unknown_check_is_an_error() {
    assert_eq!(run_check("unknown.check", &RunOptions::default()).unwrap_err(), RunError::UnknownCheck("unknown.check".into()));
    assert!(run_selected(&["prop3.5.rank", "nope"], &RunOptions::default()).is_err());
}

#[test]
fn seeded_check_is_reproducible() {
    let opts = RunOptions { seed: 42, ..Default::default() };
    let a = run_check("prop2.1.factorize.roundtrip", &opts).unwrap();
    let b = run_check("prop2.1.factorize.roundtrip", &opts).unwrap();
    assert_eq!(a.status, Status::Pass);
    assert_eq!(a, b);
    assert_eq!(a.seed, Some(derive_seed(42, "prop2.1.factorize.roundtrip")));
}

#[test]
fn derived_seeds_depend_on_seed_and_id() {
    assert_ne!(derive_seed(0, "a"), derive_seed(1, "a"));
    assert_ne!(derive_seed(0, "a"), derive_seed(0, "b"));
    assert_eq!(derive_seed(7, "x"), derive_seed(7, "x"));
}

#[test]
fn selected_report_is_sorted_and_tallied() {
    let ids = ["prop3.5.rank", "prop3.2.branch_count", "cor3.4.relation"];
    let r = run_selected(&ids, &RunOptions::default()).unwrap();
    let got: Vec<&str> = r.checks.iter().map(|c| c.id.as_str()).collect();
    assert_eq!(got, ["cor3.4.relation", "prop3.2.branch_count", "prop3.5.rank"]);
    assert_eq!(r.summary.pass + r.summary.fail + r.summary.error, 3);
    assert_eq!(r.summary.fail, 1);
    assert!(!r.all_pass());
}

#[test]
fn report_json_schema() {
    let r = run_selected(&["sec3.cusp.v1", "lemma1.1.torsion.zeta"], &RunOptions::default()).unwrap();
    let v: Value = serde_json::from_str(&r.to_json()).unwrap();
    assert_eq!(v["version"], 1);
    assert_eq!(v["seed"], 0);
    assert_eq!(v["summary"]["pass"], 2);
    let c = &v["checks"][0];
    assert_eq!(c["status"], "pass");
    assert_eq!(c["provenance"], "PRINTED");
    assert!(c.get("elapsed_ms").is_none());
    let timed = run_selected(&["sec3.cusp.v1"], &RunOptions { timings: true, ..Default::default() }).unwrap();
    assert!(timed.checks[0].elapsed_ms.is_some());
}

#[test]
fn full_run_is_deterministic_and_only_the_branch_count_fails() {
    let a = run_all(&RunOptions::default());
    let b = run_all(&RunOptions::default());
    assert_eq!(a.to_json(), b.to_json());
    let bad: Vec<&str> = a.checks.iter().filter(|c| c.status != Status::Pass).map(|c| c.id.as_str()).collect();
    assert_eq!(bad, ["prop3.2.branch_count"]);
}

#[test]
fn cache_round_trip_gives_same_results() {
    let dir = tempfile::tempdir().unwrap();
    let paths = build_cache(dir.path()).unwrap();
    assert_eq!(paths.len(), CACHED_FORMS.len());
    let (name, _) = read_cached(&cache_path(dir.path(), "phi3")).unwrap();
    assert_eq!(name, "phi3");
    let opts = RunOptions { forms: FormSource { cache: Some(dir.path().to_path_buf()) }, ..Default::default() };
    let ids = ["prop3.1.m15.F3", "thm3.3.divisor.omega0", "sec2.phi02.q1"];
    let cached = run_selected(&ids, &opts).unwrap();
    let fresh = run_selected(&ids, &RunOptions::default()).unwrap();
    assert_eq!(cached, fresh);
    assert_eq!(clear_cache(dir.path()).unwrap(), CACHED_FORMS.len());
    assert_eq!(clear_cache(dir.path()).unwrap(), 0);
}

/// Changes the constant term of the cached phi3 from 6 to 7.
fn corrupt_phi3(dir: &std::path::Path) {
    let path = cache_path(dir, "phi3");
    let mut v: Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    let coeffs = v["coeffs"].as_array_mut().unwrap();
    let entry = coeffs.iter_mut().find(|c| c[0] == "0/1" && c[1] == "0/1").expect("constant term present");
    assert_eq!(entry[2], "6");
    entry[2] = Value::from("7");
    fs::write(&path, serde_json::to_string(&v).unwrap()).unwrap();
}

#[test]
fn corrupted_cache_is_detected() {
    let dir = tempfile::tempdir().unwrap();
    build_cache(dir.path()).unwrap();
    corrupt_phi3(dir.path());
    let opts = RunOptions { forms: FormSource { cache: Some(dir.path().to_path_buf()) }, ..Default::default() };
    let r = run_all(&opts);
    assert!(!r.all_pass());
    let bad: Vec<&str> = r.checks.iter().filter(|c| c.status != Status::Pass).map(|c| c.id.as_str()).collect();
    assert!(bad.contains(&"prop3.1.phi3.q0"), "{bad:?}");
    assert!(bad.contains(&"sec2.lift_inputs.identity"), "{bad:?}");
}

#[test]
fn unreadable_cache_is_an_error_not_a_panic() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(cache_path(dir.path(), "phi3"), "{ not json").unwrap();
    let opts = RunOptions { forms: FormSource { cache: Some(dir.path().to_path_buf()) }, ..Default::default() };
    let r = run_check("prop3.1.phi3.q0", &opts).unwrap();
    assert_eq!(r.status, Status::Error);
    assert!(r.actual.contains("phi3.json"), "{}", r.actual);
}
