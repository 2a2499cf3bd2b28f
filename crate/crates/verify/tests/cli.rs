use std::fs;
use std::process::{Command, Output};

use bilevel_verify::forms::{build, read_cached};
use bilevel::Exponent;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_bilevel6"));
    c.env_remove("BILEVEL6_CACHE_DIR");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn expand_prints_slices() {
    let o = run(&["expand", "phi02", "--qprec", "2"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("r^{±1}+4"), "{}", stdout(&o));
    let o = run(&["expand", "phi3", "--qprec", "1"]);
    assert!(stdout(&o).contains("r^{±2}+6"), "{}", stdout(&o));
}

#[test]
fn expand_json_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(&["expand", "phim21", "--qprec", "3", "--json"]);
    assert!(o.status.success());
    let path = dir.path().join("phim21.json");
    fs::write(&path, &o.stdout).unwrap();
    let (name, s) = read_cached(&path).unwrap();
    assert_eq!(name, "phim21");
    assert_eq!(s, build("phim21", Exponent::from_integer(3)).unwrap());
}

#[test]
fn unknown_form_is_a_usage_error() {
    let o = run(&["expand", "phi99"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn exit_codes() {
    let pass = run(&["verify", "prop3.1.m11.F3"]);
    assert_eq!(pass.status.code(), Some(0));
    assert!(stdout(&pass).contains("\"status\": \"pass\""));
    assert_eq!(run(&["verify", "prop3.2.branch_count"]).status.code(), Some(1));
    assert_eq!(run(&["verify", "unknown.check"]).status.code(), Some(2));
    assert_eq!(run(&["verify"]).status.code(), Some(2));
    assert_eq!(run(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(run(&["divisor", "omega-triple"]).status.code(), Some(2));
}

#[test]
fn verify_writes_the_same_report_it_prints() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let o = run(&["verify", "sec3.cusp.v2", "prop3.5.rank", "--seed", "3", "--json", path.to_str().unwrap()]);
    assert!(o.status.success());
    assert_eq!(fs::read(&path).unwrap(), o.stdout);
}

#[test]
fn lift_data_commands() {
    let line = |args: &[&str]| stdout(&run(args)).trim().to_string();
    assert_eq!(line(&["coeff", "phi3", "1", "5"]), "4");
    assert_eq!(line(&["coeff", "phi3pp", "1", "5"]), "2");
    assert_eq!(line(&["coeff", "phi3", "-1", "0"]), "0");
    assert_eq!(line(&["humbert", "phi3p", "--delta", "1", "--b", "1"]), "5");
    assert_eq!(line(&["cusp-order", "phi3p", "D2"]), "4");
    assert_eq!(line(&["divisor", "omega"]), "4HZ2+D1+D2");
    assert_eq!(line(&["divisor", "omega-prime"]), "4HZ0+3D1+3D2");
}

#[test]
fn lift_emits_versioned_json() {
    let o = run(&["lift", "phi3", "--bound", "4"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["version"], 1);
    assert_eq!(v["form"], "F3");
    assert_eq!(v["coeffs"][0], serde_json::json!(["1/3", "-1/1", "2/1", "-1"]));
}

#[test]
fn group_commands() {
    let line = |args: &[&str]| stdout(&run(args)).trim().to_string();
    assert_eq!(line(&["group", "charpoly", "--matrix", "builtin:ZETA"]), "ZETA_CLASS");
    assert_eq!(line(&["group", "order", "--matrix", "builtin:ZETA_HEIS"]), "2");
    assert_eq!(line(&["group", "in", "--matrix", "builtin:ZETA3", "--group", "GAMMA_T(6)"]), "true");
    assert_eq!(line(&["group", "in", "--matrix", "builtin:J6", "--group", "SP4Z"]), "false");
    assert_eq!(run(&["group", "in", "--matrix", "builtin:ZETA", "--group", "NOPE"]).status.code(), Some(2));
}

#[test]
fn group_reads_matrix_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("m.json");
    let nu = |a: &str| serde_json::json!([a, "0"]);
    // ν₆ of the Heisenberg element [1,0;0]
    let m = bilevel::symplectic::nu6(&bilevel::symplectic::heisenberg(1, 0, 0));
    fs::write(&path, serde_json::to_string(&bilevel::symplectic::io::to_json(&m)).unwrap()).unwrap();
    let o = run(&["group", "factorize", "--matrix", path.to_str().unwrap()]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).contains("\"token\""));

    let bad = serde_json::json!({"entries": [[nu("1"), nu("0")]]});
    fs::write(&path, bad.to_string()).unwrap();
    assert_eq!(run(&["group", "charpoly", "--matrix", path.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn branch_reports_the_mismatch() {
    let o = run(&["branch"]);
    assert_eq!(o.status.code(), Some(1));
    let s = stdout(&o);
    assert!(s.contains("total 11, claimed 7"), "{s}");
    assert!(s.contains("rejected: j(S)"), "{s}");
}

#[test]
fn cache_build_and_clear() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let o = run(&["cache", "build", "--dir", d]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().count(), 6);
    let o = bin().args(["verify", "prop3.1.m42.F3pp"]).env("BILEVEL6_CACHE_DIR", d).output().unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&run(&["cache", "clear", "--dir", d])).trim(), "removed 6");
    assert_eq!(run(&["cache", "clear"]).status.code(), Some(2));
}

#[test]
fn corrupted_cache_makes_verify_fail() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    assert!(run(&["cache", "build", "--dir", d]).status.success());
    let path = dir.path().join("phi3pp.json");
    let text = fs::read_to_string(&path).unwrap();
    // the q⁰r⁰ coefficient of phi3pp is 6
    let bad = text.replacen("\"0/1\",\n      \"0/1\",\n      \"6\"", "\"0/1\",\n      \"0/1\",\n      \"5\"", 1);
    assert_ne!(bad, text);
    fs::write(&path, bad).unwrap();
    let o = bin().args(["verify", "--all"]).env("BILEVEL6_CACHE_DIR", d).output().unwrap();
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v["summary"]["fail"].as_u64().unwrap() > 1);
}
