//! Acceptance criteria, each a group of registered checks with a time limit.
//! All comparisons are exact string equality; there are no tolerances.
//!
//! Criteria run one after another in this process, so only the first
//! criterion to need a series pays for computing it. Criterion 12 runs the
//! binary in fresh processes with the cache disabled.

use std::path::PathBuf;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use bilevel_verify::report::{check_ids, run_selected, RunOptions, Status};

struct Criterion {
    n: u32,
    title: &'static str,
    limit: Duration,
    checks: &'static [&'static str],
}

const fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

const CRITERIA: [Criterion; 11] = [
    Criterion {
        n: 1,
        title: "golden Jacobi slices",
        limit: secs(1),
        checks: &["sec2.phi02.q0", "sec2.phi02.q1", "sec2.phi03.q0", "sec2.phi03.q1", "sec2.phi04.q0", "sec2.phi04.q1"],
    },
    Criterion {
        n: 2,
        title: "lift-input slices and identity",
        limit: secs(1),
        checks: &["prop3.1.phi3.q0", "prop3.1.phi3pp.q0", "sec2.lift_inputs.identity"],
    },
    Criterion {
        n: 3,
        title: "coefficient table",
        limit: secs(1),
        checks: &["prop3.1.f15.F3", "prop3.1.f15.F3p", "prop3.1.f15.F3pp", "prop3.1.f4_10.F3", "prop3.1.fneg.F3"],
    },
    Criterion {
        n: 4,
        title: "multiplicity matrix and raw oracle",
        limit: secs(30),
        checks: &[
            "prop3.1.m11.F3",
            "prop3.1.m15.F3",
            "prop3.1.m42.F3",
            "prop3.1.m11.F3p",
            "prop3.1.m15.F3p",
            "prop3.1.m42.F3p",
            "prop3.1.m11.F3pp",
            "prop3.1.m15.F3pp",
            "prop3.1.m42.F3pp",
            "prop3.1.matrix.raw_oracle",
        ],
    },
    Criterion {
        n: 5,
        title: "leading exponents and cusp orders",
        limit: secs(1),
        checks: &[
            "sec3.leading.F3",
            "sec3.leading.F3p",
            "sec3.leading.F3pp",
            "sec3.leading.c_equals_6a",
            "thm3.3.vanishing.D1",
            "thm3.3.vanishing.D2",
        ],
    },
    Criterion {
        n: 6,
        title: "product expansions and rank",
        limit: secs(60),
        checks: &["prop3.5.leading_coeff", "cor3.4.product_identity", "prop3.5.rank", "thmA.pg"],
    },
    Criterion {
        n: 7,
        title: "divisor assembly",
        limit: secs(1),
        checks: &[
            "thm3.3.divisor.omega0",
            "thm3.3.divisor.omega1",
            "thm3.3.divisor.omega2",
            "thm3.3.divisor.sum_relation",
            "cor3.4.relation",
            "thm3.3.effective",
        ],
    },
    Criterion {
        n: 8,
        title: "neatness suite",
        limit: secs(60),
        checks: &[
            "lemma1.1.polydiv.f2",
            "lemma1.1.polydiv.f3.deg1",
            "lemma1.1.polydiv.f3.deg4",
            "lemma1.1.polydiv.exhaustive",
            "lemma1.1.charpoly.unipotent",
            "lemma1.1.charpoly.zeta",
            "lemma1.1.torsion.zeta",
            "lemma1.1.torsion.zeta_heis",
            "lemma1.1.fixed.zeta",
            "lemma1.1.fixed.zeta_heis",
        ],
    },
    Criterion {
        n: 9,
        title: "generation and character suite",
        limit: secs(120),
        checks: &[
            "prop2.1.j6_identity",
            "prop2.1.nu6_j6",
            "prop2.1.factorize.roundtrip",
            "prop2.1.eta.D8",
            "prop2.1.eta.D12",
            "prop2.1.eta.D16",
            "prop2.1.eta.generators",
            "prop2.1.eta.off_gamma6",
        ],
    },
    Criterion {
        n: 10,
        title: "branch locus suite",
        limit: secs(10),
        checks: &[
            "prop3.2.psl2.order",
            "prop3.2.beta.images",
            "prop3.2.beta.generate",
            "prop3.2.stabilizer.index",
            "prop3.2.branch_count",
            "prop3.2.discriminants",
            "sec3.fixed.zeta0",
            "sec3.fixed.zeta1",
            "sec3.fixed.zeta2",
            "sec3.fixed.zeta3",
            "sec3.fixed.zeta4",
            "sec3.fixed.zeta0_other_relation",
        ],
    },
    Criterion {
        n: 11,
        title: "boundary and lattice spot checks",
        limit: secs(1),
        checks: &["sec3.cusp.v1", "sec3.cusp.v2", "thm3.3.unipotent.min_n"],
    },
];

const DETERMINISM_LIMIT: Duration = secs(300);

struct Line {
    n: u32,
    title: &'static str,
    elapsed: Duration,
    limit: Duration,
    problems: Vec<String>,
}

impl Line {
    fn print(&self) -> bool {
        let late = self.elapsed > self.limit;
        let ok = self.problems.is_empty() && !late;
        println!(
            "{} criterion {:>2}: {} ({} ms, limit {} ms)",
            if ok { "PASS" } else { "FAIL" },
            self.n,
            self.title,
            self.elapsed.as_millis(),
            self.limit.as_millis()
        );
        for p in &self.problems {
            println!("       {p}");
        }
        if late {
            println!("       over the time limit");
        }
        ok
    }
}

fn run_criterion(c: &Criterion) -> Line {
    // no cache: everything is computed here
    let opts = RunOptions::default();
    let start = Instant::now();
    let report = run_selected(c.checks, &opts);
    let elapsed = start.elapsed();
    let problems = match report {
        Err(e) => vec![e.to_string()],
        Ok(r) => r
            .checks
            .iter()
            .filter(|x| x.status != Status::Pass)
            .map(|x| format!("{} {}: expected {:?}, got {:?}", x.status.label(), x.id, x.expected, x.actual))
            .collect(),
    };
    Line { n: c.n, title: c.title, elapsed, limit: c.limit, problems }
}

/// Builds the binary through the invoking cargo and returns its path.
fn binary() -> Result<PathBuf, String> {
    let exe = std::env::current_exe().map_err(|e| e.to_string())?;
    // target/<profile>/deps/acceptance-*
    let profile_dir = exe.parent().and_then(|d| d.parent()).ok_or("unexpected test binary location")?;
    let target_dir = profile_dir.parent().ok_or("unexpected test binary location")?;
    let mut cmd = Command::new(env!("CARGO"));
    cmd.args(["build", "--quiet", "-p", "bilevel-verify", "--bin", "bilevel6", "--target-dir"]).arg(target_dir);
    if profile_dir.file_name().is_some_and(|n| n == "release") {
        cmd.arg("--release");
    }
    let status = cmd.status().map_err(|e| format!("cargo build: {e}"))?;
    if !status.success() {
        return Err(format!("cargo build failed: {status}"));
    }
    Ok(profile_dir.join(format!("bilevel6{}", std::env::consts::EXE_SUFFIX)))
}

fn cold_run(bin: &PathBuf) -> Result<Vec<u8>, String> {
    let out = Command::new(bin)
        .args(["verify", "--all", "--seed", "0"])
        .env_remove("BILEVEL6_CACHE_DIR")
        .output()
        .map_err(|e| format!("{}: {e}", bin.display()))?;
    if out.stdout.is_empty() {
        return Err(format!("no report; stderr: {}", String::from_utf8_lossy(&out.stderr)));
    }
    Ok(out.stdout)
}

fn determinism() -> Line {
    let mut problems = Vec::new();
    let mut elapsed = Duration::ZERO;
    match binary() {
        Err(e) => problems.push(e),
        Ok(bin) => {
            let start = Instant::now();
            let a = cold_run(&bin);
            let b = cold_run(&bin);
            // two full runs; each must fit the limit
            elapsed = start.elapsed() / 2;
            match (a, b) {
                (Ok(a), Ok(b)) if a == b => {}
                (Ok(_), Ok(_)) => problems.push("reports differ".to_string()),
                (Err(e), _) | (_, Err(e)) => problems.push(e),
            }
        }
    }
    Line { n: 12, title: "determinism of cold full runs", elapsed, limit: DETERMINISM_LIMIT, problems }
}

fn coverage() -> Vec<String> {
    let claimed: Vec<&str> = CRITERIA.iter().flat_map(|c| c.checks.iter().copied()).collect();
    check_ids().into_iter().filter(|id| !claimed.contains(id)).map(|id| format!("check {id} is in no criterion")).collect()
}

fn main() -> ExitCode {
    let mut all_ok = true;
    for c in &CRITERIA {
        all_ok &= run_criterion(c).print();
    }
    all_ok &= determinism().print();
    let orphans = coverage();
    for o in &orphans {
        println!("FAIL {o}");
    }
    all_ok &= orphans.is_empty();
    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
