//! Running checks and assembling reports.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::checks::{registry, Check, Ctx};
use crate::forms::FormSource;

pub const REPORT_VERSION: u32 = 1;
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Error => "ERROR",
        }
    }
}

/// Where the expected value comes from: a printed value, an immediate
/// fact, or an independent computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Provenance {
    #[serde(rename = "PRINTED")]
    Printed,
    #[serde(rename = "TRIVIAL")]
    Trivial,
    #[serde(rename = "DERIVED")]
    Derived,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub id: String,
    pub status: Status,
    pub expected: String,
    pub actual: String,
    pub provenance: Provenance,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub error: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub version: u32,
    pub tool_version: String,
    pub seed: u64,
    pub checks: Vec<CheckResult>,
    pub summary: Summary,
}

impl Report {
    pub fn all_pass(&self) -> bool {
        self.summary.fail == 0 && self.summary.error == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable") + "\n"
    }
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum RunError {
    #[error("unknown check {0:?}")]
    UnknownCheck(String),
}

#[derive(Clone, Debug, Default)]
pub struct RunOptions {
    pub seed: u64,
    pub timings: bool,
    pub forms: FormSource,
}

/// Stable per-check seed: the first 8 bytes of `SHA-256(seed_le ‖ id)`.
pub fn derive_seed(seed: u64, id: &str) -> u64 {
    let mut h = Sha256::new();
    h.update(seed.to_le_bytes());
    h.update(id.as_bytes());
    let d = h.finalize();
    u64::from_le_bytes(d[..8].try_into().expect("8 bytes"))
}

fn execute(check: &Check, opts: &RunOptions) -> CheckResult {
    let seed = derive_seed(opts.seed, check.id);
    let ctx = Ctx { seed, forms: opts.forms.clone() };
    let start = Instant::now();
    let outcome = catch_unwind(AssertUnwindSafe(|| (check.run)(&ctx)));
    let elapsed = start.elapsed().as_millis() as u64;
    let (status, expected, actual) = match outcome {
        Ok(Ok(o)) => {
            let status = if o.expected == o.actual { Status::Pass } else { Status::Fail };
            (status, o.expected, o.actual)
        }
        Ok(Err(e)) => (Status::Error, check.expected_hint.to_string(), e),
        Err(p) => {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".to_string());
            (Status::Error, check.expected_hint.to_string(), format!("panic: {msg}"))
        }
    };
    CheckResult {
        id: check.id.to_string(),
        status,
        expected,
        actual,
        provenance: check.provenance,
        seed: check.randomized.then_some(seed),
        elapsed_ms: opts.timings.then_some(elapsed),
    }
}

pub fn check_ids() -> Vec<&'static str> {
    let mut ids: Vec<_> = registry().iter().map(|c| c.id).collect();
    ids.sort_unstable();
    ids
}

pub fn run_check(id: &str, opts: &RunOptions) -> Result<CheckResult, RunError> {
    let reg = registry();
    let check = reg.iter().find(|c| c.id == id).ok_or_else(|| RunError::UnknownCheck(id.to_string()))?;
    Ok(execute(check, opts))
}

fn assemble(mut checks: Vec<CheckResult>, seed: u64) -> Report {
    checks.sort_by(|a, b| a.id.cmp(&b.id));
    let mut summary = Summary::default();
    for c in &checks {
        match c.status {
            Status::Pass => summary.pass += 1,
            Status::Fail => summary.fail += 1,
            Status::Error => summary.error += 1,
        }
    }
    Report { version: REPORT_VERSION, tool_version: TOOL_VERSION.to_string(), seed, checks, summary }
}

/// Runs the named checks concurrently; output order is by id.
pub fn run_selected(ids: &[&str], opts: &RunOptions) -> Result<Report, RunError> {
    let reg = registry();
    let selected: Vec<&Check> = ids
        .iter()
        .map(|id| reg.iter().find(|c| c.id == *id).ok_or_else(|| RunError::UnknownCheck(id.to_string())))
        .collect::<Result<_, _>>()?;
    let results: Vec<CheckResult> = selected.par_iter().map(|c| execute(c, opts)).collect();
    Ok(assemble(results, opts.seed))
}

pub fn run_all(opts: &RunOptions) -> Report {
    let reg = registry();
    let results: Vec<CheckResult> = reg.par_iter().map(|c| execute(c, opts)).collect();
    assemble(results, opts.seed)
}
