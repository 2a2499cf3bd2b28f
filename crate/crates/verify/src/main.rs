use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use bilevel::jacobi::{self, fourier_coeff, LiftInputId};
use bilevel::lift::{
    canonical_divisor_of, cusp_vanishing_order, exp_lift_truncated_of, humbert_multiplicity_of, leading_exponents_of,
    Cusp,
};
use bilevel::algebra::rational::parse_exponent;
use bilevel::finite::branch_component_count;
use bilevel::symplectic::{self, builtin, charpoly_mod6_class, factorize_nat, in_group, torsion_order, GroupId};
use bilevel::{Exponent, SpMatrix};
use bilevel_verify::forms::{self, cache_dir_from_env, FormSource, CACHE_ENV};
use bilevel_verify::report::{check_ids, run_all, run_selected, RunError, RunOptions};
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "bilevel6", version, about = "Exact checks for bilevel-6 abelian surface computations")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run checks and print a JSON report.
    Verify {
        #[arg(long, conflicts_with = "ids")]
        all: bool,
        ids: Vec<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Also write the report here.
        #[arg(long)]
        json: Option<PathBuf>,
        /// Record wall-clock time per check; the report is then not reproducible.
        #[arg(long)]
        timings: bool,
        /// List the registered check ids and exit.
        #[arg(long, conflicts_with_all = ["all", "ids"])]
        list: bool,
    },
    /// Print a named series.
    Expand {
        form: String,
        #[arg(long, default_value = "8")]
        qprec: String,
        /// Emit the cache file format instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Fourier coefficient f(n, l) of an index-6 lift input.
    Coeff {
        form: String,
        #[arg(allow_hyphen_values = true)]
        n: i64,
        #[arg(allow_hyphen_values = true)]
        l: i64,
    },
    /// Multiplicity of a lift along the Humbert component (delta, b).
    Humbert {
        form: String,
        #[arg(long)]
        delta: i64,
        #[arg(long)]
        b: i64,
    },
    /// Truncated product expansion of a lift, as JSON.
    Lift {
        form: String,
        #[arg(long, default_value_t = bilevel::lift::DEFAULT_BOUND)]
        bound: i64,
    },
    /// Vanishing order of a lift along a boundary class.
    CuspOrder { form: String, cusp: String },
    /// Canonical divisor of one of the three lifted forms.
    Divisor { which: DivisorName },
    /// Operations on a 4×4 matrix.
    Group {
        op: GroupOp,
        /// Matrix JSON file, or builtin:NAME.
        #[arg(long)]
        matrix: String,
        #[arg(long, default_value = "GAMMA_NAT(6)")]
        group: String,
    },
    /// Branch component counts from the exhibited centralizer elements.
    Branch,
    /// Build or clear the series cache.
    Cache {
        op: CacheOp,
        #[arg(long)]
        dir: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum DivisorName {
    Omega,
    OmegaPrime,
    OmegaDprime,
}

#[derive(Clone, Copy, ValueEnum)]
enum GroupOp {
    In,
    Charpoly,
    Order,
    Factorize,
}

#[derive(Clone, Copy, ValueEnum)]
enum CacheOp {
    Build,
    Clear,
}

/// Failure of a command: usage errors exit 2, computation errors 1.
enum Failure {
    Usage(String),
    Compute(String),
}

fn usage<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Usage(e.to_string())
}

fn compute<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Compute(e.to_string())
}

fn source() -> FormSource {
    FormSource { cache: cache_dir_from_env() }
}

fn lift_id(form: &str) -> Result<LiftInputId, Failure> {
    LiftInputId::parse(form).ok_or_else(|| Failure::Usage(format!("unknown lift input {form:?}; expected phi3, phi3p or phi3pp")))
}

fn load_matrix(spec: &str) -> Result<SpMatrix, Failure> {
    if let Some(name) = spec.strip_prefix("builtin:") {
        return builtin(name).map_err(usage);
    }
    let text = fs::read_to_string(spec).map_err(|e| Failure::Usage(format!("{spec}: {e}")))?;
    let v: serde_json::Value = serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("{spec}: {e}")))?;
    symplectic::io::from_json(&v).map_err(usage)
}

fn run(cmd: Cmd) -> Result<ExitCode, Failure> {
    match cmd {
        Cmd::Verify { all, ids, seed, json, timings, list } => {
            if list {
                for id in check_ids() {
                    println!("{id}");
                }
                return Ok(ExitCode::SUCCESS);
            }
            if !all && ids.is_empty() {
                return Err(Failure::Usage("give --all or at least one check id".into()));
            }
            let opts = RunOptions { seed, timings, forms: source() };
            let report = if all {
                run_all(&opts)
            } else {
                let ids: Vec<&str> = ids.iter().map(String::as_str).collect();
                run_selected(&ids, &opts).map_err(|e: RunError| usage(e))?
            };
            let text = report.to_json();
            if let Some(path) = json {
                fs::write(&path, &text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            }
            print!("{text}");
            for c in report.checks.iter().filter(|c| c.status.label() != "PASS") {
                eprintln!("{} {}: expected {:?}, got {:?}", c.status.label(), c.id, c.expected, c.actual);
            }
            Ok(if report.all_pass() { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Cmd::Expand { form, qprec, json } => {
            let q: Exponent = parse_exponent(&qprec).map_err(usage)?;
            let s = forms::build(&form, q).map_err(|e| match e {
                forms::FormError::UnknownForm(_) => usage(e),
                e => compute(e),
            })?;
            if json {
                println!("{}", serde_json::to_string_pretty(&jacobi::io::to_json(&form, &s)).expect("serializable"));
            } else {
                println!("{form} = {}", s.to_pretty());
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Coeff { form, n, l } => {
            let f = source().lift_input(lift_id(&form)?).map_err(compute)?;
            println!("{}", fourier_coeff(&*f, n, l).map_err(compute)?);
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Humbert { form, delta, b } => {
            let f = source().lift_input(lift_id(&form)?).map_err(compute)?;
            println!("{}", humbert_multiplicity_of(&f, delta, b).map_err(compute)?);
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Lift { form, bound } => {
            let id = lift_id(&form)?;
            let f = source().lift_input(id).map_err(compute)?;
            let t = exp_lift_truncated_of(&f, Exponent::from_integer(bound)).map_err(compute)?;
            println!("{}", serde_json::to_string_pretty(&t.to_json(id.lift_name())).expect("serializable"));
            Ok(ExitCode::SUCCESS)
        }
        Cmd::CuspOrder { form, cusp } => {
            let c = Cusp::parse(&cusp).ok_or_else(|| Failure::Usage(format!("unknown cusp {cusp:?}; expected D1 or D2")))?;
            let f = source().lift_input(lift_id(&form)?).map_err(compute)?;
            let lead = leading_exponents_of(&f).map_err(compute)?;
            println!("{}", cusp_vanishing_order(&lead, c).map_err(compute)?);
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Divisor { which } => {
            let id = match which {
                DivisorName::Omega => LiftInputId::Phi3,
                DivisorName::OmegaPrime => LiftInputId::Phi3P,
                DivisorName::OmegaDprime => LiftInputId::Phi3PP,
            };
            let f = source().lift_input(id).map_err(compute)?;
            println!("{}", canonical_divisor_of(&f).map_err(compute)?);
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Group { op, matrix, group } => {
            let m = load_matrix(&matrix)?;
            match op {
                GroupOp::In => {
                    let g: GroupId = group.parse().map_err(usage)?;
                    println!("{}", in_group(&m, g).map_err(compute)?);
                }
                GroupOp::Charpoly => println!("{}", charpoly_mod6_class(&m).map_err(compute)?),
                GroupOp::Order => println!("{}", torsion_order(&m, 24).map_err(compute)?),
                GroupOp::Factorize => {
                    let w = factorize_nat(&m).map_err(compute)?;
                    println!("{}", serde_json::to_string_pretty(&w.to_json()).expect("serializable"));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Branch => {
            let r = branch_component_count().map_err(compute)?;
            for c in &r.classes {
                let index = c.index.map_or("?".to_string(), |i| i.to_string());
                println!("{}: index {index} (generated {}, lower bound {})", c.name, c.generated_index, c.lower_bound);
                for rej in &c.rejected {
                    println!("  rejected: {rej}");
                }
            }
            let total = r.total.map_or("?".to_string(), |t| t.to_string());
            let claimed: u64 = r.claimed.iter().sum();
            println!("total {total}, claimed {claimed}");
            Ok(if r.matches_claim() { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Cmd::Cache { op, dir } => {
            let dir = dir
                .or_else(cache_dir_from_env)
                .ok_or_else(|| Failure::Usage(format!("give --dir or set {CACHE_ENV}")))?;
            match op {
                CacheOp::Build => {
                    for p in forms::build_cache(&dir).map_err(compute)? {
                        println!("{}", p.display());
                    }
                }
                CacheOp::Clear => println!("removed {}", forms::clear_cache(&dir).map_err(compute)?),
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(code) => code,
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Compute(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
    }
}
