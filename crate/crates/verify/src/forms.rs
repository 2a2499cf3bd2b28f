//! Named series, computed or read from a cache directory.

use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use bilevel::jacobi::{self, lift_input_cached, phi_m2_1, weak_jacobi, JacobiError, LiftInputId, STANDARD_QPREC};
use bilevel::{Exponent, IntSeries, QRSeries, Rational};
use num_bigint::BigInt;

/// Every name accepted by `expand`.
pub const FORM_NAMES: [&str; 8] = ["phi01", "phim21", "phi02", "phi03", "phi04", "phi3", "phi3p", "phi3pp"];

/// Forms written by `cache build`: the integral ones every check reads.
pub const CACHED_FORMS: [&str; 6] = ["phi02", "phi03", "phi04", "phi3", "phi3p", "phi3pp"];

pub const CACHE_ENV: &str = "BILEVEL6_CACHE_DIR";

#[derive(Debug, thiserror::Error)]
pub enum FormError {
    #[error("unknown form {0:?}; expected one of {}", FORM_NAMES.join(", "))]
    UnknownForm(String),
    #[error(transparent)]
    Jacobi(#[from] JacobiError),
    #[error("cache file {path}: {reason}")]
    Cache { path: String, reason: String },
}

/// The named form at precision `qprec`, with rational coefficients.
pub fn build(name: &str, qprec: Exponent) -> Result<QRSeries, FormError> {
    Ok(match name {
        "phi01" => weak_jacobi::<Rational>(1, qprec)?,
        "phim21" => phi_m2_1::<Rational>(qprec)?,
        "phi02" => weak_jacobi::<Rational>(2, qprec)?,
        "phi03" => weak_jacobi::<Rational>(3, qprec)?,
        "phi04" => weak_jacobi::<Rational>(4, qprec)?,
        _ => match LiftInputId::parse(name) {
            Some(id) => jacobi::lift_input::<Rational>(id, qprec)?,
            None => return Err(FormError::UnknownForm(name.to_string())),
        },
    })
}

fn integral(s: &QRSeries) -> Result<IntSeries, String> {
    s.try_map(|c: &Rational| if c.is_integer() { Ok(c.to_integer()) } else { Err(format!("non-integral coefficient {c}")) })
}

pub fn cache_dir_from_env() -> Option<PathBuf> {
    std::env::var_os(CACHE_ENV).filter(|v| !v.is_empty()).map(PathBuf::from)
}

pub fn cache_path(dir: &Path, name: &str) -> PathBuf {
    dir.join(format!("{name}.json"))
}

pub fn read_cached(path: &Path) -> Result<(String, QRSeries), FormError> {
    let bad = |reason: String| FormError::Cache { path: path.display().to_string(), reason };
    let text = fs::read_to_string(path).map_err(|e| bad(e.to_string()))?;
    let v: serde_json::Value = serde_json::from_str(&text).map_err(|e| bad(e.to_string()))?;
    jacobi::io::from_json(&v).map_err(|e| bad(e.to_string()))
}

/// Source of the integral standard forms for one run.
#[derive(Clone, Debug, Default)]
pub struct FormSource {
    pub cache: Option<PathBuf>,
}

impl FormSource {
    /// Reads `<dir>/<name>.json` when present, otherwise computes at the
    /// standard precision. Cached data is trusted as is.
    pub fn int_form(&self, name: &str) -> Result<Arc<IntSeries>, FormError> {
        if let Some(dir) = &self.cache {
            let path = cache_path(dir, name);
            if path.exists() {
                let (_, s) = read_cached(&path)?;
                let s = integral(&s).map_err(|reason| FormError::Cache { path: path.display().to_string(), reason })?;
                return Ok(Arc::new(s));
            }
        }
        if let Some(id) = LiftInputId::parse(name) {
            return Ok(lift_input_cached(id, STANDARD_QPREC)?);
        }
        let k = match name {
            "phi02" => 2,
            "phi03" => 3,
            "phi04" => 4,
            _ => return Err(FormError::UnknownForm(name.to_string())),
        };
        Ok(Arc::new(weak_jacobi::<BigInt>(k, Exponent::from_integer(STANDARD_QPREC))?))
    }

    pub fn lift_input(&self, id: LiftInputId) -> Result<Arc<IntSeries>, FormError> {
        self.int_form(id.name())
    }
}

/// Writes every cached form at the standard precision; returns the paths.
pub fn build_cache(dir: &Path) -> Result<Vec<PathBuf>, FormError> {
    let io = |e: std::io::Error| FormError::Cache { path: dir.display().to_string(), reason: e.to_string() };
    fs::create_dir_all(dir).map_err(io)?;
    let mut out = Vec::new();
    for name in CACHED_FORMS {
        let s = build(name, Exponent::from_integer(STANDARD_QPREC))?;
        let path = cache_path(dir, name);
        let text = serde_json::to_string_pretty(&jacobi::io::to_json(name, &s)).expect("serializable");
        fs::write(&path, text + "\n").map_err(io)?;
        out.push(path);
    }
    Ok(out)
}

/// Removes the cache files this tool writes, leaving anything else alone.
pub fn clear_cache(dir: &Path) -> Result<usize, FormError> {
    let mut n = 0;
    for name in CACHED_FORMS {
        let path = cache_path(dir, name);
        if path.exists() {
            fs::remove_file(&path).map_err(|e| FormError::Cache { path: path.display().to_string(), reason: e.to_string() })?;
            n += 1;
        }
    }
    Ok(n)
}
