//! Versioned JSON cache format for series.
//!
//! `{"version":1,"form":..,"weight":..,"index":..,"qprec":..,"coeffs":[["q","r","v"],..]}`
//! with every number a decimal string and coefficients sorted by `(q, r)`.

use serde_json::{json, Value};

use super::{JacobiError, Series};
use crate::algebra::rational::{format_exponent, format_rational, parse_exponent, parse_rational};
use crate::scalar::Coeff;
use crate::QRSeries;

pub const FORMAT_VERSION: u64 = 1;

pub fn to_json<C: Coeff>(form: &str, s: &Series<C>) -> Value {
    let coeffs: Vec<Value> = s
        .iter()
        .map(|(q, r, c)| json!([format_exponent(q), format_exponent(r), format_rational(&c.to_rational())]))
        .collect();
    json!({
        "version": FORMAT_VERSION,
        "form": form,
        "weight": format_exponent(s.weight()),
        "index": format_exponent(s.index()),
        "qprec": format_exponent(s.qprec()),
        "coeffs": coeffs,
    })
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a str, JacobiError> {
    v.get(key)
        .and_then(Value::as_str)
        .ok_or_else(|| JacobiError::Format(format!("missing string field {key:?}")))
}

/// Parses the cache format; returns the form name and the series.
pub fn from_json(v: &Value) -> Result<(String, QRSeries), JacobiError> {
    let bad = |e: crate::algebra::AlgebraError| JacobiError::Format(e.to_string());
    match v.get("version").and_then(Value::as_u64) {
        Some(FORMAT_VERSION) => {}
        other => return Err(JacobiError::Format(format!("unsupported version {other:?}"))),
    }
    let form = field(v, "form")?.to_string();
    let weight = parse_exponent(field(v, "weight")?).map_err(bad)?;
    let index = parse_exponent(field(v, "index")?).map_err(bad)?;
    let qprec = parse_exponent(field(v, "qprec")?).map_err(bad)?;
    let rows = v
        .get("coeffs")
        .and_then(Value::as_array)
        .ok_or_else(|| JacobiError::Format("missing coeffs".into()))?;
    let mut terms = Vec::with_capacity(rows.len());
    for row in rows {
        let cells: Vec<&str> = row
            .as_array()
            .map(|a| a.iter().filter_map(Value::as_str).collect())
            .unwrap_or_default();
        let [q, r, c] = cells[..] else {
            return Err(JacobiError::Format(format!("bad coefficient row {row}")));
        };
        let q = parse_exponent(q).map_err(bad)?;
        if q >= qprec {
            return Err(JacobiError::Format(format!("coefficient at q^{q} beyond qprec {qprec}")));
        }
        terms.push((q, parse_exponent(r).map_err(bad)?, parse_rational(c).map_err(bad)?));
    }
    Ok((form, Series::from_terms(terms, qprec, weight, index)))
}
