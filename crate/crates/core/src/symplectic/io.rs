//! Matrix files: `{"entries": [[["a","b"], …], …]}` with entry `a + b√6`.

use serde_json::{json, Value};

use super::SymplecticError;
use crate::algebra::rational::{format_rational, parse_rational};
use crate::algebra::{Mat4, QuadNum};
use crate::SpMatrix;

pub fn to_json(m: &SpMatrix) -> Value {
    let rows: Vec<Value> = m
        .0
        .iter()
        .map(|r| Value::Array(r.iter().map(|x| json!([format_rational(&x.a), format_rational(&x.b)])).collect()))
        .collect();
    json!({ "entries": rows })
}

pub fn from_json(v: &Value) -> Result<SpMatrix, SymplecticError> {
    let bad = |what: &str| SymplecticError::Format(what.to_string());
    let rows = v.get("entries").and_then(Value::as_array).ok_or_else(|| bad("missing \"entries\" array"))?;
    if rows.len() != 4 {
        return Err(bad("expected 4 rows"));
    }
    let mut out = Mat4::<QuadNum>::zero();
    for (i, row) in rows.iter().enumerate() {
        let row = row.as_array().filter(|r| r.len() == 4).ok_or_else(|| bad("expected 4 entries per row"))?;
        for (j, e) in row.iter().enumerate() {
            let pair = e.as_array().filter(|p| p.len() == 2).ok_or_else(|| bad("entry must be [a, b]"))?;
            let part = |k: usize| -> Result<_, SymplecticError> {
                let s = pair[k].as_str().ok_or_else(|| bad("entry parts must be strings"))?;
                parse_rational(s).map_err(|e| bad(&e.to_string()))
            };
            out.0[i][j] = QuadNum::new(part(0)?, part(1)?);
        }
    }
    Ok(out)
}
