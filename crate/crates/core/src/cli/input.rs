//! Reading a pencil from the command line or from a matrix file.

use serde_json::Value;

use super::form::parse_quadratic_form;
use crate::arith::{format_rational, parse_rational, QMatrix, Rational};
use crate::error::{Error, Result};
use crate::pencil::QuadricPencil;

/// `"f; g"`, two quadratic forms in `X0..X4`.
pub fn pencil_from_forms(text: &str) -> Result<QuadricPencil> {
    let parts: Vec<&str> = text.split(';').collect();
    let [f, g] = parts.as_slice() else {
        return Err(Error::domain(format!(
            "expected two forms separated by ';', found {}",
            parts.len()
        )));
    };
    let u = parse_quadratic_form(f)?.matrix;
    let v = parse_quadratic_form(g)?.matrix;
    QuadricPencil::new(u, v)
}

fn matrix_from_value(key: &str, value: Option<&Value>) -> Result<QMatrix> {
    let bad = |why: String| Error::domain(format!("matrix {key}: {why}"));
    let rows = value
        .and_then(Value::as_array)
        .ok_or_else(|| bad("missing or not an array".into()))?;
    let mut out = Vec::with_capacity(rows.len());
    for row in rows {
        let row = row.as_array().ok_or_else(|| bad("rows must be arrays".into()))?;
        let parsed: Vec<Rational> = row
            .iter()
            .map(|cell| match cell {
                Value::String(s) => parse_rational(s),
                Value::Number(n) if n.is_i64() => parse_rational(&n.to_string()),
                other => Err(bad(format!("entry {other} is not a rational string"))),
            })
            .collect::<Result<_>>()?;
        out.push(parsed);
    }
    if out.iter().any(|r| r.len() != out.len()) {
        return Err(bad("not square".into()));
    }
    Ok(QMatrix::from_rows(out))
}

/// `{"U": [[...]], "V": [[...]]}` with entries such as `"3"` or `"-1/2"`.
pub fn pencil_from_json(text: &str) -> Result<QuadricPencil> {
    let doc: Value =
        serde_json::from_str(text).map_err(|e| Error::domain(format!("matrix file: {e}")))?;
    let u = matrix_from_value("U", doc.get("U"))?;
    let v = matrix_from_value("V", doc.get("V"))?;
    if u.rows() != 5 || v.rows() != 5 {
        return Err(Error::domain("matrix file: U and V must be 5x5"));
    }
    QuadricPencil::new(u, v)
}

pub fn pencil_to_json(p: &QuadricPencil) -> Value {
    let rows = |m: &QMatrix| -> Value {
        (0..m.rows())
            .map(|i| m.row(i).iter().map(format_rational).collect::<Vec<_>>())
            .collect::<Vec<_>>()
            .into()
    };
    serde_json::json!({ "U": rows(p.u()), "V": rows(p.v()) })
}
