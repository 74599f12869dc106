//! JSON-shaped text format for matrix systems.
//!
//! ```text
//! {
//!   "l": 1,
//!   "r": 2,
//!   "codim": 2,
//!   "C": [
//!     [["1", "0"], ["0", "1"]],
//!     [["1", "0"], ["0", "2"]]
//!   ],
//!   "B": [
//!     [["1", "0"], ["0", "0"]],
//!     [["0", "0"], ["0", "1"]]
//!   ]
//! }
//! ```
//!
//! Entries are rationals written `"p/q"` or `"p"`; bare JSON integers are
//! accepted on input. The writer is canonical, so reading and writing again
//! reproduces the same bytes.

use serde_json::Value;

use super::MatrixSystem;
use crate::error::{Error, Result};
use crate::exactmath::{format_rational, parse_rational, Matrix};
use crate::{RMatrix, Rational};

pub fn read_system(text: &str) -> Result<MatrixSystem> {
    let v: Value = serde_json::from_str(text)?;
    let obj = v
        .as_object()
        .ok_or_else(|| Error::Parse("matrix system must be a JSON object".into()))?;
    let field = |k: &str| {
        obj.get(k)
            .ok_or_else(|| Error::Parse(format!("missing field {k:?}")))
    };
    let count = |k: &str| -> Result<usize> {
        field(k)?
            .as_u64()
            .map(|n| n as usize)
            .ok_or_else(|| Error::Parse(format!("field {k:?} must be a nonnegative integer")))
    };
    let l = count("l")?;
    let r = count("r")?;
    let codim = count("codim")?;
    let c = read_family(field("C")?, "C")?;
    let b = read_family(field("B")?, "B")?;
    MatrixSystem::new(l, r, codim, c, b)
}

fn read_family(v: &Value, name: &str) -> Result<Vec<RMatrix>> {
    v.as_array()
        .ok_or_else(|| Error::Parse(format!("field {name:?} must be an array of matrices")))?
        .iter()
        .map(|m| read_matrix(m, name))
        .collect()
}

fn read_matrix(v: &Value, name: &str) -> Result<RMatrix> {
    let rows = v
        .as_array()
        .ok_or_else(|| Error::Parse(format!("{name}: matrix must be an array of rows")))?;
    let rows = rows
        .iter()
        .map(|row| {
            row.as_array()
                .ok_or_else(|| Error::Parse(format!("{name}: row must be an array")))?
                .iter()
                .map(read_entry)
                .collect::<Result<Vec<Rational>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    if rows.is_empty() {
        return Err(Error::Dimension(format!("{name}: empty matrix")));
    }
    Matrix::from_rows(rows)
}

fn read_entry(v: &Value) -> Result<Rational> {
    match v {
        Value::String(s) => parse_rational(s),
        Value::Number(n) if n.is_i64() => Ok(crate::exactmath::int(n.as_i64().unwrap_or(0))),
        _ => Err(Error::Parse(format!("matrix entry {v} is not a rational"))),
    }
}

pub fn write_system(sys: &MatrixSystem) -> String {
    let mut out = String::new();
    out.push_str("{\n");
    out.push_str(&format!("  \"l\": {},\n", sys.l()));
    out.push_str(&format!("  \"r\": {},\n", sys.r()));
    out.push_str(&format!("  \"codim\": {},\n", sys.codim()));
    write_family(&mut out, "C", sys.c());
    out.push_str(",\n");
    write_family(&mut out, "B", sys.b());
    out.push_str("\n}\n");
    out
}

fn write_family(out: &mut String, name: &str, mats: &[RMatrix]) {
    out.push_str(&format!("  \"{name}\": [\n"));
    let lines: Vec<String> = mats.iter().map(|m| format!("    {}", matrix_line(m))).collect();
    out.push_str(&lines.join(",\n"));
    out.push_str("\n  ]");
}

fn matrix_line(m: &RMatrix) -> String {
    let rows: Vec<String> = (0..m.nrows())
        .map(|i| {
            let cells: Vec<String> = m
                .row(i)
                .iter()
                .map(|v| format!("\"{}\"", format_rational(v)))
                .collect();
            format!("[{}]", cells.join(", "))
        })
        .collect();
    format!("[{}]", rows.join(", "))
}
