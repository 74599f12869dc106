//! The classification document written by `classify --json`.

use serde_json::{json, Value};

use focal_core::classify::{BlockType, StructureReport};
use focal_core::exactmath::{format_rational, variable_names};
use focal_core::system::ValidationReport;
use focal_core::MatrixSystem;

use crate::output::sha256_hex;

pub fn validation_json(v: &ValidationReport) -> Value {
    let point = |p: &Option<Vec<focal_core::Rational>>| {
        p.as_ref()
            .map(|v| Value::Array(v.iter().map(|x| Value::String(format_rational(x))).collect()))
            .unwrap_or(Value::Null)
    };
    json!({
        "passed": v.passed(),
        "symmetric": v.symmetric(),
        "violations": v.violations.iter().map(|x| json!({
            "alpha": x.alpha, "i": x.i, "p": x.p, "q": x.q,
        })).collect::<Vec<_>>(),
        "regular_point": point(&v.regular_point),
        "regular_covector": point(&v.regular_covector),
    })
}

fn theorem(n: Option<u32>) -> Value {
    n.map_or(Value::Null, |t| Value::String(format!("Theorem {t}")))
}

fn block_theorem(t: Option<BlockType>) -> Option<u32> {
    match t? {
        BlockType::Torse => Some(2),
        BlockType::HypersurfaceType => Some(3),
        BlockType::ConeType => Some(4),
        BlockType::IrreducibleUnclassified => None,
    }
}

pub fn report_document(text: &str, sys: &MatrixSystem, report: &StructureReport) -> Value {
    let xs = variable_names("x", 0, sys.l() + 1);
    let xis = variable_names("xi", 1, sys.codim());
    let mut citations = json!({
        "label": theorem(report.label.and_then(|l| l.theorem())),
        "blocks": report.blocks.iter().map(|b| theorem(block_theorem(b.block_type))).collect::<Vec<_>>(),
    });
    let extra: Vec<&str> = [
        (report.ambient_reduction.is_some(), "Theorem 11"),
        (report.vertex_dim.is_some(), "Theorem 12"),
    ]
    .iter()
    .filter(|(on, _)| *on)
    .map(|(_, t)| *t)
    .collect();
    citations["eigenvalue_matrices"] = json!(extra);
    json!({
        "input_sha256": sha256_hex(text.as_bytes()),
        "validation": validation_json(&sys.validate()),
        "focal": {
            "F": report.f.polynomial.display_with(&xs).to_string(),
            "Phi": report.phi.polynomial.display_with(&xis).to_string(),
            "F_multiple_components": !report.f.square_free,
            "Phi_multiple_components": !report.phi.square_free,
            "F_multiple_nonlinear_component": report.f.multiple_nonlinear_component,
            "Phi_multiple_nonlinear_component": report.phi.multiple_nonlinear_component,
        },
        "report": report.to_json(),
        "citations": citations,
    })
}

pub fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}
