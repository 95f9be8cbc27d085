//! Number formatting and CSV/JSON emitters.

use std::io::Write;

use hyperumbral::integrals::IdentityReport;
use serde_json::{json, Value};

use crate::functions::Evaluation;
use crate::CliError;

/// Shortest decimal that round-trips the value rounded to 15 significant
/// digits. Very large and very small magnitudes use exponent notation.
pub fn format_number(v: f64) -> String {
    if !v.is_finite() {
        return v.to_string();
    }
    let rounded: f64 = format!("{v:.14e}").parse().expect("formatted float parses");
    let mag = rounded.abs();
    if rounded == 0.0 || (1e-5..1e16).contains(&mag) {
        format!("{rounded}")
    } else {
        format!("{rounded:e}")
    }
}

fn json_number(v: f64) -> Value {
    if v.is_finite() {
        let rounded: f64 = format_number(v).parse().expect("formatted float parses");
        json!(rounded)
    } else {
        json!(v.to_string())
    }
}

pub fn evaluation_json(e: &Evaluation) -> Value {
    json!({
        "value": json_number(e.value),
        "terms_used": e.terms_used,
        "tail_estimate": e.tail_estimate.map(json_number),
    })
}

pub fn write_table<W: Write>(out: W, rows: &[(f64, Evaluation)]) -> Result<(), CliError> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["x", "value", "terms_used"])?;
    for (x, e) in rows {
        let terms = e.terms_used.map(|n| n.to_string()).unwrap_or_default();
        w.write_record([format_number(*x), format_number(e.value), terms])?;
    }
    w.flush()?;
    Ok(())
}

pub fn table_json(rows: &[(f64, Evaluation)]) -> Value {
    Value::Array(
        rows.iter()
            .map(|(x, e)| {
                json!({
                    "x": json_number(*x),
                    "value": json_number(e.value),
                    "terms_used": e.terms_used,
                })
            })
            .collect(),
    )
}

/// `k=v;k=v` with keys in sorted order.
pub fn format_params(report: &IdentityReport) -> String {
    report
        .params
        .iter()
        .map(|(k, v)| format!("{k}={}", format_number(*v)))
        .collect::<Vec<_>>()
        .join(";")
}

pub fn write_reports<W: Write>(out: W, reports: &[IdentityReport]) -> Result<(), CliError> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["identity_id", "params", "lhs", "rhs", "rel_diff", "passed"])?;
    for r in reports {
        w.write_record([
            r.identity_id.clone(),
            format_params(r),
            format_number(r.lhs),
            format_number(r.rhs),
            format_number(r.rel_diff),
            r.passed.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

pub fn reports_json(reports: &[IdentityReport]) -> Value {
    Value::Array(
        reports
            .iter()
            .map(|r| {
                json!({
                    "identity_id": r.identity_id,
                    "params": r.params.iter().map(|(k, v)| (k.clone(), json_number(*v))).collect::<serde_json::Map<_, _>>(),
                    "lhs": json_number(r.lhs),
                    "rhs": json_number(r.rhs),
                    "abs_diff": json_number(r.abs_diff),
                    "rel_diff": json_number(r.rel_diff),
                    "tolerance": r.tolerance,
                    "passed": r.passed,
                    "lhs_source": r.lhs_source,
                })
            })
            .collect(),
    )
}
