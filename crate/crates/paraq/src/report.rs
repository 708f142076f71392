//! Pass/fail verification reports shared by every checker in the crate.
//!
//! A failed check is data, not an error: it carries the first offending
//! position and value as a witness. Reports serialize to the JSON document
//! `{"artifact_version": ..., "checks": [{"name", "params", "status",
//! "witness"}]}` consumed by the CLI and the C API.

use std::fmt::Display;

use serde::Serialize;
use serde_json::{json, Value};

use crate::matrix::Matrix;
use crate::ring::Ring;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub params: Value,
    pub status: Status,
    pub witness: Option<Value>,
}

impl Check {
    pub fn pass(name: impl Into<String>, params: Value) -> Self {
        Check {
            name: name.into(),
            params,
            status: Status::Pass,
            witness: None,
        }
    }

    pub fn fail(name: impl Into<String>, params: Value, witness: Value) -> Self {
        Check {
            name: name.into(),
            params,
            status: Status::Fail,
            witness: Some(witness),
        }
    }

    /// Attach a free-text remark (kept inside the witness object so the
    /// document schema stays fixed).
    pub fn with_note(mut self, note: &str) -> Self {
        let entry = json!(note);
        match &mut self.witness {
            Some(Value::Object(map)) => {
                map.insert("note".into(), entry);
            }
            _ => self.witness = Some(json!({ "note": note })),
        }
        self
    }
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn new() -> Self {
        VerificationReport { checks: vec![] }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, other: VerificationReport) {
        self.checks.extend(other.checks);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass)
    }

    pub fn find(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// Full report document with the schema the CLI promises.
    pub fn to_document(&self) -> Value {
        json!({
            "artifact_version": env!("CARGO_PKG_VERSION"),
            "checks": self.checks,
        })
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let status = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
            };
            out.push_str(&format!("{status}  {}  {}", c.name, c.params));
            if let Some(w) = &c.witness {
                out.push_str(&format!("  witness: {w}"));
            }
            out.push('\n');
        }
        out
    }
}

/// Records `lhs == rhs` entrywise; on failure the witness is the first
/// nonzero entry of the difference.
pub fn check_matrix_eq<C: Ring + Display>(
    name: impl Into<String>,
    params: Value,
    lhs: &Matrix<C>,
    rhs: &Matrix<C>,
) -> Check {
    let diff = lhs.clone() - rhs.clone();
    match diff.first_nonzero() {
        None => Check::pass(name, params),
        Some((i, j, value)) => Check::fail(
            name,
            params,
            json!({
                "position": [i, j],
                "value": value.to_string(),
                "lhs": lhs.at(i, j).to_string(),
                "rhs": rhs.at(i, j).to_string(),
            }),
        ),
    }
}

/// Records that a matrix is identically zero.
pub fn check_matrix_zero<C: Ring + Display>(
    name: impl Into<String>,
    params: Value,
    m: &Matrix<C>,
) -> Check {
    match m.first_nonzero() {
        None => Check::pass(name, params),
        Some((i, j, value)) => Check::fail(
            name,
            params,
            json!({ "position": [i, j], "value": value.to_string() }),
        ),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::Rational;

    #[test]
    fn matrix_eq_witness() {
        let a = Matrix::from_i64(&[&[1, 0], &[0, 1]]);
        let b = Matrix::from_i64(&[&[1, 0], &[2, 1]]);
        let c = check_matrix_eq("t", json!({}), &a, &b);
        assert_eq!(c.status, Status::Fail);
        assert_eq!(c.witness.unwrap()["position"], json!([1, 0]));
        let ok = check_matrix_eq("t", json!({}), &a, &a);
        assert_eq!(ok.status, Status::Pass);
        let _ = Rational::one();
    }

    #[test]
    fn document_shape() {
        let mut r = VerificationReport::new();
        r.push(Check::pass("a", json!({"j": "1/2"})));
        let doc = r.to_document();
        assert!(doc["artifact_version"].is_string());
        assert_eq!(doc["checks"][0]["status"], json!("pass"));
        assert_eq!(doc["checks"][0]["witness"], Value::Null);
        assert!(r.passed());
        r.push(Check::fail("b", json!({}), json!({"position": [0, 0]})));
        assert!(!r.passed());
    }
}
