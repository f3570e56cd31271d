//! Verdict objects and their human-readable rendering.

use std::fmt::Write as _;

use orbigroupoid::{CheckResult, Witness};
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
}

impl Check {
    pub fn new(name: impl Into<String>, pass: bool, witness: Option<Value>) -> Self {
        Self { name: name.into(), pass, witness }
    }
}

impl From<&CheckResult> for Check {
    fn from(c: &CheckResult) -> Self {
        Check::new(c.condition.name(), c.pass, c.witness.as_ref().map(witness_value))
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Timings {
    pub total_ms: f64,
}

/// The machine-readable result of one operation. A `verdict` of `None`
/// marks a construction that succeeded without a yes/no answer.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub task: String,
    pub verdict: Option<bool>,
    pub checks: Vec<Check>,
    pub details: Value,
    pub timings: Timings,
}

impl Report {
    pub fn new(task: &str, verdict: Option<bool>) -> Self {
        Self { task: task.to_string(), verdict, checks: Vec::new(), details: json!({}), timings: Timings { total_ms: 0.0 } }
    }

    pub fn with_checks(mut self, checks: Vec<Check>) -> Self {
        self.checks = checks;
        self
    }

    pub fn with_details(mut self, details: Value) -> Self {
        self.details = details;
        self
    }

    pub fn exit_code(&self) -> u8 {
        match self.verdict {
            Some(false) => 1,
            _ => 0,
        }
    }

    pub fn human(&self) -> String {
        let mut out = String::new();
        let verdict = match self.verdict {
            Some(true) => "true",
            Some(false) => "false",
            None => "done",
        };
        let _ = writeln!(out, "{}: {verdict} ({:.1} ms)", self.task, self.timings.total_ms);
        for c in &self.checks {
            let mark = if c.pass { "pass" } else { "FAIL" };
            let _ = writeln!(out, "  [{mark}] {}", c.name);
            if let Some(w) = &c.witness {
                let text = w.get("text").and_then(Value::as_str).map(str::to_string).unwrap_or_else(|| w.to_string());
                let _ = writeln!(out, "         witness: {text}");
            }
        }
        if self.details.as_object().is_some_and(|d| !d.is_empty()) {
            let pretty = serde_json::to_string_pretty(&self.details).unwrap_or_default();
            for line in pretty.lines() {
                let _ = writeln!(out, "  {line}");
            }
        }
        out
    }
}

/// Witnesses carry a kebab-case `kind`, their identifiers, and a `text`
/// rendering.
pub fn witness_value(w: &Witness) -> Value {
    let text = w.to_string();
    match w {
        Witness::OrbitCollision { first, second, domain_orbits, image_orbits } => json!({
            "kind": "orbit-collision", "first": first, "second": second,
            "domain_orbits": domain_orbits, "image_orbits": image_orbits, "text": text,
        }),
        Witness::Unreachable { image, basepoint, unreachable } => json!({
            "kind": "unreachable", "image": image, "basepoint": basepoint, "unreachable": unreachable, "text": text,
        }),
        Witness::CosetCollision { image, first, second, coset } => json!({
            "kind": "coset-collision", "image": image, "first": first, "second": second, "coset": coset, "text": text,
        }),
        Witness::HomCollision { from, to, first, second, image } => json!({
            "kind": "hom-collision", "from": from, "to": to, "first": first, "second": second, "image": image, "text": text,
        }),
        Witness::CosetCount { image, fiber, cosets } => json!({
            "kind": "coset-count", "image": image, "fiber": fiber, "cosets": cosets, "text": text,
        }),
    }
}
