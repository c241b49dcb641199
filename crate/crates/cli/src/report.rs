//! Structured command output with text and JSON renderings.
//!
//! Every number is stored as a string (integers in decimal, rationals as
//! `num/den`, floats in Rust's shortest round-trip form), so the JSON form
//! parses back to an identical value.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use serde_json::Value;
use toricmdp::linalg::{IntVector, RatVector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn is_pass(self) -> bool {
        self == Verdict::Pass
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Section {
    pub stage: String,
    pub verdict: Verdict,
    pub witnesses: Vec<String>,
    pub data: BTreeMap<String, Value>,
}

impl Section {
    pub fn new(stage: &str, verdict: Verdict) -> Self {
        Section {
            stage: stage.to_string(),
            verdict,
            witnesses: Vec::new(),
            data: BTreeMap::new(),
        }
    }

    pub fn with(mut self, key: &str, value: Value) -> Self {
        self.data.insert(key.to_string(), value);
        self
    }

    pub fn witness(mut self, w: impl Into<String>) -> Self {
        self.witnesses.push(w.into());
        self
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub input: String,
    pub sections: Vec<Section>,
}

impl Report {
    pub fn new(command: &str, input: &str) -> Self {
        Report {
            command: command.to_string(),
            input: input.to_string(),
            sections: Vec::new(),
        }
    }

    pub fn push(&mut self, section: Section) {
        self.sections.push(section);
    }

    pub fn passed(&self) -> bool {
        self.sections.iter().all(|s| s.verdict.is_pass())
    }

    pub fn section(&self, stage: &str) -> Option<&Section> {
        self.sections.iter().find(|s| s.stage == stage)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> serde_json::Result<Report> {
        serde_json::from_str(text)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "toricmdp {}", env!("CARGO_PKG_VERSION")).unwrap();
        writeln!(out, "command: {}", self.command).unwrap();
        writeln!(out, "input: {}", self.input).unwrap();
        for s in &self.sections {
            let verdict = match s.verdict {
                Verdict::Pass => "PASS",
                Verdict::Fail => "FAIL",
            };
            writeln!(out, "\n[{}] {verdict}", s.stage).unwrap();
            for w in &s.witnesses {
                writeln!(out, "  witness: {w}").unwrap();
            }
            for (k, v) in &s.data {
                write_value(&mut out, k, v, 1);
            }
        }
        out
    }
}

fn write_value(out: &mut String, key: &str, v: &Value, depth: usize) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Array(items) if items.iter().all(is_scalar_or_flat) => {
            let parts: Vec<String> = items.iter().map(inline).collect();
            writeln!(out, "{pad}{key}: [{}]", parts.join(", ")).unwrap();
        }
        Value::Array(items) => {
            writeln!(out, "{pad}{key}:").unwrap();
            for (i, item) in items.iter().enumerate() {
                write_value(out, &format!("- [{i}]"), item, depth + 1);
            }
        }
        Value::Object(map) => {
            writeln!(out, "{pad}{key}:").unwrap();
            for (k, x) in map {
                write_value(out, k, x, depth + 1);
            }
        }
        other => writeln!(out, "{pad}{key}: {}", inline(other)).unwrap(),
    }
}

fn is_scalar_or_flat(v: &Value) -> bool {
    match v {
        Value::Array(items) => items.iter().all(|x| !x.is_array() && !x.is_object()),
        Value::Object(_) => false,
        _ => true,
    }
}

fn inline(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) => {
            let parts: Vec<String> = items.iter().map(inline).collect();
            format!("({})", parts.join(","))
        }
        other => other.to_string(),
    }
}

pub fn int(x: &BigInt) -> Value {
    Value::String(x.to_string())
}

pub fn rat(x: &BigRational) -> Value {
    Value::String(x.to_string())
}

pub fn vector(v: &IntVector) -> Value {
    Value::Array(v.iter().map(int).collect())
}

pub fn rat_vector(v: &RatVector) -> Value {
    Value::Array(v.iter().map(rat).collect())
}

pub fn vectors(vs: &[IntVector]) -> Value {
    Value::Array(vs.iter().map(vector).collect())
}

pub fn indices(v: &[usize]) -> Value {
    Value::Array(v.iter().map(|i| Value::String(i.to_string())).collect())
}

pub fn flag(b: bool) -> Value {
    Value::String(b.to_string())
}

pub fn text(s: impl Into<String>) -> Value {
    Value::String(s.into())
}

pub fn float(x: f64) -> Value {
    Value::String(format!("{x:e}"))
}

pub fn complex(z: Complex64) -> Value {
    Value::String(format!("{:e}{:+e}i", z.re, z.im))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Report {
        let mut r = Report::new("validate", "f1.fan");
        r.push(
            Section::new("validate", Verdict::Fail)
                .witness("cone 0 has determinant 2")
                .with("regular", flag(false))
                .with("rays", vectors(&[IntVector::from_i64s(&[2, 1])]))
                .with("ratio", rat(&BigRational::new(3.into(), 6.into())))
                .with("value", float(0.1)),
        );
        r
    }

    #[test]
    fn json_round_trip() {
        let r = sample();
        let back = Report::from_json(&r.to_json()).unwrap();
        assert_eq!(back, r);
        assert_eq!(back.to_json(), r.to_json());
    }

    #[test]
    fn text_rendering() {
        let t = sample().to_text();
        assert!(t.contains("[validate] FAIL"));
        assert!(t.contains("witness: cone 0 has determinant 2"));
        assert!(t.contains("ratio: 1/2"));
        assert!(t.contains("rays: [(2,1)]"));
    }
}
