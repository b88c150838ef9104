use std::fmt::Write as _;

use gsla_core::report::{first_failure, Check};
use gsla_core::{Error, Options};
use serde_json::{json, Map, Value};

/// Process exit status; also the report's verdict class.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Positive = 0,
    Negative = 1,
    Invalid = 2,
    Inconclusive = 3,
}

#[derive(Debug)]
pub struct Report {
    pub command: &'static str,
    pub verdict: String,
    pub outcome: Outcome,
    pub certificates: Vec<Check>,
    /// command-specific fields
    pub body: Map<String, Value>,
}

impl Report {
    pub fn new(command: &'static str) -> Self {
        Report {
            command,
            verdict: String::new(),
            outcome: Outcome::Positive,
            certificates: Vec::new(),
            body: Map::new(),
        }
    }

    pub fn set(&mut self, key: &str, v: impl Into<Value>) {
        self.body.insert(key.into(), v.into());
    }

    pub fn check(&mut self, c: Check) {
        self.certificates.push(c);
    }

    pub fn finish(mut self, verdict: &str, outcome: Outcome) -> Self {
        self.verdict = verdict.into();
        self.outcome = outcome;
        // a negative verdict always names a failed certificate
        if outcome == Outcome::Negative && first_failure(&self.certificates).is_none() {
            self.certificates.push(Check::fail(verdict, "negative verdict"));
        }
        self
    }

    /// Negative report for a library error, named after the error.
    pub fn failed_with(mut self, e: &Error) -> Self {
        let outcome = match e {
            Error::InvalidInput(_) | Error::BadLiteral { .. } => Outcome::Invalid,
            Error::SearchCapExceeded { .. } => Outcome::Inconclusive,
            _ => Outcome::Negative,
        };
        self.certificates.push(Check::fail(e.kind(), e.to_string()));
        let verdict = e.kind();
        self.finish(verdict, outcome)
    }

    pub fn to_json(&self, opts: &Options) -> Value {
        let mut m = Map::new();
        m.insert("format".into(), json!(1));
        m.insert("command".into(), json!(self.command));
        m.insert("tool".into(), json!({"name": "gsla", "version": env!("CARGO_PKG_VERSION")}));
        m.insert(
            "caps".into(),
            json!({
                "seed": opts.seed,
                "probes": opts.probes,
                "max_subsets": opts.max_subsets,
                "commute_order": opts.commute_order,
            }),
        );
        m.insert("verdict".into(), json!(self.verdict));
        m.insert("exit_code".into(), json!(self.outcome as i32));
        m.insert("certificates".into(), serde_json::to_value(&self.certificates).expect("plain data"));
        if let Some(c) = first_failure(&self.certificates) {
            m.insert("first_failed".into(), json!(c.name));
        }
        for (k, v) in &self.body {
            m.insert(k.clone(), v.clone());
        }
        Value::Object(m)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{}: {}", self.command, self.verdict);
        for c in &self.certificates {
            let mark = if c.passed { "ok  " } else { "FAIL" };
            if c.detail.is_empty() {
                let _ = writeln!(s, "  [{mark}] {}", c.name);
            } else {
                let _ = writeln!(s, "  [{mark}] {}: {}", c.name, c.detail);
            }
        }
        for (k, v) in &self.body {
            match v {
                Value::String(x) => {
                    let _ = writeln!(s, "  {k}: {x}");
                }
                Value::Number(_) | Value::Bool(_) => {
                    let _ = writeln!(s, "  {k}: {v}");
                }
                Value::Object(o) => {
                    if let Some(Value::String(x)) = o.get("verdict") {
                        let _ = writeln!(s, "  {k}: {x}");
                    }
                }
                _ => {}
            }
        }
        if let Some(c) = first_failure(&self.certificates) {
            let _ = writeln!(s, "first failed: {}", c.name);
        }
        s
    }
}
