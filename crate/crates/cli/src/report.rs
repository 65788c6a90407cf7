use std::collections::BTreeMap;
use std::fmt::Write;

use serde::Serialize;
use serde_json::Value;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub id: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    pub fn new(id: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check {
            id: id.into(),
            passed,
            detail: detail.into(),
        }
    }
}

/// Result of one command, serialized as the program's JSON output.
#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub command: String,
    pub version: String,
    pub inputs: Value,
    pub outputs: Value,
    pub checks: Vec<Check>,
    pub passed: bool,
    /// Choices made where the construction admits several readings.
    pub resolutions: BTreeMap<String, String>,
    pub wall_time_ms: f64,
}

impl RunReport {
    pub fn new(command: &str, inputs: Value) -> Self {
        RunReport {
            command: command.to_string(),
            version: VERSION.to_string(),
            inputs,
            outputs: Value::Null,
            checks: Vec::new(),
            passed: true,
            resolutions: BTreeMap::new(),
            wall_time_ms: 0.0,
        }
    }

    pub fn check(&mut self, id: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check::new(id, passed, detail));
    }

    pub fn finish(mut self, outputs: Value) -> Self {
        self.outputs = outputs;
        self.passed = self.checks.iter().all(|c| c.passed);
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} ({})", self.command, if self.passed { "ok" } else { "FAILED" });
        if let Value::Object(map) = &self.outputs {
            for (k, v) in map {
                let _ = writeln!(out, "  {k}: {}", plain(v));
            }
        }
        for c in &self.checks {
            let _ = writeln!(out, "  [{}] {}: {}", if c.passed { "pass" } else { "FAIL" }, c.id, c.detail);
        }
        for (k, v) in &self.resolutions {
            let _ = writeln!(out, "  resolution {k} = {v}");
        }
        let _ = writeln!(out, "  time: {:.1} ms", self.wall_time_ms);
        out
    }
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) if items.iter().all(|x| x.is_string()) && items.len() > 4 => {
            let lines: Vec<String> = items.iter().map(plain).collect();
            format!("\n    {}", lines.join("\n    "))
        }
        Value::Array(items) if items.iter().any(|x| x.is_object()) => {
            let lines: Vec<String> = items.iter().map(|x| x.to_string()).collect();
            format!("\n    {}", lines.join("\n    "))
        }
        other => other.to_string(),
    }
}
