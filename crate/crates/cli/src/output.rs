//! Uniform report shell shared by every subcommand: echoed inputs,
//! free-form info lines, and pass/fail check records, rendered as text
//! or JSON.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use cusp_core::report::CheckRecord;

#[derive(Debug, Clone, serde::Serialize)]
pub struct CliReport {
    pub subcommand: String,
    pub inputs: BTreeMap<String, String>,
    pub info: Vec<String>,
    pub checks: Vec<CheckRecord>,
    pub passed: bool,
}

impl CliReport {
    pub fn new(subcommand: &str) -> Self {
        CliReport {
            subcommand: subcommand.to_string(),
            inputs: BTreeMap::new(),
            info: Vec::new(),
            checks: Vec::new(),
            passed: true,
        }
    }

    pub fn input(&mut self, key: &str, value: impl ToString) {
        self.inputs.insert(key.to_string(), value.to_string());
    }

    pub fn info(&mut self, line: impl Into<String>) {
        self.info.push(line.into());
    }

    pub fn check(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(CheckRecord::new(name, passed, detail));
    }

    pub fn extend_checks(&mut self, checks: impl IntoIterator<Item = CheckRecord>) {
        self.checks.extend(checks);
    }

    /// Recompute the aggregate flag; call after the last check lands.
    pub fn finalize(mut self) -> Self {
        self.passed = self.checks.iter().all(|c| c.passed);
        self
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "cusp {}", self.subcommand);
        for (k, v) in &self.inputs {
            let _ = writeln!(out, "input {k} = {v}");
        }
        for line in &self.info {
            let _ = writeln!(out, "{line}");
        }
        for c in &self.checks {
            let _ = writeln!(out, "{c}");
        }
        let ok = self.checks.iter().filter(|c| c.passed).count();
        let _ = writeln!(out, "{ok}/{} checks passed", self.checks.len());
        out
    }

    pub fn render_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}
