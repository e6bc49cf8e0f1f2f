//! Uniform pass/fail records for check suites, shared by the library and
//! the command-line front end.

use std::fmt;

/// One named check with its outcome and a short human-readable detail.
#[derive(Debug, Clone, serde::Serialize)]
pub struct CheckRecord {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl CheckRecord {
    pub fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        CheckRecord {
            name: name.into(),
            passed,
            detail: detail.into(),
        }
    }
}

impl fmt::Display for CheckRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {}: {}",
            if self.passed { "ok" } else { "FAIL" },
            self.name,
            self.detail
        )
    }
}

/// A titled batch of checks; rendering is deterministic (insertion order).
#[derive(Debug, Clone, serde::Serialize)]
pub struct RunReport {
    pub title: String,
    pub checks: Vec<CheckRecord>,
}

impl RunReport {
    pub fn new(title: impl Into<String>) -> Self {
        RunReport {
            title: title.into(),
            checks: Vec::new(),
        }
    }

    pub fn push(&mut self, record: CheckRecord) {
        self.checks.push(record);
    }

    pub fn record(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(CheckRecord::new(name, passed, detail));
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

impl fmt::Display for RunReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "== {} ==", self.title)?;
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        let failed = self.checks.iter().filter(|c| !c.passed).count();
        write!(
            f,
            "{}/{} checks passed",
            self.checks.len() - failed,
            self.checks.len()
        )
    }
}
