//! Pass/fail reports produced by the verification suites.

use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub label: String,
    pub passed: bool,
    /// Empty on success; on failure, the first discrepancy.
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub name: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(name: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            checks: Vec::new(),
        }
    }

    pub fn push(&mut self, label: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            label: label.into(),
            passed,
            detail: if passed { String::new() } else { detail.into() },
        });
    }

    /// Record `Ok(())` as a pass and `Err(detail)` as a failure.
    pub fn record(&mut self, label: impl Into<String>, outcome: Result<(), String>) {
        match outcome {
            Ok(()) => self.push(label, true, ""),
            Err(detail) => self.push(label, false, detail),
        }
    }

    pub fn extend(&mut self, other: Report) {
        let prefix = other.name;
        for c in other.checks {
            self.checks.push(Check {
                label: format!("{prefix}: {}", c.label),
                ..c
            });
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let failed = self.failures().count();
        writeln!(f, "{}: {} checks, {} failed", self.name, self.checks.len(), failed)?;
        for c in &self.checks {
            if c.passed {
                writeln!(f, "  ok    {}", c.label)?;
            } else {
                writeln!(f, "  FAIL  {}: {}", c.label, c.detail)?;
            }
        }
        Ok(())
    }
}
