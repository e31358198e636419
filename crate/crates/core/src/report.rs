//! Machine-readable verification reports.

use serde::{Deserialize, Serialize};

use crate::groups::GroupSpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Bound {
    /// Pass iff `max_residual ≤ tolerance`.
    AtMost,
    /// Pass iff `max_residual ≥ tolerance` (non-vanishing checks).
    AtLeast,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub max_residual: f64,
    pub tolerance: f64,
    pub bound: Bound,
    pub pass: bool,
}

impl Check {
    pub fn at_most(name: impl Into<String>, max_residual: f64, tolerance: f64) -> Self {
        Self {
            name: name.into(),
            max_residual,
            tolerance,
            bound: Bound::AtMost,
            pass: max_residual <= tolerance,
        }
    }

    pub fn at_least(name: impl Into<String>, value: f64, threshold: f64) -> Self {
        Self {
            name: name.into(),
            max_residual: value,
            tolerance: threshold,
            bound: Bound::AtLeast,
            pass: value >= threshold,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub subject: String,
    pub group: GroupSpec,
    pub points: usize,
    pub seed: u64,
    pub checks: Vec<Check>,
    pub verdict: bool,
}

impl VerificationReport {
    pub fn new(subject: impl Into<String>, group: GroupSpec, points: usize, seed: u64) -> Self {
        Self {
            subject: subject.into(),
            group,
            points,
            seed,
            checks: Vec::new(),
            verdict: true,
        }
    }

    pub fn push(&mut self, check: Check) {
        self.verdict &= check.pass;
        self.checks.push(check);
    }

    pub fn extend(&mut self, other: VerificationReport) {
        for c in other.checks {
            self.push(c);
        }
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }
}
