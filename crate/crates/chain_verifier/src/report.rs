//! Pass/fail records shared by every certificate.

use magnetic_phase::CaseTag;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub observed: String,
    /// `None` for exact comparisons.
    pub tolerance: Option<f64>,
    pub pass: bool,
}

impl Check {
    pub fn exact(name: impl Into<String>, expected: impl ToString, observed: impl ToString) -> Self {
        let (expected, observed) = (expected.to_string(), observed.to_string());
        let pass = expected == observed;
        Check { name: name.into(), expected, observed, tolerance: None, pass }
    }

    pub fn within(name: impl Into<String>, expected: f64, observed: f64, tol: f64) -> Self {
        Check {
            name: name.into(),
            expected: format!("{expected:e}"),
            observed: format!("{observed:e}"),
            tolerance: Some(tol),
            pass: (expected - observed).abs() <= tol,
        }
    }

    /// A non-gating line; always passes.
    pub fn info(name: impl Into<String>, value: impl ToString) -> Self {
        let v = value.to_string();
        Check { name: name.into(), expected: v.clone(), observed: v, tolerance: None, pass: true }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CertificateReport {
    pub case_tag: CaseTag,
    pub checks: Vec<Check>,
    pub sample_count: usize,
    pub seed: u64,
}

impl CertificateReport {
    pub fn new(case_tag: CaseTag, sample_count: usize, seed: u64) -> Self {
        CertificateReport { case_tag, checks: Vec::new(), sample_count, seed }
    }

    pub fn push(&mut self, c: Check) {
        self.checks.push(c);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.pass).collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data")
    }
}
