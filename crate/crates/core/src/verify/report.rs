use std::fmt::Write as _;
use std::time::Instant;

use serde::{Deserialize, Serialize};

pub const REPORT_SCHEMA: &str = "v1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Exploratory output with nothing to compare against.
    Reported,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Reported => "reported",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub check_id: String,
    pub status: Status,
    pub detail: String,
    /// Highest power of q through which a series identity was compared.
    pub verified_order: Option<i64>,
    pub millis: u64,
}

/// What a check body produces before it is timed and labelled.
pub struct Outcome {
    pub status: Status,
    pub detail: String,
    pub verified_order: Option<i64>,
}

impl Outcome {
    pub fn new(ok: bool, detail: impl Into<String>) -> Self {
        Outcome {
            status: Status::from_bool(ok),
            detail: detail.into(),
            verified_order: None,
        }
    }

    pub fn reported(detail: impl Into<String>) -> Self {
        Outcome {
            status: Status::Reported,
            detail: detail.into(),
            verified_order: None,
        }
    }

    pub fn through(mut self, n: i64) -> Self {
        self.verified_order = Some(n);
        self
    }
}

/// Runs one check body, timing it when `timing` is set (a zero is written
/// otherwise so reports can be compared byte for byte).
pub fn run_check(id: &str, timing: bool, body: impl FnOnce() -> Outcome) -> CheckResult {
    let start = Instant::now();
    let o = body();
    CheckResult {
        check_id: id.to_string(),
        status: o.status,
        detail: o.detail,
        verified_order: o.verified_order,
        millis: if timing { start.elapsed().as_millis() as u64 } else { 0 },
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportConfig {
    pub order: i64,
    pub prime: u64,
    pub seed: u64,
    pub trials: usize,
    pub precision: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub schema: String,
    pub suite: String,
    pub config: ReportConfig,
    pub results: Vec<CheckResult>,
}

impl VerificationReport {
    pub fn new(suite: &str, config: ReportConfig, mut results: Vec<CheckResult>) -> Self {
        results.sort_by(|a, b| a.check_id.cmp(&b.check_id));
        VerificationReport {
            schema: REPORT_SCHEMA.to_string(),
            suite: suite.to_string(),
            config,
            results,
        }
    }

    pub fn passed(&self) -> bool {
        self.results.iter().all(|r| r.status != Status::Fail)
    }

    pub fn failures(&self) -> Vec<&CheckResult> {
        self.results.iter().filter(|r| r.status == Status::Fail).collect()
    }

    pub fn get(&self, id: &str) -> Option<&CheckResult> {
        self.results.iter().find(|r| r.check_id == id)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    /// Fixed-width table for terminals.
    pub fn to_table(&self) -> String {
        let width = self.results.iter().map(|r| r.check_id.len()).max().unwrap_or(8).max(8);
        let mut out = String::new();
        let _ = writeln!(out, "suite {} (order {}, seed {})", self.suite, self.config.order, self.config.seed);
        for r in &self.results {
            let order = r.verified_order.map_or(String::from("-"), |n| format!("q^{n}"));
            let _ = writeln!(
                out,
                "{:<width$}  {:<8}  {:>6}  {:>7}ms  {}",
                r.check_id,
                r.status.label(),
                order,
                r.millis,
                r.detail
            );
        }
        let fails = self.failures().len();
        let _ = writeln!(out, "{} checks, {} failed", self.results.len(), fails);
        out
    }
}
