//! Verification reports: check records, JSON output and a text table.

use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

pub const ENGINE_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Serialize, Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// A documented discrepancy in the source relations; does not fail a run.
    Finding,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Finding => "finding",
        }
    }

    /// `pass` when `ok`, otherwise `otherwise`.
    pub fn from_bool(ok: bool, otherwise: Status) -> Status {
        if ok {
            Status::Pass
        } else {
            otherwise
        }
    }
}

#[derive(Serialize, Clone, Debug, PartialEq)]
pub struct CheckRecord {
    pub id: String,
    pub paper_ref: String,
    pub status: Status,
    pub residual: String,
    pub corrections: Vec<String>,
    pub ms: u64,
}

impl CheckRecord {
    pub fn new(id: &str, paper_ref: &str, status: Status, residual: impl Into<String>) -> CheckRecord {
        CheckRecord {
            id: id.to_string(),
            paper_ref: paper_ref.to_string(),
            status,
            residual: residual.into(),
            corrections: Vec::new(),
            ms: 0,
        }
    }

    pub fn with_corrections(mut self, c: Vec<String>) -> Self {
        self.corrections = c;
        self
    }

    pub fn timed(mut self, start: Instant) -> Self {
        self.ms = start.elapsed().as_millis() as u64;
        self
    }

    /// An engine error (step limit, missing table entry) is a failed check.
    pub fn error(id: &str, paper_ref: &str, err: impl std::fmt::Display) -> CheckRecord {
        CheckRecord::new(id, paper_ref, Status::Fail, format!("error: {err}"))
    }
}

/// Wall-clock data kept apart from the check records.
#[derive(Serialize, Clone, Debug, PartialEq)]
pub struct ReportHeader {
    pub generated_at_unix: u64,
    pub total_ms: u64,
}

#[derive(Serialize, Clone, Debug, PartialEq)]
pub struct VerificationReport {
    pub header: ReportHeader,
    pub suite: String,
    pub engine_version: String,
    pub checks: Vec<CheckRecord>,
}

impl VerificationReport {
    /// Sorts by id; ids must be unique.
    pub fn new(suite: &str, mut checks: Vec<CheckRecord>, total_ms: u64) -> VerificationReport {
        checks.sort_by(|a, b| a.id.cmp(&b.id));
        for pair in checks.windows(2) {
            assert_ne!(pair[0].id, pair[1].id, "duplicate check id");
        }
        let generated_at_unix = std::time::SystemTime::now()
            .duration_since(std::time::UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0);
        VerificationReport {
            header: ReportHeader { generated_at_unix, total_ms },
            suite: suite.to_string(),
            engine_version: ENGINE_VERSION.to_string(),
            checks,
        }
    }

    pub fn failed(&self) -> usize {
        self.checks.iter().filter(|c| c.status == Status::Fail).count()
    }

    pub fn count(&self, s: Status) -> usize {
        self.checks.iter().filter(|c| c.status == s).count()
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable");
        s.push('\n');
        s
    }

    /// The JSON with wall-clock data (header and per-check `ms`) zeroed,
    /// for comparing runs.
    pub fn to_stable_json(&self) -> String {
        let mut r = self.clone();
        r.header = ReportHeader { generated_at_unix: 0, total_ms: 0 };
        for c in &mut r.checks {
            c.ms = 0;
        }
        r.to_json()
    }

    pub fn to_table(&self) -> String {
        let width = self.checks.iter().map(|c| c.id.len()).max().unwrap_or(2).max(2);
        let mut out = format!("suite {} (engine {})\n", self.suite, self.engine_version);
        for c in &self.checks {
            let residual = if c.residual.len() > 100 { format!("{}...", &c.residual[..97]) } else { c.residual.clone() };
            out.push_str(&format!("{:<7} {:<width$}  {}\n", c.status.as_str(), c.id, residual));
            for corr in &c.corrections {
                out.push_str(&format!("{:<7} {:<width$}    corrected from literal text: {corr}\n", "", ""));
            }
        }
        out.push_str(&format!(
            "{} checks: {} pass, {} fail, {} finding\n",
            self.checks.len(),
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::Finding)
        ));
        out
    }
}

/// A deferred check; suites collect these and run them together.
pub type CheckFn<'a> = Box<dyn Fn() -> CheckRecord + Send + Sync + 'a>;

/// Runs checks in parallel, timing each; the order of the input is kept.
pub fn run_checks(checks: Vec<CheckFn<'_>>) -> Vec<CheckRecord> {
    checks
        .par_iter()
        .map(|f| {
            let start = Instant::now();
            f().timed(start)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sorted_and_serialized() {
        let r = VerificationReport::new(
            "t",
            vec![
                CheckRecord::new("b", "x", Status::Finding, "1"),
                CheckRecord::new("a", "y", Status::Pass, "0"),
            ],
            5,
        );
        assert_eq!(r.checks[0].id, "a");
        let json = r.to_stable_json();
        assert!(json.contains("\"status\": \"finding\""));
        assert!(json.contains("\"generated_at_unix\": 0"));
        assert_eq!(r.failed(), 0);
    }

    #[test]
    #[should_panic(expected = "duplicate")]
    fn duplicate_ids_rejected() {
        VerificationReport::new(
            "t",
            vec![CheckRecord::new("a", "", Status::Pass, ""), CheckRecord::new("a", "", Status::Pass, "")],
            0,
        );
    }
}
