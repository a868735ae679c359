//! Deterministic pass/fail reports with counterexample witnesses.

use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct ReportMeta {
    pub rank: usize,
    pub generators: Vec<String>,
    pub window: i64,
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Info,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct Witness {
    pub inputs: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct CheckRecord {
    pub id: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct CheckReport {
    pub meta: ReportMeta,
    pub checks: Vec<CheckRecord>,
}

impl CheckReport {
    pub fn new(meta: ReportMeta) -> Self {
        CheckReport {
            meta,
            checks: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn pass(&mut self, id: impl Into<String>) {
        self.checks.push(CheckRecord {
            id: id.into(),
            status: Status::Pass,
            witness: None,
        });
    }

    pub fn fail(
        &mut self,
        id: impl Into<String>,
        inputs: impl Into<String>,
        lhs: impl Into<String>,
        rhs: impl Into<String>,
    ) {
        self.checks.push(CheckRecord {
            id: id.into(),
            status: Status::Fail,
            witness: Some(Witness {
                inputs: inputs.into(),
                lhs: lhs.into(),
                rhs: rhs.into(),
            }),
        });
    }

    pub fn info(
        &mut self,
        id: impl Into<String>,
        inputs: impl Into<String>,
        lhs: impl Into<String>,
        rhs: impl Into<String>,
    ) {
        self.checks.push(CheckRecord {
            id: id.into(),
            status: Status::Info,
            witness: Some(Witness {
                inputs: inputs.into(),
                lhs: lhs.into(),
                rhs: rhs.into(),
            }),
        });
    }

    /// Summarize an exhaustive sweep: one pass record when clean, otherwise
    /// the individual failure records.
    pub fn sweep(&mut self, id: &str, failures: Vec<CheckRecord>) {
        if failures.is_empty() {
            self.pass(id);
        } else {
            self.checks.extend(failures);
        }
    }

    pub fn merge(&mut self, other: CheckReport) {
        self.checks.extend(other.checks);
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "# rank={} generators=[{}] window={}",
            self.meta.rank,
            self.meta.generators.join(", "),
            self.meta.window
        )?;
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Info => "INFO",
            };
            write!(f, "{} {}", tag, c.id)?;
            if let Some(w) = &c.witness {
                write!(f, " | inputs: {} | lhs: {} | rhs: {}", w.inputs, w.lhs, w.rhs)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
