//! Structured pass/fail reports for multi-clause checks.

use std::fmt;

use serde::{Deserialize, Serialize};

/// Outcome of a single clause of a check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum ClauseStatus {
    /// The clause was applicable and held.
    Holds,
    /// The clause was applicable and failed; `witness` pins down where.
    Fails { witness: String },
    /// The clause's hypothesis does not hold on this instance, so nothing
    /// is asserted. Never counted as green.
    NotApplicable { reason: String },
    /// The clause could not be decided at the chosen finite scale
    /// (e.g. a ball-grid too coarse even after refinement).
    Inconclusive { reason: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Clause {
    pub label: String,
    pub status: ClauseStatus,
}

/// A named check together with the outcome of each of its clauses.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub check: String,
    pub clauses: Vec<Clause>,
}

impl Report {
    pub fn new(check: impl Into<String>) -> Self {
        Report { check: check.into(), clauses: Vec::new() }
    }

    pub fn push(&mut self, label: impl Into<String>, status: ClauseStatus) {
        self.clauses.push(Clause { label: label.into(), status });
    }

    pub fn holds(&mut self, label: impl Into<String>) {
        self.push(label, ClauseStatus::Holds);
    }

    pub fn fails(&mut self, label: impl Into<String>, witness: impl Into<String>) {
        self.push(label, ClauseStatus::Fails { witness: witness.into() });
    }

    pub fn na(&mut self, label: impl Into<String>, reason: impl Into<String>) {
        self.push(label, ClauseStatus::NotApplicable { reason: reason.into() });
    }

    pub fn inconclusive(&mut self, label: impl Into<String>, reason: impl Into<String>) {
        self.push(label, ClauseStatus::Inconclusive { reason: reason.into() });
    }

    /// Records an asserted boolean with a witness on failure.
    pub fn assert(&mut self, label: impl Into<String>, ok: bool, witness: impl Into<String>) {
        if ok {
            self.holds(label);
        } else {
            self.fails(label, witness);
        }
    }

    /// True when no clause failed (not-applicable and inconclusive clauses
    /// do not count as failures).
    pub fn passed(&self) -> bool {
        !self.clauses.iter().any(|c| matches!(c.status, ClauseStatus::Fails { .. }))
    }

    /// True when at least one clause was actually decided.
    pub fn applicable(&self) -> bool {
        self.clauses
            .iter()
            .any(|c| matches!(c.status, ClauseStatus::Holds | ClauseStatus::Fails { .. }))
    }

    pub fn failures(&self) -> impl Iterator<Item = &Clause> {
        self.clauses.iter().filter(|c| matches!(c.status, ClauseStatus::Fails { .. }))
    }

    pub fn merge(&mut self, other: Report) {
        for clause in other.clauses {
            self.clauses.push(Clause {
                label: format!("{}: {}", other.check, clause.label),
                status: clause.status,
            });
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}] {}", if self.passed() { "ok" } else { "FAIL" }, self.check)?;
        for c in &self.clauses {
            match &c.status {
                ClauseStatus::Holds => writeln!(f, "  holds  {}", c.label)?,
                ClauseStatus::Fails { witness } => writeln!(f, "  FAILS  {}  @ {}", c.label, witness)?,
                ClauseStatus::NotApplicable { reason } => {
                    writeln!(f, "  n/a    {}  ({reason})", c.label)?
                }
                ClauseStatus::Inconclusive { reason } => {
                    writeln!(f, "  grid?  {}  ({reason})", c.label)?
                }
            }
        }
        Ok(())
    }
}
