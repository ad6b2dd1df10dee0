//! Pass/fail report lines shared by the validators, the round-trip verifier
//! and the command-line front end.

use std::fmt;

/// A failed axiom with the witness that breaks it.
pub trait Violation {
    /// Stable short name of the failed check, e.g. `peiffer`.
    fn check_id(&self) -> &'static str;
    /// Witness rendered as `key=value` pairs, e.g. `h=1 h'=2`.
    fn witness(&self) -> String;
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    /// Carries the rendered witness.
    Fail(String),
    /// The check was not evaluated; carries the reason.
    Skip(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckLine {
    pub id: String,
    pub outcome: Outcome,
}

impl CheckLine {
    pub fn pass(id: impl Into<String>) -> Self {
        CheckLine { id: id.into(), outcome: Outcome::Pass }
    }

    pub fn fail(id: impl Into<String>, witness: impl Into<String>) -> Self {
        CheckLine { id: id.into(), outcome: Outcome::Fail(witness.into()) }
    }

    pub fn skip(id: impl Into<String>, reason: impl Into<String>) -> Self {
        CheckLine { id: id.into(), outcome: Outcome::Skip(reason.into()) }
    }

    pub fn from_violation<V: Violation>(result: Result<(), V>, id: impl Into<String>) -> Self {
        match result {
            Ok(()) => CheckLine::pass(id),
            Err(v) => CheckLine::fail(id, v.witness()),
        }
    }

    /// Skipped lines do not count as failures.
    pub fn passed(&self) -> bool {
        !matches!(self.outcome, Outcome::Fail(_))
    }
}

impl fmt::Display for CheckLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.outcome {
            Outcome::Pass => write!(f, "PASS {}", self.id),
            Outcome::Fail(w) if w.is_empty() => write!(f, "FAIL {}", self.id),
            Outcome::Fail(w) => write!(f, "FAIL {} {}", self.id, w),
            Outcome::Skip(why) => write!(f, "SKIP {} {}", self.id, why),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub lines: Vec<CheckLine>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, line: CheckLine) {
        self.lines.push(line);
    }

    pub fn extend(&mut self, other: Report) {
        self.lines.extend(other.lines);
    }

    pub fn all_passed(&self) -> bool {
        self.lines.iter().all(CheckLine::passed)
    }

    pub fn first_failure(&self) -> Option<&CheckLine> {
        self.failures().next()
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckLine> {
        self.lines.iter().filter(|l| !l.passed())
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for line in &self.lines {
            writeln!(f, "{line}")?;
        }
        Ok(())
    }
}
