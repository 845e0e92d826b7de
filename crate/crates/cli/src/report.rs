//! Command results as a text table or JSON.

use std::fmt::Write as _;

use coring_core::report::Verdict;
use coring_core::Error;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Undecided,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Fact {
    pub key: String,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub command: String,
    pub fixture: String,
    pub field: String,
    pub seed: u64,
    pub facts: Vec<Fact>,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(command: &str, fixture: &str, field: &str, seed: u64) -> Self {
        Report { command: command.into(), fixture: fixture.into(), field: field.into(), seed, facts: Vec::new(), checks: Vec::new() }
    }

    pub fn fact(&mut self, key: &str, value: impl ToString) {
        self.facts.push(Fact { key: key.into(), value: value.to_string() });
    }

    fn push(&mut self, name: &str, status: Status, detail: String) {
        self.checks.push(Check { name: name.into(), status, detail });
    }

    pub fn pass(&mut self, name: &str, detail: impl Into<String>) {
        self.push(name, Status::Pass, detail.into());
    }

    pub fn fail(&mut self, name: &str, detail: impl Into<String>) {
        self.push(name, Status::Fail, detail.into());
    }

    /// Pass or fail; `detail` is kept only on failure.
    pub fn flag(&mut self, name: &str, ok: bool, detail: impl Into<String>) {
        if ok {
            self.push(name, Status::Pass, String::new());
        } else {
            self.push(name, Status::Fail, detail.into());
        }
    }

    /// A checker verdict; the witness becomes the detail.
    pub fn verdict(&mut self, name: &str, v: Verdict) {
        match v {
            Ok(()) => self.pass(name, ""),
            Err(w) => self.fail(name, format!("witness: {w}")),
        }
    }

    /// An error raised mid-check; enumeration limits and undecided questions are not failures.
    pub fn error(&mut self, name: &str, e: &Error) {
        let status = match e {
            Error::Undecided(_) | Error::TooLargeToEnumerate { .. } => Status::Undecided,
            _ => Status::Fail,
        };
        self.push(name, status, e.to_string());
    }

    pub fn status(&self) -> Status {
        if self.checks.iter().any(|c| c.status == Status::Fail) {
            Status::Fail
        } else if self.checks.iter().any(|c| c.status == Status::Undecided) {
            Status::Undecided
        } else {
            Status::Pass
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self.status() {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::Undecided => 3,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} on {} over {} (seed {})", self.command, self.fixture, self.field, self.seed);
        let width = self.facts.iter().map(|f| f.key.chars().count()).max().unwrap_or(0);
        for f in &self.facts {
            let pad = width - f.key.chars().count();
            let _ = writeln!(out, "  {}{}  {}", f.key, " ".repeat(pad), f.value);
        }
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Undecided => "UNDECIDED",
            };
            if c.detail.is_empty() {
                let _ = writeln!(out, "  [{tag}] {}", c.name);
            } else {
                let _ = writeln!(out, "  [{tag}] {}: {}", c.name, c.detail);
            }
        }
        let overall = match self.status() {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Undecided => "undecided",
        };
        let _ = writeln!(out, "result: {overall}");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn status_precedence() {
        let mut r = Report::new("x", "y", "GF:2", 0);
        assert_eq!(r.exit_code(), 0);
        r.error("u", &Error::Undecided("no".into()));
        assert_eq!(r.exit_code(), 3);
        r.fail("f", "w");
        assert_eq!(r.exit_code(), 1);
    }

    #[test]
    fn text_layout() {
        let mut r = Report::new("comatrix", "TRIV", "GF:2", 0);
        r.fact("dim", 1);
        r.pass("axioms", "");
        assert_eq!(r.to_text(), "comatrix on TRIV over GF:2 (seed 0)\n  dim  1\n  [PASS] axioms\nresult: pass\n");
    }
}
