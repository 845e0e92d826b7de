//! Pass/fail results of axiom checks.

use std::fmt;

/// A concrete failure of an axiom: which identity broke, and on what input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub axiom: String,
    pub detail: String,
}

impl Witness {
    pub fn new(axiom: &str, detail: String) -> Self {
        Witness { axiom: axiom.to_string(), detail }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.axiom, self.detail)
    }
}

/// `Ok(())` when every checked identity holds.
pub type Verdict = Result<(), Witness>;
