//! Independent checks of the closed formulas.
//!
//! The oracle never evaluates the R-set formula: it scans every `x < e_ρ` at
//! each relevant vertex and keeps those passing the contribution inequality.
//! The lemma checks recompute closed-form lattice coefficients from the
//! Euclidean sequences and compare them with the linear algebra of
//! [`crate::enriques`].

use std::fmt;

mod contribution;
mod lemmas;
mod rset;
mod verify;

pub use contribution::{
    candidate_set, contribution_test, oracle_jumping_numbers, ContributionContext,
};
pub use lemmas::{coefficient_lemma_check, term_ideal_initial_check};
pub use rset::r_set_bruteforce;
pub use verify::{compare_reports, verify_formula};

/// One named comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// First mismatch, or a short summary when passed.
    pub detail: String,
}

/// Outcome of a batch of comparisons. Discrepancies are data, not errors.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Verification {
    pub checks: Vec<Check>,
}

impl Verification {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn record(&mut self, name: impl Into<String>, result: std::result::Result<String, String>) {
        let (passed, detail) = match result {
            Ok(d) => (true, d),
            Err(d) => (false, d),
        };
        self.checks.push(Check {
            name: name.into(),
            passed,
            detail,
        });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }

    pub fn extend(&mut self, other: Verification) {
        self.checks.extend(other.checks);
    }
}

impl fmt::Display for Verification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let mark = if c.passed { "ok  " } else { "FAIL" };
            writeln!(f, "{mark} {}: {}", c.name, c.detail)?;
        }
        Ok(())
    }
}
