//! Verification suites. Each suite runs a fixed family of exact checks and
//! reports every check with a witness on failure; a suite passes iff all of
//! its checks do.

mod homs;
mod infra;
mod simplicial;

use std::fmt;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::Result;

pub use infra::random_set;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl Check {
    pub fn new(name: impl Into<String>, passed: bool, witness: impl FnOnce() -> String) -> Self {
        Self {
            name: name.into(),
            passed,
            witness: (!passed).then(witness),
        }
    }

    /// A passing check that still records a witness, e.g. an isomorphism.
    pub fn with_evidence(name: impl Into<String>, evidence: String) -> Self {
        Self {
            name: name.into(),
            passed: true,
            witness: Some(evidence),
        }
    }
}

/// The outcome of one suite. `elapsed` is kept out of the serialized form so
/// that reports are reproducible byte for byte.
#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub passed: bool,
    pub checks: Vec<Check>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        writeln!(f, "{status} {} ({} checks)", self.suite, self.checks.len())?;
        for c in &self.checks {
            let mark = if c.passed { "ok  " } else { "FAIL" };
            match (&c.witness, c.passed) {
                (Some(w), false) => writeln!(f, "  {mark} {}: {w}", c.name)?,
                _ => writeln!(f, "  {mark} {}", c.name)?,
            }
        }
        Ok(())
    }
}

/// Grid sizes and fuzzing parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiteOptions {
    pub max_m: usize,
    pub max_k: usize,
    pub max_i: usize,
    pub max_j: usize,
    pub fuzz: usize,
    pub seed: u64,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        Self {
            max_m: 3,
            max_k: 2,
            max_i: 3,
            max_j: 3,
            fuzz: 200,
            seed: 0,
        }
    }
}

type SuiteFn = fn(&SuiteOptions) -> Result<Vec<Check>>;

/// Every suite, in the order `all` runs them.
pub const SUITES: &[(&str, SuiteFn)] = &[
    ("eq3-pushout", simplicial::eq3_pushout),
    ("hom-bijection", homs::hom_bijection),
    ("l-representables", homs::l_representables),
    ("cofibrations", homs::cofibrations),
    ("suspension-laws", simplicial::suspension_laws),
    ("comparison", simplicial::comparison),
    ("nerve-structure", simplicial::nerve_structure),
    ("simplicial-identities", infra::simplicial_identities),
    ("infrastructure", infra::infrastructure),
];

pub fn suite_names() -> impl Iterator<Item = &'static str> {
    SUITES.iter().map(|(n, _)| *n).chain(["all"])
}

/// Runs one suite by name, or every suite for `all`. Unknown names give
/// `None`.
pub fn run(name: &str, opts: &SuiteOptions) -> Option<Result<Vec<SuiteReport>>> {
    let selected: Vec<&(&str, SuiteFn)> = SUITES.iter().filter(|(n, _)| name == "all" || *n == name).collect();
    if selected.is_empty() {
        return None;
    }
    Some(
        selected
            .into_iter()
            .map(|(n, f)| {
                let start = Instant::now();
                let checks = f(opts)?;
                Ok(SuiteReport {
                    suite: n.to_string(),
                    passed: checks.iter().all(|c| c.passed),
                    checks,
                    elapsed: start.elapsed(),
                })
            })
            .collect(),
    )
}
