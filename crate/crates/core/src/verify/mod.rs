//! Exact re-verification of the two-colour rank-1 computations: colour
//! equations from matrix realizations, the ansatz spaces for the γ-derivative
//! couplings, the linear system they must satisfy, and jacobian ranks of
//! candidate sections.

pub mod cases;
pub mod equation;
pub mod jacobian;
pub mod suite;

use serde::Serialize;
use thiserror::Error;

use crate::rootsys::RootError;
use crate::symalg::SymError;

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("unknown case {0:?}")]
    UnknownCase(String),
    #[error("case {case} is not defined at n = {n}")]
    InvalidRank { case: String, n: usize },
    #[error("{0}: spherical root is not a chart coordinate")]
    GammaNotInChart(String),
    #[error("linear system too large: {unknowns} unknowns, {rows} equations")]
    TooLarge { unknowns: usize, rows: usize },
    #[error("inconsistent input: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Sym(#[from] SymError),
    #[error(transparent)]
    Root(#[from] RootError),
}

/// One comparison inside a case report.
#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    /// Whether the expected value comes from the published computation
    /// rather than an independent derivation.
    pub published: bool,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: &str, published: bool, pass: bool, detail: impl Into<String>) -> Check {
        Check { name: name.to_string(), published, pass, detail: detail.into() }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CaseReport {
    pub case: String,
    pub n: Option<usize>,
    pub seed: Option<u64>,
    pub checks: Vec<Check>,
}

impl CaseReport {
    pub fn new(case: &str, n: Option<usize>) -> CaseReport {
        CaseReport { case: case.to_string(), n, seed: None, checks: Vec::new() }
    }

    pub fn push(&mut self, c: Check) {
        self.checks.push(c);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    /// Seed for jacobian sampling; sampling is skipped without one.
    pub seed: Option<u64>,
    /// Independent draws per jacobian rank estimate.
    pub trials: usize,
    pub mode: crate::exec::Mode,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { seed: None, trials: 20, mode: crate::exec::Mode::default() }
    }
}
