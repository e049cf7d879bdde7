//! Seeded property suites: lattice axioms, homomorphisms, diagrams,
//! counterexample search and a brute-force grid oracle.
//!
//! Every suite draws its samples from [`Gen`] streams keyed by the seed, the
//! suite name and the sample index, runs them in parallel and reports
//! failures in sample order, so a report depends only on its [`GenParams`].

mod gen;
mod laws;
mod oracle;
mod search;
mod suites;

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

pub use gen::Gen;
pub use laws::{check_diagram, check_homomorphism, check_lattice_axioms, Diagram, HomMap, Structure};
pub use oracle::{compare_with_oracle, grid_oracle, GridOp, GridSet, GridValue};
pub use search::{find_counterexample, Property, Witness};
pub use suites::{run_all, run_suite, suite, suites, SuiteInfo, SuiteKind, SEARCH_BUDGET};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HarnessError {
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("{0} is not on the grid")]
    NotOnGrid(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GenParams {
    pub seed: u64,
    pub max_atoms: usize,
    pub denominator_bound: u32,
    pub universe_size: usize,
    pub samples: usize,
}

impl Default for GenParams {
    fn default() -> GenParams {
        GenParams { seed: 7, max_atoms: 6, denominator_bound: 64, universe_size: 4, samples: 1000 }
    }
}

impl GenParams {
    pub fn validate(&self) -> Result<(), HarnessError> {
        let zero = [
            ("max_atoms", self.max_atoms == 0),
            ("denominator_bound", self.denominator_bound == 0),
            ("universe_size", self.universe_size == 0),
            ("samples", self.samples == 0),
        ];
        match zero.iter().find(|(_, z)| *z) {
            Some((name, _)) => Err(HarnessError::InvalidParams(format!("{name} must be positive"))),
            None => Ok(()),
        }
    }

    pub fn with_samples(&self, samples: usize) -> GenParams {
        GenParams { samples, ..self.clone() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub sample: usize,
    pub check: String,
    pub inputs: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub suite: String,
    pub samples: usize,
    pub seed: u64,
    pub failures: Vec<Failure>,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl Report {
    pub fn new(suite: &str, samples: usize, seed: u64, failures: Vec<Failure>) -> Report {
        let verdict = if failures.is_empty() { Verdict::Pass } else { Verdict::Fail };
        Report { suite: suite.to_string(), samples, seed, failures, verdict, witness: None }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} ({} samples, seed {}", self.suite, self.verdict, self.samples, self.seed)?;
        if !self.failures.is_empty() {
            write!(f, ", {} failures", self.failures.len())?;
        }
        f.write_str(")")?;
        for fail in self.failures.iter().take(3) {
            write!(
                f,
                "\n  #{} {}: {}\n    expected {}\n    actual   {}",
                fail.sample, fail.check, fail.inputs, fail.expected, fail.actual
            )?;
        }
        if let Some(w) = &self.witness {
            write!(f, "\n  witness: {w}")?;
        }
        Ok(())
    }
}

/// Collects the failures a sample check reports.
#[derive(Default)]
pub struct Checks {
    failures: Vec<Failure>,
}

impl Checks {
    pub fn fail(&mut self, check: &str, inputs: impl fmt::Display, expected: impl fmt::Display, actual: impl fmt::Display) {
        self.failures.push(Failure {
            sample: 0,
            check: check.to_string(),
            inputs: inputs.to_string(),
            expected: expected.to_string(),
            actual: actual.to_string(),
        });
    }

    pub fn eq<T: PartialEq + fmt::Display>(&mut self, check: &str, inputs: impl FnOnce() -> String, expected: &T, actual: &T) {
        if expected != actual {
            self.fail(check, inputs(), expected, actual);
        }
    }

    pub fn holds(&mut self, check: &str, inputs: impl FnOnce() -> String, ok: bool) {
        if !ok {
            self.fail(check, inputs(), true, false);
        }
    }
}

/// Runs `check` on `params.samples` independent samples of `suite`.
pub fn run_samples<F>(suite: &str, params: &GenParams, check: F) -> Report
where
    F: Fn(&mut Gen, &mut Checks) + Sync,
{
    let failures: Vec<Failure> = (0..params.samples)
        .into_par_iter()
        .map(|k| {
            let mut g = Gen::new(params, suite, k as u64);
            let mut checks = Checks::default();
            check(&mut g, &mut checks);
            checks.failures.into_iter().map(move |f| Failure { sample: k, ..f }).collect::<Vec<_>>()
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect();
    Report::new(suite, params.samples, params.seed, failures)
}
