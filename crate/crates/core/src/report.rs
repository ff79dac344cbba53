//! The record every verification suite produces.

use std::time::Instant;

use serde::Serialize;

/// Report schema version, bumped on incompatible field changes.
pub const SCHEMA_VERSION: &str = "1";

/// Failures kept verbatim; the rest are only counted.
pub const KEPT_FAILURES: usize = 100;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub inputs: String,
    pub expected: String,
    pub got: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub suite: String,
    pub pred: String,
    pub cases: u64,
    pub vacuous: u64,
    pub failures: Vec<Failure>,
    pub failure_count: u64,
    /// Informative findings that are not failures, such as a located
    /// counterexample in a negative control.
    pub notes: Vec<String>,
    pub passed: bool,
    pub seed: u64,
    pub elapsed_ms: u64,
    pub version: String,
    #[serde(skip)]
    started: Option<Instant>,
}

impl VerifyReport {
    pub fn start(suite: impl Into<String>, pred: impl Into<String>, seed: u64) -> Self {
        VerifyReport {
            suite: suite.into(),
            pred: pred.into(),
            cases: 0,
            vacuous: 0,
            failures: Vec::new(),
            failure_count: 0,
            notes: Vec::new(),
            passed: true,
            seed,
            elapsed_ms: 0,
            version: format!("{} (schema {SCHEMA_VERSION})", env!("CARGO_PKG_VERSION")),
            started: Some(Instant::now()),
        }
    }

    pub fn case(&mut self) {
        self.cases += 1;
    }

    pub fn fail(&mut self, inputs: impl Into<String>, expected: impl ToString, got: impl ToString) {
        self.fail_many(1, inputs, expected, got);
    }

    /// Records `n` failing instances sharing one description.
    pub fn fail_many(&mut self, n: u64, inputs: impl Into<String>, expected: impl ToString, got: impl ToString) {
        if n == 0 {
            return;
        }
        self.failure_count += n;
        self.passed = false;
        if self.failures.len() < KEPT_FAILURES {
            self.failures.push(Failure {
                inputs: inputs.into(),
                expected: expected.to_string(),
                got: got.to_string(),
            });
        }
    }

    pub fn note(&mut self, msg: impl Into<String>) {
        self.notes.push(msg.into());
    }

    /// Stamps the elapsed time.
    pub fn finish(mut self) -> Self {
        if let Some(t) = self.started.take() {
            self.elapsed_ms = u64::try_from(t.elapsed().as_millis()).unwrap_or(u64::MAX);
        }
        self
    }

    /// One line for text output.
    pub fn summary(&self) -> String {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        format!(
            "{verdict} {} pred={} cases={} vacuous={} failures={}",
            self.suite, self.pred, self.cases, self.vacuous, self.failure_count
        )
    }
}
