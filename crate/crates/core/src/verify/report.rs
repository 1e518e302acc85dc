use std::fmt;

use serde::Serialize;

use crate::format::{to_canonical, MatrixDoc};
use crate::matrix::Matrix;
use crate::semiring::Element;

/// A matrix attached to a counterexample, with its role.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NamedMatrix {
    pub name: String,
    pub matrix: MatrixDoc,
}

/// A labelled side of a failed comparison, in the exact element encoding.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NamedValue {
    pub name: String,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    /// Trial index within the run; the instance seed is `seed + trial`.
    pub trial: usize,
    pub seed: u64,
    pub clause: String,
    pub matrices: Vec<NamedMatrix>,
    pub values: Vec<NamedValue>,
}

impl Counterexample {
    pub fn new(clause: impl Into<String>) -> Self {
        Counterexample {
            trial: 0,
            seed: 0,
            clause: clause.into(),
            matrices: Vec::new(),
            values: Vec::new(),
        }
    }

    pub fn matrix(mut self, name: &str, m: &Matrix) -> Self {
        self.matrices.push(NamedMatrix {
            name: name.to_string(),
            matrix: MatrixDoc::from_matrix(m),
        });
        self
    }

    pub fn value(mut self, name: &str, e: &Element) -> Self {
        self.values.push(NamedValue {
            name: name.to_string(),
            value: e.to_string(),
        });
        self
    }

    pub fn note(mut self, name: &str, text: impl Into<String>) -> Self {
        self.values.push(NamedValue {
            name: name.to_string(),
            value: text.into(),
        });
        self
    }
}

/// Result of running one statement check over a batch of instances.
///
/// `trials` counts evaluated instances; instances whose preconditions failed
/// are counted in `skipped` instead. `counterexample` is present exactly when
/// `passed < trials` and holds the earliest failing trial.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub statement: String,
    pub semiring: String,
    pub n: Option<usize>,
    pub trials: usize,
    pub passed: usize,
    pub skipped: usize,
    pub seed: u64,
    pub counterexample: Option<Counterexample>,
}

impl CheckReport {
    pub fn all_passed(&self) -> bool {
        self.passed == self.trials
    }

    pub fn failures(&self) -> usize {
        self.trials - self.passed
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize")
    }
}

/// How one instance of a check came out.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail(Box<Counterexample>),
    Skip,
}

impl Outcome {
    pub fn from_bool(ok: bool, counterexample: impl FnOnce() -> Counterexample) -> Self {
        if ok {
            Outcome::Pass
        } else {
            Outcome::Fail(Box::new(counterexample()))
        }
    }
}

/// Folds per-trial outcomes, in trial order, into a report.
pub fn summarize(
    statement: &str,
    semiring: &str,
    n: Option<usize>,
    seed: u64,
    outcomes: impl IntoIterator<Item = Outcome>,
) -> CheckReport {
    let mut report = CheckReport {
        statement: statement.to_string(),
        semiring: semiring.to_string(),
        n,
        trials: 0,
        passed: 0,
        skipped: 0,
        seed,
        counterexample: None,
    };
    for (t, outcome) in outcomes.into_iter().enumerate() {
        match outcome {
            Outcome::Skip => report.skipped += 1,
            Outcome::Pass => {
                report.trials += 1;
                report.passed += 1;
            }
            Outcome::Fail(mut cx) => {
                report.trials += 1;
                if report.counterexample.is_none() {
                    cx.trial = t;
                    cx.seed = seed.wrapping_add(t as u64);
                    report.counterexample = Some(*cx);
                }
            }
        }
    }
    report
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.n.map(|n| format!(" n={n}")).unwrap_or_default();
        write!(
            f,
            "{} {}{}: {}/{} passed",
            self.statement, self.semiring, n, self.passed, self.trials
        )?;
        if self.skipped > 0 {
            write!(f, ", {} skipped", self.skipped)?;
        }
        writeln!(f, " (seed {})", self.seed)?;
        if let Some(cx) = &self.counterexample {
            write!(f, "{cx}")?;
        }
        Ok(())
    }
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "  counterexample at trial {} (instance seed {}): {}",
            self.trial, self.seed, self.clause
        )?;
        for v in &self.values {
            writeln!(f, "  {} = {}", v.name, v.value)?;
        }
        for m in &self.matrices {
            writeln!(f, "  {}:", m.name)?;
            let text = m.matrix.to_matrix().map(|m| to_canonical(&m)).unwrap_or_default();
            for line in text.lines() {
                writeln!(f, "    {line}")?;
            }
        }
        Ok(())
    }
}
