//! Verification reports shared by all the `check_*` entry points.

use std::fmt;

/// One failed law instance.  Renders tab-separated as
/// `law<TAB>inputs<TAB>lhs<TAB>rhs` so violation lines are machine-parseable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub law: String,
    pub inputs: String,
    pub lhs: String,
    pub rhs: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}\t{}\t{}\t{}",
            self.law, self.inputs, self.lhs, self.rhs
        )
    }
}

/// Outcome of an exhaustive verification run.
#[derive(Debug, Clone, Default)]
pub struct Report {
    /// Number of relation instances checked.
    pub checked: u64,
    pub violations: Vec<Violation>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn record(&mut self, law: &str, inputs: String, lhs: String, rhs: String) {
        self.violations.push(Violation {
            law: law.to_string(),
            inputs,
            lhs,
            rhs,
        });
    }

    /// Counts one instance and records a violation when `lhs != rhs`.
    pub fn check_eq<T: PartialEq + fmt::Display>(
        &mut self,
        law: &str,
        inputs: impl FnOnce() -> String,
        lhs: &T,
        rhs: &T,
    ) {
        self.checked += 1;
        if lhs != rhs {
            self.record(law, inputs(), lhs.to_string(), rhs.to_string());
        }
    }

    pub fn absorb(&mut self, other: Report) {
        self.checked += other.checked;
        self.violations.extend(other.violations);
    }
}
