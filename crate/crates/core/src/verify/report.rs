use std::fmt::{self, Write as _};

use serde::{Deserialize, Serialize};

/// Counterexamples kept verbatim; the total is always in `failure_count`.
pub const MAX_RECORDED_FAILURES: usize = 100;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Universe {
    pub alphabet: String,
    pub bounds: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

/// Outcome of one property run over a bounded universe.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub property: String,
    pub universe: Universe,
    pub cases: u64,
    pub skipped: u64,
    pub failures: Vec<String>,
    pub failure_count: u64,
    pub notes: Vec<String>,
    pub elapsed_ms: u64,
    pub passed: bool,
}

impl CheckReport {
    pub fn new(property: &str, universe: Universe) -> CheckReport {
        CheckReport {
            property: property.to_string(),
            universe,
            cases: 0,
            skipped: 0,
            failures: Vec::new(),
            failure_count: 0,
            notes: Vec::new(),
            elapsed_ms: 0,
            passed: true,
        }
    }

    pub fn case(&mut self) {
        self.cases += 1;
    }

    pub fn skip(&mut self) {
        self.skipped += 1;
    }

    pub fn fail(&mut self, counterexample: String) {
        self.failure_count += 1;
        self.passed = false;
        if self.failures.len() < MAX_RECORDED_FAILURES {
            self.failures.push(counterexample);
        }
    }

    /// Records one case and a failure when `ok` is false.
    pub fn expect<F>(&mut self, ok: bool, counterexample: F)
    where
        F: FnOnce() -> String,
    {
        self.case();
        if !ok {
            self.fail(counterexample());
        }
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    pub fn is_pass(&self) -> bool {
        self.failure_count == 0
    }

    /// Merges the counts and failures of `other` into `self`.
    pub fn absorb(&mut self, other: CheckReport) {
        self.cases += other.cases;
        self.skipped += other.skipped;
        for f in other.failures {
            if self.failures.len() < MAX_RECORDED_FAILURES {
                self.failures.push(f);
            }
        }
        self.failure_count += other.failure_count;
        self.passed &= other.passed;
        self.notes.extend(other.notes);
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{}: {}",
            self.property,
            if self.is_pass() { "PASS" } else { "FAIL" }
        );
        let _ = writeln!(out, "  alphabet: {}", self.universe.alphabet);
        let _ = writeln!(out, "  bounds: {}", self.universe.bounds);
        if let Some(seed) = self.universe.seed {
            let _ = writeln!(out, "  seed: {seed}");
        }
        let _ = writeln!(out, "  cases: {}", self.cases);
        if self.skipped > 0 {
            let _ = writeln!(out, "  skipped: {}", self.skipped);
        }
        let _ = writeln!(out, "  failures: {}", self.failure_count);
        for f in &self.failures {
            let _ = writeln!(out, "    {f}");
        }
        for n in &self.notes {
            let _ = writeln!(out, "  note: {n}");
        }
        out
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}
