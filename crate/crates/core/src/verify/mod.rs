//! Bounded verification: the free 2-group model and exhaustive identity checks.
//!
//! Every suite enumerates a finite universe (all loop elements up to a length
//! bound, optionally topped up with a seeded random sample at a larger bound)
//! and returns a [`CheckReport`] listing counterexamples.

mod group;
mod report;
mod suites;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use group::{act, group_mul, s_word, GroupWord};
pub use report::{CheckReport, Universe, MAX_RECORDED_FAILURES};
pub use suites::{check_identity_suite, check_transversal, run_suite};

/// The available property suites.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    /// `((x∘y)∘z)∘y = x∘((y∘z)∘y)`.
    Bol,
    /// `x∘x = 1` and `1` is a two-sided identity.
    Exp2,
    /// `(x∘y)∘y = x = x∘(y∘y)`.
    Rip,
    /// `x∘(x∘z) ≠ z` for distinct non-identity `x`, `z`.
    LeftAlt,
    /// No non-identity element is nuclear, and some triple is not associative.
    Nuclei,
    /// `π` of the canonical palindrome of `g` is `g`, for every enumerated `g`.
    Canonical,
    /// Distinct bounded palindromic forms denote distinct elements.
    UniqueForm,
    /// `1^{g·S(g)} = 1` for bounded group words `g`.
    Transversal,
    /// The algebraic laws of `π` on all words up to the length bound.
    PiAlgebra,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Bol,
        Suite::Exp2,
        Suite::Rip,
        Suite::LeftAlt,
        Suite::Nuclei,
        Suite::Canonical,
        Suite::UniqueForm,
        Suite::Transversal,
        Suite::PiAlgebra,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Bol => "bol",
            Suite::Exp2 => "exp2",
            Suite::Rip => "rip",
            Suite::LeftAlt => "left-alt",
            Suite::Nuclei => "nuclei",
            Suite::Canonical => "canonical",
            Suite::UniqueForm => "unique-form",
            Suite::Transversal => "transversal",
            Suite::PiAlgebra => "pi-algebra",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Suite, String> {
        let key = s.trim().to_ascii_lowercase().replace('_', "-");
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == key)
            .ok_or_else(|| {
                let names: Vec<&str> = Suite::ALL.iter().map(|s| s.name()).collect();
                format!("unknown suite `{s}`; expected one of {}", names.join(", "))
            })
    }
}

/// Bounds and sampling parameters shared by the suites.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteOptions {
    /// Exhaustive bound on element (or word) length.
    pub max_len: usize,
    /// Length bound for the random sample; ignored when `samples` is zero.
    pub sample_len: usize,
    pub samples: usize,
    pub seed: u64,
    /// Longest half of a palindromic form, for `unique-form`.
    pub half_len: usize,
    /// Longest basis word used as a form entry or group generator.
    pub factor_len: usize,
    /// Longest group word, for `transversal`.
    pub generators: usize,
}

impl Default for SuiteOptions {
    fn default() -> SuiteOptions {
        SuiteOptions {
            max_len: 3,
            sample_len: 5,
            samples: 0,
            seed: 0,
            half_len: 3,
            factor_len: 5,
            generators: 3,
        }
    }
}
