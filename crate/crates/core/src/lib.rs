//! Symbolic computation in the free Bol loop of exponent two.
//!
//! The crate is layered the same way the construction is:
//!
//! * [`word`]: non-associative words, their syntax, order and spine transposes;
//! * [`normalize`]: the reduced words `W(X)` and the reduction map `π`;
//! * [`basis`]: the sets `D(X)`, `R(X)`, `B(X)` with memoized membership;
//! * [`bol`]: canonical symmetric forms and the loop operation `∘`;
//! * [`verify`]: the free 2-group model and exhaustive identity checks;
//! * [`cli`]: the `bolword` command-line front end.

pub mod basis;
pub mod bol;
pub mod budget;
pub mod cli;
pub mod error;
pub mod normalize;
pub mod verify;
pub mod word;

pub use basis::{BasisCache, LoopElement};
pub use bol::{BolLoop, PalindromicForm};
pub use budget::Budget;
pub use error::{Error, Result};
pub use normalize::{in_w, pi, pi_chain, ReducedWord};
pub use word::{parse, render, Alphabet, Notation, Word};
