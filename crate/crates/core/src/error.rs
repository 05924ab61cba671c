use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid alphabet: {0}")]
    Alphabet(String),

    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("unknown letter '{letter}' at position {pos}")]
    UnknownLetter { letter: char, pos: usize },

    /// An operation that is only defined on non-empty words received the identity.
    #[error("{0} is undefined on the identity word")]
    IdentityInput(&'static str),

    /// A word was expected to be an element of the loop but is not.
    #[error("{word} is not an element of B(X): {reason}")]
    NotInLoop { word: String, reason: String },

    #[error("time budget of {budget_ms} ms exceeded")]
    BudgetExceeded { budget_ms: u64 },

    /// A structural invariant that the theory guarantees was violated.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}
