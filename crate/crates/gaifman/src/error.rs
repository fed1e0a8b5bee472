use thiserror::Error;

/// Errors surfaced by the library.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed or out-of-contract input.
    #[error("invalid input: {0}")]
    Input(String),

    /// Operation is not defined for this value (e.g. complement of a
    /// multi-class structure).
    #[error("unsupported: {0}")]
    Unsupported(String),

    /// An enumeration guard was exceeded; the caller must shrink the
    /// instance or raise the guard explicitly.
    #[error("guard exceeded: universe has {size} items, guard is {guard}")]
    GuardExceeded { size: usize, guard: usize },

    /// Text input that failed to parse.
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// An implication set that cannot come from any graph.
    #[error("not a modular implication set of any graph: {0}")]
    NotFromGraph(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }
}
