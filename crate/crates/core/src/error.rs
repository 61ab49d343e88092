use thiserror::Error;

/// Errors reported by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },

    #[error("malformed input: {0}")]
    Parse(String),

    #[error("{what} {index} out of range (must be < {limit})")]
    OutOfRange {
        what: &'static str,
        index: usize,
        limit: usize,
    },

    #[error("subset is not closed: {x} op{op} {y} = {result} lies outside it")]
    NotClosed {
        op: usize,
        x: usize,
        y: usize,
        result: usize,
    },

    #[error("axiom `{axiom}` fails: {witness}")]
    Axiom {
        axiom: &'static str,
        witness: String,
    },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("degree {degree} needs {needed} basis tuples, above the budget of {budget}")]
    Budget {
        degree: i64,
        needed: u128,
        budget: usize,
    },

    #[error("internal invariant violated: {0}")]
    Invariant(String),

    #[error("arithmetic overflow: {0}")]
    Overflow(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn axiom(axiom: &'static str, witness: impl Into<String>) -> Self {
        Error::Axiom {
            axiom,
            witness: witness.into(),
        }
    }
}
