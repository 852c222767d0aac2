use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("syntax error at byte {pos}: expected {expected}, found {found:?}")]
    Syntax {
        pos: usize,
        expected: String,
        found: String,
    },
    #[error("semantic error: {0}")]
    Semantic(String),
    #[error("not finite: variable {variable:?} generates an unbounded carrier ({detail})")]
    NotFinite { variable: String, detail: String },
    #[error("elements belong to different rings")]
    RingMismatch,
    #[error("not an ideal: {detail} (witness {a}, {b})")]
    NotAnIdeal { a: String, b: String, detail: String },
    #[error("{0} is a unit")]
    UnitSubject(String),
    #[error("zero subject requires the explicit allow-zero flag")]
    ZeroSubject,
    #[error("search bound {given} is below the required minimum {required}")]
    BoundTooSmall { required: usize, given: usize },
    #[error("internal inconsistency on flag {flag:?} for ring {ring}: {witness}")]
    Inconsistency {
        flag: String,
        ring: String,
        witness: String,
    },
    #[error("search space too large: {0}")]
    SearchSpace(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
