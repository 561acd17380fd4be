use thiserror::Error;

/// Errors produced by field, polynomial and design operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("q must be a power of 2, got {0}")]
    NotAPowerOfTwo(u64),

    #[error("extension degree {0} exceeds the supported maximum of 16 (q <= 65536)")]
    DegreeTooLarge(u32),

    #[error("element {value} is out of range for GF({order})")]
    ElementOutOfRange { value: u32, order: u32 },

    #[error("division by zero in GF({0})")]
    DivisionByZero(u32),

    #[error("index {index} must be < q^q for q = {q}")]
    IndexTooLarge { index: u128, q: u32 },

    #[error("degree {d} out of range for q = {q}")]
    DegreeOutOfRange { d: u32, q: u32 },

    #[error("n = {n} sets requested but the construction supports at most q^q for q = {q}")]
    TooManySets { n: u64, q: u32 },

    #[error("n must be at least 1")]
    EmptyDesign,

    #[error("malformed design: {0}")]
    MalformedDesign(String),

    #[error("invalid rho: {0}")]
    InvalidRho(String),

    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),

    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse {
        line: usize,
        col: usize,
        msg: String,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
