use thiserror::Error;

/// Errors shared across the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not a prime modulus")]
    NotPrime(u64),

    #[error("column index {index} out of range for a matrix with {cols} columns")]
    IndexOutOfRange { index: usize, cols: usize },

    #[error("generator matrix is rank deficient")]
    RankDeficient,

    #[error("code has dimension equal to its length; the dual code is zero")]
    NoDual,

    #[error("{context} needs {needed} (cap is {cap})")]
    TooLarge {
        context: String,
        needed: u128,
        cap: u128,
    },

    #[error("the matroid is free: no circuits exist")]
    NoCircuits,

    #[error("minimum distance is 1, so the dual arrangement has a zero form")]
    DegenerateDual,

    #[error("dependency has a zero coefficient or fewer than two terms")]
    MalformedDependency,

    #[error("ideal generators are not homogeneous")]
    Inhomogeneous,

    #[error("Betti table was truncated at internal degree {0}")]
    Truncated(usize),

    #[error("quotient is not Cohen-Macaulay (pdim {pdim} != codim {codim})")]
    NotCM { pdim: usize, codim: usize },

    #[error("Hilbert series mismatch at degree {degree}: {lhs} vs {rhs} ({context})")]
    HilbertMismatch {
        degree: usize,
        lhs: i64,
        rhs: i64,
        context: String,
    },

    #[error("invalid code file: {0}")]
    BadCodeFile(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("code file is not valid JSON: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
