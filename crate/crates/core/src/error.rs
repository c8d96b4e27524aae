use thiserror::Error;

/// Errors raised by the library.
///
/// Several variants (`UniquenessViolation`, `SearchExhausted`,
/// `IsomorphismMismatch`) never fire on correct input; they report an
/// internal invariant that failed to hold.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unsupported Cartan type {0}")]
    UnsupportedType(String),
    #[error("{0} is not a root")]
    NotARoot(String),
    #[error("expected {expected} coordinates, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("weight {0} is not dominant")]
    NotDominant(String),
    #[error("uniqueness violated: {0}")]
    UniquenessViolation(String),
    #[error("bounded search exhausted: {0}")]
    SearchExhausted(String),
    #[error("enumeration exceeded the cap of {cap} elements")]
    EnumerationCap { cap: usize },
    #[error("no operator word of length <= {depth} reaches {target}; raise the depth bound")]
    DepthExceeded { depth: usize, target: String },
    #[error("crystal isomorphism mismatch: {0}")]
    IsomorphismMismatch(String),
    #[error("invalid path: {0}")]
    InvalidPath(String),
    #[error("N = {n} is not a multiple of N_lambda = {n_lambda}")]
    NotMultiple { n: i64, n_lambda: i64 },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
