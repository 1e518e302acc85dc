use thiserror::Error;

/// Errors raised by semiring, matrix and permanent operations.
///
/// Every index carried here is 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("element `{element}` does not belong to semiring {semiring}")]
    CarrierMismatch { semiring: String, element: String },

    #[error("semiring mismatch: {left} vs {right}")]
    SemiringMismatch { left: String, right: String },

    #[error("shape mismatch: {left_rows}x{left_cols} vs {right_rows}x{right_cols}")]
    ShapeMismatch {
        left_rows: usize,
        left_cols: usize,
        right_rows: usize,
        right_cols: usize,
    },

    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix must have at least one row and one column")]
    EmptyMatrix,

    #[error("{what} requires n >= {min}, got n = {n}")]
    TooSmall { what: &'static str, n: usize, min: usize },

    #[error("{index} {kind} index out of range 1..={bound}")]
    IndexOutOfRange {
        kind: &'static str,
        index: usize,
        bound: usize,
    },

    #[error("invalid index tuple: {0}")]
    InvalidIndexTuple(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("{algorithm} refuses n = {n}: size cap is {cap}")]
    CapExceeded {
        algorithm: &'static str,
        n: usize,
        cap: usize,
    },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("condition (*) fails: a_{j}{k} is not <= a_{i}{i}")]
    StarConditionFails { i: usize, j: usize, k: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("axiom check needs at least {required} distinct samples, got {got}")]
    TooFewSamples { required: usize, got: usize },

    #[error("unknown semiring `{0}`")]
    UnknownSemiring(String),

    #[error("{0}")]
    Invalid(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
