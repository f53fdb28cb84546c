use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid rational literal {0:?}")]
    ParseRational(String),

    #[error("zero denominator in rational literal {0:?}")]
    ZeroDenominator(String),

    #[error("column index {index} out of range for a matrix with {columns} columns")]
    IndexOutOfRange { index: usize, columns: usize },

    #[error("column indices must be distinct and increasing, got {0:?}")]
    NonDistinctIndices([usize; 3]),

    #[error("length mismatch: expected {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },

    #[error("{0} vanishes, ratio undefined")]
    ZeroDenominatorFactor(&'static str),

    #[error("{name} must be nonnegative, got {value}")]
    Negative { name: &'static str, value: String },

    #[error("division by zero: z[{0}] = 0 has no slope")]
    ZeroSlope(usize),

    #[error("need at least {needed} columns, got {actual}")]
    TooFewColumns { needed: usize, actual: usize },

    #[error("a polytope needs at least one vertex")]
    EmptyPolytope,

    #[error("invalid fuzz configuration: {0}")]
    InvalidConfig(String),

    #[error("line {line}: {msg}")]
    Format { line: usize, msg: String },
}
