use thiserror::Error;

/// Errors produced by ideal constructors and the invariant computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} variables, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("operation is undefined for the zero ideal")]
    ZeroIdeal,

    #[error("operation is undefined for the unit ideal")]
    UnitIdeal,

    #[error("the zero and unit ideals have no incidence matrix")]
    NoIncidenceMatrix,

    #[error("row signature of an empty row")]
    EmptyRow,

    #[error("ideal has height {0}; this operation needs height at least 2")]
    HeightBelowTwo(usize),

    #[error("ideal is principal")]
    Principal,

    #[error("gap descriptor does not describe this ideal")]
    StaleGap,

    #[error("variable index {index} out of range for {n} variables")]
    VariableOutOfRange { index: usize, n: usize },

    #[error("prime {0} is not associated to the ideal")]
    NotAssociated(String),

    #[error("exponent overflow")]
    ExponentOverflow,

    #[error("weight vector has length {found}, expected {expected}")]
    WeightLength { expected: usize, found: usize },

    #[error("weights must be positive")]
    NonPositiveWeight,

    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("{0}")]
    InvalidGraph(String),

    #[error("no ideal satisfying the constraints after {0} attempts")]
    Unsatisfiable(usize),

    #[error("invalid field characteristic {0}; expected a prime")]
    InvalidField(u64),

    #[error("unknown property id `{0}`")]
    UnknownProperty(String),
}

pub type Result<T> = std::result::Result<T, Error>;
