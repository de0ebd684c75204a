use thiserror::Error;

/// Errors raised by the series, partition and catalog layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("constant term is not 1; series is not invertible in this ring")]
    NonUnitConstantTerm,

    #[error("coefficient of q^{requested} requested but series is only exact to q^{trunc}")]
    TruncationExceeded { requested: usize, trunc: usize },

    #[error("infinite product has a factor with q-exponent {offset} < 1")]
    DivergentProduct { offset: i64 },

    #[error("negative q-exponent {exponent} is outside the power-series ring")]
    NegativeExponent { exponent: i64 },

    #[error("marker registries differ: {left:?} vs {right:?}")]
    MarkerMismatch {
        left: Vec<String>,
        right: Vec<String>,
    },

    #[error("unknown marker `{0}`")]
    UnknownMarker(String),

    #[error("invalid class specification: {0}")]
    InvalidSpec(String),

    #[error("partition {0:?} is not a member of the class")]
    NotInClass(Vec<u64>),

    #[error("invalid decomposition: {0}")]
    InvalidDecomposition(String),

    #[error("basis table too shallow: need {needed_n} parts and largest part {needed_h}, table has {max_n} and {max_h}")]
    InsufficientTableDepth {
        needed_n: usize,
        needed_h: u64,
        max_n: usize,
        max_h: u64,
    },

    #[error("constraint violated: {0}")]
    ConstraintViolation(String),

    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),

    #[error("identity `{0}` has no combinatorial oracle")]
    NoOracle(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
