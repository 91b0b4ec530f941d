//! Error type shared by the whole toolkit.

use crate::algebra::AlgebraElement;

/// Errors produced by group, algebra, matrix and code operations.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("group order must be at least 1")]
    InvalidOrder,

    #[error("group order {order} exceeds the configured maximum {max}")]
    GroupTooLarge { order: usize, max: usize },

    #[error("malformed homomorphism: {0}")]
    MalformedHom(String),

    #[error("invalid Cayley table: {0}")]
    InvalidTable(String),

    #[error("invalid group spec `{0}`")]
    InvalidGroupSpec(String),

    #[error("{0} is not prime")]
    NotPrime(u32),

    #[error("incompatible operands: {0}")]
    IncompatibleOperands(String),

    #[error("weight {w} out of range for group of order {n}")]
    WeightOutOfRange { w: usize, n: usize },

    #[error("units over F_2 have odd weight; {w} is even")]
    OddWeightRequired { w: usize },

    #[error("no unit of the requested weight found after {attempts} attempts")]
    SamplingFailure { attempts: usize },

    /// Carries a nonzero annihilator `h` with `f * h = 0` when one was found.
    #[error("element is not invertible")]
    NotInvertible {
        witness: Option<Box<AlgebraElement>>,
    },

    #[error("element order exceeds cap {cap}")]
    OrderCapExceeded { cap: usize },

    #[error("{0} is not a unit")]
    NotAUnit(&'static str),

    #[error("unsupported group structure: {0}")]
    UnsupportedStructure(String),

    #[error("operation requires p = 2, got p = {p}")]
    UnsupportedField { p: u16 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("shift index {i} out of range 1..={n}")]
    ShiftIndexOutOfRange { i: usize, n: usize },

    #[error("error-vector weights must sum to t = {expected}, got {got}")]
    InvalidErrorVector { expected: usize, got: usize },

    #[error("message of {bits} bits exceeds capacity of {capacity} bits")]
    MessageTooLong { bits: usize, capacity: usize },

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Short machine-readable tag, used by the CLI's `--json-errors` output.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidOrder => "invalid-order",
            Error::GroupTooLarge { .. } => "group-too-large",
            Error::MalformedHom(_) => "malformed-hom",
            Error::InvalidTable(_) => "invalid-table",
            Error::InvalidGroupSpec(_) => "invalid-group-spec",
            Error::NotPrime(_) => "not-prime",
            Error::IncompatibleOperands(_) => "incompatible-operands",
            Error::WeightOutOfRange { .. } => "weight-out-of-range",
            Error::OddWeightRequired { .. } => "odd-weight-required",
            Error::SamplingFailure { .. } => "sampling-failure",
            Error::NotInvertible { .. } => "not-invertible",
            Error::OrderCapExceeded { .. } => "order-cap-exceeded",
            Error::NotAUnit(_) => "not-a-unit",
            Error::UnsupportedStructure(_) => "unsupported-structure",
            Error::UnsupportedField { .. } => "unsupported-field",
            Error::InvalidParameter(_) => "invalid-parameter",
            Error::DimensionMismatch { .. } => "dimension-mismatch",
            Error::SingularMatrix => "singular-matrix",
            Error::ShiftIndexOutOfRange { .. } => "shift-index-out-of-range",
            Error::InvalidErrorVector { .. } => "invalid-error-vector",
            Error::MessageTooLong { .. } => "message-too-long",
            Error::Parse { .. } => "parse-error",
            Error::Io(_) => "io-error",
            Error::Json(_) => "json-error",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
