//! Crate-wide error type. Every verification failure carries enough context
//! to name the offending input.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid conductor: {0}")]
    InvalidConductor(String),
    #[error("unsupported degree: {0}")]
    UnsupportedDegree(String),
    #[error("arity mismatch: {0}")]
    ArityMismatch(String),
    #[error("variable index out of range: {index} (arity {arity})")]
    IndexOutOfRange { index: usize, arity: usize },
    #[error("invalid map: {0}")]
    InvalidMap(String),
    #[error("invalid complex structure: {0}")]
    InvalidComplexStructure(String),
    #[error("not an automorphism: {0}")]
    NotAnAutomorphism(String),
    #[error("subgroup not stable under the map: {0}")]
    NotStable(String),
    #[error("translation case: {0}")]
    TranslationCase(String),
    #[error("degenerate input: {0}")]
    DegenerateInput(String),
    #[error("degenerate fixed locus: {0}")]
    DegenerateFixedLocus(String),
    #[error("bad reduction: {0}")]
    BadReduction(String),
    #[error("enumeration budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("inconsistency: {0}")]
    Inconsistency(String),
    #[error("invalid torsion point: {0}")]
    InvalidTorsionPoint(String),
    #[error("nothing to quotient: {0}")]
    NothingToQuotient(String),
    #[error("invalid torsor datum: {0}")]
    InvalidDatum(String),
    #[error("candidate is not an automorphism of Y: {0}")]
    NotAnAutomorphismOfY(String),
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("json error: {0}")]
    Json(String),
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn parse(position: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            position,
            message: message.into(),
        }
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(format!("line {}, column {}: {}", e.line(), e.column(), e))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
