use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("arity mismatch: expected {expected}, found {found}")]
    Arity { expected: usize, found: usize },
    #[error("position {position} out of range 1..={max}")]
    Position { position: usize, max: usize },
    #[error("label [{label}] out of range 1..={max}")]
    Label { label: usize, max: usize },
    #[error("cochains of degree 0 are zero; degree must be at least 1")]
    DegreeZero,
    #[error("identity {0} violated")]
    Identity(String),
    #[error("element is not a multiplication: π •_1 π ≠ π •_2 π")]
    NotMultiplication,
    #[error("order mismatch: {0} vs {1}")]
    Order(usize, usize),
    #[error("degree mismatch: {0}")]
    Degree(String),
    #[error("truncation overflow: {0}")]
    Truncation(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
