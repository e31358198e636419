use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Jet division by a jet whose constant term vanishes.
    #[error("degenerate jet division: constant term of the divisor is zero")]
    DegenerateJetDivision,

    #[error("shape error: {0}")]
    ShapeError(String),

    #[error("dimension mismatch: expected {expected}, found {found} ({what})")]
    DimensionMismatch {
        what: String,
        expected: usize,
        found: usize,
    },

    #[error("zero vector: {0}")]
    ZeroVector(String),

    #[error("isotropy violation: {0}")]
    IsotropyViolation(String),

    /// Evaluation at a point where a denominator vanishes.
    #[error("domain error: denominator {denominator} has magnitude {magnitude:e}")]
    DomainError { denominator: String, magnitude: f64 },

    #[error("inconsistent linear system: {0}")]
    InconsistentSystem(String),

    #[error("unexpected solution dimension: expected {expected}, found {found}")]
    SolutionDimension { expected: usize, found: usize },

    #[error("degenerate quotient: {0}")]
    DegenerateQuotient(String),

    #[error("invalid group: {0}")]
    InvalidGroup(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("hypothesis violation: {0}")]
    HypothesisViolation(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
