use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed textual input (scalars, labels, JSON payloads).
    #[error("parse error: {0}")]
    Parse(String),

    /// Well-formed input that does not fit the declared shapes.
    #[error("input error: {0}")]
    Input(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("degenerate bilinear form: {0}")]
    DegenerateForm(String),

    #[error("element is not homogeneous: {0}")]
    NotHomogeneous(String),

    #[error("operands live in different ambient spaces")]
    AmbientMismatch,

    #[error("wrong degree or parity: {0}")]
    WrongDegree(String),

    #[error("not a quadratic Lie superalgebra: {0}")]
    NotQuadratic(String),

    #[error("not a subalgebra: {0}")]
    NotSubalgebra(String),

    #[error("invalid representation: {0}")]
    InvalidRepresentation(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("degree budget exceeded: {0}")]
    DegreeBudget(String),

    /// A property that holds by construction failed; indicates a bug or
    /// inconsistent input that slipped past validation.
    #[error("internal consistency error: {0}")]
    Internal(String),
}
