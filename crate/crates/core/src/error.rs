use thiserror::Error;

/// Errors raised by the algebra engine.
///
/// `Aborted` is the only variant that does not describe a defect in the
/// input: it means a configured resource cap was hit before a mathematical
/// answer was reached.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at position {pos}: {message}")]
    Syntax { pos: usize, message: String },

    #[error("unknown variable `{name}` at position {pos}")]
    UnknownVariable { name: String, pos: usize },

    #[error("coefficient `{text}` is not an element of {field}")]
    CoefficientNotInField { text: String, field: String },

    #[error("polynomials belong to different ring contexts")]
    RingMismatch,

    #[error("computation aborted: {0}")]
    Aborted(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("degree of the zero polynomial is undefined")]
    ZeroPolynomial,

    #[error("polynomial is not homogeneous for the grading")]
    Inhomogeneous,

    #[error("the ideal is the unit ideal")]
    UnitIdeal,

    #[error("cocycle condition fails for the triple ({0}, {1}, {2})")]
    CocycleFails(usize, usize, usize),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
