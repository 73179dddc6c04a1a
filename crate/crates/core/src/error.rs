use thiserror::Error;

/// Errors raised by the curve-invariant machinery.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("exponent at position {0} is not a nonnegative integer literal")]
    BadExponent(usize),
    #[error("polynomial is zero")]
    ZeroPolynomial,
    #[error("polynomial is constant")]
    ConstantPolynomial,
    #[error("polynomial is not squarefree")]
    NotSquarefree,
    #[error("variable `{0}` does not occur in either input")]
    MissingVariable(String),
    #[error("operation supports at most two variables, got {0}")]
    TooManyVariables(usize),
    #[error("point does not lie on the curve")]
    NotOnCurve,
    #[error("singularity is not isolated")]
    NonIsolated,
    #[error("branches have different centers")]
    CentersDiffer,
    #[error("branches are equal")]
    EqualBranches,
    #[error("branches come from different expansions; expand them together")]
    DifferentExpansions,
    #[error("component {0} is not (or could not be certified) absolutely irreducible; supply branch data instead")]
    NotAbsolutelyIrreducible(String),
    #[error("curve is disconnected")]
    Disconnected,
    #[error("invalid normal-form datum: {0}")]
    InvalidNormalForm(String),
    #[error("malformed tree: {0}")]
    MalformedTree(String),
    #[error("schema violation: {0}")]
    Schema(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
