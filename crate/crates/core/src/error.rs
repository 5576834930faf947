use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid rational literal {0:?}")]
    ParseRational(String),

    #[error("degenerate Hessian: sigma component {index} is zero")]
    DegenerateHessian { index: usize },

    #[error("non-degenerate diagonal Hessian required: {0}")]
    HessianRequired(String),

    #[error("degree {requested} exceeds the configured cap {cap}")]
    DegreeCapExceeded { requested: u32, cap: u32 },

    #[error("degree must be at least {min}, got {got}")]
    DegreeTooSmall { min: u32, got: u32 },

    #[error("malformed polynomial data: {0}")]
    MalformedPolynomial(String),

    #[error("factor has no degree-3 component")]
    MissingCubicTerm,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
