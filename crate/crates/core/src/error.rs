use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero polynomial has no root count")]
    ZeroPolynomial,
    #[error("empty interval: lower endpoint must be strictly below upper endpoint")]
    EmptyInterval,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },
    #[error("division by zero polynomial")]
    DivisionByZero,
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("e on hypersurface")]
    OnHypersurface,
    #[error("point must be nonzero")]
    ZeroPoint,
    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),
    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("format error: {0}")]
    Format(String),
    #[error("matrix is not symmetric at ({0}, {1})")]
    NotSymmetric(usize, usize),
    #[error("parameter {param} is not on the curve: {reason}")]
    NotOnCurve { param: String, reason: String },
    #[error("all coordinates vanish at {0} (base point of the parametrization)")]
    BasePoint(String),
    #[error("duplicate parameters in secant sample")]
    DuplicateParams,
    #[error("degree too small: need d >= 2k+g+1, got d={d}, g={g}, k={k}")]
    DegreeTooSmall { d: usize, g: usize, k: usize },
    #[error("multi-slack not supported")]
    MultiSlack,
    #[error("unknown fixture: {0}")]
    UnknownFixture(String),
    #[error("invalid argument: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
