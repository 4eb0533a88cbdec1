use thiserror::Error;

/// Errors produced by the kernel, the union machinery and the estimators.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("degenerate input: {0}")]
    DegenerateInput(String),
    #[error("clip leaves no interior")]
    EmptyClip,
    #[error("inner body is not contained in the outer body (vertex {vertex} is {excess:.3e} outside)")]
    NotNested { vertex: usize, excess: f64 },
    #[error("witness points coincide (|a - b| = {0:.3e})")]
    DegeneratePair(f64),
    #[error("dimension {0} is not supported by this operation")]
    UnsupportedDimension(usize),
    #[error("ratio inputs must be positive (got {numerator} / {denominator})")]
    NonPositive { numerator: f64, denominator: f64 },
    #[error("negative deficit: outer measure {outer} < inner measure {inner}")]
    NegativeDeficit { outer: f64, inner: f64 },
    #[error("witness {witness} violates {inequality}")]
    AssumptionViolated { witness: usize, inequality: String },
    #[error("parameter mismatch: {0}")]
    ParamMismatch(String),
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("no solution: {0}")]
    NoSolution(String),
    #[error("union is not simply connected: {0}")]
    NotSimplyConnected(String),
    #[error("lower bound {name} = {lower} exceeds upper bound {upper}")]
    SandwichViolation { name: String, lower: u64, upper: u64 },
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

impl Error {
    /// Short machine-readable tag used in CLI error JSON.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::DegenerateInput(_) => "DegenerateInput",
            Error::EmptyClip => "EmptyClip",
            Error::NotNested { .. } => "NotNested",
            Error::DegeneratePair(_) => "DegeneratePair",
            Error::UnsupportedDimension(_) => "UnsupportedDimension",
            Error::NonPositive { .. } => "NonPositive",
            Error::NegativeDeficit { .. } => "NegativeDeficit",
            Error::AssumptionViolated { .. } => "AssumptionViolated",
            Error::ParamMismatch(_) => "ParamMismatch",
            Error::BadParams(_) => "BadParams",
            Error::NoSolution(_) => "NoSolution",
            Error::NotSimplyConnected(_) => "NotSimplyConnected",
            Error::SandwichViolation { .. } => "SandwichViolation",
            Error::InvalidInput(_) => "InvalidInput",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
