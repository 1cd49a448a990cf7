use thiserror::Error;

/// Errors raised by the library operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("spectrum is empty")]
    EmptySpectrum,

    #[error("invalid singularity class: {0}")]
    InvalidClass(String),

    #[error("{0} is not weighted homogeneous")]
    NotWeightedHomogeneous(String),

    #[error("infeasible configuration: total Milnor number {total} exceeds (d-1)^n = {bound}")]
    InfeasibleConfiguration { total: u64, bound: u64 },

    #[error("unsupported dimension: {0}")]
    UnsupportedDimension(String),

    #[error("infeasible parameters: {0}")]
    InfeasibleParameters(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("arithmetic overflow: {0}")]
    Overflow(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
