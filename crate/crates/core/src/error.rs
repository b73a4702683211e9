use thiserror::Error;

/// Errors produced anywhere in the library.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),

    #[error("matrix has non-finite entries")]
    NonFinite,

    #[error("matrix is not hermitian (deviation {deviation:e})")]
    NotHermitian { deviation: f64 },

    #[error("dimension {0} exceeds the supported maximum of 16")]
    DimensionTooLarge(usize),

    #[error("jacobi eigensolver did not converge within {sweeps} sweeps (off-diagonal mass {residual:e})")]
    NoConvergence { sweeps: usize, residual: f64 },

    #[error("invalid table: {0}")]
    InvalidTable(String),

    #[error("invalid group: {0}")]
    InvalidGroup(String),

    #[error("invalid group action: {0}")]
    InvalidAction(String),

    #[error("row {row} is not a bijection")]
    NonBijectiveRow { row: usize },

    #[error("table is not a quandle: {0}")]
    NotQuandle(String),

    #[error("order {order} exceeds the enumeration limit of {limit} for {kind}")]
    OrderTooLarge {
        order: usize,
        limit: usize,
        kind: &'static str,
    },

    #[error("invalid element: {0}")]
    InvalidElement(String),

    #[error("invalid realization parameters: {0}")]
    InvalidRealization(String),

    #[error("spectrum drifted by {drift:e}, numerical breakdown")]
    SpectrumDrift { drift: f64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("{0}")]
    Unsupported(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
