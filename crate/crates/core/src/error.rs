use thiserror::Error;

use crate::hypergeo::SeriesResult;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("argument outside the domain: {0}")]
    Domain(String),

    #[error("series diverges: {0}")]
    Divergent(String),

    #[error("series did not converge within {} terms (last term {:.3e})", .partial.terms_used, .partial.error_estimate)]
    NonConvergence { partial: SeriesResult },

    #[error("quadrature grid capacity {capacity} is below the required degree {required}")]
    Capacity { required: usize, capacity: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
