use num_complex::Complex64;
use thiserror::Error;

/// Errors shared by all numerical and arithmetic routines in this crate.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("pole encountered at {location}")]
    Pole { location: Complex64 },

    #[error("quadrature did not converge: last two estimates {prev:e} and {last:e} (target rel tol {tol:e})")]
    NoConvergence { prev: f64, last: f64, tol: f64 },

    #[error("series diverges: {0}")]
    Divergent(String),

    #[error("contour constraint violated: {0}")]
    Contour(String),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn pole(location: Complex64) -> Self {
        Error::Pole { location }
    }
}
