use thiserror::Error;

use crate::qseries::ComplexVal;

/// Failure modes shared by every evaluator in the crate.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("gcd({p}, {q}) = {gcd}, expected a coprime pair")]
    NotCoprime { p: i64, q: i64, gcd: i64 },

    #[error("pair ({p}, {q}) is outside the admissible domain: {reason}")]
    PairDomain { p: i64, q: i64, reason: &'static str },

    #[error("tau = {re}{im:+}i is not in the upper half-plane")]
    NotInUpperHalfPlane { re: f64, im: f64 },

    #[error("Im(tau) = {im} is below the accepted minimum {min}")]
    SlowNome { im: f64, min: f64 },

    #[error("argument {re}{im:+}i lies on the period lattice")]
    Singular { re: f64, im: f64 },

    #[error("series did not reach tolerance within {terms} terms")]
    NonConvergence { terms: usize, partial: ComplexVal },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// True for failures caused by the mathematical domain (coprimality,
    /// half-plane, lattice poles, convergence) rather than by malformed or
    /// out-of-range input.
    pub fn is_domain(&self) -> bool {
        !matches!(self, Error::Parse(_) | Error::InvalidArgument(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
