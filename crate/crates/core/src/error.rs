use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Failure classes shared by every evaluator in the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A Gamma-function pole makes the requested value infinite.
    #[error("pole: {0}")]
    Pole(String),

    /// Arguments fall outside the region where the formula or series holds.
    #[error("domain error: {0}")]
    Domain(String),

    /// A series or quadrature hit its work cap before meeting the tolerance.
    #[error("no convergence after {iterations} iterations (estimate {estimate:e}, error {error:e})")]
    NoConvergence {
        iterations: usize,
        estimate: f64,
        error: f64,
    },

    /// An integrand or intermediate value was NaN or infinite.
    #[error("non-finite value: {0}")]
    NonFinite(String),

    /// A suite file or parameter record is malformed.
    #[error("invalid input: {0}")]
    Invalid(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn pole(msg: impl Into<String>) -> Self {
        Error::Pole(msg.into())
    }
}
