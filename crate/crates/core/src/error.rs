use thiserror::Error;

/// Errors raised by the numerical routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the function.
    #[error("domain error: {0}")]
    Domain(String),

    /// Dimensions below two are not supported.
    #[error("unsupported dimension D = {0} (D >= 2 required)")]
    UnsupportedDimension(f64),

    /// The requested integral or norm does not converge for these parameters.
    #[error("divergent integral: {0}")]
    Divergent(String),

    /// A Gamma factor of the cosine-regime constant sits on a pole.
    #[error("regime boundary: {0}")]
    RegimeBoundary(String),

    /// p = 1 has no Rényi value; the Shannon path must be used instead.
    #[error("p = 1 is the Shannon limit; use the Shannon entropy routines")]
    ShannonLimit,

    /// Quadrature did not reach the requested tolerance.
    #[error("no convergence: estimate {value:e} with error {error_estimate:e} (tolerance {tolerance:e})")]
    NotConverged {
        value: f64,
        error_estimate: f64,
        tolerance: f64,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
