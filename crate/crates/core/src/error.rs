use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the formula.
    #[error("domain error: {param} = {value:e} ({reason})")]
    Domain {
        param: &'static str,
        value: f64,
        reason: &'static str,
    },

    #[error("singularity: {0}")]
    Singularity(String),

    #[error("integration failed at t = {at:e}: {reason}")]
    Integration { at: f64, reason: String },

    #[error("quadrature did not converge: achieved {achieved:e}, requested {requested:e}")]
    Quadrature { achieved: f64, requested: f64 },

    #[error("search failed: {0}")]
    Search(String),

    #[error("grid resolution: {0}")]
    Resolution(String),

    #[error("evaluation produced a non-finite value: {0}")]
    Evaluation(String),

    #[error("invalid input: {0}")]
    Input(String),
}

impl Error {
    pub(crate) fn domain(param: &'static str, value: f64, reason: &'static str) -> Self {
        Error::Domain {
            param,
            value,
            reason,
        }
    }
}

/// Fails with a domain error unless `value > 0` (NaN fails too).
pub(crate) fn require_positive(param: &'static str, value: f64) -> Result<f64> {
    if value > 0.0 {
        Ok(value)
    } else {
        Err(Error::domain(param, value, "must be positive"))
    }
}

pub(crate) fn require_non_negative(param: &'static str, value: f64) -> Result<f64> {
    if value >= 0.0 {
        Ok(value)
    } else {
        Err(Error::domain(param, value, "must be non-negative"))
    }
}

pub(crate) fn require_finite(param: &'static str, value: f64) -> Result<f64> {
    if value.is_finite() {
        Ok(value)
    } else {
        Err(Error::domain(param, value, "must be finite"))
    }
}
