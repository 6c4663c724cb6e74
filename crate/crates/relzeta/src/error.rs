use num_complex::Complex64;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("pole of order {order} at {location}")]
    Pole { location: Complex64, order: u32 },

    #[error("quadrature did not converge: partial value {partial}, error estimate {err_est}")]
    Convergence { partial: f64, err_est: f64 },

    #[error("no sign change on [{lo}, {hi}]")]
    Bracket { lo: f64, hi: f64 },

    #[error("higher-order pole detected at {location} (|c_-2| = {c2_abs:.3e})")]
    HigherOrderPole { location: Complex64, c2_abs: f64 },

    #[error("{0}")]
    Capability(String),

    #[error("s = {s} outside the validity strip {lo} < Re s < {hi}")]
    Strip { s: Complex64, lo: f64, hi: f64 },

    #[error("model has a bound state; pure continuous spectrum required")]
    Spectrum,

    #[error("non-finite value in {0}")]
    NonFinite(&'static str),
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    /// Exit code class used by the command line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Capability(_) => 3,
            Error::Convergence { .. } => 2,
            _ => 2,
        }
    }
}
