use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A quadrature hit its refinement cap; carries the best value reached.
    #[error("accuracy failure: value {value:e}, estimated error {est_error:e}")]
    Accuracy { value: f64, est_error: f64 },

    #[error("numerical failure: {0}")]
    Numerical(String),

    #[error("unsupported kernel: {0}")]
    Unsupported(String),

    #[error("degenerate configuration: {0}")]
    Degenerate(String),

    /// An atom sits exactly on a singular point of a transition kernel.
    #[error("principal value undefined: {0}")]
    PrincipalValue(String),

    #[error("search failed: {reason} (best count {best_count})")]
    SearchFailure { reason: String, best_count: usize },

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }

    /// True for errors caused by bad input rather than by the numerics.
    pub fn is_usage(&self) -> bool {
        matches!(self, Error::Domain(_) | Error::Parse(_) | Error::Unsupported(_) | Error::Degenerate(_))
    }
}
