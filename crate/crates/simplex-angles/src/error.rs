use crate::quadrature::QuadratureResult;

/// Errors surfaced by the exact and Monte Carlo layers.
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    /// A parameter violated its domain (negative gamma argument, beta below -1, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// A geometric input was degenerate (coplanar simplex, singular system, ...).
    ///
    /// Degenerate configurations have probability zero for the continuous
    /// distributions sampled here, so they are reported rather than resolved
    /// by convention.
    #[error("degenerate configuration: {0}")]
    Degenerate(String),

    /// Adaptive quadrature exhausted its subdivision budget before reaching
    /// the requested tolerance. Carries the best estimate so far.
    #[error("quadrature did not converge: error estimate {} after {} evaluations",
            best.abs_error_estimate, best.evaluations)]
    NonConvergence { best: QuadratureResult },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn degenerate(msg: impl Into<String>) -> Self {
        Error::Degenerate(msg.into())
    }
}
