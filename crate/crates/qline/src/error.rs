use thiserror::Error;

/// Errors produced by validation, quadrature, and sweep execution.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// A parameter violated one of its invariants. The message names the
    /// first violated invariant, e.g. "sigma must be positive".
    #[error("{0}")]
    InvalidParameter(String),

    /// The adaptive quadrature ran out of panel budget. Carries the partial
    /// estimate and its error bound so callers can decide what to do.
    #[error("max panels exceeded ({panels} panels, partial estimate {estimate:e}, error bound {error_bound:e})")]
    MaxPanelsExceeded {
        estimate: f64,
        error_bound: f64,
        panels: usize,
    },

    /// No integrable envelope is available for the semi-infinite tail.
    /// Cannot occur for the four built-in cutoff models, which all decay
    /// or truncate.
    #[error("tail bound unavailable: the cutoff model lacks an integrable envelope")]
    TailBoundUnavailable,

    /// The oracle could not certify its truncation error at the requested
    /// tolerance.
    #[error("tail not certified: remainder bound {bound:e} exceeds requested {requested:e}")]
    TailNotCertified { bound: f64, requested: f64 },

    /// A sweep point failed; carries the failing parameter tuple.
    #[error("sweep point failed at {params}: {source}")]
    SweepPoint {
        params: String,
        #[source]
        source: Box<Error>,
    },

    /// A sweep specification is malformed (empty axes, non-monotone grid, ...).
    #[error("invalid sweep spec: {0}")]
    InvalidSweep(String),
}
