use thiserror::Error;

/// Failures reported by the numerical routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An input violates a precondition (sign, range, family mismatch).
    #[error("domain error: {0}")]
    Domain(String),
    /// The request exceeds a documented capability guard.
    #[error("capability limit: {0}")]
    Capability(String),
    #[error("state n = {n} is not bound: the potential supports {count} level(s)")]
    BoundStateCount { n: u32, count: u32 },
    /// An iterative method failed; the message carries diagnostics.
    #[error("numeric failure: {0}")]
    Numeric(String),
    #[error("ill-conditioned request: {0}")]
    IllConditioned(String),
    #[error("no bound state: {0}")]
    NoBoundState(String),
    #[error("state is not normalizable: {0}")]
    Normalizability(String),
    /// The grid cannot resolve the requested number of levels.
    #[error("grid truncation: {0}")]
    Truncation(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
