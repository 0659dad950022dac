use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Parameters outside the domain of a construction.
    #[error("domain error: {0}")]
    Domain(String),

    /// Cusp configuration does not use up the genus budget exactly.
    #[error("genus mismatch: expected sum of mu/2 = g = {expected}, got {found}")]
    GenusMismatch { expected: i64, found: i64 },

    #[error("range error: {0}")]
    Range(String),

    /// No spectrum formula is available for this singularity.
    #[error("unsupported cusp: {0}")]
    UnsupportedCusp(String),

    /// Two routes to the same quantity disagreed. Always a bug.
    #[error("internal consistency error: {0}")]
    Consistency(String),

    #[error("candidate count exceeds cap of {cap}")]
    CandidateCap { cap: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
