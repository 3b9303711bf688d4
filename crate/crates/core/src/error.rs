use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("degenerate material: {0}")]
    DegenerateMaterial(String),

    #[error("invalid stretch state ({lambda1}, {lambda2}): stretches must be positive and finite")]
    InvalidStretch { lambda1: f64, lambda2: f64 },

    #[error("invalid electric load: {0}")]
    InvalidLoad(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("{0} is not available for this material")]
    NotAvailable(&'static str),

    #[error("material response evaluated to a non-finite value at ({lambda1}, {lambda2})")]
    MaterialEvaluation { lambda1: f64, lambda2: f64 },

    #[error("solver failed: {reason} (bracket [{lo}, {hi}])")]
    Solver { reason: String, lo: f64, hi: f64 },

    #[error("no coalescence: equibiaxial activation grows up to the search cap {cap}")]
    Unbounded { cap: f64 },
}
