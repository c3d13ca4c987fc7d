//! Error types shared across the library.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("grid mismatch: expected (m={expected_m}, d={expected_d}), got (m={got_m}, d={got_d})")]
    GridMismatch {
        expected_m: usize,
        expected_d: usize,
        got_m: usize,
        got_d: usize,
    },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("drift evaluation returned a non-finite value at t={t}, y={y:?}")]
    DriftEval { t: f64, y: Vec<f64> },

    #[error("time {t} is inside the guard band (limit {limit}); scores near the terminal time are undefined")]
    Guard { t: f64, limit: f64 },

    #[error("conditioning failure in {context}: all weights underflow (max log weight {max_log_weight})")]
    Conditioning { context: String, max_log_weight: f64 },

    #[error("perturbation dimension {dim} exceeds the finite-difference limit {max}")]
    DimensionTooLarge { dim: usize, max: usize },

    #[error("basis is not orthonormal: max Gram deviation {max_dev} exceeds {tol}")]
    BasisNotOrthonormal { max_dev: f64, tol: f64 },

    #[error("optimizer diverged at iteration {iter}: objective {value} exceeded {limit}")]
    Divergence { iter: usize, value: f64, limit: f64 },

    #[error("analytic score is unavailable for this drift (no closed form tag)")]
    NoClosedForm,

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("malformed dump: {0}")]
    MalformedDump(String),
}

pub type Result<T> = std::result::Result<T, Error>;
