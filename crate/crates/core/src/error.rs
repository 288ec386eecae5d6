use thiserror::Error;

/// Errors produced by matrix construction, spectral routines, channel
/// validation, and the recovery-map operations.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch in {context}: expected {expected}, found {found}")]
    DimensionMismatch {
        context: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("matrix is not square: {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix entries must be finite")]
    NonFiniteEntry,

    #[error("matrix is not Hermitian: asymmetry {asymmetry:.3e} exceeds {tolerance:.3e}")]
    NotHermitian { asymmetry: f64, tolerance: f64 },

    #[error("matrix is not positive semidefinite: min eigenvalue {min_eigenvalue:.3e} below -{threshold:.3e}")]
    NotPositiveSemidefinite { min_eigenvalue: f64, threshold: f64 },

    #[error("matrix is not a projector: {reason}")]
    NotProjector { reason: String },

    #[error("{context} must be strictly positive (min eigenvalue {min_eigenvalue:.3e}); for rank-deficient inputs use the extended map")]
    NotStrictlyPositive {
        context: &'static str,
        min_eigenvalue: f64,
    },

    #[error("support containment violated in {context}: supp of the first argument is not contained in supp of the second (leak {leak:.3e})")]
    SupportViolation { context: &'static str, leak: f64 },

    #[error("projector is not dominated by the support projector of the operand (leak {leak:.3e}); the restricted logarithm is undefined there")]
    ProjectorNotDominated { leak: f64 },

    #[error("eigendecomposition failed to converge: dim {dim}, max |entry| {max_abs:.3e}")]
    EigenFailed { dim: usize, max_abs: f64 },

    #[error("matrix exponential overflow: max exponent {max_exponent:.3e} exceeds {limit:.3e}")]
    ExpOverflow { max_exponent: f64, limit: f64 },

    #[error("invalid parameter {name}: {value} ({constraint})")]
    InvalidParameter {
        name: &'static str,
        value: String,
        constraint: &'static str,
    },

    #[error("dimension {dim} does not factor as {dim_b} x {dim_e}")]
    NonFactorableDimension {
        dim: usize,
        dim_b: usize,
        dim_e: usize,
    },

    #[error("channel is not trace preserving: deviation {deviation:.3e}")]
    NotTracePreserving { deviation: f64 },

    #[error("channel is not completely positive: Choi min eigenvalue {min_eigenvalue:.3e}")]
    NotCompletelyPositive { min_eigenvalue: f64 },

    #[error("isometry condition V\u{2020}V = 1 violated: deviation {deviation:.3e}")]
    NotIsometry { deviation: f64 },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),

    #[error("invalid file content: {0}")]
    InvalidFile(String),
}

pub type Result<T> = std::result::Result<T, Error>;
