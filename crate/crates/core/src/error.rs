use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("grid mismatch: on-shell data live on different momentum grids")]
    GridMismatch,

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("massless field in one space dimension is not supported")]
    MasslessChiral,

    #[error("invalid charge: {0}")]
    InvalidCharge(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("subspace is not standard (condition number {0:e})")]
    NotStandard(f64),

    #[error("vector is not in the subspace (projection residual {0:e})")]
    NotInSubspace(f64),

    #[error("modular operator is singular (condition number {0:e})")]
    SingularModular(f64),

    #[error("entropy has a nonvanishing imaginary part {0:e}")]
    ComplexEntropy(f64),

    #[error("Fock cutoff too small: trace deficit {deficit:e} exceeds {limit:e}")]
    TruncationDeficit { deficit: f64, limit: f64 },

    #[error("config: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
