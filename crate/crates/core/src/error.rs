use thiserror::Error;

/// Errors produced by the library and surfaced by the CLI and the C ABI.
#[derive(Debug, Error)]
pub enum Error {
    #[error("skeleton dimension {k} out of range for {n_vertices} vertices (need n_vertices >= 1, k <= n_vertices - 1)")]
    SkeletonRange { n_vertices: usize, k: usize },

    #[error("invalid face: {0}")]
    InvalidFace(String),

    #[error("boundary dimension {d} out of range 1..={top}")]
    BoundaryDimension { d: usize, top: usize },

    #[error("invalid complex: {0}")]
    InvalidComplex(String),

    #[error("dimension mismatch: expected a point of S^{expected}, got S^{found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("vector is not a unit vector (norm {norm})")]
    NotUnit { norm: f64 },

    #[error("epsilon {0} outside the open interval (0, pi/8)")]
    EpsilonOutOfRange(f64),

    #[error("invalid cover: {0}")]
    InvalidCover(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("unknown check id `{0}`")]
    UnknownCheck(String),

    #[error("infeasible size: {0}")]
    InfeasibleSize(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
