use thiserror::Error;

/// Errors raised across the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid curve: {0}")]
    InvalidCurve(String),

    #[error("bump radius h = {h} too large for curve of length {length}")]
    BumpTooWide { h: f64, length: f64 },

    #[error("deformation is not injective at t = {t}: {reason}")]
    NotInjective { t: f64, reason: String },

    #[error("singular Jacobian at ({0}, {1})")]
    SingularJacobian(f64, f64),

    #[error("invalid contour: {0}")]
    InvalidContour(String),

    #[error("resonance on or near contour: min singular value {sigma_min:.3e} at node {node}")]
    ContourOnResonance { sigma_min: f64, node: usize },

    #[error("numerical rank {rank} reached probe dimension {probe_dim}; increase probe_dim")]
    ProbeTooSmall { rank: usize, probe_dim: usize },

    #[error("rank/winding mismatch: rank {rank}, winding {winding}")]
    RankWindingMismatch { rank: usize, winding: i64 },

    #[error("resonance left the contour during the sweep at t = {t}")]
    ContourExit { t: f64 },

    #[error("iteration did not converge: {0}")]
    Unconverged(String),

    #[error("region touches the excluded real-axis zone: {0}")]
    ExcludedZone(String),

    #[error("pre-flight failed: {0}")]
    PreFlight(String),

    #[error("stability violation: {0}")]
    Stability(String),

    #[error("configuration error: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
