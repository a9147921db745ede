//! Crate-wide error type. Variants are fine-grained enough that callers and
//! tests can tell configuration mistakes, geometry violations, and numerical
//! breakdowns apart.

use thiserror::Error;

#[derive(Error, Debug)]
pub enum Error {
    #[error("invalid potential: {0}")]
    InvalidPotential(String),

    #[error("invalid model: {0}")]
    InvalidModel(String),

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("hbar must be positive, got {0}")]
    NonPositiveHbar(f64),

    #[error(
        "truncation unsafe: V = {v:.6e} at boundary node {node:?} gives ratio {ratio:.3} < 2 \
         against lambda_max = {lambda_max:.6e}"
    )]
    TruncationUnsafe {
        node: Vec<f64>,
        v: f64,
        ratio: f64,
        lambda_max: f64,
    },

    #[error(
        "factorization breakdown: |pivot| = {pivot:.3e} below {threshold:.3e} after {attempts} shift retries"
    )]
    FactorizationBreakdown {
        pivot: f64,
        threshold: f64,
        attempts: u32,
    },

    #[error("matrix order {order} exceeds dense-path guard {guard}")]
    DenseGuardExceeded { order: usize, guard: usize },

    #[error("projector rank {rank} exceeds guard {guard}")]
    ProjectorGuardExceeded { rank: usize, guard: usize },

    #[error(
        "partition band too thin: {cells:.2} cells between the sublevel set and the region \
         boundary on axis {axis}, need at least {required}; widen the margin by {needed:.4}"
    )]
    BandTooThin {
        axis: usize,
        cells: f64,
        required: usize,
        needed: f64,
    },

    #[error("sublevel containment violated: {0}")]
    ContainmentViolated(String),

    #[error("no positive margin delta achieves both continuity conditions (epsilon = {0:.3e})")]
    NoPositiveDelta(f64),

    #[error("quadrature failed to converge: estimate {estimate:.3e} after {levels} refinements")]
    QuadratureNonConvergent { estimate: f64, levels: usize },

    #[error("need at least {required} data points for a fit, got {got}")]
    FitUnderdetermined { required: usize, got: usize },

    #[error("configuration error: {0}")]
    Config(String),

    #[error("numerical failure: {0}")]
    Numerical(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
