use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid model parameters: {0}")]
    InvalidParams(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("{what} index {index} outside truncation n_max = {n_max}")]
    OutOfRange {
        what: &'static str,
        index: usize,
        n_max: usize,
    },

    #[error("singular: {0} requires J != 0")]
    Singular(&'static str),

    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is not symmetric (|A - A^T| = {0:e})")]
    NotSymmetric(f64),

    #[error("Jacobi iteration did not converge after {sweeps} sweeps (off-diagonal {off:e})")]
    NotConverged { sweeps: usize, off: f64 },

    #[error("state is not normalized (norm = {0})")]
    Unnormalized(f64),

    #[error("state dimension {got} does not match basis dimension {expected}")]
    BasisMismatch { expected: usize, got: usize },

    #[error("closed-form crossing {closed:e} and bisection root {bisected:e} disagree")]
    CrossingMismatch { closed: f64, bisected: f64 },
}
