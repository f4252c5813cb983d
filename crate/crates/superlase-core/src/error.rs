//! Crate-wide error type.

use thiserror::Error;

/// Everything that can go wrong in a superradiant-laser computation.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// A parameter violates a precondition (non-positive rate, pump out of
    /// range, invalid state label, ...).
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// An argument lies outside the validated numerical domain of a kernel.
    #[error("argument out of validated range: {0}")]
    ArgumentOutOfRange(String),

    /// The generator null space is not one-dimensional.
    #[error("null space degenerate: {0}")]
    NullSpaceDegenerate(String),

    /// A factorization hit a (near-)singular block.
    #[error("singular operator: {0}")]
    Singular(String),

    /// An iterative scheme ran out of budget.
    #[error("no convergence: {0}")]
    NoConvergence(String),

    /// Time integration reached the horizon before the state settled.
    #[error("not relaxed at horizon: residual derivative norm {residual:.3e} > tol {tol:.3e}")]
    NotRelaxed { residual: f64, tol: f64 },

    /// Adaptive quadrature could not meet the requested tolerance.
    #[error("quadrature did not converge: {0}")]
    QuadratureNoConvergence(String),

    /// A log-space magnitude left the representable f64 range.
    #[error("overflow guard tripped: {0}")]
    OverflowGuard(String),

    /// Doubling the truncation order still changes the result.
    #[error("series truncation not converged: {0}")]
    TruncationNotConverged(String),

    /// |d/s| >= 1, outside the Gaussian pulse approximation's domain.
    #[error("epsilon = d/s out of range: {0}")]
    EpsilonOutOfRange(f64),
}

pub type Result<T> = std::result::Result<T, Error>;
