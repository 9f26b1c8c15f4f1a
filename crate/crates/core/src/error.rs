//! Error type shared across the crate.

use thiserror::Error;

/// Errors raised by library operations.
///
/// `ScaleGuard` is kept distinct from ordinary failures because the CLI maps
/// it to its own exit code: a guard trip means "input too large for exact
/// desk-scale computation", not "the property failed".
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("unsatisfiable constraint: {0}")]
    UnsatisfiableConstraint(String),

    #[error("scale guard exceeded: {0}")]
    ScaleGuard(String),

    #[error("empty generator list")]
    EmptySystem,

    #[error("ideal is not zero-dimensional: {0}")]
    NotZeroDimensional(String),

    #[error("point is not a solution of the system: generator `{0}` evaluates to {1}")]
    PointNotSolution(String, String),

    #[error("origin is not the isolated solution of the reduced system: {0}")]
    OriginNotIsolated(String),

    #[error("interval too wide to certify an integer floor after {0} refinement rounds")]
    PrecisionCap(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
