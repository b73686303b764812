//! Error type shared by all modules of the crate.

use thiserror::Error;

/// Errors produced by symbol evaluation, operator construction and the
/// spectral toolkit.
#[derive(Debug, Error)]
pub enum Error {
    /// An argument lies outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A symbol violates its structural invariants (overlapping arcs,
    /// empty sample grid, ...).
    #[error("invalid symbol: {0}")]
    InvalidSymbol(String),

    /// Adaptive quadrature ran out of subdivisions before reaching the
    /// requested tolerance.
    #[error("quadrature did not converge: achieved {achieved:.3e}, requested {requested:.3e}")]
    QuadratureNonConvergence { achieved: f64, requested: f64 },

    /// A construction would exceed the configured memory/size budget.
    /// Raised before any allocation happens.
    #[error("capacity exceeded: requested N = {requested}, budget allows N <= {max}")]
    CapacityExceeded { requested: usize, max: usize },

    /// Input matrix contains NaN or infinite entries.
    #[error("non-finite entry at ({row}, {col})")]
    NonFinite { row: usize, col: usize },

    /// An operation requiring a certified Hermitian matrix received one
    /// whose Hermitian defect is too large.
    #[error("matrix is not Hermitian: defect {defect:.3e} exceeds {tolerance:.3e}")]
    NotHermitian { defect: f64, tolerance: f64 },

    /// A spectral window cannot be probed by the available truncation.
    #[error("unresolvable window: {0}")]
    UnresolvableWindow(String),

    /// An eigenvalue iteration failed to converge.
    #[error("eigen solver did not converge: {0}")]
    SolverNonConvergence(String),

    /// Shape mismatch between operands.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// Underlying I/O failure while persisting or loading artifacts.
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    /// Malformed persisted artifact (bad magic, corrupt CSV, ...).
    #[error("malformed artifact: {0}")]
    MalformedArtifact(String),
}

pub type Result<T> = std::result::Result<T, Error>;
