//! Crate-wide error type.

use thiserror::Error;

/// Everything that can go wrong when evaluating or verifying.
///
/// Domain violations (bad order, point off the open upper half-plane, the
/// Krein boundary pole at x = 0, a backwards increment interval) are kept
/// separate from numerical failures (singular solve, no Jacobi convergence)
/// so the command-line wrapper can map them to distinct exit codes.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("order must lie in 1..={max}, got {n}")]
    OrderOutOfRange { n: u32, max: u32 },

    #[error("spectral parameter must lie in the open upper half-plane, got {re}+{im}i")]
    NotUpperHalfPlane { re: f64, im: f64 },

    #[error("spectral parameter must be finite and nonzero, got modulus {r} at angle {phi}")]
    DegenerateModulus { r: f64, phi: f64 },

    #[error("root-of-unity index must lie in 0..={max}, got {k}")]
    RootIndexOutOfRange { k: u32, max: u32 },

    #[error("the Krein boundary matrix has a pole at x = 0")]
    KreinBoundaryPole,

    #[error("matrix dimensions do not match: {expected} vs {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("matrix is numerically singular (pivot {pivot:e} at elimination step {step})")]
    SingularMatrix { step: usize, pivot: f64 },

    #[error("Jacobi eigenvalue iteration did not converge within {sweeps} sweeps")]
    JacobiNoConvergence { sweeps: usize },

    #[error("increment interval is backwards: t1 = {t1} > t2 = {t2}")]
    BackwardsInterval { t1: f64, t2: f64 },

    #[error("quadrature needs at least two nodes, got {nodes}")]
    TooFewNodes { nodes: usize },

    #[error("finite imaginary offset must be positive and finite, got {y}")]
    BadImaginaryOffset { y: f64 },

    #[error("a tabulation range needs at least one step, got {steps}")]
    EmptyRange { steps: u32 },

    #[error("unknown check name: {name}")]
    UnknownCheck { name: String },
}

impl Error {
    /// True for errors caused by how the computation was asked for, false
    /// for failures of the computation itself.
    pub fn is_usage(&self) -> bool {
        !matches!(
            self,
            Error::SingularMatrix { .. }
                | Error::JacobiNoConvergence { .. }
                | Error::DimensionMismatch { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
