//! Weyl functions and spectral functions for the two extreme self-adjoint
//! realizations of (-1)^n d^{2n}/dx^{2n} on the half-line [0, inf).
//!
//! The minimal operator has deficiency indices (n, n); among its
//! self-adjoint extensions, the Friedrichs (hard) and Krein (soft)
//! extensions sit at the two ends of the order. Their n x n matrix Weyl
//! functions turn out to be Hankel-structured with entries that are pure
//! powers of the spectral parameter times cotangent-product constants, and
//! their spectral functions are explicit power laws. This crate evaluates
//! all of it:
//!
//! - [`weyl::weyl_closed_form`]: M_F(lambda) and M_K(lambda) in the open
//!   upper half-plane,
//! - [`weyl::weyl_boundary`] and [`weyl::weyl_boundary_imag`]: their limits
//!   on the real axis,
//! - [`spectral::sigma_closed_form`] and [`spectral::stieltjes_invert`]:
//!   the spectral functions, in closed form and recovered by Stieltjes
//!   inversion of the Weyl function,
//! - [`oracle::oracle_weyl`]: an independent route that builds the matrices
//!   from the deficiency basis by linear solves, used to cross-check the
//!   closed forms,
//! - [`verify`]: named residual checks over deterministic grids,
//! - [`cli`]: the request/serialization layer behind the `halfline-weyl`
//!   binary (JSON and CSV, full-precision floats).
//!
//! Branch convention, fixed everywhere: for lambda in the open upper
//! half-plane, arg(-lambda) is read in (-pi, 0), and the 2n-th root of
//! -lambda is taken with argument in (-pi/2n, 0). The constants C_k are
//! running cotangent products over the sector angle alpha = pi/2n.
//!
//! Each major capability has a runnable walkthrough under `examples/`:
//!
//! ```text
//! cargo run --example weyl_matrix          closed-form evaluation
//! cargo run --example boundary_limits     real-axis limits of both kinds
//! cargo run --example spectral_function   sigma tables and increments
//! cargo run --example stieltjes_roundtrip inversion against closed form
//! cargo run --example oracle_crosscheck   solve route vs closed route
//! cargo run --example sharp_constants     embedding constants per order
//! cargo run --example verification_suite  the full check registry
//! ```

// negated comparisons like !(t > 0.0) are deliberate NaN guards: the branch
// must be taken when the comparison is incomparable, not just when false
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod branch;
pub mod cli;
mod dd;
mod error;
pub mod matrix;
pub mod oracle;
pub mod quad;
pub mod spectral;
pub mod verify;
pub mod weyl;

pub use branch::{
    branch_values, cotangent_products, root_of_unity, sector_angle, BranchValues, Order,
    UpperHalfPoint, MAX_ORDER,
};
pub use error::{Error, Result};
pub use matrix::{ComplexMatrix, SpectralMatrix};
pub use oracle::{oracle_weyl, OracleEval, ORACLE_RELIABLE_MAX_ORDER};
pub use spectral::{sigma_closed_form, sigma_increment, stieltjes_invert, QuadratureConfig};
pub use verify::{run_all, run_all_fuzzed, run_check, VerificationReport, CHECK_NAMES};
pub use weyl::{
    sharp_constants, weyl_boundary, weyl_boundary_imag, weyl_closed_form, ExtensionKind,
};
