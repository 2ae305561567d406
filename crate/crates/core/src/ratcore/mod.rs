//! Exact scalars, dense matrices and vectors, determinants, linear solves and
//! a small exact simplex.
//!
//! The routines are generic over [`Field`]; the rest of the crate uses them
//! through the `BigRational` aliases exported at the crate root.

mod elim;
mod lp;
mod matrix;
mod scalar;

pub use elim::{det, inverse, nullspace, rank, solve_linear, LinearSolveResult, SolveKind};
pub use lp::{lp_solve, lp_solve_standard, LpResult, LpStatus, StandardOutcome};
pub use matrix::{pointwise, Matrix, PointwiseKind, Vector};
pub use scalar::{format_rational, parse_rational, rat, ratio, Field};
