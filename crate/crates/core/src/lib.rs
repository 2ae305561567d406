//! Exact decision procedures for column-sufficiency style properties of
//! matrix tuples `(C₀, …, C_k)`, and an exact solver for the extended
//! horizontal linear complementarity problem
//!
//! ```text
//! C₀x₀ = q + Σ Cᵢxᵢ,   x₀ ∧ x₁ = 0,   (dⱼ − xⱼ) ∧ xⱼ₊₁ = 0  (j = 1..k−1).
//! ```
//!
//! All arithmetic is exact rational arithmetic; verdicts are sign conditions
//! and never depend on a tolerance.

pub mod classes;
pub mod cli;
pub mod csw;
pub mod error;
pub mod harness;
pub mod ratcore;
pub mod representatives;
pub mod solver;
pub mod verdict;

pub use error::{Error, Result};
pub use ratcore::{Field, Matrix, Vector};

/// Exact rational scalar used by every decision procedure.
pub type Rational = num_rational::BigRational;
pub type RatMatrix = Matrix<Rational>;
pub type RatVector = Vector<Rational>;
pub type RatLinearSolveResult = ratcore::LinearSolveResult<Rational>;
pub type RatLpResult = ratcore::LpResult<Rational>;

pub use representatives::MatrixTuple;
pub use solver::{EhlcpInstance, SolutionTuple};
pub use verdict::{PropertyVerdict, Witness};
