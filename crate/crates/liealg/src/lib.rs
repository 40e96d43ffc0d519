//! Orthogonal Lie algebras `so(2m)` and `so(2m+1)` realized by matrices that are
//! antisymmetric about the anti-diagonal.
//!
//! A generator is `E_{ij} - E_{N+1-j, N+1-i}` with 1-based `(i, j)`. Raising
//! generators sit strictly above the diagonal, lowering ones below it, and
//! `h_i = E_{ii} - E_{N+1-i, N+1-i}` spans the Cartan subalgebra.

mod algebra;
mod matrix;
mod weight;

pub use algebra::{Algebra, AlgebraSpec, GenKind, GeneratorId, GradingElement, Series};
pub use matrix::Matrix;
pub use weight::{coroot_pairing, fmt_half, fmt_rational, Weight};

pub use num_rational::{BigRational, Rational64};

/// Exact coefficients used by the module computations.
pub type Q = BigRational;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum LieError {
    #[error("rank {rank} is out of range for series {series}")]
    RankOutOfRange { series: Series, rank: usize },
    #[error("matrix size {0} does not match {1}")]
    SizeMismatch(usize, usize),
    #[error("matrix is not in the algebra")]
    NotInAlgebra,
    #[error("zero vector is not a root")]
    ZeroRoot,
    #[error("{0} is not a half-integer")]
    NotHalfIntegral(String),
    #[error("exactly one crossed node is supported, got {0}")]
    CrossedNodes(usize),
    #[error("crossed node {k} is out of range for rank {rank}")]
    CrossOutOfRange { k: usize, rank: usize },
    #[error("unknown generator {0}")]
    UnknownGenerator(GeneratorId),
}
