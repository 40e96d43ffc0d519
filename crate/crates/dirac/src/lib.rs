//! Clifford-valued polynomial fields and the Dirac operators `D_i = Σ_j e_j ∂_{ij}`
//! in several vector variables, with an exact checker for the two-variable
//! operator sequence.

mod clifford;
mod field;
mod sequence;
mod verify;

pub use clifford::{blade_sign, clifford_mul, Clifford};
pub use field::{dirac, laplacian_identity, Exponents, PolyField};
pub use sequence::{
    convention, conventions, last_second_order_component, sequence_k2, Alternate, DiracSequence, Mutated, Standard,
};
pub use verify::{
    basis_fields, low_grade_blades, monomials, verify_complex, Check, ComplexReport, FieldSet, Residual, MAX_DEGREE,
    MAX_DIM, MAX_TRIALS,
};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum DiracError {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("index {index} out of range 1..={bound}")]
    IndexOutOfRange { index: usize, bound: usize },
    #[error("expected {expected} inputs, found {found}")]
    Arity { expected: usize, found: usize },
    #[error("no stage {0}")]
    Stage(u8),
    #[error("guard exceeded: {0}")]
    Guard(String),
}
