//! Lie algebras from structure constants and their standard invariants.

mod algebra;
pub mod io;
mod matrix_algebra;

pub use algebra::{
    base_change, format_vector, nn_algebra, JacobiViolation, LieAlgebra, LowerCentralSeries, Shape,
    StructureConstants,
};
pub use matrix_algebra::{ClosureWitness, MatrixLieAlgebra};

use thiserror::Error;

use crate::exactnum::QuadExtError;
use crate::linalg::LinalgError;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LieError {
    #[error("basis index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("bracket pair ({i}, {j}) must satisfy i < j")]
    UnorderedPair { i: usize, j: usize },
    #[error("expected length {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("Jacobi identity fails on ({labels}): residual {residual}")]
    Jacobi {
        triple: (usize, usize, usize),
        labels: String,
        residual: String,
    },
    #[error("lower central series did not reach zero after {steps} steps")]
    NotNilpotent { steps: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("malformed algebra file: {0}")]
    Format(String),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Field(#[from] QuadExtError),
}
