//! Polynomial arithmetic over ℚ in a fixed variable universe and the identity
//! suite for commutators of generic strictly upper triangular matrices.

pub mod expr;
mod identities;
mod poly;

pub use identities::{
    all_identities, generic_matrix, run_suite, verify_center_determinants, verify_kernel_equations,
    Group, Identity, IdentityReport, Lhs, NumericCheck, Scalar, ScalarEval, Setup, Status,
    SuiteReport, DEFAULT_RANDOM_CHECKS, DEFAULT_SEED,
};
pub use poly::{Monomial, Polynomial, Var, NVARS};

use crate::linalg::{LinalgError, Matrix};

/// Square matrix with polynomial entries.
pub type SymMatrix = Matrix<Polynomial>;

/// `a·b − b·a`.
pub fn sym_commutator(a: &SymMatrix, b: &SymMatrix) -> Result<SymMatrix, LinalgError> {
    a.commutator(b)
}
