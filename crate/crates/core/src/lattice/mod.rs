//! Exact integer linear algebra and lattices with a finite group action.

mod glattice;
mod group;
mod matrix;
mod normal_form;

pub use glattice::{
    equivariant_iso_search, fixed_submodule, h1, is_exact, is_exact_matrices, permutation_matrix, ExactnessFailure,
    GLattice, IsoSearch, LatticeMap, ISO_SEARCH_BOUND,
};
pub use group::{compose, invert, FiniteGroup, Perm};
pub use matrix::IntMatrix;
pub use normal_form::{
    canonical_basis, elementary_divisors, hnf_rows, is_saturated, kernel_basis, rank, smith_normal_form,
    solve_in_lattice, Snf,
};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("shape mismatch: {0} vs {1}")]
    ShapeMismatch(String, String),
    #[error("map {0} is not composable with its successor")]
    CompositionMismatch(usize),
    #[error("invalid group: {0}")]
    InvalidGroup(String),
    #[error("invalid action: {0}")]
    InvalidAction(String),
    #[error("lattices are over different groups")]
    GroupMismatch,
    #[error("not a subgroup of the acting group")]
    NotASubgroup,
    #[error("map does not commute with generator {0}")]
    NotEquivariant(usize),
    #[error("cannot parse matrix: {0}")]
    Parse(String),
}
