//! Exact rational scalars, sparse matrices and linear maps between
//! tensor powers.

pub mod elim;
mod map;
mod rational;
pub mod sparse;
mod tensor;

pub use map::{compose, pad, sum_maps, tensor, LinearMap};
pub use rational::Rational;
pub use sparse::{SparseMatrix, SparseVec};
pub use tensor::{flatten, tensor_dim, unflatten, TensorIndex};

/// Rank, kernel basis and a particular solution, as free functions.
pub fn rank(m: &SparseMatrix) -> usize {
    elim::rank(m)
}

pub fn kernel_basis(m: &SparseMatrix) -> Vec<Vec<Rational>> {
    elim::kernel_basis(m)
}

pub fn solve(m: &SparseMatrix, b: &[Rational]) -> Result<Option<Vec<Rational>>, crate::error::Error> {
    elim::solve(m, b)
}
