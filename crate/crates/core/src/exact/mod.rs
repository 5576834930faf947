//! Exact rational arithmetic and linear algebra over the rationals.

mod elimination;
mod matrix;
mod rational;

pub use matrix::{kernel_basis, rank, rank_of_vectors, ConstraintMatrix, KernelBasis, SparseMatrix};
pub use rational::{as_string, format_rational, int, parse_rational, rat, vec_as_string, Rational};
