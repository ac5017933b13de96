//! Exact rational linear algebra.

pub mod elim;
pub mod poly;
pub mod radical;
pub mod rational;
pub mod sparse;

pub use elim::{char_poly, column_space, inverse, kernel_basis, rank, rref, solve, solve_sparse, Echelon, Rref};
pub use radical::{algebra_radical, MultTable};
pub use rational::Rational;
pub use sparse::{SparseMatrix, SparseVec};
