//! Highest-weight representation theory of the Lie superalgebras gl(m|n)
//! and q(n) in exact rational arithmetic.

pub mod characters;
pub mod cli;
pub mod error;
pub mod linalg;
pub mod module;
pub mod pbw;
pub mod superalgebra;

pub use error::{Error, Result};
