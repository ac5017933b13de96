//! Graded Lie superalgebras gl(m|n) and q(n).

pub mod algebra;
pub mod semiinfinite;
pub mod types;
pub mod validate;
pub mod weights;

pub use algebra::{build_gl, build_q, gl_graded, install_grading, supertrace, LieSuperAlgebra};
pub use semiinfinite::{standard_gamma, verify_semiinfinite, AlgebraCharacter, SemiInfiniteReport};
pub use types::{AlgebraDescriptor, AlgebraKind, BasisElement, GradingKind, Parity, Weight};
pub use validate::{validate_algebra, ValidationReport};
pub use weights::{beta, rho, w0_action};

#[cfg(test)]
mod tests;
