//! Characters and the multiplicity identities built on them.

pub mod character;
pub mod decomp;
pub mod kac;
pub mod orthogonality;
pub mod weyl;

pub use character::Character;
pub use decomp::{
    blocks, cartan_matrix_direct, cartan_matrix_via_bgg, decomposition_matrix, ext_blocks, peel, tilting_table,
    verify_bgg, verma_decomposition_truncated, BggReport, CartanDirect, DecompositionMatrix, IntMatrix, MatrixCheck,
    TiltingReport, TruncatedDecomposition, Window,
};
pub use kac::{even_character, kac_character};
pub use orthogonality::{verify_orthogonality, OrthogonalityFailure, OrthogonalityReport};
pub use weyl::{weyl_character, weyl_dimension};

#[cfg(test)]
mod tests;
