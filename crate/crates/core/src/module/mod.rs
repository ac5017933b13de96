//! Explicit finite-dimensional supermodules and the operations on them.

pub mod clifford;
pub mod context;
pub mod duals;
pub mod explicit;
pub mod ext;
pub mod fitting;
pub mod flags;
pub mod hom;
pub mod form;
pub mod highest;
pub mod induce;
pub mod subspace;
pub mod tilting;

pub use context::{Limits, Workbench};
pub use duals::{adjoint_piece, dual_module, tau_dual, tensor};
pub use explicit::ExplicitModule;
pub use ext::{check_complex, ext1_data, ext1_kac, ext1_kac_both, extension_module, ExtData};
pub use fitting::{fitting_decompose, fitting_summands, is_indecomposable, FittingOptions, Summand};
pub use form::{check_contravariance, contravariant_form, ContravariantForm};
pub use flags::{delta_flag, FlagOutcome, KacFlag};
pub use hom::{hom_space, is_isomorphic, is_morphism, HomSpace, IsoOptions, IsoOutcome, ModuleMorphism};
pub use highest::{
    induced_projective, kac_module, require_compatible, simple_character, simple_even_module, simple_module, simple_quotient,
    verma_module_truncated,
};
pub use clifford::{check_dual_cover, clifford_module, projective_cover_h};
pub use tilting::{
    certify_tilting, ext_candidates, projective_cover, reflect, tilting_module, verify_kdual, verify_pdual, DualityReport, FlaggedModule,
    TiltingCertificate, TiltingResult, WeightSet,
};

#[cfg(test)]
mod tests;
