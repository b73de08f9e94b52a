//! Iterated `Ξ`, Steenrod morphisms and the reconstruction functor.

mod enumerate;
mod iterate;
mod lift;
mod morphism;
mod separation;
mod shom;

pub use enumerate::{
    enumerate_morphisms, EnumeratedMorphism, Mode, BRUTE_MAX_CANDIDATES, BRUTE_MAX_SOURCE_VERTICES, BRUTE_MAX_TARGET_VERTICES,
};
pub use iterate::{beta, xi_iterate, AlphaHandle, AlphaValue, BarWord, IteratedAlpha, RhoVector, XiImage};
pub use separation::{separation_search, SeparationReport, SeparationTarget};
pub use morphism::{induced_chain_map, is_steenrod_morphism, square_sides, tensor_square, Certificate, ChainMap, MorphismVerdict, Witness};
pub use shom::{s_functor, verify_reconstruction, Reconstruction, ReconstructionReport, SteenrodHom};
pub use lift::{homology_square, lift_morphism, HomologySquareReport, LiftedMap, SquareDegree};
