//! Free integer chain complexes, Koszul-signed graded maps and homology.

mod combination;
mod complex;
mod homology;
mod map;
mod matrix;
mod snf;

pub use combination::{sign, Cell, Chain, Combination, Graded, Label, TensorChain};
pub use complex::{delta_chains, normalized_chains, simplex_boundary, unnormalized_chains, FreeChainComplex};
pub use homology::{check_chain_map, mapping_cone, ConeLabel, HomologyGroup};
pub use map::{hom_differential, koszul_tensor, GradedMap};
pub use matrix::SparseMatrix;
pub use snf::{smith_normal_form, SmithForm};
