//! Ordered simplicial complexes, delta-complexes and degeneracy-free
//! simplicial sets, with the functors relating them.

mod complex;
mod degeneracy_free;
mod delta;
mod surjection;

pub use complex::{simplicial_maps, OrderedComplex, Simplex, VertexMap};
pub use degeneracy_free::{
    adjoin, check_triangle_identities, core_of, df_count, forget, unit, Core, Counit, DfSimplex, Forgotten,
    SimplicialSetDF,
};
pub use delta::DeltaComplex;
pub use surjection::Surjection;
