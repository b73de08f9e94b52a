//! Steenrod coalgebras of ordered simplicial complexes.
//!
//! The crate is organised bottom-up:
//!
//! - [`simplicial`]: ordered simplicial complexes, delta-complexes and the
//!   degeneracy-free simplicial sets obtained from them by freely adjoining
//!   degeneracies.
//! - [`chains`]: sparse integer chains, graded maps with Koszul signs, free
//!   chain complexes and integral homology through Smith normal form.
//! - [`steenrod`]: the bar resolution of `Z` over `Z[S_2]`, cup-i coproducts
//!   forming the Steenrod diagonal, contract verification and mod 2 Steenrod
//!   squares.
//! - [`reconstruct`]: iterated structure maps, the Steenrod-morphism decision
//!   procedure, enumeration of morphisms out of simplex chains, the functor
//!   `Shom(*, N(X))`, and lifting of coalgebra morphisms to simplicial maps.
//! - [`io`]: the JSON file formats shared with the command-line tool.

pub mod chains;
pub mod error;
pub mod io;
pub mod reconstruct;
pub mod simplicial;
pub mod steenrod;

pub use error::{Error, Result};
