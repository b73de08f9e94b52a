//! The bar resolution of `Z` over `Z[S_2]`, the Steenrod diagonal on
//! normalized chains of ordered complexes, contract checks and mod 2
//! Steenrod squares.

mod bar;
mod diagonal;
mod squares;
mod structure;

pub use bar::{act_t, augmentation, bar_boundary, eta, BarElement, BarGen};
pub use diagonal::{aw_diagonal, higher_diagonal, tswap};
pub use squares::{square_cochain, steenrod_squares, Gf2Cohomology, SquareBlock};
pub use structure::{check_naturality, push_forward, Contract, StructureReport, SteenrodStructure, Violation};
