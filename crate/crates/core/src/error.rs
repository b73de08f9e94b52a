use thiserror::Error;

use crate::simplicial::Simplex;

/// Errors raised by constructors and operations across the crate.
///
/// Theorem-level failures (a structure violating its contract, a map that is
/// not a morphism) are reported as data in the various report types, never
/// through this enum.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("facet {0:?} repeats a vertex")]
    DuplicateVertex(Vec<i64>),
    #[error("facet {0:?} is not strictly increasing")]
    NotIncreasing(Vec<i64>),
    #[error("empty facet")]
    EmptyFacet,
    #[error("vertex {0} is used by a facet but not declared in the vertex list")]
    UndeclaredVertex(i64),
    #[error("face identity d_{i} d_{j} = d_{j_minus_1} d_{i} fails on cell {cell} of dimension {dim}", j_minus_1 = .j - 1)]
    FaceIdentity { dim: usize, cell: usize, i: usize, j: usize },
    #[error("face index out of range on cell {cell} of dimension {dim}")]
    FaceOutOfRange { dim: usize, cell: usize },
    #[error("boundary composite is nonzero in degree {0}")]
    BoundarySquare(usize),
    #[error("duplicate basis label in degree {0}")]
    DuplicateLabel(usize),
    #[error("matrix shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("simplex {0:?} does not belong to the complex")]
    UnknownSimplex(Simplex),
    #[error("chain is not homogeneous of degree {0}")]
    Inhomogeneous(usize),
    #[error("Steenrod structure is truncated at i = {max_i}, requested i = {requested}")]
    Truncated { max_i: usize, requested: usize },
    #[error("map is not weakly order preserving")]
    NotMonotone,
    #[error("brute-force search refused: {0}")]
    SizeLimit(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("refusing to lift a map that was not verified as a Steenrod morphism")]
    Unverified,
    #[error("reconstruction invariant broken: {0}")]
    Invariant(String),
    #[error("malformed input: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
