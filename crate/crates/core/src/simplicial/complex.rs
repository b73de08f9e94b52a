use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use super::Surjection;
use crate::error::{Error, Result};

/// A simplex of an ordered complex, stored as its strictly increasing list of
/// vertex ids.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Simplex(Vec<i64>);

impl Simplex {
    /// Validates that `vertices` is nonempty and strictly increasing.
    pub fn new(vertices: Vec<i64>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::EmptyFacet);
        }
        let distinct: BTreeSet<_> = vertices.iter().collect();
        if distinct.len() != vertices.len() {
            return Err(Error::DuplicateVertex(vertices));
        }
        if vertices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::NotIncreasing(vertices));
        }
        Ok(Simplex(vertices))
    }

    /// The standard simplex on `0..=n`.
    pub fn standard(n: usize) -> Self {
        Simplex((0..=n as i64).collect())
    }

    pub fn vertices(&self) -> &[i64] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    /// The face `d_i`, dropping the vertex in position `i`.
    pub fn face(&self, i: usize) -> Simplex {
        let mut v = self.0.clone();
        v.remove(i);
        Simplex(v)
    }

    /// Front face on positions `0..=p`.
    pub fn front(&self, p: usize) -> Simplex {
        Simplex(self.0[..=p].to_vec())
    }

    /// Back face on positions `p..=dim`.
    pub fn back(&self, p: usize) -> Simplex {
        Simplex(self.0[p..].to_vec())
    }

    /// The face spanned by the given increasing positions.
    pub fn restrict(&self, positions: &[usize]) -> Simplex {
        Simplex(positions.iter().map(|&p| self.0[p]).collect())
    }

    /// The face obtained by deleting the vertices at the given positions.
    pub fn delete(&self, positions: &[usize]) -> Simplex {
        let drop: BTreeSet<usize> = positions.iter().copied().collect();
        Simplex(
            self.0
                .iter()
                .enumerate()
                .filter(|(p, _)| !drop.contains(p))
                .map(|(_, &v)| v)
                .collect(),
        )
    }

    /// All nonempty faces, including the simplex itself.
    pub fn all_faces(&self) -> Vec<Simplex> {
        let n = self.0.len();
        let mut out = Vec::with_capacity((1 << n) - 1);
        for mask in 1u64..(1u64 << n) {
            out.push(Simplex(
                (0..n).filter(|p| mask >> p & 1 == 1).map(|p| self.0[p]).collect(),
            ));
        }
        out
    }
}

impl fmt::Debug for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// A finite ordered simplicial complex.
///
/// Simplices are grouped by dimension and sorted lexicographically within
/// each dimension; that order is the canonical basis order everywhere.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderedComplex {
    vertices: Vec<i64>,
    simplices: Vec<Vec<Simplex>>,
    index: HashMap<Simplex, usize>,
}

impl OrderedComplex {
    /// Face closure of a list of facets.
    pub fn from_facets(facets: &[Vec<i64>]) -> Result<Self> {
        Self::build(None, facets)
    }

    /// Face closure with an explicit vertex list; isolated vertices are
    /// allowed and every facet vertex must be declared.
    pub fn with_vertices(vertices: &[i64], facets: &[Vec<i64>]) -> Result<Self> {
        Self::build(Some(vertices), facets)
    }

    fn build(declared: Option<&[i64]>, facets: &[Vec<i64>]) -> Result<Self> {
        let mut all: BTreeSet<Simplex> = BTreeSet::new();
        for facet in facets {
            let s = Simplex::new(facet.clone())?;
            if let Some(declared) = declared {
                if let Some(&v) = s.vertices().iter().find(|v| !declared.contains(v)) {
                    return Err(Error::UndeclaredVertex(v));
                }
            }
            if all.contains(&s) {
                continue;
            }
            if s.dim() > 20 {
                return Err(Error::InvalidArgument(format!("facet {s:?} is too large")));
            }
            all.extend(s.all_faces());
        }
        if let Some(declared) = declared {
            for &v in declared {
                all.insert(Simplex(vec![v]));
            }
        }
        Ok(Self::from_closed(all))
    }

    fn from_closed(all: BTreeSet<Simplex>) -> Self {
        let top = all.iter().map(Simplex::dim).max();
        let mut simplices: Vec<Vec<Simplex>> = match top {
            Some(d) => vec![Vec::new(); d + 1],
            None => Vec::new(),
        };
        for s in all {
            simplices[s.dim()].push(s);
        }
        for layer in &mut simplices {
            layer.sort();
        }
        let vertices = simplices
            .first()
            .map(|l| l.iter().map(|s| s.vertices()[0]).collect())
            .unwrap_or_default();
        let mut index = HashMap::new();
        for layer in &simplices {
            for (k, s) in layer.iter().enumerate() {
                index.insert(s.clone(), k);
            }
        }
        OrderedComplex { vertices, simplices, index }
    }

    /// The standard `n`-simplex on `0..=n`.
    pub fn standard_simplex(n: usize) -> Self {
        Self::from_closed(Simplex::standard(n).all_faces().into_iter().collect())
    }

    /// The boundary of the standard `n`-simplex.
    pub fn simplex_boundary(n: usize) -> Self {
        let top = Simplex::standard(n);
        let facets: Vec<Vec<i64>> = (0..=n).map(|i| top.face(i).vertices().to_vec()).collect();
        Self::from_facets(&facets).expect("faces of a standard simplex are valid")
    }

    pub fn vertices(&self) -> &[i64] {
        &self.vertices
    }

    /// Dimension, or `None` for the empty complex.
    pub fn dim(&self) -> Option<usize> {
        self.simplices.len().checked_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    pub fn simplices(&self, k: usize) -> &[Simplex] {
        self.simplices.get(k).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn f_vector(&self) -> Vec<usize> {
        self.simplices.iter().map(Vec::len).collect()
    }

    pub fn contains(&self, s: &Simplex) -> bool {
        self.index.contains_key(s)
    }

    /// Position of `s` in the canonical order of its dimension.
    pub fn index_of(&self, s: &Simplex) -> Option<usize> {
        self.index.get(s).copied()
    }

    /// Every simplex, by dimension and then lexicographically.
    pub fn iter(&self) -> impl Iterator<Item = &Simplex> {
        self.simplices.iter().flatten()
    }

    /// Every simplex in global lexicographic order of vertex lists.
    pub fn lex_ordered(&self) -> Vec<&Simplex> {
        let mut all: Vec<&Simplex> = self.iter().collect();
        all.sort();
        all
    }

    pub fn num_simplices(&self) -> usize {
        self.index.len()
    }

    /// Maximal simplices, sorted.
    pub fn facets(&self) -> Vec<Simplex> {
        let mut out = Vec::new();
        for (k, layer) in self.simplices.iter().enumerate() {
            for s in layer {
                let covered = self
                    .simplices(k + 1)
                    .iter()
                    .any(|t| s.vertices().iter().all(|v| t.vertices().contains(v)));
                if !covered {
                    out.push(s.clone());
                }
            }
        }
        out.sort();
        out
    }

    /// Image under a vertex relabeling, which must be injective on vertices.
    /// Simplices are re-sorted, so a non-monotone map yields the complex with
    /// the induced order.
    pub fn relabel(&self, map: &VertexMap) -> Result<OrderedComplex> {
        let images: BTreeSet<i64> = self.vertices.iter().map(|&v| map.apply(v)).collect::<Result<_>>()?;
        if images.len() != self.vertices.len() {
            return Err(Error::InvalidArgument("relabeling is not injective".into()));
        }
        let mut all = BTreeSet::new();
        for s in self.iter() {
            let mut v: Vec<i64> = s.vertices().iter().map(|&x| map.apply(x)).collect::<Result<_>>()?;
            v.sort();
            all.insert(Simplex(v));
        }
        Ok(Self::from_closed(all))
    }
}

/// A map on vertex ids.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexMap {
    map: BTreeMap<i64, i64>,
}

impl VertexMap {
    pub fn new(map: BTreeMap<i64, i64>) -> Self {
        VertexMap { map }
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (i64, i64)>) -> Self {
        VertexMap { map: pairs.into_iter().collect() }
    }

    pub fn identity(vertices: &[i64]) -> Self {
        Self::from_pairs(vertices.iter().map(|&v| (v, v)))
    }

    pub fn apply(&self, v: i64) -> Result<i64> {
        self.map
            .get(&v)
            .copied()
            .ok_or_else(|| Error::InvalidArgument(format!("vertex {v} is not in the domain")))
    }

    pub fn pairs(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.map.iter().map(|(&a, &b)| (a, b))
    }

    pub fn domain(&self) -> Vec<i64> {
        self.map.keys().copied().collect()
    }

    pub fn is_weakly_monotone(&self) -> bool {
        let vals: Vec<i64> = self.map.values().copied().collect();
        vals.windows(2).all(|w| w[0] <= w[1])
    }

    pub fn is_injective(&self) -> bool {
        let distinct: BTreeSet<_> = self.map.values().collect();
        distinct.len() == self.map.len()
    }

    /// The sorted, deduplicated vertex image of a simplex.
    pub fn image(&self, s: &Simplex) -> Result<Simplex> {
        let mut v: Vec<i64> = s.vertices().iter().map(|&x| self.apply(x)).collect::<Result<_>>()?;
        v.sort();
        v.dedup();
        Ok(Simplex(v))
    }

    /// Whether every simplex of `source` is sent onto a simplex of `target`.
    pub fn is_simplicial(&self, source: &OrderedComplex, target: &OrderedComplex) -> bool {
        source
            .iter()
            .all(|s| self.image(s).map(|t| target.contains(&t)).unwrap_or(false))
    }

    /// Composite `self ∘ inner`.
    pub fn compose(&self, inner: &VertexMap) -> Result<VertexMap> {
        Ok(VertexMap {
            map: inner.map.iter().map(|(&a, &b)| Ok((a, self.apply(b)?))).collect::<Result<_>>()?,
        })
    }

    /// Factorises a weakly monotone map out of the standard simplex as its
    /// image simplex and the surjection onto it.
    pub fn factor(&self) -> Result<(Simplex, Surjection)> {
        if !self.is_weakly_monotone() {
            return Err(Error::NotMonotone);
        }
        let vals: Vec<i64> = self.map.values().copied().collect();
        if vals.is_empty() {
            return Err(Error::InvalidArgument("empty vertex map".into()));
        }
        let mut image = vals.clone();
        image.dedup();
        let mut positions = Vec::with_capacity(vals.len());
        let mut t = 0usize;
        for (j, v) in vals.iter().enumerate() {
            if j > 0 && *v != vals[j - 1] {
                t += 1;
            }
            positions.push(t);
        }
        let surj = Surjection::from_values(&positions)?;
        Ok((Simplex(image), surj))
    }
}

/// Every weakly order-preserving map from the vertices `0..=n` of the
/// standard simplex into `x` whose image spans a simplex.
///
/// Output order: target simplex in global lexicographic order, then the
/// surjection onto it in its canonical encoding order.
pub fn simplicial_maps(n: usize, x: &OrderedComplex) -> Vec<VertexMap> {
    let mut out = Vec::new();
    for target in x.lex_ordered() {
        let k = target.dim();
        if k > n {
            continue;
        }
        for surj in Surjection::all(n, k) {
            out.push(VertexMap::from_pairs(
                surj.values().into_iter().enumerate().map(|(j, t)| (j as i64, target.vertices()[t])),
            ));
        }
    }
    out
}
