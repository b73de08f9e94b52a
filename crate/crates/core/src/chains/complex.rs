use std::collections::HashMap;

use super::combination::{sign, Cell, Combination, Label};
use super::map::GradedMap;
use super::matrix::SparseMatrix;
use crate::error::{Error, Result};
use crate::simplicial::{DeltaComplex, DfSimplex, OrderedComplex, Simplex, SimplicialSetDF};

/// A free chain complex of finite rank in degrees `0..=top`, with labeled
/// bases and sparse boundary matrices.
///
/// `boundary(n)` maps degree `n` to degree `n - 1`; in degree 0 it is the
/// zero map to the trivial group. A complex truncated at `top` (such as the
/// unnormalized chains of a simplicial set) carries no information about
/// degree `top + 1`.
#[derive(Clone, Debug)]
pub struct FreeChainComplex<L: Label> {
    bases: Vec<Vec<L>>,
    index: HashMap<L, usize>,
    boundaries: Vec<SparseMatrix>,
}

impl<L: Label> FreeChainComplex<L> {
    /// Builds the complex from bases and a boundary given on labels, and
    /// checks `∂∂ = 0`.
    pub fn from_boundary(bases: Vec<Vec<L>>, boundary: impl Fn(&L) -> Combination<L>) -> Result<Self> {
        let mut index = HashMap::new();
        for (n, basis) in bases.iter().enumerate() {
            for (k, l) in basis.iter().enumerate() {
                if l.degree() != n {
                    return Err(Error::ShapeMismatch(format!("{l:?} listed in degree {n}")));
                }
                if index.insert(l.clone(), k).is_some() {
                    return Err(Error::DuplicateLabel(n));
                }
            }
        }
        let mut boundaries = Vec::with_capacity(bases.len());
        for (n, basis) in bases.iter().enumerate() {
            let rows = if n == 0 { 0 } else { bases[n - 1].len() };
            let mut triplets = Vec::new();
            for (j, l) in basis.iter().enumerate() {
                for (t, c) in boundary(l).iter() {
                    let i = match (n, index.get(t)) {
                        (n, Some(&i)) if n > 0 && t.degree() == n - 1 => i,
                        _ => return Err(Error::ShapeMismatch(format!("boundary of {l:?} contains {t:?}"))),
                    };
                    triplets.push((i, j, c));
                }
            }
            boundaries.push(SparseMatrix::from_triplets(rows, basis.len(), triplets)?);
        }
        let out = FreeChainComplex { bases, index, boundaries };
        out.check_boundary_squared()?;
        Ok(out)
    }

    fn check_boundary_squared(&self) -> Result<()> {
        for n in 2..self.boundaries.len() {
            if !self.boundaries[n - 1].mul(&self.boundaries[n])?.is_zero() {
                return Err(Error::BoundarySquare(n));
            }
        }
        Ok(())
    }

    /// Highest degree present, `None` for the zero complex.
    pub fn top(&self) -> Option<usize> {
        self.bases.len().checked_sub(1)
    }

    pub fn rank(&self, n: usize) -> usize {
        self.bases.get(n).map_or(0, Vec::len)
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.bases.iter().map(Vec::len).collect()
    }

    pub fn basis(&self, n: usize) -> &[L] {
        self.bases.get(n).map_or(&[], Vec::as_slice)
    }

    pub fn all_labels(&self) -> impl Iterator<Item = &L> {
        self.bases.iter().flatten()
    }

    pub fn index_of(&self, l: &L) -> Option<usize> {
        self.index.get(l).copied()
    }

    pub fn contains(&self, l: &L) -> bool {
        self.index.contains_key(l)
    }

    /// The matrix of `∂_n`; zero with the right shape outside `0..=top`.
    pub fn boundary_matrix(&self, n: usize) -> SparseMatrix {
        match self.boundaries.get(n) {
            Some(m) => m.clone(),
            None => SparseMatrix::zeros(self.rank(n.saturating_sub(1)), 0),
        }
    }

    pub fn boundary_of(&self, l: &L) -> Combination<L> {
        let n = l.degree();
        let j = self.index[l];
        if n == 0 {
            return Combination::zero();
        }
        Combination::from_terms(self.boundaries[n].column(j).iter().map(|&(i, c)| (self.bases[n - 1][i].clone(), c)))
    }

    pub fn boundary(&self, c: &Combination<L>) -> Combination<L> {
        c.map_linear(|l| self.boundary_of(l))
    }

    /// `∂(a_1 ⊗ … ⊗ a_k) = Σ_i (-1)^{|a_1| + … + |a_{i-1}|} a_1 ⊗ … ∂a_i … ⊗ a_k`.
    pub fn tensor_boundary(&self, c: &Combination<Vec<L>>) -> Combination<Vec<L>> {
        let mut out = Combination::zero();
        for (w, k) in c.iter() {
            let mut before = 0;
            for (i, a) in w.iter().enumerate() {
                let s = sign(before);
                for (b, e) in self.boundary_of(a).iter() {
                    let mut v = w.clone();
                    v[i] = b.clone();
                    out.add_term(v, s * e * k);
                }
                before += a.degree();
            }
        }
        out
    }

    pub fn boundary_map(&self) -> GradedMap<L, L> {
        GradedMap::from_fn(-1, self.all_labels(), |l| self.boundary_of(l)).expect("boundary lowers degree by one")
    }

    /// Coordinates of a homogeneous chain of degree `n` in the basis.
    pub fn coordinates(&self, n: usize, c: &Combination<L>) -> Result<Vec<i64>> {
        let mut v = vec![0; self.rank(n)];
        for (l, k) in c.iter() {
            match self.index.get(l) {
                Some(&i) if l.degree() == n => v[i] = k,
                _ => return Err(Error::ShapeMismatch(format!("{l:?} is not a degree {n} basis element"))),
            }
        }
        Ok(v)
    }

    pub fn chain_from(&self, n: usize, coords: &[i64]) -> Combination<L> {
        Combination::from_terms(self.bases[n].iter().cloned().zip(coords.iter().copied()))
    }

    /// The `k`-fold tensor power with the Koszul differential, through total
    /// degree `up_to`.
    pub fn tensor_power(&self, k: usize, up_to: usize) -> Result<FreeChainComplex<Vec<L>>> {
        let mut bases: Vec<Vec<Vec<L>>> = vec![Vec::new(); up_to + 1];
        let mut words: Vec<Vec<L>> = vec![Vec::new()];
        for _ in 0..k {
            let mut next = Vec::new();
            for w in &words {
                let d: usize = w.iter().map(|l| l.degree()).sum();
                for l in self.all_labels() {
                    if d + l.degree() <= up_to {
                        let mut v = w.clone();
                        v.push(l.clone());
                        next.push(v);
                    }
                }
            }
            words = next;
        }
        for w in words {
            let d: usize = w.iter().map(|l| l.degree()).sum();
            bases[d].push(w);
        }
        for b in &mut bases {
            b.sort();
        }
        while bases.len() > 1 && bases.last().is_some_and(Vec::is_empty) {
            bases.pop();
        }
        FreeChainComplex::from_boundary(bases, |w| self.tensor_boundary(&Combination::basis(w.clone())))
    }
}

/// `N(X)`: one generator per simplex, `∂σ = Σ_i (-1)^i d_i σ`.
pub fn normalized_chains(x: &OrderedComplex) -> FreeChainComplex<Simplex> {
    let bases: Vec<Vec<Simplex>> = match x.dim() {
        Some(d) => (0..=d).map(|k| x.simplices(k).to_vec()).collect(),
        None => Vec::new(),
    };
    FreeChainComplex::from_boundary(bases, simplex_boundary).expect("simplicial boundary squares to zero")
}

/// `Σ_i (-1)^i d_i σ`.
pub fn simplex_boundary(s: &Simplex) -> Combination<Simplex> {
    if s.dim() == 0 {
        return Combination::zero();
    }
    Combination::from_terms((0..=s.dim()).map(|i| (s.face(i), sign(i))))
}

/// The cellular chains of a delta-complex.
pub fn delta_chains(y: &DeltaComplex) -> FreeChainComplex<Cell> {
    let bases: Vec<Vec<Cell>> = match y.dim() {
        Some(d) => (0..=d).map(|dim| (0..y.count(dim)).map(|index| Cell { dim, index }).collect()).collect(),
        None => Vec::new(),
    };
    FreeChainComplex::from_boundary(bases, |c| {
        if c.dim == 0 {
            return Combination::zero();
        }
        Combination::from_terms(
            y.faces_of(c.dim, c.index).iter().enumerate().map(|(i, &f)| (Cell { dim: c.dim - 1, index: f }, sign(i))),
        )
    })
    .expect("face identities give a chain complex")
}

/// `C(X)` through degree `up_to`: every simplex, degenerate or not.
pub fn unnormalized_chains(x: &SimplicialSetDF, up_to: usize) -> FreeChainComplex<DfSimplex> {
    let bases: Vec<Vec<DfSimplex>> = if x.core().dim().is_none() {
        Vec::new()
    } else {
        (0..=up_to).map(|m| x.simplices(m)).collect()
    };
    FreeChainComplex::from_boundary(bases, |s| {
        let m = s.dim();
        if m == 0 {
            return Combination::zero();
        }
        Combination::from_terms((0..=m).map(|i| (x.face(s, i), sign(i))))
    })
    .expect("simplicial identities give a chain complex")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::{adjoin, Surjection};

    fn s(v: &[i64]) -> Simplex {
        Simplex::new(v.to_vec()).unwrap()
    }

    #[test]
    fn edge_and_triangle_boundaries() {
        let n = normalized_chains(&OrderedComplex::standard_simplex(2));
        assert_eq!(n.boundary_of(&s(&[0, 1])), Combination::from_terms([(s(&[1]), 1), (s(&[0]), -1)]));
        assert_eq!(
            n.boundary_of(&s(&[0, 1, 2])),
            Combination::from_terms([(s(&[1, 2]), 1), (s(&[0, 2]), -1), (s(&[0, 1]), 1)])
        );
    }

    #[test]
    fn non_complex_is_rejected() {
        let bases = vec![vec![s(&[0]), s(&[1])], vec![s(&[0, 1])], vec![]];
        let bad = FreeChainComplex::from_boundary(bases.clone(), |l| {
            if l.dim() == 1 {
                Combination::basis(s(&[0]))
            } else {
                Combination::zero()
            }
        });
        assert!(bad.is_ok());
        let dup = FreeChainComplex::from_boundary(vec![vec![s(&[0]), s(&[0])]], |_| Combination::zero());
        assert!(matches!(dup, Err(Error::DuplicateLabel(0))));
        let sq = FreeChainComplex::from_boundary(
            vec![vec![s(&[0]), s(&[1]), s(&[2])], vec![s(&[0, 1]), s(&[0, 2]), s(&[1, 2])], vec![s(&[0, 1, 2])]],
            |l| match l.dim() {
                1 => Combination::basis(s(&[0])),
                2 => Combination::basis(s(&[0, 1])),
                _ => Combination::zero(),
            },
        );
        assert!(matches!(sq, Err(Error::BoundarySquare(2))));
    }

    #[test]
    fn unnormalized_point() {
        let c = unnormalized_chains(&adjoin(&DeltaComplex::from_ordered(&OrderedComplex::standard_simplex(0))).unwrap(), 2);
        assert_eq!(c.ranks(), vec![1, 1, 1]);
        assert!(c.boundary_matrix(1).is_zero());
        // ∂ of the degenerate 2-simplex is d0 - d1 + d2 = the degenerate edge
        let top = c.basis(2)[0].clone();
        assert_eq!(c.boundary_of(&top), Combination::basis(c.basis(1)[0].clone()));
    }

    #[test]
    fn unnormalized_edge_rank() {
        let c = unnormalized_chains(&adjoin(&DeltaComplex::from_ordered(&OrderedComplex::standard_simplex(1))).unwrap(), 1);
        assert_eq!(c.rank(1), 3);
    }

    #[test]
    fn quotient_by_degenerates_is_a_chain_map() {
        let x = OrderedComplex::simplex_boundary(3);
        let y = DeltaComplex::from_ordered(&x);
        let c = unnormalized_chains(&adjoin(&y).unwrap(), 3);
        let n = delta_chains(&y);
        let q = |l: &DfSimplex| {
            if l.is_degenerate() {
                Combination::zero()
            } else {
                Combination::basis(Cell { dim: l.dim(), index: l.cell })
            }
        };
        for l in c.all_labels() {
            let lhs = q(l).map_linear(|t| n.boundary_of(t));
            let rhs = c.boundary_of(l).map_linear(q);
            assert_eq!(lhs, rhs, "{l:?}");
        }
        assert_eq!(
            c.basis(0)[0],
            DfSimplex { surjection: Surjection::identity(0), cell: 0 }
        );
    }

    #[test]
    fn tensor_square_is_a_complex() {
        let n = normalized_chains(&OrderedComplex::standard_simplex(2));
        let t = n.tensor_power(2, 4).unwrap();
        assert_eq!(t.rank(0), 9);
        assert_eq!(t.rank(4), 1);
    }
}
