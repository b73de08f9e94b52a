use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use super::combination::{Combination, Graded, Label};
use super::complex::FreeChainComplex;
use super::map::GradedMap;
use super::snf::{smith_normal_form, SmithForm};
use crate::error::{Error, Result};

/// `H_n ≅ Z^betti ⊕ ⊕_i Z/torsion_i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyGroup {
    pub degree: usize,
    pub betti: usize,
    pub torsion: Vec<u64>,
}

impl HomologyGroup {
    pub fn is_zero(&self) -> bool {
        self.betti == 0 && self.torsion.is_empty()
    }
}

impl<L: Label> FreeChainComplex<L> {
    pub fn smith_form(&self, n: usize) -> SmithForm {
        let m = self.boundary_matrix(n);
        smith_normal_form(&m.to_dense(), m.cols())
    }

    /// Homology in degrees `0..=top`. The top degree is computed as if the
    /// complex stopped there, so read it with care on truncated complexes.
    pub fn homology(&self) -> Vec<HomologyGroup> {
        let Some(top) = self.top() else { return Vec::new() };
        let forms: Vec<SmithForm> = (0..=top + 1).map(|n| self.smith_form(n)).collect();
        (0..=top)
            .map(|n| {
                let incoming = &forms[n + 1];
                HomologyGroup {
                    degree: n,
                    betti: self.rank(n) - forms[n].rank() - incoming.rank(),
                    torsion: incoming.torsion(),
                }
            })
            .collect()
    }

    /// A Z-basis of the `n`-cycles.
    pub fn cycle_basis(&self, n: usize) -> Vec<Combination<L>> {
        self.smith_form(n)
            .kernel_basis()
            .into_iter()
            .map(|v| {
                let coords: Vec<i64> = v.iter().map(|x| x.to_i64().expect("cycle coordinate fits in i64")).collect();
                self.chain_from(n, &coords)
            })
            .collect()
    }

    /// Whether a chain of degree `n` bounds. Only meaningful for `n < top`
    /// when the complex is truncated.
    pub fn is_boundary(&self, n: usize, c: &Combination<L>) -> Result<bool> {
        let v = self.coordinates(n, c)?;
        Ok(self.smith_form(n + 1).in_image(&v))
    }
}

/// The first basis element on which `f ∂ ≠ ∂ f`, if any.
pub fn check_chain_map<S: Label, T: Label>(
    f: &GradedMap<S, T>,
    a: &FreeChainComplex<S>,
    b: &FreeChainComplex<T>,
) -> Result<Option<S>> {
    for s in a.all_labels() {
        let lhs = f.apply(&a.boundary_of(s))?;
        let img = f.apply(&Combination::basis(s.clone()))?;
        for t in img.labels() {
            if !b.contains(t) {
                return Err(Error::ShapeMismatch(format!("{t:?} is not in the target complex")));
            }
        }
        if lhs != b.boundary(&img) {
            return Ok(Some(s.clone()));
        }
    }
    Ok(None)
}

/// Basis labels of a mapping cone: `Cone_n = A_{n-1} ⊕ B_n`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ConeLabel<S, T> {
    Shifted(S),
    Target(T),
}

impl<S: Graded, T: Graded> Graded for ConeLabel<S, T> {
    fn degree(&self) -> usize {
        match self {
            ConeLabel::Shifted(s) => s.degree() + 1,
            ConeLabel::Target(t) => t.degree(),
        }
    }
}

/// The mapping cone of a chain map, `d(a, b) = (-∂a, f(a) + ∂b)`, through
/// the top degree of `b`.
pub fn mapping_cone<S: Label, T: Label>(
    f: &GradedMap<S, T>,
    a: &FreeChainComplex<S>,
    b: &FreeChainComplex<T>,
) -> Result<FreeChainComplex<ConeLabel<S, T>>> {
    let Some(top) = b.top() else {
        return Err(Error::InvalidArgument("mapping cone into the zero complex".into()));
    };
    let mut bases = Vec::new();
    for n in 0..=top {
        let mut basis: Vec<ConeLabel<S, T>> = Vec::new();
        if n > 0 {
            basis.extend(a.basis(n - 1).iter().cloned().map(ConeLabel::Shifted));
        }
        basis.extend(b.basis(n).iter().cloned().map(ConeLabel::Target));
        bases.push(basis);
    }
    let images: Vec<(S, Combination<T>)> =
        a.all_labels().map(|s| Ok((s.clone(), f.apply(&Combination::basis(s.clone()))?))).collect::<Result<_>>()?;
    let images: std::collections::HashMap<S, Combination<T>> = images.into_iter().collect();
    FreeChainComplex::from_boundary(bases, |l| match l {
        ConeLabel::Shifted(s) => {
            let mut out: Combination<ConeLabel<S, T>> =
                a.boundary_of(s).iter().map(|(x, c)| (ConeLabel::Shifted(x.clone()), -c)).collect();
            for (t, c) in images[s].iter() {
                out.add_term(ConeLabel::Target(t.clone()), c);
            }
            out
        }
        ConeLabel::Target(t) => b.boundary_of(t).iter().map(|(x, c)| (ConeLabel::Target(x.clone()), c)).collect(),
    })
    .map_err(|e| match e {
        Error::BoundarySquare(_) => Error::InvalidArgument("mapping cone of a map that is not a chain map".into()),
        e => e,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chains::{delta_chains, normalized_chains, unnormalized_chains};
    use crate::simplicial::{adjoin, DeltaComplex, OrderedComplex};

    fn rp2() -> OrderedComplex {
        OrderedComplex::from_facets(&[
            vec![0, 1, 2],
            vec![0, 2, 3],
            vec![0, 3, 4],
            vec![0, 4, 5],
            vec![0, 1, 5],
            vec![1, 2, 4],
            vec![1, 3, 4],
            vec![1, 3, 5],
            vec![2, 3, 5],
            vec![2, 4, 5],
        ])
        .unwrap()
    }

    fn groups(h: &[HomologyGroup]) -> Vec<(usize, Vec<u64>)> {
        h.iter().map(|g| (g.betti, g.torsion.clone())).collect()
    }

    #[test]
    fn circle_and_simplex() {
        let h = normalized_chains(&OrderedComplex::simplex_boundary(2)).homology();
        assert_eq!(groups(&h), vec![(1, vec![]), (1, vec![])]);
        let h = normalized_chains(&OrderedComplex::standard_simplex(3)).homology();
        assert_eq!(groups(&h), vec![(1, vec![]), (0, vec![]), (0, vec![]), (0, vec![])]);
    }

    #[test]
    fn projective_plane() {
        let n = normalized_chains(&rp2());
        assert_eq!(n.ranks(), vec![6, 15, 10]);
        // injective over Z; the rank drops to 9 only mod 2
        assert_eq!(n.smith_form(2).rank(), 10);
        assert_eq!(n.smith_form(1).rank(), 5);
        assert_eq!(groups(&n.homology()), vec![(1, vec![]), (0, vec![2]), (0, vec![])]);
    }

    #[test]
    fn cycles_and_boundaries() {
        let n = normalized_chains(&rp2());
        let z = n.cycle_basis(1);
        assert_eq!(z.len(), 10);
        let bounding = z.iter().filter(|c| n.is_boundary(1, c).unwrap()).count();
        assert!(bounding < 10);
        for c in &z {
            assert!(n.boundary(c).is_zero());
            assert!(n.is_boundary(1, &c.scaled(2)).unwrap());
        }
    }

    #[test]
    fn unnormalized_matches_normalized() {
        let x = OrderedComplex::simplex_boundary(2);
        let c = unnormalized_chains(&adjoin(&DeltaComplex::from_ordered(&x)).unwrap(), 4);
        let h = c.homology();
        assert_eq!(groups(&h[..4]), groups(&normalized_chains(&x).homology()).into_iter().chain([(0, vec![]), (0, vec![])]).collect::<Vec<_>>());
    }

    #[test]
    fn cone_of_identity_is_acyclic() {
        let d = DeltaComplex::from_ordered(&rp2());
        let n = delta_chains(&d);
        let id = GradedMap::identity(n.all_labels());
        let cone = mapping_cone(&id, &n, &n).unwrap();
        assert!(cone.homology()[..2].iter().all(HomologyGroup::is_zero));
        assert!(check_chain_map(&id, &n, &n).unwrap().is_none());
        let neg_boundary = GradedMap::from_fn(0, n.all_labels(), |l| {
            if l.dim == 1 {
                Combination::term(*l, 2)
            } else {
                Combination::basis(*l)
            }
        })
        .unwrap();
        assert!(check_chain_map(&neg_boundary, &n, &n).unwrap().is_some());
    }
}
