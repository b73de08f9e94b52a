use std::collections::BTreeMap;

use super::iterate::xi_iterate;
use crate::chains::{Chain, TensorChain};
use crate::error::{Error, Result};
use crate::simplicial::Simplex;
use crate::steenrod::SteenrodStructure;

/// What a combination `c` of `n`-simplices is tested against.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SeparationTarget {
    /// `Ξ_k(c) = c^{⊗k}` for `2 ≤ k ≤ K`
    Powers,
    /// `Ξ_k(c) = Ξ_k(τ)` for `2 ≤ k ≤ K`
    SimplexImage(Simplex),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparationReport {
    pub dim: usize,
    pub simplices: usize,
    pub bound: i64,
    pub k_max: usize,
    pub nodes: u64,
    /// a nontrivial combination meeting one of the targets
    pub counterexample: Option<(SeparationTarget, Chain)>,
}

struct Constraint {
    linear: Vec<(usize, i64)>,
    /// variable indices whose product is subtracted
    product: Option<Vec<usize>>,
    constant: i64,
}

impl Constraint {
    fn determined_at(&self) -> usize {
        let a = self.linear.iter().map(|&(j, _)| j).max().unwrap_or(0);
        let b = self.product.as_ref().and_then(|p| p.iter().copied().max()).unwrap_or(0);
        a.max(b)
    }

    fn holds(&self, a: &[i64]) -> bool {
        let lin: i64 = self.linear.iter().map(|&(j, c)| c * a[j]).sum();
        let prod: i64 = self.product.as_ref().map_or(0, |p| p.iter().map(|&j| a[j]).product());
        lin - prod - self.constant == 0
    }
}

fn words(len: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..len).map(move |j| {
                    let mut v = w.clone();
                    v.push(j);
                    v
                })
            })
            .collect();
    }
    out
}

/// Exhaustive search over all `c = Σ a_j σ_j` with `a_j ∈ {-bound..bound}`
/// on the `dim`-simplices for a nontrivial `c` (not zero, not a single
/// simplex) whose truncated `Ξ` looks like that of a simplex.
///
/// `Ξ_k` is linear, so each coefficient of `Ξ_k(c) - target` is a polynomial
/// in the `a_j`; the search assigns the `a_j` in order and checks every
/// coefficient as soon as all of its variables are fixed.
pub fn separation_search(st: &SteenrodStructure, dim: usize, k_max: usize, bound: i64) -> Result<SeparationReport> {
    let basis: Vec<Simplex> = st.complex().simplices(dim).to_vec();
    let s = basis.len();
    if s > 15 {
        return Err(Error::SizeLimit(format!("{s} simplices in dimension {dim}; separation search allows 15")));
    }
    let index: BTreeMap<&Simplex, usize> = basis.iter().enumerate().map(|(j, x)| (x, j)).collect();
    let images: Vec<Vec<TensorChain>> = basis
        .iter()
        .map(|x| Ok(xi_iterate(st, &Chain::basis(x.clone()), k_max, dim)?.components[1..].to_vec()))
        .collect::<Result<_>>()?;
    let mut report = SeparationReport { dim, simplices: s, bound, k_max, nodes: 0, counterexample: None };
    let mut targets = vec![SeparationTarget::Powers];
    targets.extend(basis.iter().cloned().map(SeparationTarget::SimplexImage));
    for target in targets {
        // collect the coefficient of every word that can appear
        let mut keys: BTreeMap<(usize, Vec<Simplex>), Constraint> = BTreeMap::new();
        for (j, comps) in images.iter().enumerate() {
            for (k, t) in comps.iter().enumerate() {
                for (w, c) in t.iter() {
                    keys.entry((k, w.clone()))
                        .or_insert_with(|| Constraint { linear: Vec::new(), product: None, constant: 0 })
                        .linear
                        .push((j, c));
                }
            }
        }
        for k in 0..k_max - 1 {
            match &target {
                SeparationTarget::Powers => {
                    for w in words(s, k + 2) {
                        let word: Vec<Simplex> = w.iter().map(|&j| basis[j].clone()).collect();
                        keys.entry((k, word))
                            .or_insert_with(|| Constraint { linear: Vec::new(), product: None, constant: 0 })
                            .product = Some(w);
                    }
                }
                SeparationTarget::SimplexImage(tau) => {
                    for (w, c) in images[index[tau]][k].iter() {
                        keys.entry((k, w.clone()))
                            .or_insert_with(|| Constraint { linear: Vec::new(), product: None, constant: 0 })
                            .constant = c;
                    }
                }
            }
        }
        let mut by_depth: Vec<Vec<Constraint>> = (0..s.max(1)).map(|_| Vec::new()).collect();
        for c in keys.into_values() {
            by_depth[c.determined_at()].push(c);
        }
        let mut a = vec![0i64; s];
        if let Some(c) = search(0, &mut a, &by_depth, bound, &target, &index, &mut report.nodes) {
            report.counterexample = Some((target, Chain::from_terms(basis.iter().cloned().zip(c))));
            return Ok(report);
        }
    }
    Ok(report)
}

fn search(
    depth: usize,
    a: &mut Vec<i64>,
    by_depth: &[Vec<Constraint>],
    bound: i64,
    target: &SeparationTarget,
    index: &BTreeMap<&Simplex, usize>,
    nodes: &mut u64,
) -> Option<Vec<i64>> {
    if depth == a.len() {
        let nonzero: Vec<usize> = (0..a.len()).filter(|&j| a[j] != 0).collect();
        let trivial = match target {
            // zero and single generators have power-like images
            SeparationTarget::Powers => nonzero.is_empty() || (nonzero.len() == 1 && a[nonzero[0]] == 1),
            SeparationTarget::SimplexImage(tau) => nonzero == [index[tau]] && a[index[tau]] == 1,
        };
        return (!trivial).then(|| a.clone());
    }
    for v in -bound..=bound {
        *nodes += 1;
        a[depth] = v;
        if by_depth[depth].iter().all(|c| c.holds(a)) {
            if let Some(found) = search(depth + 1, a, by_depth, bound, target, index, nodes) {
                return Some(found);
            }
        }
    }
    a[depth] = 0;
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::OrderedComplex;

    #[test]
    fn no_counterexample_on_small_complexes() {
        for x in [OrderedComplex::standard_simplex(2), OrderedComplex::simplex_boundary(3)] {
            let st = SteenrodStructure::build(&x, None);
            for d in 0..=x.dim().unwrap() {
                let r = separation_search(&st, d, 3, 2).unwrap();
                assert!(r.counterexample.is_none(), "{r:?}");
                assert!(r.nodes > 0);
            }
        }
    }

    #[test]
    fn arity_two_alone_only_accepts_generators() {
        // with K = 2 the power targets already force a single generator
        let st = SteenrodStructure::build(&OrderedComplex::simplex_boundary(2), None);
        assert!(separation_search(&st, 1, 2, 2).unwrap().counterexample.is_none());
    }

    #[test]
    fn size_cap() {
        let x = OrderedComplex::standard_simplex(5);
        let st = SteenrodStructure::build(&x, Some(2));
        assert!(matches!(separation_search(&st, 2, 3, 1), Err(Error::SizeLimit(_))));
    }
}
