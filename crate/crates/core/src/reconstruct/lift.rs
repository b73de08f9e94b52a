use std::collections::{BTreeSet, HashMap};

use super::morphism::{ChainMap, MorphismVerdict};
use super::shom::{verify_reconstruction, Reconstruction, SteenrodHom};
use crate::chains::{check_chain_map, mapping_cone, normalized_chains, unnormalized_chains, Chain, Combination, GradedMap};
use crate::error::{Error, Result};
use crate::simplicial::{adjoin, DeltaComplex, DfSimplex, OrderedComplex, Simplex, Surjection, VertexMap};

/// A simplicial map `Shom(★, N(X)) → Shom(★, N(Y))` given level by level
/// on simplex indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftedMap {
    pub levels: Vec<Vec<usize>>,
}

/// `ĝ(f) = g ∘ f` on every morphism-simplex.
///
/// Only a verified Steenrod morphism may be lifted; anything else is
/// refused with [`Error::Unverified`].
pub fn lift_morphism(g: &ChainMap, verdict: &MorphismVerdict, hx: &SteenrodHom, hy: &SteenrodHom) -> Result<LiftedMap> {
    if !verdict.is_morphism() {
        return Err(Error::Unverified);
    }
    if hy.up_to() < hx.up_to() {
        return Err(Error::InvalidArgument("target Shom is truncated below the source".into()));
    }
    let mut levels = Vec::new();
    for n in 0..=hx.up_to() {
        let row = hx
            .simplices(n)
            .iter()
            .map(|m| {
                let composite = g.compose(&m.map)?;
                hy.index_of(n, &composite)
                    .ok_or_else(|| Error::Invariant(format!("g ∘ f is not a {n}-simplex of the target")))
            })
            .collect::<Result<_>>()?;
        levels.push(row);
    }
    Ok(LiftedMap { levels })
}

impl LiftedMap {
    /// `self ∘ inner`.
    pub fn compose(&self, inner: &LiftedMap) -> Result<LiftedMap> {
        if inner.levels.len() != self.levels.len() {
            return Err(Error::ShapeMismatch("lifted maps of different heights".into()));
        }
        let levels = inner
            .levels
            .iter()
            .zip(&self.levels)
            .map(|(a, b)| a.iter().map(|&k| b.get(k).copied().ok_or_else(|| Error::ShapeMismatch("index out of range".into()))).collect())
            .collect::<Result<_>>()?;
        Ok(LiftedMap { levels })
    }

    pub fn is_identity(&self) -> bool {
        self.levels.iter().all(|row| row.iter().enumerate().all(|(k, &j)| k == j))
    }

    /// The vertex map read off on 0-simplices, when the lift is a bijection
    /// at every level and the vertex map carries `x` onto `y` exactly.
    pub fn vertex_bijection(&self, hx: &SteenrodHom, hy: &SteenrodHom, x: &OrderedComplex, y: &OrderedComplex) -> Result<Option<VertexMap>> {
        for (n, row) in self.levels.iter().enumerate() {
            let image: BTreeSet<usize> = row.iter().copied().collect();
            if image.len() != row.len() || row.len() != hy.simplices(n).len() {
                return Ok(None);
            }
        }
        let vertex = |h: &SteenrodHom, k: usize| h.simplices(0)[k].target.vertices()[0];
        let map = VertexMap::from_pairs(self.levels[0].iter().enumerate().map(|(k, &j)| (vertex(hx, k), vertex(hy, j))));
        if !map.is_weakly_monotone() || x.relabel(&map)? != *y {
            return Ok(None);
        }
        Ok(Some(map))
    }

    /// The same map on `d(X) → d(Y)`, transported through the
    /// reconstruction bijections.
    pub fn on_df(&self, rx: &Reconstruction, ry: &Reconstruction) -> Result<HashMap<DfSimplex, DfSimplex>> {
        let mut out = HashMap::new();
        for (n, row) in self.levels.iter().enumerate() {
            for (k, &j) in row.iter().enumerate() {
                let img = ry.phi.get(n).and_then(|l| l.get(j)).ok_or(Error::Truncated { max_i: ry.phi.len(), requested: n })?;
                out.insert(rx.phi[n][k].clone(), img.clone());
            }
        }
        Ok(out)
    }
}

/// One degree of the homology square.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct SquareDegree {
    pub degree: usize,
    pub cycles: usize,
    pub commutes: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct HomologySquareReport {
    pub i_max: usize,
    /// `j_X` and `j_Y` are chain maps with acyclic cones through `i_max + 1`,
    /// so they are isomorphisms on `H_i` for `i ≤ i_max`
    pub j_isomorphisms: bool,
    pub lifted_chain_map: bool,
    pub degrees: Vec<SquareDegree>,
    pub pass: bool,
}

/// `j: N(X) → C(d X)`, each simplex to its identity-surjection copy.
fn inclusion(x: &OrderedComplex, up_to: usize) -> Result<GradedMap<Simplex, DfSimplex>> {
    let simplices: Vec<&Simplex> = x.iter().filter(|s| s.dim() <= up_to).collect();
    GradedMap::from_fn(0, simplices, |s| {
        Combination::basis(DfSimplex { surjection: Surjection::identity(s.dim()), cell: x.index_of(s).expect("own simplex") })
    })
}

fn cone_acyclic_through(
    j: &GradedMap<Simplex, DfSimplex>,
    n: &crate::chains::FreeChainComplex<Simplex>,
    c: &crate::chains::FreeChainComplex<DfSimplex>,
    top: usize,
) -> Result<bool> {
    if check_chain_map(j, n, c)?.is_some() {
        return Ok(false);
    }
    let cone = mapping_cone(j, n, c)?;
    Ok(cone.homology().iter().filter(|h| h.degree <= top).all(|h| h.is_zero()))
}

/// Checks `H_i(j_Y) ∘ H_i(g) = H_i(C(ĝ)) ∘ H_i(j_X)` for `i ≤ i_max` on a
/// basis of cycles, after lifting the verified morphism `g: N(X) → N(Y)`.
pub fn homology_square(g: &ChainMap, verdict: &MorphismVerdict, x: &OrderedComplex, y: &OrderedComplex, i_max: usize) -> Result<HomologySquareReport> {
    if !verdict.is_morphism() {
        return Err(Error::Unverified);
    }
    let up_to = (i_max + 2).max(x.dim().unwrap_or(0)).max(y.dim().unwrap_or(0));
    let (_, rx) = verify_reconstruction(x, up_to)?;
    let (_, ry) = verify_reconstruction(y, up_to)?;
    let lift = lift_morphism(g, verdict, &rx.shom, &ry.shom)?;
    let on_df = lift.on_df(&rx, &ry)?;
    let (nx, ny) = (normalized_chains(x), normalized_chains(y));
    let cx = unnormalized_chains(&adjoin(&DeltaComplex::from_ordered(x))?, up_to);
    let cy = unnormalized_chains(&adjoin(&DeltaComplex::from_ordered(y))?, up_to);
    let (jx, jy) = (inclusion(x, up_to)?, inclusion(y, up_to)?);
    let cg = GradedMap::from_fn(0, cx.all_labels(), |s| Combination::basis(on_df[s].clone()))?;
    let j_isomorphisms = cone_acyclic_through(&jx, &nx, &cx, i_max + 1)? && cone_acyclic_through(&jy, &ny, &cy, i_max + 1)?;
    let lifted_chain_map = check_chain_map(&cg, &cx, &cy)?.is_none();
    let mut degrees = Vec::new();
    for i in 0..=i_max {
        let cycles = nx.cycle_basis(i);
        let mut commutes = true;
        for z in &cycles {
            let top: Chain = g.apply(z)?;
            let lhs = jy.apply(&top)?;
            let rhs = cg.apply(&jx.apply(z)?)?;
            if !cy.is_boundary(i, &(&lhs - &rhs))? {
                commutes = false;
            }
        }
        degrees.push(SquareDegree { degree: i, cycles: cycles.len(), commutes });
    }
    let pass = j_isomorphisms && lifted_chain_map && degrees.iter().all(|d| d.commutes);
    Ok(HomologySquareReport { i_max, j_isomorphisms, lifted_chain_map, degrees, pass })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reconstruct::{induced_chain_map, is_steenrod_morphism, s_functor};
    use crate::steenrod::SteenrodStructure;

    fn verified(theta: &VertexMap, x: &OrderedComplex, y: &OrderedComplex) -> (ChainMap, MorphismVerdict) {
        let g = induced_chain_map(theta, x, y).unwrap();
        let v = is_steenrod_morphism(&g, &SteenrodStructure::build(x, None), &SteenrodStructure::build(y, None)).unwrap();
        (g, v)
    }

    #[test]
    fn identity_lifts_to_identity() {
        let x = OrderedComplex::simplex_boundary(2);
        let h = s_functor(&SteenrodStructure::build(&x, None), 3).unwrap();
        let (g, v) = verified(&VertexMap::identity(x.vertices()), &x, &x);
        let l = lift_morphism(&g, &v, &h, &h).unwrap();
        assert!(l.is_identity());
        assert_eq!(l.vertex_bijection(&h, &h, &x, &x).unwrap(), Some(VertexMap::identity(x.vertices())));
    }

    #[test]
    fn relabeled_circle() {
        let x = OrderedComplex::from_facets(&[vec![3, 5], vec![5, 9], vec![3, 9]]).unwrap();
        let y = OrderedComplex::simplex_boundary(2);
        let theta = VertexMap::from_pairs([(3, 0), (5, 1), (9, 2)]);
        let (g, v) = verified(&theta, &x, &y);
        let hx = s_functor(&SteenrodStructure::build(&x, None), 2).unwrap();
        let hy = s_functor(&SteenrodStructure::build(&y, None), 2).unwrap();
        let l = lift_morphism(&g, &v, &hx, &hy).unwrap();
        assert_eq!(l.vertex_bijection(&hx, &hy, &x, &y).unwrap(), Some(theta.clone()));
        let inverse = VertexMap::from_pairs(theta.pairs().map(|(a, b)| (b, a)));
        let (gi, vi) = verified(&inverse, &y, &x);
        let li = lift_morphism(&gi, &vi, &hy, &hx).unwrap();
        assert!(l.compose(&li).unwrap().is_identity());
        assert!(li.compose(&l).unwrap().is_identity());
    }

    #[test]
    fn edge_inclusion_is_not_a_bijection() {
        let x = OrderedComplex::standard_simplex(1);
        let y = OrderedComplex::standard_simplex(2);
        let theta = VertexMap::from_pairs([(0, 0), (1, 2)]);
        let (g, v) = verified(&theta, &x, &y);
        let hx = s_functor(&SteenrodStructure::build(&x, None), 2).unwrap();
        let hy = s_functor(&SteenrodStructure::build(&y, None), 2).unwrap();
        let l = lift_morphism(&g, &v, &hx, &hy).unwrap();
        // the lift of N(θ) is d(θ)
        for n in 0..=2 {
            for (k, &j) in l.levels[n].iter().enumerate() {
                let expected = theta.compose(&hx.simplices(n)[k].vertex_map).unwrap();
                assert_eq!(hy.simplices(n)[j].vertex_map, expected);
            }
        }
        assert_eq!(l.vertex_bijection(&hx, &hy, &x, &y).unwrap(), None);
    }

    #[test]
    fn unverified_refused() {
        let x = OrderedComplex::standard_simplex(0);
        let h = s_functor(&SteenrodStructure::build(&x, None), 1).unwrap();
        let g = GradedMap::identity(x.iter()).scaled(2);
        let v = is_steenrod_morphism(&g, &SteenrodStructure::build(&x, None), &SteenrodStructure::build(&x, None)).unwrap();
        assert_eq!(lift_morphism(&g, &v, &h, &h), Err(Error::Unverified));
        assert_eq!(homology_square(&g, &v, &x, &x, 1), Err(Error::Unverified));
    }

    #[test]
    fn squares_commute() {
        let circle = OrderedComplex::simplex_boundary(2);
        let (g, v) = verified(&VertexMap::identity(circle.vertices()), &circle, &circle);
        let r = homology_square(&g, &v, &circle, &circle, 2).unwrap();
        assert!(r.pass, "{r:?}");
        assert_eq!(r.degrees[1].cycles, 1);

        let edge = OrderedComplex::standard_simplex(1);
        let point = OrderedComplex::standard_simplex(0);
        let (g, v) = verified(&VertexMap::from_pairs([(0, 0), (1, 0)]), &edge, &point);
        assert!(homology_square(&g, &v, &edge, &point, 1).unwrap().pass);
    }
}
