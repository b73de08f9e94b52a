use std::collections::BTreeMap;

use crate::chains::{Chain, GradedMap, TensorChain};
use crate::error::{Error, Result};
use crate::simplicial::{OrderedComplex, Simplex, Surjection, VertexMap};
use crate::steenrod::SteenrodStructure;

/// A degree-0 map `N(A) → N(B)` on simplex generators.
pub type ChainMap = GradedMap<Simplex, Simplex>;

/// `N(θ)`: a simplex goes to its image when `θ` is injective on it and to
/// zero when it collapses.
///
/// `θ` must be weakly order-preserving on every simplex of `a` and send it
/// onto a simplex of `b`.
pub fn induced_chain_map(theta: &VertexMap, a: &OrderedComplex, b: &OrderedComplex) -> Result<ChainMap> {
    let mut images = BTreeMap::new();
    for s in a.iter() {
        let v: Vec<i64> = s.vertices().iter().map(|&x| theta.apply(x)).collect::<Result<_>>()?;
        if v.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::NotMonotone);
        }
        let img = theta.image(s)?;
        if !b.contains(&img) {
            return Err(Error::UnknownSimplex(img));
        }
        let c = if img.dim() == s.dim() { Chain::basis(img) } else { Chain::zero() };
        images.insert(s.clone(), c);
    }
    GradedMap::new(0, images)
}

/// Why a chain map fails to be a Steenrod morphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// `f ∂ σ ≠ ∂ f σ`
    ChainMap { degree: usize, simplex: Simplex },
    /// `(f⊗f) Δ_j(σ) ≠ Δ_j(f σ)`
    Square { j: usize, simplex: Simplex, lhs: TensorChain, rhs: TensorChain },
    /// the augmentation of `f(v)` is not 1
    Counit { vertex: i64, augmentation: i64 },
}

/// A verified morphism: the vertex map inducing it and, for a standard
/// simplex source, its factorisation through a simplex of the target.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub vertex_map: VertexMap,
    pub factorisation: Option<(Simplex, Surjection)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MorphismVerdict {
    Morphism(Certificate),
    NotMorphism(Witness),
    NotChainMap(Witness),
}

impl MorphismVerdict {
    pub fn is_morphism(&self) -> bool {
        matches!(self, MorphismVerdict::Morphism(_))
    }

    pub fn certificate(&self) -> Option<&Certificate> {
        match self {
            MorphismVerdict::Morphism(c) => Some(c),
            _ => None,
        }
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            MorphismVerdict::Morphism(_) => None,
            MorphismVerdict::NotMorphism(w) | MorphismVerdict::NotChainMap(w) => Some(w),
        }
    }
}

/// `(f ⊗ f)` on a tensor of two chains; no sign since `f` has degree 0.
pub fn tensor_square(f: &ChainMap, t: &TensorChain) -> Result<TensorChain> {
    let mut out = TensorChain::zero();
    for (w, c) in t.iter() {
        let a = TensorChain::words(&f.apply(&Chain::basis(w[0].clone()))?);
        let b = TensorChain::words(&f.apply(&Chain::basis(w[1].clone()))?);
        out.add_scaled(&a.tensor(&b), c);
    }
    Ok(out)
}

/// Both sides of the morphism square at `(e_j, σ)`.
pub fn square_sides(f: &ChainMap, sa: &SteenrodStructure, sb: &SteenrodStructure, j: usize, s: &Simplex) -> Result<(TensorChain, TensorChain)> {
    let lhs = tensor_square(f, sa.diagonal(j, s)?)?;
    let mut rhs = TensorChain::zero();
    for (t, c) in f.apply(&Chain::basis(s.clone()))?.iter() {
        rhs.add_scaled(sb.diagonal(j, t)?, c);
    }
    Ok((lhs, rhs))
}

fn check_shape(f: &ChainMap, a: &OrderedComplex, b: &OrderedComplex) -> Result<()> {
    if f.degree() != 0 {
        return Err(Error::ShapeMismatch(format!("chain map has degree {}", f.degree())));
    }
    if !f.domain().eq(a.iter().collect::<std::collections::BTreeSet<_>>()) {
        return Err(Error::ShapeMismatch("map domain differs from the source simplices".into()));
    }
    for (_, img) in f.images() {
        if let Some(t) = img.labels().find(|t| !b.contains(t)) {
            return Err(Error::ShapeMismatch(format!("{t:?} is not a simplex of the target")));
        }
    }
    Ok(())
}

/// The local conditions at one source simplex, assuming every face of it
/// is already fixed: `f ∂ = ∂ f`, the square for `j ≤ |σ|` within the degree
/// bound of the target, and the counit at vertices.
pub(crate) fn check_at(f: &ChainMap, sa: &SteenrodStructure, sb: &SteenrodStructure, s: &Simplex) -> Result<Option<Witness>> {
    let img = f.apply(&Chain::basis(s.clone()))?;
    let lhs = f.apply(&sa.chains().boundary_of(s))?;
    if lhs != sb.chains().boundary(&img) {
        return Ok(Some(Witness::ChainMap { degree: s.dim(), simplex: s.clone() }));
    }
    Ok(check_square_at(f, sa, sb, s)?.or_else(|| counit_at(s, &img)))
}

fn check_square_at(f: &ChainMap, sa: &SteenrodStructure, sb: &SteenrodStructure, s: &Simplex) -> Result<Option<Witness>> {
    let bound = sb.degree_bound();
    for j in 0..=s.dim() {
        if j + s.dim() > bound {
            break;
        }
        let (lhs, rhs) = square_sides(f, sa, sb, j, s)?;
        if lhs != rhs {
            return Ok(Some(Witness::Square { j, simplex: s.clone(), lhs, rhs }));
        }
    }
    Ok(None)
}

fn counit_at(s: &Simplex, img: &Chain) -> Option<Witness> {
    if s.dim() != 0 {
        return None;
    }
    let augmentation: i64 = img.iter().map(|(_, c)| c).sum();
    (augmentation != 1).then(|| Witness::Counit { vertex: s.vertices()[0], augmentation })
}

/// Decides whether `f: N(A) → N(B)` commutes with the Steenrod structures
/// and the counit.
///
/// The square is checked on `e_j ⊗ σ` for `j ≤ |σ|` and `j + |σ| ≤ 2·dim B`:
/// both sides vanish outside that range, and the `T e_j` squares follow by
/// equivariance. A morphism is certified by the vertex map inducing it.
pub fn is_steenrod_morphism(f: &ChainMap, sa: &SteenrodStructure, sb: &SteenrodStructure) -> Result<MorphismVerdict> {
    let (a, b) = (sa.complex(), sb.complex());
    check_shape(f, a, b)?;
    for s in a.iter() {
        let lhs = f.apply(&sa.chains().boundary_of(s))?;
        if lhs != sb.chains().boundary(&f.apply(&Chain::basis(s.clone()))?) {
            return Ok(MorphismVerdict::NotChainMap(Witness::ChainMap { degree: s.dim(), simplex: s.clone() }));
        }
    }
    for s in a.iter() {
        if let Some(w) = check_square_at(f, sa, sb, s)? {
            return Ok(MorphismVerdict::NotMorphism(w));
        }
    }
    for v in a.simplices(0) {
        if let Some(w) = counit_at(v, f.image(v).expect("domain checked")) {
            return Ok(MorphismVerdict::NotMorphism(w));
        }
    }
    Ok(MorphismVerdict::Morphism(certify(f, a, b)?))
}

/// Reads off the vertex map of a verified morphism and confirms that it
/// induces `f`.
fn certify(f: &ChainMap, a: &OrderedComplex, b: &OrderedComplex) -> Result<Certificate> {
    let mut pairs = Vec::new();
    for v in a.simplices(0) {
        let img = f.image(v).expect("domain checked");
        // the j = 0 square and the counit force a single vertex
        match img.iter().collect::<Vec<_>>()[..] {
            [(w, 1)] => pairs.push((v.vertices()[0], w.vertices()[0])),
            _ => return Err(Error::Invariant(format!("vertex {v:?} maps to {img:?}"))),
        }
    }
    let vertex_map = VertexMap::from_pairs(pairs);
    if induced_chain_map(&vertex_map, a, b).as_ref() != Ok(f) {
        return Err(Error::Invariant("verified morphism is not induced by its vertex map".into()));
    }
    let standard = a.dim().is_some_and(|n| a.contains(&Simplex::standard(n)) && a.vertices() == Simplex::standard(n).vertices());
    let factorisation = if standard { Some(vertex_map.factor()?) } else { None };
    Ok(Certificate { vertex_map, factorisation })
}

impl Witness {
    /// Re-evaluates the failing condition directly; true when it still fails.
    pub fn recheck(&self, f: &ChainMap, sa: &SteenrodStructure, sb: &SteenrodStructure) -> Result<bool> {
        match self {
            Witness::ChainMap { simplex, .. } => {
                let lhs = f.apply(&sa.chains().boundary_of(simplex))?;
                Ok(lhs != sb.chains().boundary(&f.apply(&Chain::basis(simplex.clone()))?))
            }
            Witness::Square { j, simplex, lhs, rhs } => {
                let (l, r) = square_sides(f, sa, sb, *j, simplex)?;
                Ok(l != r && &l == lhs && &r == rhs)
            }
            Witness::Counit { vertex, augmentation } => {
                let v = Simplex::new(vec![*vertex])?;
                let a: i64 = f.apply(&Chain::basis(v))?.iter().map(|(_, c)| c).sum();
                Ok(a != 1 && a == *augmentation)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: &[i64]) -> Simplex {
        Simplex::new(v.to_vec()).unwrap()
    }

    fn st(x: &OrderedComplex) -> SteenrodStructure {
        SteenrodStructure::build(x, None)
    }

    #[test]
    fn induced_maps_are_morphisms() {
        let a = OrderedComplex::standard_simplex(2);
        let b = OrderedComplex::standard_simplex(1);
        let theta = VertexMap::from_pairs([(0, 0), (1, 0), (2, 1)]);
        let f = induced_chain_map(&theta, &a, &b).unwrap();
        assert_eq!(f.image(&s(&[0, 1])).unwrap(), &Chain::zero());
        let v = is_steenrod_morphism(&f, &st(&a), &st(&b)).unwrap();
        let cert = v.certificate().unwrap();
        assert_eq!(cert.vertex_map, theta);
        assert_eq!(cert.factorisation.as_ref().unwrap().1.values(), vec![0, 0, 1]);
    }

    #[test]
    fn non_monotone_map_refused() {
        let a = OrderedComplex::standard_simplex(1);
        let theta = VertexMap::from_pairs([(0, 1), (1, 0)]);
        assert_eq!(induced_chain_map(&theta, &a, &a), Err(Error::NotMonotone));
    }

    #[test]
    fn doubled_identity_on_a_point() {
        let p = OrderedComplex::standard_simplex(0);
        let f = GradedMap::identity(p.iter()).scaled(2);
        let sp = st(&p);
        let v = is_steenrod_morphism(&f, &sp, &sp).unwrap();
        match v.witness().unwrap() {
            Witness::Square { j: 0, lhs, rhs, .. } => {
                assert_eq!(lhs.coefficient(&vec![s(&[0]), s(&[0])]), 4);
                assert_eq!(rhs.coefficient(&vec![s(&[0]), s(&[0])]), 2);
            }
            w => panic!("{w:?}"),
        }
        assert!(v.witness().unwrap().recheck(&f, &sp, &sp).unwrap());
    }

    #[test]
    fn zero_map_fails_counit() {
        let p = OrderedComplex::standard_simplex(0);
        let sp = st(&p);
        let f = GradedMap::zero(0, p.iter());
        let v = is_steenrod_morphism(&f, &sp, &sp).unwrap();
        assert_eq!(v, MorphismVerdict::NotMorphism(Witness::Counit { vertex: 0, augmentation: 0 }));
    }

    #[test]
    fn sign_flipped_edge_breaks_chain_condition() {
        let x = OrderedComplex::standard_simplex(2);
        let sx = st(&x);
        let mut images: BTreeMap<Simplex, Chain> = x.iter().map(|t| (t.clone(), Chain::basis(t.clone()))).collect();
        images.insert(s(&[0, 1]), Chain::term(s(&[0, 1]), -1));
        let f = GradedMap::new(0, images).unwrap();
        let v = is_steenrod_morphism(&f, &sx, &sx).unwrap();
        assert_eq!(v, MorphismVerdict::NotChainMap(Witness::ChainMap { degree: 1, simplex: s(&[0, 1]) }));
        assert!(v.witness().unwrap().recheck(&f, &sx, &sx).unwrap());
    }

    #[test]
    fn negated_identity_fails_first_square() {
        let x = OrderedComplex::simplex_boundary(2);
        let sx = st(&x);
        let f = GradedMap::identity(x.iter()).scaled(-1);
        let v = is_steenrod_morphism(&f, &sx, &sx).unwrap();
        assert!(matches!(v, MorphismVerdict::NotMorphism(Witness::Square { j: 0, .. })));
    }

    #[test]
    fn shape_errors() {
        let a = OrderedComplex::standard_simplex(1);
        let b = OrderedComplex::standard_simplex(0);
        let f = GradedMap::identity(a.iter());
        assert!(matches!(is_steenrod_morphism(&f, &st(&a), &st(&b)), Err(Error::ShapeMismatch(_))));
        let g = GradedMap::identity(b.iter());
        assert!(matches!(is_steenrod_morphism(&g, &st(&a), &st(&a)), Err(Error::ShapeMismatch(_))));
    }
}
