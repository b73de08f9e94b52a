mod common;

use std::collections::BTreeSet;

use steenrod_coalg::chains::{normalized_chains, Chain, GradedMap, TensorChain};
use steenrod_coalg::reconstruct::{
    enumerate_morphisms, homology_square, induced_chain_map, is_steenrod_morphism, lift_morphism, s_functor,
    verify_reconstruction, AlphaHandle, Mode, MorphismVerdict, Witness,
};
use steenrod_coalg::simplicial::{OrderedComplex, Simplex, VertexMap};
use steenrod_coalg::steenrod::{aw_diagonal, BarElement, BarGen, SteenrodStructure};
use steenrod_coalg::Error;

fn s(v: &[i64]) -> Simplex {
    Simplex::new(v.to_vec()).unwrap()
}

fn build(x: &OrderedComplex) -> SteenrodStructure {
    SteenrodStructure::build(x, None)
}

#[test]
fn adjoint_on_an_edge() {
    let st = build(&OrderedComplex::standard_simplex(1));
    let a = AlphaHandle::new(&st, Chain::basis(s(&[0, 1])));
    assert_eq!(a.eval(&BarElement::basis(BarGen::e(0))).unwrap(), aw_diagonal(&s(&[0, 1])));
    assert_eq!(a.eval(&BarElement::basis(BarGen::e(1))).unwrap(), TensorChain::term(vec![s(&[0, 1]), s(&[0, 1])], -1));
}

#[test]
fn shom_counts() {
    let edge = build(&OrderedComplex::standard_simplex(1));
    assert_eq!(s_functor(&edge, 2).unwrap().counts(), vec![2, 3, 4]);
    let rp2 = build(&common::rp2());
    assert_eq!(s_functor(&rp2, 2).unwrap().counts()[2], 46);
    let point = build(&OrderedComplex::standard_simplex(0));
    assert_eq!(s_functor(&point, 4).unwrap().counts(), vec![1; 5]);
}

#[test]
fn verdicts() {
    let d2 = OrderedComplex::standard_simplex(2);
    let s2 = build(&d2);
    let theta = VertexMap::from_pairs([(0, 0), (1, 1), (2, 1)]);
    let f = induced_chain_map(&theta, &d2, &d2).unwrap();
    assert!(is_steenrod_morphism(&f, &s2, &s2).unwrap().is_morphism());

    // flipping the sign of one edge already breaks f∂ = ∂f on that edge
    let mut flipped = GradedMap::identity(d2.iter());
    let images: Vec<(Simplex, Chain)> = flipped
        .images()
        .map(|(k, v)| (k.clone(), if k == &s(&[0, 1]) { v.scaled(-1) } else { v.clone() }))
        .collect();
    flipped = GradedMap::new(0, images.into_iter().collect()).unwrap();
    let v = is_steenrod_morphism(&flipped, &s2, &s2).unwrap();
    assert_eq!(v, MorphismVerdict::NotChainMap(Witness::ChainMap { degree: 1, simplex: s(&[0, 1]) }));

    let p = OrderedComplex::standard_simplex(0);
    let sp = build(&p);
    let v = is_steenrod_morphism(&GradedMap::identity(p.iter()).scaled(2), &sp, &sp).unwrap();
    assert!(matches!(v, MorphismVerdict::NotMorphism(Witness::Square { j: 0, .. })));
}

#[test]
fn enumeration_examples() {
    let point = build(&OrderedComplex::standard_simplex(0));
    assert_eq!(enumerate_morphisms(0, &point, Mode::Guided, 0).unwrap().len(), 1);
    let circle = build(&OrderedComplex::simplex_boundary(2));
    assert_eq!(enumerate_morphisms(1, &circle, Mode::Guided, 0).unwrap().len(), 6);
    assert_eq!(enumerate_morphisms(1, &circle, Mode::Brute, 2).unwrap().len(), 6);
}

/// Surjective morphisms `N(Δⁿ) → N(Δᵐ)` against a direct count of
/// order-preserving surjections `[n] ↠ [m]`.
#[test]
fn degeneracies_are_surjections() {
    for n in 1..=2usize {
        for m in 0..n {
            let target = build(&OrderedComplex::standard_simplex(m));
            let surjective: Vec<_> = enumerate_morphisms(n, &target, Mode::Brute, 2)
                .unwrap()
                .into_iter()
                .filter(|f| f.target == Simplex::standard(m))
                .collect();
            let mut oracle = 0;
            for code in 0..(m + 1).pow(n as u32 + 1) {
                let v: Vec<usize> = (0..=n).map(|k| code / (m + 1).pow(k as u32) % (m + 1)).collect();
                if v.windows(2).all(|w| w[0] <= w[1]) && v.iter().collect::<BTreeSet<_>>().len() == m + 1 {
                    oracle += 1;
                }
            }
            assert_eq!(surjective.len(), oracle, "n={n} m={m}");
            assert_eq!(oracle, common::binom(n, m));
        }
    }
}

#[test]
fn reconstruction_examples() {
    let (r, _) = verify_reconstruction(&OrderedComplex::standard_simplex(2), 4).unwrap();
    assert!(r.pass);
    let (r, data) = verify_reconstruction(&OrderedComplex::simplex_boundary(2), 3).unwrap();
    assert!(r.pass);
    for (n, row) in data.unit.iter().enumerate() {
        for &k in row {
            assert!(data.phi[n][k].surjection.is_identity());
        }
    }
}

#[test]
fn rp2_identity_and_relabeling() {
    let x = common::rp2();
    let sx = build(&x);
    let id = GradedMap::identity(x.iter());
    let v = is_steenrod_morphism(&id, &sx, &sx).unwrap();
    let h = s_functor(&sx, 3).unwrap();
    let l = lift_morphism(&id, &v, &h, &h).unwrap();
    assert!(l.is_identity());
    assert_eq!(l.vertex_bijection(&h, &h, &x, &x).unwrap(), Some(VertexMap::identity(x.vertices())));

    let theta = VertexMap::from_pairs((0..6).map(|v| (v, 2 * v + 1)));
    let y = x.relabel(&theta).unwrap();
    let g = induced_chain_map(&theta, &x, &y).unwrap();
    let v = is_steenrod_morphism(&g, &sx, &build(&y)).unwrap();
    let r = homology_square(&g, &v, &x, &y, 2).unwrap();
    assert!(r.pass, "{r:?}");
    assert_eq!(normalized_chains(&y).homology()[1].torsion, vec![2]);
}

#[test]
fn unverified_maps_are_refused() {
    let x = OrderedComplex::simplex_boundary(2);
    let sx = build(&x);
    let h = s_functor(&sx, 2).unwrap();
    let g = GradedMap::identity(x.iter()).scaled(-1);
    let v = is_steenrod_morphism(&g, &sx, &sx).unwrap();
    assert_eq!(lift_morphism(&g, &v, &h, &h), Err(Error::Unverified));
}
