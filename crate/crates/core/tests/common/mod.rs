#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use steenrod_coalg::simplicial::{OrderedComplex, VertexMap};

pub fn rp2() -> OrderedComplex {
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

/// Seven triangles around a hole: outer cycle 0..=3, inner cycle 4..=6.
pub fn annulus() -> OrderedComplex {
    let tris = [[0, 1, 4], [1, 4, 5], [1, 2, 5], [2, 5, 6], [2, 3, 6], [3, 6, 4], [3, 0, 4]];
    let facets: Vec<Vec<i64>> = tris
        .iter()
        .map(|t| {
            let mut v = t.to_vec();
            v.sort();
            v
        })
        .collect();
    OrderedComplex::from_facets(&facets).unwrap()
}

pub fn named() -> Vec<(&'static str, OrderedComplex)> {
    vec![
        ("delta0", OrderedComplex::standard_simplex(0)),
        ("delta1", OrderedComplex::standard_simplex(1)),
        ("delta2", OrderedComplex::standard_simplex(2)),
        ("delta3", OrderedComplex::standard_simplex(3)),
        ("circle", OrderedComplex::simplex_boundary(2)),
        ("sphere", OrderedComplex::simplex_boundary(3)),
        ("rp2", rp2()),
        ("annulus", annulus()),
    ]
}

/// Face-closed complexes on at most six vertices, from a fixed seed.
pub fn random_complexes(count: usize, seed: u64) -> Vec<OrderedComplex> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n: i64 = rng.gen_range(1..=6);
            let mut facets: BTreeSet<Vec<i64>> = BTreeSet::new();
            for _ in 0..rng.gen_range(1..=6) {
                let size = rng.gen_range(1..=4.min(n as usize));
                let mut pool: Vec<i64> = (0..n).collect();
                let mut f = Vec::new();
                for _ in 0..size {
                    f.push(pool.swap_remove(rng.gen_range(0..pool.len())));
                }
                f.sort();
                facets.insert(f);
            }
            let facets: Vec<Vec<i64>> = facets.into_iter().collect();
            OrderedComplex::from_facets(&facets).unwrap()
        })
        .collect()
}

pub fn corpus() -> Vec<(String, OrderedComplex)> {
    let mut out: Vec<(String, OrderedComplex)> = named().into_iter().map(|(n, x)| (n.to_string(), x)).collect();
    out.extend(random_complexes(50, 2024).into_iter().enumerate().map(|(k, x)| (format!("random{k}"), x)));
    out
}

/// A strictly increasing relabeling of the vertices into `0..40`.
pub fn random_monotone_relabel(x: &OrderedComplex, rng: &mut ChaCha8Rng) -> VertexMap {
    let mut targets: BTreeSet<i64> = BTreeSet::new();
    while targets.len() < x.vertices().len() {
        targets.insert(rng.gen_range(0..40));
    }
    VertexMap::from_pairs(x.vertices().iter().copied().zip(targets))
}

pub fn binom(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// `Σ_k binom(n, k) |X_k|`.
pub fn df_count(n: usize, f_vector: &[usize]) -> usize {
    f_vector.iter().enumerate().map(|(k, &c)| binom(n, k) * c).sum()
}
