use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::structure::SteenrodStructure;
use crate::chains::FreeChainComplex;
use crate::error::Result;
use crate::simplicial::Simplex;

fn xor(a: &mut [bool], b: &[bool]) {
    for (x, &y) in a.iter_mut().zip(b) {
        *x ^= y;
    }
}

fn unit_vector(len: usize, k: usize) -> Vec<bool> {
    let mut v = vec![false; len];
    v[k] = true;
    v
}

/// Echelon form over GF(2). Each row remembers which combination of the
/// inserted tags produced it.
#[derive(Clone, Debug)]
struct Echelon {
    tags: usize,
    rows: Vec<(usize, Vec<bool>, Vec<bool>)>,
}

impl Echelon {
    fn new(tags: usize) -> Self {
        Echelon { tags, rows: Vec::new() }
    }

    fn reduce(&self, v: &[bool]) -> (Vec<bool>, Vec<bool>) {
        let mut v = v.to_vec();
        let mut comb = vec![false; self.tags];
        for (p, r, c) in &self.rows {
            if v[*p] {
                xor(&mut v, r);
                xor(&mut comb, c);
            }
        }
        (v, comb)
    }

    /// Inserts `v` tagged with `tag`; returns the combination of tags
    /// vanishing on `v` when `v` is already in the span.
    fn insert(&mut self, v: &[bool], tag: Vec<bool>) -> Option<Vec<bool>> {
        let (r, mut comb) = self.reduce(v);
        xor(&mut comb, &tag);
        match r.iter().position(|&b| b) {
            Some(p) => {
                self.rows.push((p, r, comb));
                None
            }
            None => Some(comb),
        }
    }
}

/// The mod 2 coboundary `δu(τ) = Σ_i u(d_i τ)` of a `j`-cochain.
fn coboundary(n: &FreeChainComplex<Simplex>, j: usize, u: &[bool]) -> Vec<bool> {
    n.basis(j + 1)
        .iter()
        .map(|t| (0..=t.dim()).filter(|&i| u[n.index_of(&t.face(i)).expect("face in complex")]).count() % 2 == 1)
        .collect()
}

/// Mod 2 cohomology in one degree, with cocycle representatives of a basis.
#[derive(Clone, Debug)]
pub struct Gf2Cohomology {
    pub degree: usize,
    pub representatives: Vec<Vec<bool>>,
    coboundary_dim: usize,
    classes: Echelon,
}

impl Gf2Cohomology {
    pub fn compute(n: &FreeChainComplex<Simplex>, j: usize) -> Self {
        let len = n.rank(j);
        let below = if j == 0 { 0 } else { n.rank(j - 1) };
        let boundaries: Vec<Vec<bool>> =
            (0..below).map(|k| coboundary(n, j - 1, &unit_vector(below, k))).collect();
        // kernel of δ^j: tags record the source cochain
        let mut image = Echelon::new(len);
        let kernel: Vec<Vec<bool>> = (0..len)
            .filter_map(|k| image.insert(&coboundary(n, j, &unit_vector(len, k)), unit_vector(len, k)))
            .collect();
        let mut span = Echelon::new(0);
        for b in &boundaries {
            span.insert(b, Vec::new());
        }
        let coboundary_dim = span.rows.len();
        let representatives: Vec<Vec<bool>> =
            kernel.into_iter().filter(|z| span.insert(z, Vec::new()).is_none()).collect();
        let d = representatives.len();
        let mut classes = Echelon::new(d);
        for b in &boundaries {
            classes.insert(b, vec![false; d]);
        }
        for (k, r) in representatives.iter().enumerate() {
            classes.insert(r, unit_vector(d, k));
        }
        Gf2Cohomology { degree: j, representatives, coboundary_dim, classes }
    }

    pub fn dim(&self) -> usize {
        self.representatives.len()
    }

    pub fn coboundary_dim(&self) -> usize {
        self.coboundary_dim
    }

    /// Coordinates of the class of a cochain; `None` if it is not a cocycle.
    pub fn class_of(&self, z: &[bool]) -> Option<Vec<bool>> {
        let (r, comb) = self.classes.reduce(z);
        r.iter().all(|&b| !b).then_some(comb)
    }
}

/// `Sq^i(u)(τ) = Σ u(a)u(b)` over the terms `a⊗b` of `Δ_{j-i}(τ)`, for a
/// `j`-cochain `u` and a `(j+i)`-simplex `τ`.
pub fn square_cochain(st: &SteenrodStructure, i: usize, j: usize, u: &[bool]) -> Result<Vec<bool>> {
    let n = st.chains();
    let len = n.rank(j + i);
    if i > j {
        return Ok(vec![false; len]);
    }
    let mut out = Vec::with_capacity(len);
    for t in n.basis(j + i) {
        let d = st.diagonal(j - i, t)?;
        let mut acc = false;
        for (w, c) in d.iter() {
            if c % 2 != 0 && w[0].dim() == j && w[1].dim() == j {
                acc ^= u[n.index_of(&w[0]).expect("face")] && u[n.index_of(&w[1]).expect("face")];
            }
        }
        out.push(acc);
    }
    Ok(out)
}

/// The matrix of `Sq^i: H^j → H^{j+i}` in the representative bases;
/// `matrix[r][c]` is the coefficient of target basis class `r` in the image
/// of source basis class `c`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SquareBlock {
    pub i: usize,
    pub source_degree: usize,
    pub source_dim: usize,
    pub target_dim: usize,
    pub matrix: Vec<Vec<u8>>,
    /// representatives perturbed by random coboundaries gave the same classes
    pub well_defined: bool,
}

impl SquareBlock {
    pub fn is_zero(&self) -> bool {
        self.matrix.iter().flatten().all(|&x| x == 0)
    }

    pub fn is_identity(&self) -> bool {
        self.source_dim == self.target_dim
            && self.matrix.iter().enumerate().all(|(r, row)| row.iter().enumerate().all(|(c, &x)| x == u8::from(r == c)))
    }
}

/// `Sq^i` on `H^*(X; Z/2)` in every source degree `j` with `j + i ≤ dim X`.
/// Each block is also evaluated on `samples` coboundary perturbations of
/// each representative, seeded by `seed`.
pub fn steenrod_squares(st: &SteenrodStructure, i: usize, samples: usize, seed: u64) -> Result<Vec<SquareBlock>> {
    let n = st.chains();
    let Some(top) = n.top() else { return Ok(Vec::new()) };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for j in 0..=top {
        if j + i > top {
            break;
        }
        let source = Gf2Cohomology::compute(n, j);
        let target = Gf2Cohomology::compute(n, j + i);
        let mut matrix = vec![vec![0u8; source.dim()]; target.dim()];
        let mut well_defined = true;
        for (c, u) in source.representatives.iter().enumerate() {
            let sq = square_cochain(st, i, j, u)?;
            let Some(class) = target.class_of(&sq) else {
                well_defined = false;
                continue;
            };
            for (r, &b) in class.iter().enumerate() {
                matrix[r][c] = u8::from(b);
            }
            if j == 0 {
                continue;
            }
            for _ in 0..samples {
                let v: Vec<bool> = (0..n.rank(j - 1)).map(|_| rng.gen()).collect();
                let mut w = u.clone();
                xor(&mut w, &coboundary(n, j - 1, &v));
                let again = square_cochain(st, i, j, &w)?;
                if target.class_of(&again).as_ref() != Some(&class) {
                    well_defined = false;
                }
            }
        }
        out.push(SquareBlock {
            i,
            source_degree: j,
            source_dim: source.dim(),
            target_dim: target.dim(),
            matrix,
            well_defined,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chains::normalized_chains;
    use crate::simplicial::OrderedComplex;

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

    #[test]
    fn mod_two_betti_numbers() {
        let n = normalized_chains(&rp2());
        let dims: Vec<usize> = (0..=2).map(|j| Gf2Cohomology::compute(&n, j).dim()).collect();
        assert_eq!(dims, vec![1, 1, 1]);
        // rank of ∂_2 mod 2 is 9
        assert_eq!(Gf2Cohomology::compute(&n, 2).coboundary_dim(), 9);
        let n = normalized_chains(&OrderedComplex::simplex_boundary(3));
        let dims: Vec<usize> = (0..=2).map(|j| Gf2Cohomology::compute(&n, j).dim()).collect();
        assert_eq!(dims, vec![1, 0, 1]);
    }

    #[test]
    fn sq0_is_identity_and_sq1_nonzero_on_rp2() {
        for x in [OrderedComplex::simplex_boundary(2), OrderedComplex::simplex_boundary(3), rp2()] {
            let st = SteenrodStructure::build(&x, None);
            for b in steenrod_squares(&st, 0, 8, 1).unwrap() {
                assert!(b.is_identity() && b.well_defined, "{b:?}");
            }
        }
        let st = SteenrodStructure::build(&rp2(), None);
        let sq1 = steenrod_squares(&st, 1, 8, 2).unwrap();
        assert_eq!(sq1[1].source_degree, 1);
        assert_eq!(sq1[1].matrix, vec![vec![1]]);
        assert!(sq1.iter().all(|b| b.well_defined));
    }

    #[test]
    fn unstable_squares_vanish() {
        let st = SteenrodStructure::build(&rp2(), None);
        let n = st.chains();
        for j in 0..=2 {
            for i in j + 1..=2 {
                if i + j <= 2 {
                    for u in Gf2Cohomology::compute(n, j).representatives {
                        assert!(square_cochain(&st, i, j, &u).unwrap().iter().all(|&b| !b));
                    }
                }
            }
        }
    }
}
