use std::collections::{BTreeSet, HashMap};

use super::enumerate::{enumerate_morphisms, EnumeratedMorphism, Mode};
use super::morphism::{induced_chain_map, ChainMap};
use crate::error::{Error, Result};
use crate::simplicial::{adjoin, DeltaComplex, DfSimplex, OrderedComplex, VertexMap};
use crate::steenrod::SteenrodStructure;

/// `Shom(★, N(X))` through dimension `up_to`: the `n`-simplices are the
/// Steenrod morphisms `N(Δⁿ) → N(X)`, faces and degeneracies act by
/// precomposition.
#[derive(Clone, Debug)]
pub struct SteenrodHom {
    up_to: usize,
    levels: Vec<Vec<EnumeratedMorphism>>,
    index: Vec<HashMap<ChainMap, usize>>,
    cofaces: Vec<Vec<ChainMap>>,
    codegeneracies: Vec<Vec<ChainMap>>,
}

fn coface(n: usize, i: usize) -> VertexMap {
    VertexMap::from_pairs((0..n as i64).map(|j| (j, if j < i as i64 { j } else { j + 1 })))
}

fn codegeneracy(n: usize, i: usize) -> VertexMap {
    VertexMap::from_pairs((0..=n as i64 + 1).map(|j| (j, if j <= i as i64 { j } else { j - 1 })))
}

/// Builds `Shom(★, N(X))` from guided enumeration.
pub fn s_functor(sx: &SteenrodStructure, up_to: usize) -> Result<SteenrodHom> {
    let mut levels = Vec::new();
    let mut index = Vec::new();
    for n in 0..=up_to {
        let level = enumerate_morphisms(n, sx, Mode::Guided, 0)?;
        index.push(level.iter().enumerate().map(|(k, m)| (m.map.clone(), k)).collect());
        levels.push(level);
    }
    let std: Vec<OrderedComplex> = (0..=up_to + 1).map(OrderedComplex::standard_simplex).collect();
    // cofaces[n][i] = N(δ^i): N(Δ^{n-1}) → N(Δ^n), codegeneracies[n][i] = N(σ^i): N(Δ^{n+1}) → N(Δ^n)
    let mut cofaces = vec![Vec::new()];
    for n in 1..=up_to {
        cofaces.push((0..=n).map(|i| induced_chain_map(&coface(n, i), &std[n - 1], &std[n])).collect::<Result<_>>()?);
    }
    let mut codegeneracies = Vec::new();
    for n in 0..up_to {
        codegeneracies.push((0..=n).map(|i| induced_chain_map(&codegeneracy(n, i), &std[n + 1], &std[n])).collect::<Result<_>>()?);
    }
    Ok(SteenrodHom { up_to, levels, index, cofaces, codegeneracies })
}

impl SteenrodHom {
    pub fn up_to(&self) -> usize {
        self.up_to
    }

    pub fn simplices(&self, n: usize) -> &[EnumeratedMorphism] {
        &self.levels[n]
    }

    pub fn counts(&self) -> Vec<usize> {
        self.levels.iter().map(Vec::len).collect()
    }

    /// Position of a chain map among the `n`-simplices, if it is one.
    pub fn index_of(&self, n: usize, f: &ChainMap) -> Option<usize> {
        self.index.get(n)?.get(f).copied()
    }

    fn lookup(&self, n: usize, f: ChainMap) -> Result<usize> {
        self.index_of(n, &f)
            .ok_or_else(|| Error::Invariant(format!("precomposite is not a {n}-simplex of Shom")))
    }

    /// `d_i f = f ∘ N(δ^i)`.
    pub fn face(&self, n: usize, k: usize, i: usize) -> Result<usize> {
        let f = &self.levels[n][k].map;
        self.lookup(n - 1, f.compose(&self.cofaces[n][i])?)
    }

    /// `s_i f = f ∘ N(σ^i)`, defined below the top level.
    pub fn degeneracy(&self, n: usize, k: usize, i: usize) -> Result<usize> {
        if n >= self.up_to {
            return Err(Error::Truncated { max_i: self.up_to, requested: n + 1 });
        }
        let f = &self.levels[n][k].map;
        self.lookup(n + 1, f.compose(&self.codegeneracies[n][i])?)
    }

    /// Indices of the `n`-simplices that are not degeneracies of lower ones.
    pub fn nondegenerate(&self, n: usize) -> Result<Vec<usize>> {
        let mut hit = BTreeSet::new();
        if n > 0 {
            for k in 0..self.levels[n - 1].len() {
                for i in 0..n {
                    hit.insert(self.degeneracy(n - 1, k, i)?);
                }
            }
        }
        Ok((0..self.levels[n].len()).filter(|k| !hit.contains(k)).collect())
    }

    /// The delta-complex of nondegenerate simplices.
    pub fn core(&self) -> Result<DeltaComplex> {
        let cells: Vec<Vec<usize>> = (0..=self.up_to).map(|n| self.nondegenerate(n)).collect::<Result<_>>()?;
        let pos: Vec<HashMap<usize, usize>> =
            cells.iter().map(|c| c.iter().enumerate().map(|(p, &k)| (k, p)).collect()).collect();
        let mut faces = Vec::new();
        for n in 1..=self.up_to {
            let mut layer = Vec::new();
            for &k in &cells[n] {
                let f: Vec<usize> = (0..=n)
                    .map(|i| {
                        let d = self.face(n, k, i)?;
                        pos[n - 1].get(&d).copied().ok_or_else(|| Error::Invariant(format!("face of a nondegenerate {n}-simplex degenerates")))
                    })
                    .collect::<Result<_>>()?;
                layer.push(f);
            }
            faces.push(layer);
        }
        DeltaComplex::new(cells[0].len(), faces)
    }

    /// Checks every simplicial identity that stays within `up_to`; returns
    /// the first failure.
    pub fn check_simplicial_identities(&self) -> Result<Option<String>> {
        let top = self.up_to;
        for m in 0..=top {
            for x in 0..self.levels[m].len() {
                if m >= 2 {
                    for j in 1..=m {
                        for i in 0..j {
                            if self.face(m - 1, self.face(m, x, j)?, i)? != self.face(m - 1, self.face(m, x, i)?, j - 1)? {
                                return Ok(Some(format!("d{i} d{j} on {m}-simplex {x}")));
                            }
                        }
                    }
                }
                if m + 2 <= top {
                    for j in 0..=m {
                        for i in 0..=j {
                            if self.degeneracy(m + 1, self.degeneracy(m, x, j)?, i)?
                                != self.degeneracy(m + 1, self.degeneracy(m, x, i)?, j + 1)?
                            {
                                return Ok(Some(format!("s{i} s{j} on {m}-simplex {x}")));
                            }
                        }
                    }
                }
                if m < top {
                    for j in 0..=m {
                        let sx = self.degeneracy(m, x, j)?;
                        for i in 0..=m + 1 {
                            let lhs = self.face(m + 1, sx, i)?;
                            let rhs = if i < j {
                                self.degeneracy(m - 1, self.face(m, x, i)?, j - 1)?
                            } else if i == j || i == j + 1 {
                                x
                            } else {
                                self.degeneracy(m - 1, self.face(m, x, i - 1)?, j)?
                            };
                            if lhs != rhs {
                                return Ok(Some(format!("d{i} s{j} on {m}-simplex {x}")));
                            }
                        }
                    }
                }
            }
        }
        Ok(None)
    }
}

/// Outcome of comparing `Shom(★, N(X))` with `d(X)` level by level.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct ReconstructionReport {
    pub up_to: usize,
    pub shom_counts: Vec<usize>,
    pub df_counts: Vec<usize>,
    pub bijection: bool,
    pub faces_commute: bool,
    pub degeneracies_commute: bool,
    pub simplicial_identities: bool,
    /// `u_X` lands exactly on the nondegenerate simplices
    pub unit_image_nondegenerate: bool,
    pub pass: bool,
    pub failure: Option<String>,
}

/// The isomorphism data behind a passing [`ReconstructionReport`]:
/// `phi[n][k]` is the simplex of `d(X)` matched with the `k`-th
/// `n`-simplex of `Shom`, and `unit[n][c]` is `u_X` of the `c`-th
/// `n`-simplex of `X`.
#[derive(Clone, Debug)]
pub struct Reconstruction {
    pub shom: SteenrodHom,
    pub phi: Vec<Vec<DfSimplex>>,
    pub unit: Vec<Vec<usize>>,
}

fn fail(flag: &mut bool, failure: &mut Option<String>, msg: String) {
    *flag = false;
    failure.get_or_insert(msg);
}

/// Matches each morphism `N(Δⁿ) → N(X)`, factored as `N(τ) ∘ N(θ)`, with
/// the simplex `(θ, τ)` of `d(X)` and checks the match is an isomorphism of
/// simplicial sets through `up_to`, together with the unit `u_X`.
pub fn verify_reconstruction(x: &OrderedComplex, up_to: usize) -> Result<(ReconstructionReport, Reconstruction)> {
    let sx = SteenrodStructure::build(x, None);
    let shom = s_functor(&sx, up_to)?;
    let df = adjoin(&DeltaComplex::from_ordered(x))?;
    let mut report = ReconstructionReport {
        up_to,
        shom_counts: shom.counts(),
        df_counts: (0..=up_to).map(|m| df.simplices(m).len()).collect(),
        bijection: true,
        faces_commute: true,
        degeneracies_commute: true,
        simplicial_identities: true,
        unit_image_nondegenerate: true,
        pass: false,
        failure: None,
    };
    let mut phi = Vec::new();
    for n in 0..=up_to {
        let level: Vec<DfSimplex> = shom
            .simplices(n)
            .iter()
            .map(|m| DfSimplex {
                surjection: m.surjection.clone(),
                cell: x.index_of(&m.target).expect("target is a simplex of X"),
            })
            .collect();
        let distinct: BTreeSet<&DfSimplex> = level.iter().collect();
        let expected: BTreeSet<DfSimplex> = df.simplices(n).into_iter().collect();
        if distinct.len() != level.len() || distinct.into_iter().cloned().collect::<BTreeSet<_>>() != expected {
            fail(&mut report.bijection, &mut report.failure, format!("level {n} is not in bijection"));
        }
        phi.push(level);
    }
    for n in 0..=up_to {
        for k in 0..phi[n].len() {
            if n > 0 {
                for i in 0..=n {
                    if phi[n - 1][shom.face(n, k, i)?] != df.face(&phi[n][k], i) {
                        fail(&mut report.faces_commute, &mut report.failure, format!("d{i} on {n}-simplex {k}"));
                    }
                }
            }
            if n < up_to {
                for i in 0..=n {
                    if phi[n + 1][shom.degeneracy(n, k, i)?] != df.degeneracy(&phi[n][k], i) {
                        fail(&mut report.degeneracies_commute, &mut report.failure, format!("s{i} on {n}-simplex {k}"));
                    }
                }
            }
        }
    }
    if let Some(msg) = shom.check_simplicial_identities()? {
        fail(&mut report.simplicial_identities, &mut report.failure, msg);
    }
    // u_X(σ) = N(characteristic map of σ)
    let mut unit = Vec::new();
    for n in 0..=up_to.min(x.dim().unwrap_or(0)) {
        let source = OrderedComplex::standard_simplex(n);
        let mut row = Vec::new();
        for s in x.simplices(n) {
            let chi = VertexMap::from_pairs(s.vertices().iter().enumerate().map(|(j, &v)| (j as i64, v)));
            match shom.index_of(n, &induced_chain_map(&chi, &source, x)?) {
                Some(k) => row.push(k),
                None => {
                    fail(&mut report.unit_image_nondegenerate, &mut report.failure, format!("u_X({s:?}) is not a morphism"));
                }
            }
        }
        let image: BTreeSet<usize> = row.iter().copied().collect();
        let nondegenerate: BTreeSet<usize> = shom.nondegenerate(n)?.into_iter().collect();
        let identity_part: BTreeSet<usize> = (0..phi[n].len()).filter(|&k| !phi[n][k].is_degenerate()).collect();
        if image.len() != row.len() || image != nondegenerate || image != identity_part {
            fail(&mut report.unit_image_nondegenerate, &mut report.failure, format!("u_X image differs from the nondegenerate {n}-simplices"));
        }
        unit.push(row);
    }
    report.pass = report.bijection
        && report.faces_commute
        && report.degeneracies_commute
        && report.simplicial_identities
        && report.unit_image_nondegenerate;
    Ok((report, Reconstruction { shom, phi, unit }))
}
