use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::{DeltaComplex, Surjection};
use crate::error::Result;

/// A simplex `(θ, c)` of `d(Y)`: an order-preserving surjection
/// `θ: [m] ↠ [n]` paired with an `n`-cell `c` of the core.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DfSimplex {
    pub surjection: Surjection,
    pub cell: usize,
}

impl DfSimplex {
    pub fn dim(&self) -> usize {
        self.surjection.source()
    }

    pub fn core_dim(&self) -> usize {
        self.surjection.target()
    }

    pub fn is_degenerate(&self) -> bool {
        !self.surjection.is_identity()
    }
}

/// The degeneracy-free simplicial set `d(Y)` generated by a delta-complex.
///
/// Only the core is stored; simplices of each dimension are produced on
/// demand, so the infinitely many degenerate simplices are never
/// materialised beyond the dimension a caller asks for.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialSetDF {
    core: DeltaComplex,
}

impl SimplicialSetDF {
    pub fn core(&self) -> &DeltaComplex {
        &self.core
    }

    /// All `m`-simplices, ordered by core dimension, cell, then surjection.
    pub fn simplices(&self, m: usize) -> Vec<DfSimplex> {
        let mut out = Vec::new();
        for n in 0..=m.min(self.core.dim().unwrap_or(0)) {
            if self.core.count(n) == 0 {
                continue;
            }
            let surjections = Surjection::all(m, n);
            for cell in 0..self.core.count(n) {
                for s in &surjections {
                    out.push(DfSimplex { surjection: s.clone(), cell });
                }
            }
        }
        out
    }

    /// Position lookup for the simplices of one dimension.
    pub fn index(&self, m: usize) -> HashMap<DfSimplex, usize> {
        self.simplices(m).into_iter().enumerate().map(|(k, s)| (s, k)).collect()
    }

    pub fn face(&self, x: &DfSimplex, i: usize) -> DfSimplex {
        let (surjection, dropped) = x.surjection.after_coface(i);
        let cell = match dropped {
            Some(t) => self.core.face(x.core_dim(), x.cell, t),
            None => x.cell,
        };
        DfSimplex { surjection, cell }
    }

    pub fn degeneracy(&self, x: &DfSimplex, i: usize) -> DfSimplex {
        DfSimplex { surjection: x.surjection.after_codegeneracy(i), cell: x.cell }
    }

    /// Applies the degeneracy operator `θ^*` of a surjection `θ: [m'] ↠ [m]`
    /// to an `m`-simplex.
    pub fn degenerate_by(&self, x: &DfSimplex, theta: &Surjection) -> DfSimplex {
        DfSimplex { surjection: x.surjection.compose(theta), cell: x.cell }
    }

    /// Checks every face, degeneracy and mixed simplicial identity on all
    /// simplices of dimension at most `up_to`.
    pub fn check_simplicial_identities(&self, up_to: usize) -> bool {
        for m in 0..=up_to {
            for x in self.simplices(m) {
                // d_i d_j = d_{j-1} d_i, i < j
                if m >= 2 {
                    for j in 1..=m {
                        for i in 0..j {
                            if self.face(&self.face(&x, j), i) != self.face(&self.face(&x, i), j - 1) {
                                return false;
                            }
                        }
                    }
                }
                // s_i s_j = s_{j+1} s_i, i <= j
                for j in 0..=m {
                    for i in 0..=j {
                        if self.degeneracy(&self.degeneracy(&x, j), i)
                            != self.degeneracy(&self.degeneracy(&x, i), j + 1)
                        {
                            return false;
                        }
                    }
                }
                // mixed identities on s_j x, a simplex of dimension m + 1
                for j in 0..=m {
                    let sx = self.degeneracy(&x, j);
                    for i in 0..=m + 1 {
                        let lhs = self.face(&sx, i);
                        let ok = if i < j {
                            m >= 1 && lhs == self.degeneracy(&self.face(&x, i), j - 1)
                        } else if i == j || i == j + 1 {
                            lhs == x
                        } else {
                            m >= 1 && lhs == self.degeneracy(&self.face(&x, i - 1), j)
                        };
                        if !ok {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
}

/// The functor `d`: freely adjoins degeneracies to a delta-complex.
pub fn adjoin(y: &DeltaComplex) -> Result<SimplicialSetDF> {
    y.check_face_identities()?;
    Ok(SimplicialSetDF { core: y.clone() })
}

/// The delta-complex `f(X)` truncated at `up_to`, together with the simplex
/// of `X` behind each cell.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Forgotten {
    pub delta: DeltaComplex,
    pub cells: Vec<Vec<DfSimplex>>,
}

/// The functor `f`: drops degeneracy operators, promoting every simplex of
/// dimension at most `up_to` to a cell.
pub fn forget(x: &SimplicialSetDF, up_to: usize) -> Forgotten {
    let cells: Vec<Vec<DfSimplex>> = (0..=up_to).map(|m| x.simplices(m)).collect();
    let mut faces = Vec::new();
    for m in 1..=up_to {
        let index = x.index(m - 1);
        faces.push(
            cells[m]
                .iter()
                .map(|s| (0..=m).map(|i| index[&x.face(s, i)]).collect())
                .collect(),
        );
    }
    let delta = DeltaComplex::new(cells[0].len(), faces).expect("faces of a simplicial set");
    Forgotten { delta, cells }
}

/// `Core(X)` with the canonical comparison map `c: d(Core X) → X`.
#[derive(Clone, Debug)]
pub struct Core {
    pub delta: DeltaComplex,
    /// The simplex of `X` behind each core cell.
    pub cells: Vec<Vec<DfSimplex>>,
}

impl Core {
    /// `c(θ, k) = θ^*(cells[k])`.
    pub fn comparison(&self, x: &SimplicialSetDF, s: &DfSimplex) -> DfSimplex {
        let base = &self.cells[s.core_dim()][s.cell];
        x.degenerate_by(base, &s.surjection)
    }

    /// Whether `c` is a bijection commuting with faces and degeneracies
    /// through dimension `up_to`.
    pub fn comparison_is_iso(&self, x: &SimplicialSetDF, up_to: usize) -> bool {
        let source = match adjoin(&self.delta) {
            Ok(s) => s,
            Err(_) => return false,
        };
        for m in 0..=up_to {
            let dom = source.simplices(m);
            let image: Vec<DfSimplex> = dom.iter().map(|s| self.comparison(x, s)).collect();
            let mut sorted = image.clone();
            sorted.sort();
            sorted.dedup();
            let mut target = x.simplices(m);
            target.sort();
            if sorted != target || image.len() != target.len() {
                return false;
            }
            for (s, cs) in dom.iter().zip(&image) {
                if m >= 1 && (0..=m).any(|i| self.comparison(x, &source.face(s, i)) != x.face(cs, i)) {
                    return false;
                }
                if m < up_to
                    && (0..=m).any(|i| self.comparison(x, &source.degeneracy(s, i)) != x.degeneracy(cs, i))
                {
                    return false;
                }
            }
        }
        true
    }
}

/// Computes `Core(X)` intrinsically: the nondegenerate simplices (those not
/// hit by any degeneracy operator) together with their faces.
pub fn core_of(x: &SimplicialSetDF) -> Core {
    let top = x.core.dim().unwrap_or(0);
    let mut cells: Vec<Vec<DfSimplex>> = Vec::new();
    if x.core.dim().is_none() {
        return Core { delta: DeltaComplex::default(), cells };
    }
    for m in 0..=top {
        let degenerate: std::collections::HashSet<DfSimplex> = if m == 0 {
            Default::default()
        } else {
            x.simplices(m - 1)
                .iter()
                .flat_map(|y| (0..m).map(move |i| (y, i)))
                .map(|(y, i)| x.degeneracy(y, i))
                .collect()
        };
        cells.push(x.simplices(m).into_iter().filter(|s| !degenerate.contains(s)).collect());
    }
    // close under faces; for degeneracy-free input nothing is added
    for m in (1..=top).rev() {
        let mut extra = Vec::new();
        for s in &cells[m] {
            for i in 0..=m {
                let f = x.face(s, i);
                if !cells[m - 1].contains(&f) && !extra.contains(&f) {
                    extra.push(f);
                }
            }
        }
        cells[m - 1].extend(extra);
    }
    let mut faces = Vec::new();
    for m in 1..=top {
        let index: HashMap<&DfSimplex, usize> = cells[m - 1].iter().enumerate().map(|(k, s)| (s, k)).collect();
        faces.push(cells[m].iter().map(|s| (0..=m).map(|i| index[&x.face(s, i)]).collect()).collect());
    }
    let delta = DeltaComplex::new(cells[0].len(), faces).expect("core of a simplicial set");
    Core { delta, cells }
}

/// The map `g: d(f(X)) → X` sending a promoted simplex back to itself and
/// an added degeneracy `(θ, x)` to `θ^* x`.
#[derive(Clone, Debug)]
pub struct Counit {
    pub forgotten: Forgotten,
    pub domain: SimplicialSetDF,
}

impl Counit {
    pub fn new(x: &SimplicialSetDF, up_to: usize) -> Self {
        let forgotten = forget(x, up_to);
        let domain = adjoin(&forgotten.delta).expect("forgotten complex is a delta-complex");
        Counit { forgotten, domain }
    }

    pub fn apply(&self, x: &SimplicialSetDF, s: &DfSimplex) -> DfSimplex {
        let base = &self.forgotten.cells[s.core_dim()][s.cell];
        x.degenerate_by(base, &s.surjection)
    }

    /// Surjective and simplicial in every dimension `≤ up_to`.
    pub fn check(&self, x: &SimplicialSetDF, up_to: usize) -> bool {
        for m in 0..=up_to {
            let dom = self.domain.simplices(m);
            let mut image: Vec<DfSimplex> = dom.iter().map(|s| self.apply(x, s)).collect();
            for s in &dom {
                let gs = self.apply(x, s);
                if m >= 1 && (0..=m).any(|i| self.apply(x, &self.domain.face(s, i)) != x.face(&gs, i)) {
                    return false;
                }
                if m < up_to
                    && (0..=m).any(|i| self.apply(x, &self.domain.degeneracy(s, i)) != x.degeneracy(&gs, i))
                {
                    return false;
                }
            }
            image.sort();
            image.dedup();
            if image.len() != x.simplices(m).len() {
                return false;
            }
        }
        true
    }

    /// Whether `g` is a bijection in dimension `m`.
    pub fn is_bijective_in(&self, x: &SimplicialSetDF, m: usize) -> bool {
        let dom = self.domain.simplices(m);
        let mut image: Vec<DfSimplex> = dom.iter().map(|s| self.apply(x, s)).collect();
        image.sort();
        image.dedup();
        image.len() == dom.len() && image.len() == x.simplices(m).len()
    }
}

/// The delta-map `ι_Y: Y → f(d(Y))`, `c ↦ (id, c)`, given as cell indices of
/// `f(d(Y))` truncated at `up_to`.
pub fn unit(y: &DeltaComplex, up_to: usize) -> Result<(Forgotten, Vec<Vec<usize>>)> {
    let dy = adjoin(y)?;
    let forgotten = forget(&dy, up_to);
    let mut map = Vec::new();
    for n in 0..=up_to.min(y.dim().unwrap_or(0)) {
        if y.dim().is_none() {
            break;
        }
        let index: HashMap<&DfSimplex, usize> =
            forgotten.cells[n].iter().enumerate().map(|(k, s)| (s, k)).collect();
        map.push(
            (0..y.count(n))
                .map(|c| index[&DfSimplex { surjection: Surjection::identity(n), cell: c }])
                .collect(),
        );
    }
    Ok((forgotten, map))
}

/// Checks both triangle identities of the adjunction between `d` and `f`
/// through dimension `up_to`:
///
/// - on the delta-complex `f(X)`: `f(g_X) ∘ ι_{f X} = id`;
/// - on the simplicial set `d(Y)` with `Y = core X`: `g_{d Y} ∘ d(ι_Y) = id`.
pub fn check_triangle_identities(x: &SimplicialSetDF, up_to: usize) -> Result<bool> {
    let counit = Counit::new(x, up_to);
    let fx = &counit.forgotten;
    // ι_{fX}: fX → f d f X sends cell k to (id, k); f(g) evaluates g on it
    for m in 0..=up_to {
        for (k, cell) in fx.cells[m].iter().enumerate() {
            let s = DfSimplex { surjection: Surjection::identity(m), cell: k };
            if &counit.apply(x, &s) != cell {
                return Ok(false);
            }
        }
    }
    // d(ι_Y) sends (θ, c) to (θ, ι c) where ι c = (id, c) is a cell of f d Y
    let dy = adjoin(x.core())?;
    let counit_dy = Counit::new(&dy, up_to);
    let index: Vec<HashMap<&DfSimplex, usize>> = counit_dy
        .forgotten
        .cells
        .iter()
        .map(|layer| layer.iter().enumerate().map(|(k, s)| (s, k)).collect())
        .collect();
    for m in 0..=up_to {
        for s in dy.simplices(m) {
            let n = s.core_dim();
            let iota = index[n][&DfSimplex { surjection: Surjection::identity(n), cell: s.cell }];
            let lifted = DfSimplex { surjection: s.surjection.clone(), cell: iota };
            if counit_dy.apply(&dy, &lifted) != s {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `Σ_n binom(m, n) |Y_n|`, the size of `d(Y)_m`.
pub fn df_count(y: &DeltaComplex, m: usize) -> usize {
    (0..=m).map(|n| binomial(m, n) * y.count(n)).sum()
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}
