use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use super::bar::{bar_boundary, eta, BarElement, BarGen};
use super::diagonal::{aw_diagonal, higher_diagonal, tswap};
use crate::chains::{normalized_chains, sign, Chain, FreeChainComplex, TensorChain};
use crate::error::{Error, Result};
use crate::simplicial::{OrderedComplex, Simplex, VertexMap};

/// The table `(g·e_i, σ) ↦ ξ(g·e_i ⊗ σ)` presenting the Steenrod diagonal
/// of `N(X)` for `i ≤ max_i`.
#[derive(Clone, Debug)]
pub struct SteenrodStructure {
    complex: OrderedComplex,
    chains: FreeChainComplex<Simplex>,
    max_i: usize,
    table: HashMap<(BarGen, Simplex), TensorChain>,
}

/// The contract items checked by [`SteenrodStructure::verify`], in the order
/// they are checked.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Contract {
    /// every `(g·e_i, σ)` with `i ≤ max_i` present and of degree `i + |σ|`
    Completeness,
    /// `Δ_0` is the Alexander–Whitney diagonal
    AlexanderWhitney,
    /// `Δ_k(σ) = η_k σ⊗σ` for `|σ| = k`
    TopIdentity,
    /// `∂ξ(b⊗σ) = ξ(∂b⊗σ) + (-1)^{|b|} ξ(b⊗∂σ)`
    ChainMap,
    /// `ξ(T·b⊗σ) = T ξ(b⊗σ)`
    Equivariance,
    /// compatibility with order-preserving injections
    Naturality,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub contract: Contract,
    pub i: usize,
    pub twisted: bool,
    pub simplex: Simplex,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructureReport {
    pub max_i: usize,
    pub required_max_i: usize,
    pub entries: usize,
    pub pass: bool,
    pub violation: Option<Violation>,
}

fn violation(contract: Contract, g: BarGen, s: &Simplex, detail: impl Into<String>) -> Violation {
    Violation { contract, i: g.n, twisted: g.twisted, simplex: s.clone(), detail: detail.into() }
}

/// Relabels every simplex of every word through a vertex map, dropping
/// words with a collapsed letter.
pub fn push_forward(t: &TensorChain, map: &VertexMap) -> Result<TensorChain> {
    let mut out = TensorChain::zero();
    for (w, c) in t.iter() {
        let mut image = Vec::with_capacity(w.len());
        for s in w {
            let im = map.image(s)?;
            if im.dim() != s.dim() {
                break;
            }
            image.push(im);
        }
        if image.len() == w.len() {
            out.add_term(image, c);
        }
    }
    Ok(out)
}

fn position_map(from: &Simplex, to: &Simplex) -> VertexMap {
    VertexMap::from_pairs(from.vertices().iter().copied().zip(to.vertices().iter().copied()))
}

impl SteenrodStructure {
    /// The reference structure given by the cup-`i` coproducts, for
    /// `i ≤ max_i` (default `2·dim X`).
    pub fn build(x: &OrderedComplex, max_i: Option<usize>) -> Self {
        let max_i = max_i.unwrap_or(2 * x.dim().unwrap_or(0));
        let mut table = HashMap::new();
        for s in x.iter() {
            for i in 0..=max_i {
                let d = higher_diagonal(i, s);
                table.insert((BarGen::te(i), s.clone()), tswap(&d));
                table.insert((BarGen::e(i), s.clone()), d);
            }
        }
        SteenrodStructure { complex: x.clone(), chains: normalized_chains(x), max_i, table }
    }

    pub fn complex(&self) -> &OrderedComplex {
        &self.complex
    }

    pub fn chains(&self) -> &FreeChainComplex<Simplex> {
        &self.chains
    }

    pub fn max_i(&self) -> usize {
        self.max_i
    }

    /// `2·dim X`, the total degree past which `N(X)⊗N(X)` vanishes.
    pub fn degree_bound(&self) -> usize {
        2 * self.complex.dim().unwrap_or(0)
    }

    pub fn entry(&self, g: BarGen, s: &Simplex) -> Result<&TensorChain> {
        if g.n > self.max_i {
            return Err(Error::Truncated { max_i: self.max_i, requested: g.n });
        }
        if !self.complex.contains(s) {
            return Err(Error::UnknownSimplex(s.clone()));
        }
        self.table.get(&(g, s.clone())).ok_or(Error::Truncated { max_i: self.max_i, requested: g.n })
    }

    /// `Δ_i(σ) = ξ(e_i ⊗ σ)`.
    pub fn diagonal(&self, i: usize, s: &Simplex) -> Result<&TensorChain> {
        self.entry(BarGen::e(i), s)
    }

    /// `ξ(b ⊗ c)`, bilinear.
    pub fn xi(&self, b: &BarElement, c: &Chain) -> Result<TensorChain> {
        let mut out = TensorChain::zero();
        for (g, x) in b.iter() {
            for (s, y) in c.iter() {
                out.add_scaled(self.entry(*g, s)?, x * y);
            }
        }
        Ok(out)
    }

    /// Overwrites one table entry, e.g. to inject a fault.
    pub fn set_entry(&mut self, g: BarGen, s: Simplex, value: TensorChain) {
        self.table.insert((g, s), value);
    }

    pub fn remove_entry(&mut self, g: BarGen, s: &Simplex) -> Option<TensorChain> {
        self.table.remove(&(g, s.clone()))
    }

    /// Checks the contract through `i = 2·dim X`.
    pub fn verify(&self) -> StructureReport {
        self.verify_through(self.degree_bound())
    }

    /// Checks the contract exhaustively for `i ≤ required_max_i` and all
    /// simplices, returning the first violation in [`Contract`] order.
    pub fn verify_through(&self, required_max_i: usize) -> StructureReport {
        let violation = self.first_violation(required_max_i);
        StructureReport {
            max_i: self.max_i,
            required_max_i,
            entries: self.table.len(),
            pass: violation.is_none(),
            violation,
        }
    }

    fn simplices(&self) -> Vec<&Simplex> {
        self.complex.lex_ordered()
    }

    fn gens(&self, top: usize) -> impl Iterator<Item = BarGen> {
        (0..=top).flat_map(|i| [BarGen::e(i), BarGen::te(i)])
    }

    fn first_violation(&self, required: usize) -> Option<Violation> {
        let simplices = self.simplices();
        // completeness and degrees
        for s in &simplices {
            for g in self.gens(required) {
                let Some(t) = self.table.get(&(g, (*s).clone())).filter(|_| g.n <= self.max_i) else {
                    return Some(violation(Contract::Completeness, g, s, "missing entry"));
                };
                if t.labels().any(|w| w.len() != 2 || w.iter().map(Simplex::dim).sum::<usize>() != g.n + s.dim()) {
                    return Some(violation(Contract::Completeness, g, s, "entry has the wrong degree or arity"));
                }
            }
        }
        let top = required.min(self.max_i);
        for s in &simplices {
            if self.table[&(BarGen::e(0), (*s).clone())] != aw_diagonal(s) {
                return Some(violation(Contract::AlexanderWhitney, BarGen::e(0), s, "Δ_0 differs from Alexander–Whitney"));
            }
        }
        for s in &simplices {
            let k = s.dim();
            if k <= top {
                let expect = TensorChain::term(vec![(*s).clone(), (*s).clone()], eta(k));
                if self.table[&(BarGen::e(k), (*s).clone())] != expect {
                    return Some(violation(Contract::TopIdentity, BarGen::e(k), s, format!("expected η_{k} = {}", eta(k))));
                }
            }
        }
        let bound = self.degree_bound();
        for s in &simplices {
            for g in self.gens(top) {
                if g.n + s.dim() > bound {
                    continue;
                }
                let b = BarElement::basis(g);
                let c = Chain::basis((*s).clone());
                let lhs = self.chains.tensor_boundary(&self.table[&(g, (*s).clone())]);
                let mut rhs = self.xi(&bar_boundary(&b), &c).expect("entries checked complete");
                rhs.add_scaled(&self.xi(&b, &self.chains.boundary(&c)).expect("entries checked complete"), sign(g.n));
                if lhs != rhs {
                    return Some(violation(Contract::ChainMap, g, s, "∂ξ ≠ ξ∂"));
                }
            }
        }
        for s in &simplices {
            for i in 0..=top {
                if i + s.dim() > bound {
                    continue;
                }
                let plain = &self.table[&(BarGen::e(i), (*s).clone())];
                if self.table[&(BarGen::te(i), (*s).clone())] != tswap(plain) {
                    return Some(violation(Contract::Equivariance, BarGen::te(i), s, "ξ(T·e_i⊗σ) ≠ Tξ(e_i⊗σ)"));
                }
            }
        }
        // every n-simplex is the image of the first one under the unique
        // order-preserving bijection of vertex sets
        let mut reference: BTreeMap<usize, &Simplex> = BTreeMap::new();
        for s in &simplices {
            let r = *reference.entry(s.dim()).or_insert(s);
            let map = position_map(r, s);
            for g in self.gens(top) {
                let moved = push_forward(&self.table[&(g, r.clone())], &map).expect("vertices of a simplex");
                if moved != self.table[&(g, (*s).clone())] {
                    return Some(violation(Contract::Naturality, g, s, format!("differs from the transport of {r:?}")));
                }
            }
        }
        None
    }
}

/// Checks `(θ⊗θ)ξ_X(b⊗σ) = ξ_Y(b⊗θσ)` for an order-preserving injection
/// `θ: X → Y`, over all generators with `i ≤` both truncations and
/// `i + |σ| ≤ 2·dim X`.
pub fn check_naturality(theta: &VertexMap, sx: &SteenrodStructure, sy: &SteenrodStructure) -> Result<Option<Violation>> {
    if !theta.is_injective() || !theta.is_weakly_monotone() || !theta.is_simplicial(sx.complex(), sy.complex()) {
        return Err(Error::InvalidArgument("naturality needs an order-preserving simplicial injection".into()));
    }
    let top = sx.max_i().min(sy.max_i());
    for s in sx.simplices() {
        let image = theta.image(s)?;
        for g in sx.gens(top) {
            if g.n + s.dim() > sx.degree_bound() {
                continue;
            }
            let lhs = push_forward(sx.entry(g, s)?, theta)?;
            if &lhs != sy.entry(g, &image)? {
                return Ok(Some(violation(Contract::Naturality, g, s, format!("transport to {image:?} differs"))));
            }
        }
    }
    Ok(None)
}
