use crate::chains::{Chain, Combination, Graded, TensorChain};
use crate::error::{Error, Result};
use crate::simplicial::Simplex;
use crate::steenrod::{eta, BarElement, BarGen, SteenrodStructure};

/// Elements of `W^{⊗k}`.
pub type BarWord = Combination<Vec<BarGen>>;

/// `α(c)`: the adjoint of `ξ` at a chain, evaluated lazily on bar elements.
#[derive(Clone, Debug)]
pub struct AlphaHandle<'a> {
    st: &'a SteenrodStructure,
    chain: Chain,
}

impl<'a> AlphaHandle<'a> {
    pub fn new(st: &'a SteenrodStructure, chain: Chain) -> Self {
        AlphaHandle { st, chain }
    }

    /// `α(c)(b) = ξ(b ⊗ c)`.
    pub fn eval(&self, b: &BarElement) -> Result<TensorChain> {
        self.st.xi(b, &self.chain)
    }
}

/// `α_n(c) ∈ H_n(C)`, where `α_n = Hom(1, α_{n-1} ⊗ 1) ∘ α`.
#[derive(Clone, Debug)]
pub struct IteratedAlpha<'a> {
    st: &'a SteenrodStructure,
    chain: Chain,
    arity: usize,
}

/// The value of an element of `H_n(C)` at one bar element: a tensor in
/// `C⊗C` for `n = 2`, otherwise a combination of `α_{n-1}(x) ⊗ y`.
#[derive(Clone, Debug)]
pub enum AlphaValue<'a> {
    Tensor(TensorChain),
    Nested(Vec<(IteratedAlpha<'a>, Simplex, i64)>),
}

impl<'a> IteratedAlpha<'a> {
    pub fn new(st: &'a SteenrodStructure, chain: Chain, arity: usize) -> Result<Self> {
        if arity < 2 {
            return Err(Error::InvalidArgument("iterated structure maps start at arity 2".into()));
        }
        Ok(IteratedAlpha { st, chain, arity })
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn eval(&self, b: &BarElement) -> Result<AlphaValue<'a>> {
        let t = AlphaHandle::new(self.st, self.chain.clone()).eval(b)?;
        if self.arity == 2 {
            return Ok(AlphaValue::Tensor(t));
        }
        let nested = t
            .iter()
            .map(|(w, k)| {
                let inner = IteratedAlpha { st: self.st, chain: Chain::basis(w[0].clone()), arity: self.arity - 1 };
                (inner, w[1].clone(), k)
            })
            .collect();
        Ok(AlphaValue::Nested(nested))
    }

    /// Evaluates the nested homs on `b_1, …, b_{n-1}` in turn, outermost
    /// first.
    pub fn evaluate(&self, inputs: &[BarElement]) -> Result<TensorChain> {
        if inputs.len() + 1 != self.arity {
            return Err(Error::InvalidArgument(format!("arity {} needs {} inputs", self.arity, self.arity - 1)));
        }
        match self.eval(&inputs[0])? {
            AlphaValue::Tensor(t) => Ok(t),
            AlphaValue::Nested(terms) => {
                let mut out = TensorChain::zero();
                for (inner, y, k) in terms {
                    let left = inner.evaluate(&inputs[1..])?;
                    out.add_scaled(&left.tensor(&TensorChain::basis(vec![y])), k);
                }
                Ok(out)
            }
        }
    }
}

/// `β_n: H_n(C) → Hom(W^{⊗(n-1)}, C^{⊗n})` applied to `α_n(c)`, as a
/// closure on bar words; `β_2` is the identity and `β_n = ℓ ∘ Hom(1, β_{n-1} ⊗ 1)`.
pub fn beta<'a>(h: IteratedAlpha<'a>) -> Box<dyn Fn(&BarWord) -> Result<TensorChain> + 'a> {
    Box::new(move |word: &BarWord| {
        let mut out = TensorChain::zero();
        for (w, k) in word.iter() {
            if w.len() + 1 != h.arity {
                return Err(Error::InvalidArgument(format!("bar word {w:?} for arity {}", h.arity)));
            }
            let value = match h.eval(&BarElement::basis(w[0]))? {
                AlphaValue::Tensor(t) => t,
                AlphaValue::Nested(terms) => {
                    let rest = BarWord::basis(w[1..].to_vec());
                    let mut acc = TensorChain::zero();
                    for (inner, y, c) in terms {
                        let left = beta(inner)(&rest)?;
                        acc.add_scaled(&left.tensor(&TensorChain::basis(vec![y])), c);
                    }
                    acc
                }
            };
            out.add_scaled(&value, k);
        }
        Ok(out)
    })
}

/// `ρ_m = (η_m E_{2,m}, η_m² E_{3,m}, …)` truncated at arity `K`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RhoVector {
    pub m: usize,
    pub k_max: usize,
    /// index 0 holds the arity 2 component
    pub components: Vec<BarWord>,
}

impl RhoVector {
    pub fn new(m: usize, k_max: usize) -> Self {
        let e = eta(m);
        let components = (2..=k_max)
            .map(|k| {
                let s = if (k - 1) % 2 == 0 { 1 } else { e };
                BarWord::term(vec![BarGen::e(m); k - 1], s)
            })
            .collect();
        RhoVector { m, k_max, components }
    }

    pub fn component(&self, k: usize) -> &BarWord {
        &self.components[k - 2]
    }
}

/// `Ξ(c)`, truncated: index `k - 1` holds the arity `k` component, and the
/// arity 1 component is `c` itself.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XiImage {
    pub degree: usize,
    pub components: Vec<TensorChain>,
}

impl XiImage {
    pub fn arity(&self, k: usize) -> &TensorChain {
        &self.components[k - 1]
    }

    /// `(c, c⊗c, …)`.
    pub fn of_power(c: &Chain, degree: usize, k_max: usize) -> Self {
        let base = TensorChain::words(c);
        let mut components = vec![base.clone()];
        for _ in 2..=k_max {
            let next = components.last().unwrap().tensor(&base);
            components.push(next);
        }
        XiImage { degree, components }
    }
}

/// `γ_m ∘ A` evaluated on a chain homogeneous of degree `m`, through arity
/// `k_max`.
pub fn xi_iterate(st: &SteenrodStructure, c: &Chain, k_max: usize, m: usize) -> Result<XiImage> {
    if k_max < 2 {
        return Err(Error::InvalidArgument("truncation K must be at least 2".into()));
    }
    if c.labels().any(|s| s.degree() != m) {
        return Err(Error::Inhomogeneous(m));
    }
    let rho = RhoVector::new(m, k_max);
    let mut components = vec![TensorChain::words(c)];
    for k in 2..=k_max {
        let h = IteratedAlpha::new(st, c.clone(), k)?;
        components.push(beta(h)(rho.component(k))?);
    }
    Ok(XiImage { degree: m, components })
}
