use std::collections::BTreeMap;
use std::fmt::Debug;
use std::hash::Hash;

use crate::simplicial::{DfSimplex, Simplex};

/// Basis labels carrying a degree.
pub trait Graded {
    fn degree(&self) -> usize;
}

/// Everything usable as a basis label of a free graded module.
pub trait Label: Graded + Clone + Ord + Hash + Debug {}

impl<T: Graded + Clone + Ord + Hash + Debug> Label for T {}

impl Graded for Simplex {
    fn degree(&self) -> usize {
        self.dim()
    }
}

impl Graded for DfSimplex {
    fn degree(&self) -> usize {
        self.dim()
    }
}

/// Tensor labels: the degree of `a_1 ⊗ … ⊗ a_k` is the sum of the degrees.
impl<L: Graded> Graded for Vec<L> {
    fn degree(&self) -> usize {
        self.iter().map(Graded::degree).sum()
    }
}

/// A cell of a delta-complex, addressed by dimension and index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    pub dim: usize,
    pub index: usize,
}

impl Graded for Cell {
    fn degree(&self) -> usize {
        self.dim
    }
}

pub(crate) fn add_checked(a: i64, b: i64) -> i64 {
    a.checked_add(b).expect("integer coefficient overflow")
}

pub(crate) fn mul_checked(a: i64, b: i64) -> i64 {
    a.checked_mul(b).expect("integer coefficient overflow")
}

/// `(-1)^n`.
pub fn sign(n: usize) -> i64 {
    if n % 2 == 0 {
        1
    } else {
        -1
    }
}

/// A finite integer combination of labels. Zero coefficients are never
/// stored, so structural equality is equality of chains.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Combination<L: Ord> {
    terms: BTreeMap<L, i64>,
}

/// A chain of simplices.
pub type Chain = Combination<Simplex>;
/// A combination of tensor words `a_1 ⊗ … ⊗ a_k`.
pub type TensorChain = Combination<Vec<Simplex>>;

impl<L: Ord> Default for Combination<L> {
    fn default() -> Self {
        Combination { terms: BTreeMap::new() }
    }
}

impl<L: Ord + Debug> Debug for Combination<L> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (l, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}·{l:?}")?;
        }
        Ok(())
    }
}

impl<L: Ord + Clone> Combination<L> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(l: L) -> Self {
        Self::term(l, 1)
    }

    pub fn term(l: L, c: i64) -> Self {
        let mut out = Self::zero();
        out.add_term(l, c);
        out
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (L, i64)>) -> Self {
        let mut out = Self::zero();
        for (l, c) in terms {
            out.add_term(l, c);
        }
        out
    }

    pub fn add_term(&mut self, l: L, c: i64) {
        if c == 0 {
            return;
        }
        let entry = self.terms.entry(l.clone()).or_insert(0);
        *entry = add_checked(*entry, c);
        if *entry == 0 {
            self.terms.remove(&l);
        }
    }

    pub fn add_scaled(&mut self, other: &Self, c: i64) {
        for (l, &k) in &other.terms {
            self.add_term(l.clone(), mul_checked(c, k));
        }
    }

    pub fn scaled(&self, c: i64) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, l: &L) -> i64 {
        self.terms.get(l).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&L, i64)> {
        self.terms.iter().map(|(l, &c)| (l, c))
    }

    pub fn labels(&self) -> impl Iterator<Item = &L> {
        self.terms.keys()
    }

    /// Applies a linear map given on labels.
    pub fn map_linear<M: Ord + Clone>(&self, mut f: impl FnMut(&L) -> Combination<M>) -> Combination<M> {
        let mut out = Combination::zero();
        for (l, c) in self.iter() {
            out.add_scaled(&f(l), c);
        }
        out
    }

    /// Reduces every coefficient mod 2.
    pub fn mod2(&self) -> Self {
        Self::from_terms(self.iter().filter(|(_, c)| c % 2 != 0).map(|(l, _)| (l.clone(), 1)))
    }
}

impl<L: Ord + Clone + Graded> Combination<L> {
    /// The common degree of all terms; `None` for zero or inhomogeneous input.
    pub fn degree(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(Graded::degree);
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }
}

impl<L: Ord + Clone> Combination<Vec<L>> {
    /// `self ⊗ other` on concatenated words.
    pub fn tensor(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (a, x) in self.iter() {
            for (b, y) in other.iter() {
                let mut w = a.clone();
                w.extend(b.iter().cloned());
                out.add_term(w, mul_checked(x, y));
            }
        }
        out
    }

    /// Lifts a combination of labels to one-letter words.
    pub fn words(c: &Combination<L>) -> Self {
        Self::from_terms(c.iter().map(|(l, k)| (vec![l.clone()], k)))
    }
}

impl<L: Ord + Clone> std::ops::Add for &Combination<L> {
    type Output = Combination<L>;
    fn add(self, rhs: Self) -> Combination<L> {
        let mut out = self.clone();
        out.add_scaled(rhs, 1);
        out
    }
}

impl<L: Ord + Clone> std::ops::Sub for &Combination<L> {
    type Output = Combination<L>;
    fn sub(self, rhs: Self) -> Combination<L> {
        let mut out = self.clone();
        out.add_scaled(rhs, -1);
        out
    }
}

impl<L: Ord + Clone> std::ops::Neg for &Combination<L> {
    type Output = Combination<L>;
    fn neg(self) -> Combination<L> {
        self.scaled(-1)
    }
}

impl<L: Ord + Clone> FromIterator<(L, i64)> for Combination<L> {
    fn from_iter<I: IntoIterator<Item = (L, i64)>>(iter: I) -> Self {
        Self::from_terms(iter)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_terms_are_dropped() {
        let mut c = Combination::term(1u8, 3);
        c.add_term(1, -3);
        assert!(c.is_zero());
        assert_eq!(c, Combination::zero());
    }

    #[test]
    fn tensor_concatenates() {
        let a: Combination<Vec<u8>> = Combination::from_terms([(vec![1], 2), (vec![2], 1)]);
        let b: Combination<Vec<u8>> = Combination::from_terms([(vec![3], -1)]);
        let t = a.tensor(&b);
        assert_eq!(t.coefficient(&vec![1, 3]), -2);
        assert_eq!(t.coefficient(&vec![2, 3]), -1);
        assert_eq!(t.len(), 2);
    }

    #[test]
    fn degree_of_words() {
        let s = Simplex::standard(1);
        let p = Simplex::standard(0);
        let t = TensorChain::basis(vec![s.clone(), p.clone()]);
        assert_eq!(t.degree(), Some(1));
        let mixed = &t + &TensorChain::basis(vec![s.clone(), s]);
        assert_eq!(mixed.degree(), None);
    }

    #[test]
    #[should_panic(expected = "overflow")]
    fn overflow_is_detected() {
        let mut c = Combination::term(0u8, i64::MAX);
        c.add_term(0, 1);
    }
}
