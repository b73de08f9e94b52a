use std::collections::BTreeMap;

use super::combination::{sign, Combination, Label};
use crate::error::{Error, Result};

/// A homogeneous linear map between free graded modules, stored by its value
/// on every basis label of the domain (zero images included, so the domain
/// is explicit).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GradedMap<S: Label, T: Label> {
    degree: i64,
    images: BTreeMap<S, Combination<T>>,
}

impl<S: Label, T: Label> GradedMap<S, T> {
    /// Checks that every image is homogeneous of degree `|s| + degree`.
    pub fn new(degree: i64, images: BTreeMap<S, Combination<T>>) -> Result<Self> {
        for (s, img) in &images {
            if let Some(t) = img.labels().find(|t| t.degree() as i64 != s.degree() as i64 + degree) {
                return Err(Error::ShapeMismatch(format!(
                    "map of degree {degree} sends {s:?} to {t:?}"
                )));
            }
        }
        Ok(GradedMap { degree, images })
    }

    pub fn from_fn<'a>(degree: i64, domain: impl IntoIterator<Item = &'a S>, f: impl Fn(&S) -> Combination<T>) -> Result<Self>
    where
        S: 'a,
    {
        Self::new(degree, domain.into_iter().map(|s| (s.clone(), f(s))).collect())
    }

    pub fn zero<'a>(degree: i64, domain: impl IntoIterator<Item = &'a S>) -> Self
    where
        S: 'a,
    {
        GradedMap { degree, images: domain.into_iter().map(|s| (s.clone(), Combination::zero())).collect() }
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn domain(&self) -> impl Iterator<Item = &S> {
        self.images.keys()
    }

    pub fn image(&self, s: &S) -> Option<&Combination<T>> {
        self.images.get(s)
    }

    pub fn images(&self) -> impl Iterator<Item = (&S, &Combination<T>)> {
        self.images.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.images.values().all(Combination::is_zero)
    }

    /// Evaluates on a chain; labels outside the domain are an error.
    pub fn apply(&self, c: &Combination<S>) -> Result<Combination<T>> {
        let mut out = Combination::zero();
        for (s, k) in c.iter() {
            let img = self
                .images
                .get(s)
                .ok_or_else(|| Error::ShapeMismatch(format!("{s:?} is outside the domain")))?;
            out.add_scaled(img, k);
        }
        Ok(out)
    }

    /// `self ∘ inner`.
    pub fn compose<R: Label>(&self, inner: &GradedMap<R, S>) -> Result<GradedMap<R, T>> {
        let mut images = BTreeMap::new();
        for (r, img) in &inner.images {
            images.insert(r.clone(), self.apply(img)?);
        }
        Ok(GradedMap { degree: self.degree + inner.degree, images })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.add_scaled(other, 1)
    }

    pub fn add_scaled(&self, other: &Self, c: i64) -> Result<Self> {
        if self.degree != other.degree || !self.images.keys().eq(other.images.keys()) {
            return Err(Error::ShapeMismatch("sum of maps with different shapes".into()));
        }
        let images = self
            .images
            .iter()
            .map(|(s, a)| {
                let mut a = a.clone();
                a.add_scaled(&other.images[s], c);
                (s.clone(), a)
            })
            .collect();
        Ok(GradedMap { degree: self.degree, images })
    }

    /// Replaces the image of one domain label.
    pub(crate) fn set_image(&mut self, s: &S, img: Combination<T>) {
        *self.images.get_mut(s).expect("label in domain") = img;
    }

    pub fn scaled(&self, c: i64) -> Self {
        GradedMap { degree: self.degree, images: self.images.iter().map(|(s, a)| (s.clone(), a.scaled(c))).collect() }
    }

    /// The same map on one-letter tensor words, ready for [`koszul_tensor`].
    pub fn on_words(&self) -> GradedMap<Vec<S>, Vec<T>> {
        GradedMap {
            degree: self.degree,
            images: self.images.iter().map(|(s, a)| (vec![s.clone()], Combination::words(a))).collect(),
        }
    }
}

impl<S: Label> GradedMap<S, S> {
    pub fn identity<'a>(domain: impl IntoIterator<Item = &'a S>) -> Self
    where
        S: 'a,
    {
        GradedMap {
            degree: 0,
            images: domain.into_iter().map(|s| (s.clone(), Combination::basis(s.clone()))).collect(),
        }
    }
}

fn word_degree<L: Label>(w: &[L]) -> usize {
    w.iter().map(|l| l.degree()).sum()
}

/// `(f ⊗ g)(a ⊗ b) = (-1)^{|g||a|} f(a) ⊗ g(b)`, on words split after the
/// length of `f`'s domain words.
pub fn koszul_tensor<S: Label, T: Label>(
    f: &GradedMap<Vec<S>, Vec<T>>,
    g: &GradedMap<Vec<S>, Vec<T>>,
) -> Result<GradedMap<Vec<S>, Vec<T>>> {
    let gdeg = g.degree.rem_euclid(2) as usize;
    let mut images = BTreeMap::new();
    for (a, fa) in &f.images {
        let s = sign(gdeg * word_degree(a));
        for (b, gb) in &g.images {
            let mut w = a.clone();
            w.extend(b.iter().cloned());
            images.insert(w, fa.tensor(gb).scaled(s));
        }
    }
    let degree = f.degree + g.degree;
    GradedMap::new(degree, images)
}

/// `∂f = f ∘ ∂_A - (-1)^{deg f} ∂_B ∘ f`.
pub fn hom_differential<S: Label, T: Label>(
    f: &GradedMap<S, T>,
    boundary_a: &GradedMap<S, S>,
    boundary_b: &GradedMap<T, T>,
) -> Result<GradedMap<S, T>> {
    let left = f.compose(boundary_a)?;
    let right = boundary_b.compose(f)?;
    let s = if f.degree.rem_euclid(2) == 0 { 1 } else { -1 };
    left.add_scaled(&right, -s)
}
