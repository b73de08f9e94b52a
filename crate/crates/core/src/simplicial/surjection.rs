use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An order-preserving surjection `[m] ↠ [n]`, encoded canonically by the
/// sorted set of positions `j ∈ 1..=m` with `θ(j) = θ(j - 1)`.
///
/// There are `binom(m, n)` such surjections and the derived ordering on the
/// encoding is the canonical enumeration order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Surjection {
    source: usize,
    repeats: Vec<usize>,
}

impl Surjection {
    pub fn identity(n: usize) -> Self {
        Surjection { source: n, repeats: Vec::new() }
    }

    pub fn new(source: usize, mut repeats: Vec<usize>) -> Result<Self> {
        repeats.sort_unstable();
        repeats.dedup();
        if repeats.iter().any(|&p| p == 0 || p > source) {
            return Err(Error::InvalidArgument(format!(
                "repeat positions {repeats:?} out of range for source {source}"
            )));
        }
        Ok(Surjection { source, repeats })
    }

    /// Decodes a value vector `[θ(0), …, θ(m)]`.
    pub fn from_values(values: &[usize]) -> Result<Self> {
        if values.first() != Some(&0) {
            return Err(Error::InvalidArgument("surjection must start at 0".into()));
        }
        let mut repeats = Vec::new();
        for j in 1..values.len() {
            match values[j].checked_sub(values[j - 1]) {
                Some(0) => repeats.push(j),
                Some(1) => {}
                _ => {
                    return Err(Error::InvalidArgument(format!(
                        "{values:?} is not an order-preserving surjection"
                    )))
                }
            }
        }
        Ok(Surjection { source: values.len() - 1, repeats })
    }

    /// All surjections `[m] ↠ [n]` in canonical order.
    pub fn all(m: usize, n: usize) -> Vec<Surjection> {
        if n > m {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut combo: Vec<usize> = (1..=m - n).collect();
        loop {
            out.push(Surjection { source: m, repeats: combo.clone() });
            // next (m - n)-subset of 1..=m in lexicographic order
            let k = combo.len();
            let mut i = k;
            while i > 0 && combo[i - 1] == m - (k - i) {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            combo[i - 1] += 1;
            for t in i..k {
                combo[t] = combo[t - 1] + 1;
            }
        }
        out
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn target(&self) -> usize {
        self.source - self.repeats.len()
    }

    pub fn repeats(&self) -> &[usize] {
        &self.repeats
    }

    pub fn is_identity(&self) -> bool {
        self.repeats.is_empty()
    }

    pub fn values(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.source + 1);
        let mut t = 0;
        let mut r = self.repeats.iter().peekable();
        for j in 0..=self.source {
            if j > 0 {
                if r.peek() == Some(&&j) {
                    r.next();
                } else {
                    t += 1;
                }
            }
            out.push(t);
        }
        out
    }

    /// `θ ∘ δ_i` factored as `δ_t ∘ θ'`: returns `θ'` and the target vertex
    /// `t` dropped from the image, if any.
    pub fn after_coface(&self, i: usize) -> (Surjection, Option<usize>) {
        assert!(self.source >= 1 && i <= self.source);
        let mut vals = self.values();
        let removed = vals.remove(i);
        let still_hit = vals.contains(&removed);
        if still_hit {
            (Surjection::from_values(&vals).expect("composite stays surjective"), None)
        } else {
            for v in &mut vals {
                if *v > removed {
                    *v -= 1;
                }
            }
            (Surjection::from_values(&vals).expect("corestriction is surjective"), Some(removed))
        }
    }

    /// `θ ∘ σ_i` where `σ_i: [m+1] ↠ [m]` repeats `i`.
    pub fn after_codegeneracy(&self, i: usize) -> Surjection {
        assert!(i <= self.source);
        let mut vals = self.values();
        vals.insert(i, vals[i]);
        Surjection::from_values(&vals).expect("composite of surjections")
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &Surjection) -> Surjection {
        assert_eq!(inner.target(), self.source);
        let outer = self.values();
        let vals: Vec<usize> = inner.values().into_iter().map(|t| outer[t]).collect();
        Surjection::from_values(&vals).expect("composite of surjections")
    }
}

impl fmt::Debug for Surjection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}↠{}]{:?}", self.source, self.target(), self.repeats)
    }
}
