use std::fmt;

use crate::chains::{sign, Combination, Graded};

/// A generator `g·e_n` of the bar resolution `W`, with `g = T` when
/// `twisted`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BarGen {
    pub twisted: bool,
    pub n: usize,
}

impl BarGen {
    pub fn e(n: usize) -> Self {
        BarGen { twisted: false, n }
    }

    pub fn te(n: usize) -> Self {
        BarGen { twisted: true, n }
    }

    pub fn act_t(self) -> Self {
        BarGen { twisted: !self.twisted, n: self.n }
    }
}

impl Graded for BarGen {
    fn degree(&self) -> usize {
        self.n
    }
}

impl fmt::Debug for BarGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.twisted {
            write!(f, "T·e{}", self.n)
        } else {
            write!(f, "e{}", self.n)
        }
    }
}

/// An element of `W = RS_2`.
pub type BarElement = Combination<BarGen>;

/// `∂e_n = ((-1)^{n+1} - T)·e_{n-1}`, extended `T`-linearly.
pub fn bar_boundary(b: &BarElement) -> BarElement {
    b.map_linear(|g| {
        if g.n == 0 {
            return BarElement::zero();
        }
        let plain = BarGen { twisted: g.twisted, n: g.n - 1 };
        BarElement::from_terms([(plain, -sign(g.n)), (plain.act_t(), -1)])
    })
}

pub fn act_t(b: &BarElement) -> BarElement {
    b.map_linear(|g| BarElement::basis(g.act_t()))
}

/// The augmentation `W → Z`, `g·e_0 ↦ 1`.
pub fn augmentation(b: &BarElement) -> i64 {
    b.iter().filter(|(g, _)| g.n == 0).map(|(_, c)| c).sum()
}

/// `η_k = (-1)^{k(k+1)/2}`.
pub fn eta(k: usize) -> i64 {
    sign(k * (k + 1) / 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn low_degrees() {
        assert!(bar_boundary(&BarElement::basis(BarGen::e(0))).is_zero());
        assert_eq!(
            bar_boundary(&BarElement::basis(BarGen::e(1))),
            BarElement::from_terms([(BarGen::e(0), 1), (BarGen::te(0), -1)])
        );
        assert_eq!(
            bar_boundary(&BarElement::basis(BarGen::e(2))),
            BarElement::from_terms([(BarGen::e(1), -1), (BarGen::te(1), -1)])
        );
    }

    #[test]
    fn boundary_squares_to_zero_and_commutes_with_t() {
        for n in 0..8 {
            for twisted in [false, true] {
                let b = BarElement::basis(BarGen { twisted, n });
                assert!(bar_boundary(&bar_boundary(&b)).is_zero(), "n={n}");
                assert_eq!(bar_boundary(&act_t(&b)), act_t(&bar_boundary(&b)));
            }
        }
    }

    #[test]
    fn augmentation_kills_boundaries() {
        assert_eq!(augmentation(&BarElement::basis(BarGen::te(0))), 1);
        assert_eq!(augmentation(&bar_boundary(&BarElement::basis(BarGen::e(1)))), 0);
    }

    #[test]
    fn eta_table() {
        assert_eq!([eta(1), eta(2), eta(3), eta(4), eta(5), eta(6)], [-1, -1, 1, 1, -1, -1]);
        assert_eq!(eta(0), 1);
    }
}
