use crate::chains::{sign, TensorChain};
use crate::simplicial::Simplex;

/// The Alexander–Whitney diagonal `Σ_p σ[0..p] ⊗ σ[p..n]`.
pub fn aw_diagonal(s: &Simplex) -> TensorChain {
    let n = s.dim();
    TensorChain::from_terms((0..=n).map(|p| (vec![s.front(p), s.back(p)], 1)))
}

fn binom2(k: usize) -> usize {
    k * k.saturating_sub(1) / 2
}

/// All `k`-subsets of `0..n` in lexicographic order.
fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k > n {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut c: Vec<usize> = (0..k).collect();
    loop {
        out.push(c.clone());
        let mut i = k;
        while i > 0 && c[i - 1] == n - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return out;
        }
        c[i - 1] += 1;
        for t in i..k {
            c[t] = c[t - 1] + 1;
        }
    }
}

/// The cup-`i` coproduct `Δ_i(σ)`.
///
/// Terms are indexed by the `(n - i)`-subsets `U = {u_1 < … < u_{n-i}}` of
/// the vertex positions of an `n`-simplex. `U` splits by the parity of
/// `u_j - j`: where it is even `u_j` lies in `U⁰` and is deleted on the left,
/// otherwise in `U¹` and is deleted on the right.
pub fn higher_diagonal(i: usize, s: &Simplex) -> TensorChain {
    let n = s.dim();
    if i > n {
        return TensorChain::zero();
    }
    let mut out = TensorChain::zero();
    for u in subsets(n + 1, n - i) {
        let (mut u0, mut u1) = (Vec::new(), Vec::new());
        for (j, &x) in u.iter().enumerate() {
            if (x + j + 1) % 2 == 0 {
                u0.push(x);
            } else {
                u1.push(x);
            }
        }
        let pi: usize = u0.iter().sum();
        let e = pi + binom2(u0.len() + 1) + u0.len() * u1.len() + i * u1.len() + binom2(i + 1);
        out.add_term(vec![s.delete(&u0), s.delete(&u1)], sign(e));
    }
    out
}

/// `T(a ⊗ b) = (-1)^{|a||b|} b ⊗ a` on arity-two words.
pub fn tswap(t: &TensorChain) -> TensorChain {
    TensorChain::from_terms(t.iter().map(|(w, c)| {
        assert_eq!(w.len(), 2, "swap acts on arity two");
        (vec![w[1].clone(), w[0].clone()], c * sign(w[0].dim() * w[1].dim()))
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::steenrod::eta;

    fn s(v: &[i64]) -> Simplex {
        Simplex::new(v.to_vec()).unwrap()
    }

    #[test]
    fn aw_examples() {
        assert_eq!(aw_diagonal(&s(&[0])), TensorChain::basis(vec![s(&[0]), s(&[0])]));
        assert_eq!(
            aw_diagonal(&s(&[0, 1])),
            TensorChain::from_terms([(vec![s(&[0]), s(&[0, 1])], 1), (vec![s(&[0, 1]), s(&[1])], 1)])
        );
        assert_eq!(
            aw_diagonal(&s(&[0, 1, 2])),
            TensorChain::from_terms([
                (vec![s(&[0]), s(&[0, 1, 2])], 1),
                (vec![s(&[0, 1]), s(&[1, 2])], 1),
                (vec![s(&[0, 1, 2]), s(&[2])], 1)
            ])
        );
    }

    #[test]
    fn zeroth_is_aw() {
        for n in 0..7 {
            let x = Simplex::standard(n);
            assert_eq!(higher_diagonal(0, &x), aw_diagonal(&x));
        }
    }

    #[test]
    fn top_identity() {
        assert!(higher_diagonal(1, &s(&[0])).is_zero());
        for k in 0..8 {
            let x = Simplex::standard(k);
            assert_eq!(higher_diagonal(k, &x), TensorChain::term(vec![x.clone(), x], eta(k)));
        }
        assert_eq!(higher_diagonal(1, &s(&[0, 1])), TensorChain::term(vec![s(&[0, 1]), s(&[0, 1])], -1));
    }

    #[test]
    fn cup_one_on_edge_and_triangle() {
        // familiar cup-1 supports: on [012], Δ_1 = ±[02]⊗[012] ± [012]⊗[01] ± [012]⊗[12]
        let d = higher_diagonal(1, &Simplex::standard(2));
        let support: Vec<Vec<Simplex>> = d.labels().cloned().collect();
        assert_eq!(support.len(), 3);
        assert!(support.contains(&vec![s(&[0, 2]), s(&[0, 1, 2])]));
        assert!(support.contains(&vec![s(&[0, 1, 2]), s(&[0, 1])]));
        assert!(support.contains(&vec![s(&[0, 1, 2]), s(&[1, 2])]));
    }

    #[test]
    fn swap_is_an_involution() {
        let d = higher_diagonal(1, &Simplex::standard(3));
        assert_eq!(tswap(&tswap(&d)), d);
    }
}
