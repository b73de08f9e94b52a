use super::morphism::{check_at, induced_chain_map, is_steenrod_morphism, ChainMap, MorphismVerdict};
use crate::chains::{Chain, GradedMap};
use crate::error::{Error, Result};
use crate::simplicial::{simplicial_maps, OrderedComplex, Simplex, Surjection, VertexMap};
use crate::steenrod::SteenrodStructure;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// induce from weakly order-preserving vertex maps and verify each
    Guided,
    /// search every chain map with coefficients in `-bound..=bound`
    Brute,
}

pub const BRUTE_MAX_SOURCE_VERTICES: usize = 4;
pub const BRUTE_MAX_TARGET_VERTICES: usize = 6;
pub const BRUTE_MAX_CANDIDATES: u64 = 4_000_000;

/// A Steenrod morphism `N(Δⁿ) → N(X)` with the simplex of `X` it factors
/// through.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumeratedMorphism {
    pub map: ChainMap,
    pub vertex_map: VertexMap,
    pub target: Simplex,
    pub surjection: Surjection,
}

/// All Steenrod morphisms `N(Δⁿ) → N(X)`, ordered by target simplex
/// (lexicographically on vertex lists) and then by surjection.
pub fn enumerate_morphisms(n: usize, sx: &SteenrodStructure, mode: Mode, bound: i64) -> Result<Vec<EnumeratedMorphism>> {
    let source = OrderedComplex::standard_simplex(n);
    let ss = SteenrodStructure::build(&source, None);
    let maps = match mode {
        Mode::Guided => simplicial_maps(n, sx.complex())
            .iter()
            .map(|theta| induced_chain_map(theta, &source, sx.complex()))
            .collect::<Result<Vec<_>>>()?,
        Mode::Brute => brute(&ss, sx, bound)?,
    };
    let mut out = Vec::with_capacity(maps.len());
    for map in maps {
        match is_steenrod_morphism(&map, &ss, sx)? {
            MorphismVerdict::Morphism(cert) => {
                let (target, surjection) = cert.factorisation.expect("standard source");
                out.push(EnumeratedMorphism { map, vertex_map: cert.vertex_map, target, surjection });
            }
            v if mode == Mode::Guided => {
                return Err(Error::Invariant(format!("induced map is not a Steenrod morphism: {v:?}")));
            }
            // brute candidates already passed the local checks
            v => return Err(Error::Invariant(format!("brute candidate rejected: {v:?}"))),
        }
    }
    out.sort_by(|a, b| (&a.target, &a.surjection).cmp(&(&b.target, &b.surjection)));
    Ok(out)
}

fn brute(ss: &SteenrodStructure, sx: &SteenrodStructure, bound: i64) -> Result<Vec<ChainMap>> {
    let (source, target) = (ss.complex(), sx.complex());
    if source.vertices().len() > BRUTE_MAX_SOURCE_VERTICES {
        return Err(Error::SizeLimit(format!(
            "brute search allows {BRUTE_MAX_SOURCE_VERTICES} source vertices, got {}",
            source.vertices().len()
        )));
    }
    if target.vertices().len() > BRUTE_MAX_TARGET_VERTICES {
        return Err(Error::SizeLimit(format!(
            "brute search allows {BRUTE_MAX_TARGET_VERTICES} target vertices, got {}",
            target.vertices().len()
        )));
    }
    if bound < 0 {
        return Err(Error::InvalidArgument("coefficient bound must be nonnegative".into()));
    }
    for k in 0..=source.dim().unwrap_or(0) {
        let per = (2 * bound as u64 + 1).checked_pow(target.simplices(k).len() as u32);
        if per.map_or(true, |p| p > BRUTE_MAX_CANDIDATES) {
            return Err(Error::SizeLimit(format!(
                "{} candidate images per {k}-simplex exceed {BRUTE_MAX_CANDIDATES}",
                per.map_or("too many".to_string(), |p| p.to_string())
            )));
        }
    }
    let order: Vec<Simplex> = source.iter().cloned().collect();
    let mut f = GradedMap::zero(0, source.iter());
    let mut out = Vec::new();
    search(0, &order, &mut f, ss, sx, bound, &mut out)?;
    Ok(out)
}

/// Assigns images simplex by simplex, faces first, keeping only partial
/// maps whose local conditions hold.
fn search(
    depth: usize,
    order: &[Simplex],
    f: &mut ChainMap,
    ss: &SteenrodStructure,
    sx: &SteenrodStructure,
    bound: i64,
    out: &mut Vec<ChainMap>,
) -> Result<()> {
    let Some(s) = order.get(depth) else {
        out.push(f.clone());
        return Ok(());
    };
    let basis = sx.complex().simplices(s.dim());
    let mut coeffs = vec![-bound; basis.len()];
    loop {
        f.set_image(s, Chain::from_terms(basis.iter().cloned().zip(coeffs.iter().copied())));
        if check_at(f, ss, sx, s)?.is_none() {
            search(depth + 1, order, f, ss, sx, bound, out)?;
        }
        // odometer over {-bound..bound}^basis
        let mut i = 0;
        while i < coeffs.len() && coeffs[i] == bound {
            coeffs[i] = -bound;
            i += 1;
        }
        if i == coeffs.len() {
            break;
        }
        coeffs[i] += 1;
    }
    f.set_image(s, Chain::zero());
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binom(n: usize, k: usize) -> usize {
        if k > n {
            return 0;
        }
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    fn df_count(n: usize, x: &OrderedComplex) -> usize {
        x.f_vector().iter().enumerate().map(|(k, &c)| binom(n, k) * c).sum()
    }

    #[test]
    fn point_has_one_morphism_per_dimension() {
        let sp = SteenrodStructure::build(&OrderedComplex::standard_simplex(0), None);
        for n in 0..4 {
            assert_eq!(enumerate_morphisms(n, &sp, Mode::Guided, 2).unwrap().len(), 1);
        }
        assert_eq!(enumerate_morphisms(0, &sp, Mode::Brute, 2).unwrap().len(), 1);
    }

    #[test]
    fn circle_edges() {
        let sx = SteenrodStructure::build(&OrderedComplex::simplex_boundary(2), None);
        let guided = enumerate_morphisms(1, &sx, Mode::Guided, 2).unwrap();
        assert_eq!(guided.len(), 6);
        assert_eq!(enumerate_morphisms(1, &sx, Mode::Brute, 2).unwrap(), guided);
    }

    #[test]
    fn brute_matches_guided_on_small_targets() {
        for x in [OrderedComplex::standard_simplex(1), OrderedComplex::standard_simplex(2)] {
            let sx = SteenrodStructure::build(&x, None);
            for n in 0..=2 {
                let guided = enumerate_morphisms(n, &sx, Mode::Guided, 2).unwrap();
                assert_eq!(guided.len(), df_count(n, &x));
                assert_eq!(enumerate_morphisms(n, &sx, Mode::Brute, 2).unwrap(), guided, "n={n}");
            }
        }
    }

    #[test]
    fn ordering_is_canonical() {
        let sx = SteenrodStructure::build(&OrderedComplex::standard_simplex(2), None);
        let all = enumerate_morphisms(2, &sx, Mode::Guided, 2).unwrap();
        let keys: Vec<_> = all.iter().map(|m| (m.target.clone(), m.surjection.clone())).collect();
        assert!(keys.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(keys[0].0.vertices(), &[0]);
    }

    #[test]
    fn brute_size_limits() {
        let sx = SteenrodStructure::build(&OrderedComplex::standard_simplex(1), None);
        assert!(matches!(enumerate_morphisms(4, &sx, Mode::Brute, 2), Err(Error::SizeLimit(_))));
        let big = SteenrodStructure::build(&OrderedComplex::standard_simplex(6), Some(0));
        assert!(matches!(enumerate_morphisms(0, &big, Mode::Brute, 2), Err(Error::SizeLimit(_))));
    }
}
