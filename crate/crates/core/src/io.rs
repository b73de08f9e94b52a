//! JSON formats for complexes, chain maps and reports.
//!
//! Complexes are `{"vertices": [..], "facets": [[..], ..]}` with the vertex
//! list optional. Chain maps are a list per degree of
//! `[target_simplex, source_simplex, coeff]` triples, either bare or under a
//! `"degrees"` key; generators that are not mentioned map to zero.

use std::collections::BTreeMap;

use serde::Deserialize;
use serde_json::{json, Value};

use crate::chains::{Chain, GradedMap, HomologyGroup, TensorChain};
use crate::error::{Error, Result};
use crate::reconstruct::{ChainMap, EnumeratedMorphism, MorphismVerdict, SeparationReport, SeparationTarget, Witness};
use crate::simplicial::{OrderedComplex, Simplex};
use crate::steenrod::SteenrodStructure;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ComplexFile {
    vertices: Option<Vec<i64>>,
    facets: Vec<Vec<i64>>,
}

pub fn parse_complex(text: &str) -> Result<OrderedComplex> {
    let file: ComplexFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    match file.vertices {
        Some(v) => OrderedComplex::with_vertices(&v, &file.facets),
        None => OrderedComplex::from_facets(&file.facets),
    }
}

pub fn complex_json(x: &OrderedComplex) -> Value {
    json!({ "vertices": x.vertices(), "facets": x.facets() })
}

#[derive(Deserialize)]
#[serde(untagged)]
enum ChainMapFile {
    Bare(Vec<Vec<(Vec<i64>, Vec<i64>, i64)>>),
    Keyed { degrees: Vec<Vec<(Vec<i64>, Vec<i64>, i64)>> },
}

/// Reads a degree-0 chain map `N(A) → N(B)`.
pub fn parse_chain_map(text: &str, a: &OrderedComplex, b: &OrderedComplex) -> Result<ChainMap> {
    let file: ChainMapFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let degrees = match file {
        ChainMapFile::Bare(d) | ChainMapFile::Keyed { degrees: d } => d,
    };
    let mut images: BTreeMap<Simplex, Chain> = a.iter().map(|s| (s.clone(), Chain::zero())).collect();
    for (k, triples) in degrees.into_iter().enumerate() {
        for (t, s, c) in triples {
            let (t, s) = (Simplex::new(t)?, Simplex::new(s)?);
            if s.dim() != k || t.dim() != k {
                return Err(Error::Parse(format!("triple {t:?} <- {s:?} listed under degree {k}")));
            }
            if !b.contains(&t) {
                return Err(Error::UnknownSimplex(t));
            }
            images.get_mut(&s).ok_or(Error::UnknownSimplex(s.clone()))?.add_term(t, c);
        }
    }
    GradedMap::new(0, images)
}

pub fn chain_map_json(f: &ChainMap) -> Value {
    let mut degrees: Vec<Vec<Value>> = Vec::new();
    for (s, img) in f.images() {
        let k = s.dim();
        if degrees.len() <= k {
            degrees.resize(k + 1, Vec::new());
        }
        for (t, c) in img.iter() {
            degrees[k].push(json!([t, s, c]));
        }
    }
    json!(degrees)
}

pub fn chain_json(c: &Chain) -> Value {
    json!(c.iter().map(|(s, k)| json!([k, s])).collect::<Vec<_>>())
}

/// `[[coeff, left, right], ..]` in canonical word order.
pub fn tensor_json(t: &TensorChain) -> Value {
    json!(t.iter().map(|(w, c)| json!([c, w[0], w[1]])).collect::<Vec<_>>())
}

pub fn homology_json(h: &[HomologyGroup]) -> Value {
    json!({ "H": h })
}

/// One JSON line per `(i, σ)` with `Δ_i(σ)`, by `i` and then simplex.
pub fn xi_dump_lines(st: &SteenrodStructure) -> Result<Vec<String>> {
    let mut out = Vec::new();
    for i in 0..=st.max_i() {
        for s in st.complex().iter() {
            let line = json!({ "i": i, "simplex": s, "value": tensor_json(st.diagonal(i, s)?) });
            out.push(line.to_string());
        }
    }
    Ok(out)
}

pub fn witness_json(w: &Witness) -> Value {
    match w {
        Witness::ChainMap { degree, simplex } => json!({ "kind": "chain_map", "degree": degree, "simplex": simplex }),
        Witness::Square { j, simplex, lhs, rhs } => json!({
            "kind": "square",
            "j": j,
            "simplex": simplex,
            "lhs": tensor_json(lhs),
            "rhs": tensor_json(rhs),
        }),
        Witness::Counit { vertex, augmentation } => {
            json!({ "kind": "counit", "vertex": vertex, "augmentation": augmentation })
        }
    }
}

pub fn verdict_json(v: &MorphismVerdict) -> Value {
    match v {
        MorphismVerdict::Morphism(cert) => {
            let mut c = json!({ "vertex_map": cert.vertex_map });
            if let Some((target, surjection)) = &cert.factorisation {
                c["target"] = json!(target);
                c["surjection"] = json!(surjection.values());
            }
            json!({ "status": "morphism", "witness": null, "certificate": c })
        }
        MorphismVerdict::NotMorphism(w) => json!({ "status": "not_morphism", "witness": witness_json(w), "certificate": null }),
        MorphismVerdict::NotChainMap(w) => json!({ "status": "not_chain_map", "witness": witness_json(w), "certificate": null }),
    }
}

pub fn morphism_json(m: &EnumeratedMorphism) -> Value {
    json!({
        "target": m.target,
        "surjection": m.surjection.values(),
        "vertex_map": m.vertex_map,
        "chain_map": chain_map_json(&m.map),
    })
}

pub fn separation_json(r: &SeparationReport) -> Value {
    let counterexample = r.counterexample.as_ref().map(|(target, c)| {
        let target = match target {
            SeparationTarget::Powers => json!("powers"),
            SeparationTarget::SimplexImage(s) => json!({ "simplex": s }),
        };
        json!({ "target": target, "chain": chain_json(c) })
    });
    json!({
        "dim": r.dim,
        "simplices": r.simplices,
        "bound": r.bound,
        "K": r.k_max,
        "nodes": r.nodes,
        "counterexample": counterexample,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reconstruct::{induced_chain_map, is_steenrod_morphism};
    use crate::simplicial::VertexMap;

    #[test]
    fn complex_round_trip() {
        let x = parse_complex(r#"{"facets": [[0,1],[1,2],[0,2]]}"#).unwrap();
        assert_eq!(x, OrderedComplex::simplex_boundary(2));
        assert_eq!(parse_complex(&complex_json(&x).to_string()).unwrap(), x);
        let y = parse_complex(r#"{"vertices": [0,1,7], "facets": [[0,1]]}"#).unwrap();
        assert_eq!(y.vertices(), &[0, 1, 7]);
    }

    #[test]
    fn complex_errors() {
        assert!(matches!(parse_complex("{"), Err(Error::Parse(_))));
        assert!(matches!(parse_complex(r#"{"facets": [[1,0]]}"#), Err(Error::NotIncreasing(_))));
        assert!(matches!(parse_complex(r#"{"facets": [[0,0]]}"#), Err(Error::DuplicateVertex(_))));
        assert!(matches!(parse_complex(r#"{"vertices": [0], "facets": [[0,1]]}"#), Err(Error::UndeclaredVertex(1))));
    }

    #[test]
    fn chain_map_round_trip() {
        let x = OrderedComplex::standard_simplex(2);
        let y = OrderedComplex::standard_simplex(1);
        let f = induced_chain_map(&VertexMap::from_pairs([(0, 0), (1, 1), (2, 1)]), &x, &y).unwrap();
        let text = chain_map_json(&f).to_string();
        assert_eq!(parse_chain_map(&text, &x, &y).unwrap(), f);
        let keyed = json!({ "degrees": chain_map_json(&f) }).to_string();
        assert_eq!(parse_chain_map(&keyed, &x, &y).unwrap(), f);
    }

    #[test]
    fn chain_map_errors() {
        let x = OrderedComplex::standard_simplex(1);
        assert!(matches!(parse_chain_map("[[[[0],[0,1],1]]]", &x, &x), Err(Error::Parse(_))));
        assert!(matches!(parse_chain_map("[[[[5],[0],1]]]", &x, &x), Err(Error::UnknownSimplex(_))));
    }

    #[test]
    fn verdict_format() {
        let x = OrderedComplex::standard_simplex(1);
        let st = SteenrodStructure::build(&x, None);
        let id = GradedMap::identity(x.iter());
        let v = verdict_json(&is_steenrod_morphism(&id, &st, &st).unwrap());
        assert_eq!(v["status"], "morphism");
        assert_eq!(v["certificate"]["surjection"], json!([0, 1]));
        let v = verdict_json(&is_steenrod_morphism(&id.scaled(-1), &st, &st).unwrap());
        assert_eq!(v["status"], "not_morphism");
        assert_eq!(v["witness"]["kind"], "square");
    }

    #[test]
    fn xi_dump_shape() {
        let st = SteenrodStructure::build(&OrderedComplex::standard_simplex(1), None);
        let lines = xi_dump_lines(&st).unwrap();
        assert_eq!(lines.len(), 3 * 3);
        let first: Value = serde_json::from_str(&lines[0]).unwrap();
        assert_eq!(first, json!({ "i": 0, "simplex": [0], "value": [[1, [0], [0]]] }));
    }
}
