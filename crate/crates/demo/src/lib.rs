//! WebAssembly bindings for the static page in `www/`.
//!
//! Every export returns a JSON string; failures surface as JS exceptions.

use rank1_lower::cubature::Rank1Lattice;
use rank1_lower::format::{parse_lower_set, write_lower_set};
use rank1_lower::index_sets::{
    make_block, make_cross, make_hyperbolic, make_simplex_by_cardinality, make_simplex_iso, Weights,
};
use rank1_lower::search::{
    cbc_search, exhaustive_search, lower_bound, two_step_search, upper_bound, Algorithm,
};
use rank1_lower::{check_direct, LatticeConfig, LowerSet, MultiIndex, Plan};
use serde::Serialize;
use wasm_bindgen::prelude::*;

/// Largest modulus whose nodes are sent to the page.
pub const MAX_NODES: u64 = 20_000;

#[derive(Serialize)]
struct SetView {
    dim: usize,
    card: usize,
    card_mirror: usize,
    members: Vec<Vec<u32>>,
    maximal: Vec<Vec<u32>>,
    text: String,
}

#[derive(Serialize)]
struct SearchView {
    n: u64,
    z: Vec<i64>,
    plan: String,
    algo: String,
    lower_bound: u64,
    upper_bound: u64,
    admissible: bool,
    elapsed_ms: f64,
}

#[derive(Serialize)]
struct NodesView {
    n: u64,
    points: Vec<Vec<f64>>,
    cosine: Vec<Vec<f64>>,
}

fn json<T: Serialize>(value: &T) -> Result<String, String> {
    serde_json::to_string(value).map_err(|e| e.to_string())
}

fn err(e: impl ToString) -> String {
    e.to_string()
}

fn coords(k: &MultiIndex) -> Vec<u32> {
    k.coords().to_vec()
}

fn family_set(family: &str, dim: usize, size: u32, weights: &str) -> Result<LowerSet, String> {
    let set = match family {
        "simplex" => make_simplex_iso(dim, size),
        "block" => make_block(&MultiIndex::new(vec![size; dim])),
        "cross" => make_cross(&MultiIndex::new(vec![size; dim])),
        "hyperbolic" => make_hyperbolic(dim, size),
        "simplex-card" => {
            make_simplex_by_cardinality(&weights.parse::<Weights>().map_err(err)?, size as usize)
        }
        other => return Err(format!("unknown family `{other}`")),
    };
    set.map_err(err)
}

/// Members, maximal elements and the text form of a family member.
pub fn index_set_json(
    family: &str,
    dim: usize,
    size: u32,
    weights: &str,
) -> Result<String, String> {
    let set = family_set(family, dim, size, weights)?;
    json(&SetView {
        dim: set.dim(),
        card: set.len(),
        card_mirror: set.mirror_cardinality(),
        members: set.iter().map(coords).collect(),
        maximal: set.maximal_elements().iter().map(coords).collect(),
        text: write_lower_set(&set),
    })
}

/// Searches a lattice for a set given in the text format.
pub fn search_json(set_text: &str, plan: &str, algo: &str) -> Result<String, String> {
    let set = parse_lower_set(set_text).map_err(err)?;
    let plan: Plan = plan.parse().map_err(err)?;
    let algo: Algorithm = algo.parse().map_err(err)?;
    let lo = lower_bound(set.members(), plan);
    let hi = upper_bound(&set, plan).map_err(err)?.max(lo);
    let r = match algo {
        Algorithm::Exhaustive => exhaustive_search(set.members(), plan, lo, hi),
        Algorithm::Cbc => cbc_search(&set, plan, lo),
        Algorithm::TwoStep => two_step_search(&set, plan, lo, false),
    }
    .map_err(err)?;
    let admissible = check_direct(set.members(), &r.config(), plan).map_err(err)?;
    json(&SearchView {
        n: r.n,
        z: r.z.clone(),
        plan: plan.to_string(),
        algo: algo.to_string(),
        lower_bound: lo,
        upper_bound: hi,
        admissible,
        elapsed_ms: r.elapsed_ms,
    })
}

/// Raw nodes in `[0, 1)^d` and their cosine images in `[−1, 1]^d`.
pub fn nodes_json(n: u64, z: &[i64]) -> Result<String, String> {
    if n > MAX_NODES {
        return Err(format!("n = {n} exceeds the display limit {MAX_NODES}"));
    }
    let lattice = Rank1Lattice::new(LatticeConfig::new(n, z.to_vec()).map_err(err)?);
    let nodes = lattice.nodes();
    json(&NodesView {
        n,
        points: nodes.iter().map(|p| p.to_f64()).collect(),
        cosine: nodes.iter().map(|p| p.cosine_point()).collect(),
    })
}

#[wasm_bindgen]
pub fn index_set_view(
    family: &str,
    dim: usize,
    size: u32,
    weights: &str,
) -> Result<String, JsError> {
    index_set_json(family, dim, size, weights).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn search_lattice(set_text: &str, plan: &str, algo: &str) -> Result<String, JsError> {
    search_json(set_text, plan, algo).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn lattice_nodes(n: u64, z: &[i64]) -> Result<String, JsError> {
    nodes_json(n, z).map_err(|e| JsError::new(&e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::Value;

    fn parse(text: &str) -> Value {
        serde_json::from_str(text).unwrap()
    }

    #[test]
    fn set_view() {
        let v = parse(&index_set_json("simplex", 2, 1, "").unwrap());
        assert_eq!(v["card"], 3);
        assert_eq!(v["card_mirror"], 5);
        assert_eq!(v["members"], serde_json::json!([[0, 0], [0, 1], [1, 0]]));
        assert_eq!(v["text"], "d 2\n0 0\n0 1\n1 0\n");
        let v = parse(&index_set_json("simplex-card", 3, 40, "0.9,0.8,0.7").unwrap());
        assert_eq!(v["card"], 40);
        assert!(index_set_json("tetrahedron", 2, 1, "").is_err());
        assert!(index_set_json("simplex-card", 3, 4, "0.9,0").is_err());
    }

    #[test]
    fn search_view() {
        let v = parse(&search_json("d 2\n0 0\n0 1\n1 0\n", "A", "exhaustive").unwrap());
        assert_eq!(v["n"], 5);
        assert_eq!(v["admissible"], true);
        assert_eq!(v["lower_bound"], 5);
        for algo in ["cbc", "two-step"] {
            let v = parse(&search_json("d 2\n0 0\n0 1\n1 0\n1 1\n", "B", algo).unwrap());
            assert_eq!(v["admissible"], true, "{algo}");
        }
        assert!(search_json("d 2\n0 0\n2 0\n", "A", "cbc").is_err());
        assert!(search_json("d 2\n0 0\n", "Z", "cbc").is_err());
    }

    #[test]
    fn nodes_view() {
        let v = parse(&nodes_json(5, &[1, 3]).unwrap());
        assert_eq!(v["points"][2], serde_json::json!([0.4, 0.2]));
        assert_eq!(v["cosine"][0], serde_json::json!([1.0, 1.0]));
        assert_eq!(v["points"].as_array().unwrap().len(), 5);
        assert!(nodes_json(0, &[1]).is_err());
        assert!(nodes_json(MAX_NODES + 1, &[1]).is_err());
    }
}
