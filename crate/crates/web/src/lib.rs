//! Browser bindings: analyse a hypergraph, reduce it to a minimal descendant, test planarity.
//!
//! Every export takes text and returns a JSON string; failures come back as `{"error": ...}`.

use magicsets::assign::assignment_from_gram;
use magicsets::bound::{noncontextual_bound_capped, render_decimal};
use magicsets::dataset;
use magicsets::gf2::DEFAULT_COSET_CAP;
use magicsets::gram::{magic_affine_space, DEFAULT_ENUMERATION_CAP};
use magicsets::hypergraph::Hypergraph;
use magicsets::planarity::is_planar_via_gram;
use magicsets::reduce::reduce_with;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Reductions attempted before the chain is cut short.
const CHAIN_LIMIT: usize = 64;

fn parse(text: &str) -> Result<Hypergraph, String> {
    let text = text.trim();
    match text.strip_prefix('@') {
        Some(name) => dataset::load(name).map(|e| e.hypergraph).map_err(|e| e.to_string()),
        None => Hypergraph::parse_any(text).map_err(|e| e.to_string()),
    }
}

fn one_based(h: &Hypergraph) -> Vec<Vec<usize>> {
    h.edges().iter().map(|e| e.iter().map(|v| v + 1).collect()).collect()
}

fn summary(h: &Hypergraph) -> Value {
    let profile = h.degree_profile();
    json!({
        "vertices": h.vertex_count(),
        "edges": h.edge_count(),
        "observables": profile.observables(),
        "contexts": profile.contexts(),
    })
}

pub fn analyze_value(text: &str) -> Result<Value, String> {
    let h = parse(text)?;
    let mut report = summary(&h);
    let (proper, diagnostics) = h.is_proper_eulerian();
    report["proper_eulerian"] = json!(proper);
    if !proper {
        report["problems"] = json!(diagnostics.problems());
        return Ok(report);
    }
    let Some(magic) = magic_affine_space(&h).map_err(|e| e.to_string())? else {
        report["magic"] = json!(false);
        return Ok(report);
    };
    report["magic"] = json!(true);
    report["magic_dimension"] = json!(magic.dimension());
    report["minimal"] = json!(magic.find_reducible().is_none());
    let mq = magic.min_qubits(DEFAULT_ENUMERATION_CAP);
    report["min_qubits"] = json!(mq.qubits);
    report["min_qubits_exact"] = json!(mq.exact);
    let g = magic.space().to_matrix(&mq.witness);
    if let Ok(a) = assignment_from_gram(&h, &g, mq.qubits) {
        let signs = a.context_signs(&h);
        report["assignment"] = json!(a.ops().iter().map(|p| p.decode()).collect::<Vec<_>>());
        report["negative_contexts"] = json!(signs.iter_ones().map(|i| i + 1).collect::<Vec<_>>());
        if let Ok(b) = noncontextual_bound_capped(&h, &signs, DEFAULT_COSET_CAP) {
            report["bound"] = json!({
                "b": b.b,
                "Q": b.q,
                "epsilon": b.epsilon.to_string(),
                "epsilon_decimal": render_decimal(&b.epsilon, 3),
                "exact": b.exact,
            });
        }
    }
    Ok(report)
}

/// Reduces along the first reducible magic Gram matrix until the result is minimal.
pub fn reduce_chain_value(text: &str) -> Result<Value, String> {
    let mut h = parse(text)?;
    let mut steps = vec![summary(&h)];
    let mut minimal = false;
    for _ in 0..CHAIN_LIMIT {
        let Some(magic) = magic_affine_space(&h).map_err(|e| e.to_string())? else {
            return Err("not magic; nothing to reduce".into());
        };
        let Some((_, x)) = magic.find_reducible() else {
            minimal = true;
            break;
        };
        let trace = reduce_with(&h, &magic.space().to_matrix(&x)).map_err(|e| e.to_string())?;
        h = trace.output;
        steps.push(summary(&h));
    }
    Ok(json!({
        "steps": steps,
        "minimal": minimal,
        "result": one_based(&h),
    }))
}

pub fn planarity_value(text: &str) -> Result<Value, String> {
    let g = parse(text)?;
    is_planar_via_gram(&g).map(|r| r.to_json_value()).map_err(|e| e.to_string())
}

/// Bundled entries with their edge lists, for the example picker.
pub fn datasets_value() -> Value {
    let entries: Vec<Value> = dataset::names()
        .into_iter()
        .filter_map(|name| dataset::load(name).ok())
        .map(|e| json!({"name": e.name, "edges": e.hypergraph.to_edge_list()}))
        .collect();
    json!(entries)
}

fn render(result: Result<Value, String>) -> String {
    result.unwrap_or_else(|e| json!({"error": e})).to_string()
}

#[wasm_bindgen]
pub fn analyze(text: &str) -> String {
    render(analyze_value(text))
}

#[wasm_bindgen]
pub fn reduce_chain(text: &str) -> String {
    render(reduce_chain_value(text))
}

#[wasm_bindgen]
pub fn planarity(text: &str) -> String {
    render(planarity_value(text))
}

#[wasm_bindgen]
pub fn datasets() -> String {
    datasets_value().to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_analysis() {
        let r = analyze_value("@square").unwrap();
        assert_eq!(r["magic"], true);
        assert_eq!(r["min_qubits"], 2);
        assert_eq!(r["bound"]["b"], 4);
        assert_eq!(r["assignment"].as_array().unwrap().len(), 9);
    }

    #[test]
    fn non_eulerian_input() {
        let r = analyze_value("[[1,2,3],[1,2]]").unwrap();
        assert_eq!(r["proper_eulerian"], false);
        assert!(analyze("[[1,").contains("error"));
    }

    #[test]
    fn chain_ends_minimal() {
        let r = reduce_chain_value("@HD").unwrap();
        assert_eq!(r["minimal"], true);
        let last = r["steps"].as_array().unwrap().last().unwrap().clone();
        assert!(last["vertices"].as_u64().unwrap() < 45);
        let again = analyze_value(&serde_json::to_string(&r["result"]).unwrap()).unwrap();
        assert_eq!(again["minimal"], true);
    }

    #[test]
    fn planarity_of_k5_and_k4() {
        let k5 = "[[1,2],[1,3],[1,4],[1,5],[2,3],[2,4],[2,5],[3,4],[3,5],[4,5]]";
        assert_eq!(planarity_value(k5).unwrap()["planar"], false);
        let k4 = "[[1,2],[1,3],[1,4],[2,3],[2,4],[3,4]]";
        assert_eq!(planarity_value(k4).unwrap()["planar"], true);
        assert!(planarity("[[1,2,3]]").contains("error"));
    }

    #[test]
    fn datasets_listed() {
        assert_eq!(datasets_value().as_array().unwrap().len(), dataset::names().len());
    }
}
