//! Planarity of simple graphs through magic Gram matrices of the dual hypergraph.
//!
//! A simple graph is nonplanar exactly when the valid Gram space of its dual contains a
//! magic matrix. Vertices of degree 0 or 1 are pruned first (repeatedly); they never
//! change planarity and would leave the dual improper.

use std::collections::HashSet;

use serde_json::json;
use thiserror::Error;

use crate::gram::{self, GramError, GramMatrix};
use crate::hypergraph::Hypergraph;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum PlanarityError {
    #[error("edge {0} does not have exactly two endpoints")]
    NotAnEdge(usize),
    #[error("edge {0} is a loop")]
    Loop(usize),
    #[error("edge {0} is repeated")]
    Repeated(usize),
    #[error("dual hypergraph: {0}")]
    Dual(GramError),
}

#[derive(Debug, Clone)]
pub struct PlanarityReport {
    pub planar: bool,
    /// A magic Gram matrix of the dual of the pruned graph; present iff nonplanar.
    pub certificate: Option<GramMatrix>,
    /// Vertices removed by degree pruning (0-based, original labels).
    pub pruned: Vec<usize>,
    /// Edges of the pruned graph, in input order (0-based indices into the input).
    pub core_edges: Vec<usize>,
    pub dual_dimension: usize,
}

impl PlanarityReport {
    #[must_use]
    pub fn to_json_value(&self) -> serde_json::Value {
        json!({
            "planar": self.planar,
            "pruned_vertices": self.pruned.iter().map(|v| v + 1).collect::<Vec<_>>(),
            "core_edges": self.core_edges.iter().map(|e| e + 1).collect::<Vec<_>>(),
            "dual_gram_dimension": self.dual_dimension,
            "certificate": self.certificate.as_ref().map(|g| {
                serde_json::from_str::<serde_json::Value>(&g.to_json()).expect("valid json")
            }),
        })
    }
}

fn check_simple(g: &Hypergraph) -> Result<(), PlanarityError> {
    let mut seen = HashSet::new();
    for (i, e) in g.edges().iter().enumerate() {
        if e.len() != 2 {
            return Err(PlanarityError::NotAnEdge(i + 1));
        }
        if e[0] == e[1] {
            return Err(PlanarityError::Loop(i + 1));
        }
        if !seen.insert((e[0], e[1])) {
            return Err(PlanarityError::Repeated(i + 1));
        }
    }
    Ok(())
}

/// Decides planarity of a simple graph given as a hypergraph with edges of size 2.
pub fn is_planar_via_gram(g: &Hypergraph) -> Result<PlanarityReport, PlanarityError> {
    check_simple(g)?;
    let n = g.vertex_count();
    let mut alive_edges: Vec<bool> = vec![true; g.edge_count()];
    let mut degree = g.degrees();
    let mut removed = vec![false; n];
    let mut stack: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    while let Some(v) = stack.pop() {
        if removed[v] {
            continue;
        }
        removed[v] = true;
        for (i, e) in g.edges().iter().enumerate() {
            if alive_edges[i] && e.contains(&v) {
                alive_edges[i] = false;
                let w = if e[0] == v { e[1] } else { e[0] };
                degree[w] -= 1;
                if degree[w] <= 1 && !removed[w] {
                    stack.push(w);
                }
            }
        }
    }
    let pruned: Vec<usize> = (0..n).filter(|&v| removed[v]).collect();
    let core_edges: Vec<usize> = (0..g.edge_count()).filter(|&i| alive_edges[i]).collect();
    if core_edges.is_empty() {
        return Ok(PlanarityReport {
            planar: true,
            certificate: None,
            pruned,
            core_edges,
            dual_dimension: 0,
        });
    }
    let survivors: Vec<usize> = (0..n).filter(|&v| !removed[v]).collect();
    let mut relabel = vec![usize::MAX; n];
    for (new, &old) in survivors.iter().enumerate() {
        relabel[old] = new;
    }
    let core = Hypergraph::new(
        survivors.len(),
        core_edges
            .iter()
            .map(|&i| g.edge(i).iter().map(|&v| relabel[v]).collect())
            .collect(),
    )
    .expect("relabeled edges are in range");
    let dual = core.dual();
    let space = gram::valid_gram_space(&dual).map_err(PlanarityError::Dual)?;
    let magic = space.magic_affine_space();
    Ok(PlanarityReport {
        planar: magic.is_none(),
        certificate: magic.map(|m| m.offset_matrix()),
        pruned,
        core_edges,
        dual_dimension: space.dimension(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gram::is_magic_gram;
    use crate::hypergraph::parse_edge_list;

    fn complete(n: usize) -> Hypergraph {
        let mut edges = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                edges.push(vec![i, j]);
            }
        }
        Hypergraph::new(n, edges).unwrap()
    }

    fn complete_bipartite(a: usize, b: usize) -> Hypergraph {
        let mut edges = Vec::new();
        for i in 0..a {
            for j in 0..b {
                edges.push(vec![i, a + j]);
            }
        }
        Hypergraph::new(a + b, edges).unwrap()
    }

    #[test]
    fn kuratowski_graphs() {
        let k5 = is_planar_via_gram(&complete(5)).unwrap();
        assert!(!k5.planar);
        let dual = complete(5).dual();
        assert!(is_magic_gram(&dual, k5.certificate.as_ref().unwrap()).unwrap());
        assert!(!is_planar_via_gram(&complete_bipartite(3, 3)).unwrap().planar);
        assert!(is_planar_via_gram(&complete(4)).unwrap().planar);
        assert!(is_planar_via_gram(&complete_bipartite(2, 5)).unwrap().planar);
    }

    #[test]
    fn pruning() {
        let g = parse_edge_list("[[1,2],[2,3],[3,1],[3,4],[4,5]]").unwrap();
        let r = is_planar_via_gram(&g).unwrap();
        assert!(r.planar);
        assert_eq!(r.pruned, vec![3, 4]);
        assert_eq!(r.core_edges, vec![0, 1, 2]);
        let tree = parse_edge_list("[[1,2],[2,3],[2,4]]").unwrap();
        let r = is_planar_via_gram(&tree).unwrap();
        assert!(r.planar && r.core_edges.is_empty());
    }

    #[test]
    fn rejects_non_simple() {
        let g = parse_edge_list("[[1,2,3]]").unwrap();
        assert_eq!(is_planar_via_gram(&g).unwrap_err(), PlanarityError::NotAnEdge(1));
        let g = parse_edge_list("[[1,2],[2,1]]").unwrap();
        assert_eq!(is_planar_via_gram(&g).unwrap_err(), PlanarityError::Repeated(2));
        let g = parse_edge_list("[[1,1]]").unwrap();
        assert_eq!(is_planar_via_gram(&g).unwrap_err(), PlanarityError::Loop(1));
    }

    #[test]
    fn subdivided_k33_and_petersen() {
        let mut g = complete_bipartite(3, 3).edges().to_vec();
        let first = g.remove(0);
        g.push(vec![first[0], 6]);
        g.push(vec![6, first[1]]);
        let h = Hypergraph::new(7, g).unwrap();
        assert!(!is_planar_via_gram(&h).unwrap().planar);
        let petersen = parse_edge_list(
            "[[1,2],[2,3],[3,4],[4,5],[5,1],[1,6],[2,7],[3,8],[4,9],[5,10],[6,8],[8,10],[10,7],[7,9],[9,6]]",
        )
        .unwrap();
        assert!(!is_planar_via_gram(&petersen).unwrap().planar);
    }
}
