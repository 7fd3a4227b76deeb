//! Graph helpers shared by the planarity and acceptance targets.

#![allow(dead_code)]

use std::collections::BTreeSet;

use itertools::Itertools;
use magicsets::hypergraph::Hypergraph;
use magicsets::planarity::is_planar_via_gram;
use rand::Rng;
use rustworkx_core::petgraph::graph::UnGraph;
use rustworkx_core::planar::is_planar;

pub fn oracle(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut g = UnGraph::<(), ()>::with_capacity(n, edges.len());
    let nodes: Vec<_> = (0..n).map(|_| g.add_node(())).collect();
    for &(a, b) in edges {
        g.add_edge(nodes[a], nodes[b], ());
    }
    is_planar(&g)
}

pub fn via_gram(n: usize, edges: &[(usize, usize)]) -> bool {
    let h = Hypergraph::new(n, edges.iter().map(|&(a, b)| vec![a, b]).collect()).unwrap();
    is_planar_via_gram(&h).unwrap().planar
}

fn edges_of(n: usize, adj: &[u32]) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|a| ((a + 1)..n).map(move |b| (a, b)))
        .filter(|&(a, b)| adj[a] >> b & 1 == 1)
        .collect()
}

/// Smallest edge list over relabelings that order vertices by degree.
fn canonical(n: usize, adj: &[u32]) -> Vec<(usize, usize)> {
    let degree: Vec<u32> = adj.iter().map(|r| r.count_ones()).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| degree[v]);
    let groups: Vec<Vec<usize>> = order
        .iter()
        .copied()
        .chunk_by(|&v| degree[v])
        .into_iter()
        .map(|(_, g)| g.collect())
        .collect();
    let choices: Vec<Vec<Vec<usize>>> = groups
        .iter()
        .map(|g| g.iter().copied().permutations(g.len()).collect())
        .collect();
    let mut best: Option<Vec<(usize, usize)>> = None;
    for pick in choices.iter().map(|c| c.iter()).multi_cartesian_product() {
        let mut position = vec![0; n];
        for (new, &old) in pick.into_iter().flatten().enumerate() {
            position[old] = new;
        }
        let mut edges: Vec<(usize, usize)> = edges_of(n, adj)
            .into_iter()
            .map(|(a, b)| {
                let (x, y) = (position[a], position[b]);
                (x.min(y), x.max(y))
            })
            .collect();
        edges.sort_unstable();
        if best.as_ref().is_none_or(|b| edges < *b) {
            best = Some(edges);
        }
    }
    best.unwrap_or_default()
}

pub fn connected(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut stack = vec![0];
    while let Some(v) = stack.pop() {
        for &(a, b) in edges {
            let w = if a == v { b } else if b == v { a } else { continue };
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Isomorphism classes of graphs on `n` vertices, for `n` in `1..=max`.
pub fn graph_classes(max: usize) -> Vec<(usize, Vec<(usize, usize)>)> {
    let mut all = Vec::new();
    let mut level: BTreeSet<Vec<(usize, usize)>> = BTreeSet::from([Vec::new()]);
    all.push((1, Vec::new()));
    for n in 2..=max {
        let mut next = BTreeSet::new();
        for edges in &level {
            for mask in 0u32..(1 << (n - 1)) {
                let mut adj = vec![0u32; n];
                for &(a, b) in edges {
                    adj[a] |= 1 << b;
                    adj[b] |= 1 << a;
                }
                for v in 0..(n - 1) {
                    if mask >> v & 1 == 1 {
                        adj[v] |= 1 << (n - 1);
                        adj[n - 1] |= 1 << v;
                    }
                }
                next.insert(canonical(n, &adj));
            }
        }
        all.extend(next.iter().map(|e| (n, e.clone())));
        level = next;
    }
    all
}

/// Connected isomorphism classes on at most `max` vertices.
pub fn connected_classes(max: usize) -> Vec<(usize, Vec<(usize, usize)>)> {
    graph_classes(max)
        .into_iter()
        .filter(|(n, e)| connected(*n, e))
        .collect()
}

/// A random graph on 8 to 14 vertices.
pub fn random_graph(rng: &mut impl Rng) -> (usize, Vec<(usize, usize)>) {
    let n = rng.gen_range(8..=14);
    let p = rng.gen_range(0.1..0.55);
    let edges = (0..n).tuple_combinations().filter(|_| rng.gen_bool(p)).collect();
    (n, edges)
}
