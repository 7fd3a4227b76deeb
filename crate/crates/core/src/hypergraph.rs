//! Hypergraphs of measurement contexts.
//!
//! Vertices are stored 0-based; every text and JSON format uses 1-based indices.
//! Each edge is kept as a sorted multiset, and the order of the edge list is
//! significant: it indexes sign vectors and incidence-matrix columns.

use std::collections::hash_map::DefaultHasher;
use std::collections::{BTreeMap, HashMap};
use std::hash::{Hash, Hasher};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::gf2::BitMatrix;

#[derive(Debug, Error)]
pub enum HypergraphError {
    #[error("malformed edge list: {0}")]
    Parse(String),
    #[error("vertex indices are 1-based; found {0}")]
    NonPositiveIndex(i64),
    #[error("vertex {vertex} is out of range for {vertex_count} vertices")]
    IndexOutOfRange { vertex: usize, vertex_count: usize },
    #[error("edge {edge} contains vertex {vertex} more than once")]
    RepeatedVertex { edge: usize, vertex: usize },
    #[error("{count} labels given for {vertex_count} vertices")]
    LabelCount { count: usize, vertex_count: usize },
    #[error("invalid hypergraph JSON: {0}")]
    Json(#[from] serde_json::Error),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    vertex_count: usize,
    edges: Vec<Vec<usize>>,
    labels: Option<Vec<String>>,
    name: Option<String>,
}

/// On-disk JSON layout, 1-based.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct HypergraphFile {
    pub vertices: usize,
    pub edges: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl Hypergraph {
    /// Builds a hypergraph from 0-based edges. Edges are sorted internally.
    pub fn new(vertex_count: usize, edges: Vec<Vec<usize>>) -> Result<Self, HypergraphError> {
        let mut edges = edges;
        for edge in &mut edges {
            if let Some(&v) = edge.iter().find(|&&v| v >= vertex_count) {
                return Err(HypergraphError::IndexOutOfRange {
                    vertex: v + 1,
                    vertex_count,
                });
            }
            edge.sort_unstable();
        }
        Ok(Self {
            vertex_count,
            edges,
            labels: None,
            name: None,
        })
    }

    /// Builds a hypergraph from 1-based edges. The vertex count defaults to the largest index.
    pub fn from_one_based(
        vertex_count: Option<usize>,
        edges: &[Vec<usize>],
    ) -> Result<Self, HypergraphError> {
        if edges.iter().flatten().any(|&v| v == 0) {
            return Err(HypergraphError::NonPositiveIndex(0));
        }
        let max = edges.iter().flatten().copied().max().unwrap_or(0);
        let count = vertex_count.unwrap_or(max);
        let zero_based = edges
            .iter()
            .map(|e| e.iter().map(|&v| v - 1).collect())
            .collect();
        Self::new(count, zero_based)
    }

    #[must_use]
    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, HypergraphError> {
        if labels.len() != self.vertex_count {
            return Err(HypergraphError::LabelCount {
                count: labels.len(),
                vertex_count: self.vertex_count,
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    #[must_use]
    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    #[must_use]
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    #[must_use]
    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    #[must_use]
    pub fn edge(&self, i: usize) -> &[usize] {
        &self.edges[i]
    }

    #[must_use]
    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    #[must_use]
    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Degree of each vertex, counting multiplicity.
    #[must_use]
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertex_count];
        for &v in self.edges.iter().flatten() {
            deg[v] += 1;
        }
        deg
    }

    /// Total number of vertex occurrences across all edges.
    #[must_use]
    pub fn total_edge_size(&self) -> usize {
        self.edges.iter().map(Vec::len).sum()
    }

    /// Edges sorted lexicographically; equal for hypergraphs with the same edge multiset.
    #[must_use]
    pub fn canonical_edges(&self) -> Vec<Vec<usize>> {
        let mut edges = self.edges.clone();
        edges.sort();
        edges
    }

    /// `adjacent[i]` holds every `j != i` sharing an edge with `i`.
    #[must_use]
    pub fn cocontextual(&self) -> BitMatrix {
        let mut m = BitMatrix::zeros(self.vertex_count, self.vertex_count);
        for edge in &self.edges {
            for &u in edge {
                for &v in edge {
                    if u != v {
                        m.set(u, v, true);
                    }
                }
            }
        }
        m
    }

    /// Concatenation of all edges in stored order.
    pub fn occurrences(&self) -> impl Iterator<Item = usize> + '_ {
        self.edges.iter().flatten().copied()
    }

    /// Proper-Eulerian check with per-condition diagnostics.
    #[must_use]
    pub fn is_proper_eulerian(&self) -> (bool, Diagnostics) {
        let diagnostics = Diagnostics::of(self);
        (diagnostics.is_proper_eulerian(), diagnostics)
    }

    /// Vertex × edge incidence matrix over GF(2).
    pub fn incidence_matrix(&self) -> Result<BitMatrix, HypergraphError> {
        let mut m = BitMatrix::zeros(self.vertex_count, self.edges.len());
        for (j, edge) in self.edges.iter().enumerate() {
            for w in edge.windows(2) {
                if w[0] == w[1] {
                    return Err(HypergraphError::RepeatedVertex {
                        edge: j + 1,
                        vertex: w[0] + 1,
                    });
                }
            }
            for &v in edge {
                m.set(v, j, true);
            }
        }
        Ok(m)
    }

    /// The dual: one vertex per edge, one edge per vertex listing the edges containing it.
    #[must_use]
    pub fn dual(&self) -> Hypergraph {
        let mut stars = vec![Vec::new(); self.vertex_count];
        for (j, edge) in self.edges.iter().enumerate() {
            for &v in edge {
                stars[v].push(j);
            }
        }
        Hypergraph::new(self.edges.len(), stars).expect("edge indices are in range")
    }

    #[must_use]
    pub fn degree_profile(&self) -> DegreeProfile {
        let mut degrees = BTreeMap::new();
        for d in self.degrees() {
            *degrees.entry(d).or_insert(0) += 1;
        }
        let mut edge_sizes = BTreeMap::new();
        for e in &self.edges {
            *edge_sizes.entry(e.len()).or_insert(0) += 1;
        }
        DegreeProfile {
            degrees,
            edge_sizes,
        }
    }

    /// Edge list in the bracketed 1-based text format.
    #[must_use]
    pub fn to_edge_list(&self) -> String {
        let edges: Vec<String> = self
            .edges
            .iter()
            .map(|e| {
                let items: Vec<String> = e.iter().map(|v| (v + 1).to_string()).collect();
                format!("[{}]", items.join(", "))
            })
            .collect();
        format!("[{}]", edges.join(", "))
    }

    #[must_use]
    pub fn to_file(&self) -> HypergraphFile {
        HypergraphFile {
            vertices: self.vertex_count,
            edges: self
                .edges
                .iter()
                .map(|e| e.iter().map(|v| v + 1).collect())
                .collect(),
            name: self.name.clone(),
            labels: self.labels.clone(),
        }
    }

    pub fn from_file(file: HypergraphFile) -> Result<Self, HypergraphError> {
        let mut h = Self::from_one_based(Some(file.vertices), &file.edges)?;
        h.name = file.name;
        if let Some(labels) = file.labels {
            h = h.with_labels(labels)?;
        }
        Ok(h)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("hypergraph serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, HypergraphError> {
        Self::from_file(serde_json::from_str(text)?)
    }

    /// Accepts either the JSON document or a bare bracketed edge list.
    pub fn parse_any(text: &str) -> Result<Self, HypergraphError> {
        if text.trim_start().starts_with('{') {
            Self::from_json(text)
        } else {
            parse_edge_list(text)
        }
    }

    /// Relabels vertices by `map[old] = new` into a hypergraph on `vertex_count` vertices.
    pub fn relabel(&self, vertex_count: usize, map: &[usize]) -> Result<Self, HypergraphError> {
        let edges = self
            .edges
            .iter()
            .map(|e| e.iter().map(|&v| map[v]).collect())
            .collect();
        Self::new(vertex_count, edges)
    }

    /// A vertex bijection `map[v] = w` carrying the edges of `self` onto those of `other`.
    #[must_use]
    pub fn isomorphism(&self, other: &Hypergraph) -> Option<Vec<usize>> {
        if self.vertex_count != other.vertex_count || self.edges.len() != other.edges.len() {
            return None;
        }
        let pair = [self, other];
        let incident = [incidence_lists(self), incidence_lists(other)];
        let target = other.canonical_edges();
        let start = [vec![0; self.vertex_count], vec![0; other.vertex_count]];
        individualize(&pair, &incident, &target, start)
    }

    #[must_use]
    pub fn is_isomorphic(&self, other: &Hypergraph) -> bool {
        self.isomorphism(other).is_some()
    }

    /// A labeling-independent hash: isomorphic hypergraphs hash equal.
    #[must_use]
    pub fn invariant_hash(&self) -> u64 {
        let digest = |items: &mut Vec<u64>, seed: u64| {
            items.sort_unstable();
            let mut hasher = DefaultHasher::new();
            seed.hash(&mut hasher);
            items.hash(&mut hasher);
            hasher.finish()
        };
        let incident = incidence_lists(self);
        let mut vc: Vec<u64> = self.degrees().iter().map(|&d| d as u64).collect();
        let mut ec: Vec<u64> = self.edges.iter().map(|e| e.len() as u64).collect();
        for _ in 0..4 {
            ec = self
                .edges
                .iter()
                .zip(&ec)
                .map(|(e, &c)| digest(&mut e.iter().map(|&v| vc[v]).collect(), c))
                .collect();
            vc = incident
                .iter()
                .zip(&vc)
                .map(|(es, &c)| digest(&mut es.iter().map(|&e| ec[e]).collect(), c))
                .collect();
        }
        let mut all = vc;
        all.push(u64::MAX);
        all.extend(ec);
        digest(&mut all, self.vertex_count as u64)
    }
}

fn incidence_lists(h: &Hypergraph) -> Vec<Vec<usize>> {
    let mut lists = vec![Vec::new(); h.vertex_count];
    for (i, e) in h.edges.iter().enumerate() {
        for &v in e {
            if lists[v].last() != Some(&i) {
                lists[v].push(i);
            }
        }
    }
    lists
}

/// Colour refinement on both incidence structures with a shared palette, starting from the
/// given vertex colours. `None` once the colour histograms differ.
fn refine(pair: &[&Hypergraph; 2], incident: &[Vec<Vec<usize>>; 2], mut colours: [Vec<usize>; 2]) -> Option<[Vec<usize>; 2]> {
    let histogram = |c: &[usize], size: usize| {
        let mut h = vec![0usize; size];
        for &x in c {
            h[x] += 1;
        }
        h
    };
    let mut classes = 0;
    loop {
        let mut edge_palette: HashMap<Vec<usize>, usize> = HashMap::new();
        let mut edge_colours = [Vec::new(), Vec::new()];
        for k in 0..2 {
            for e in &pair[k].edges {
                let mut sig: Vec<usize> = e.iter().map(|&v| colours[k][v]).collect();
                sig.sort_unstable();
                let len = edge_palette.len();
                edge_colours[k].push(*edge_palette.entry(sig).or_insert(len));
            }
        }
        let mut palette: HashMap<(usize, Vec<usize>), usize> = HashMap::new();
        let mut next = [Vec::new(), Vec::new()];
        for k in 0..2 {
            for (v, es) in incident[k].iter().enumerate() {
                let mut sig: Vec<usize> = es.iter().map(|&e| edge_colours[k][e]).collect();
                sig.sort_unstable();
                let len = palette.len();
                next[k].push(*palette.entry((colours[k][v], sig)).or_insert(len));
            }
        }
        let (pv, pe) = (palette.len(), edge_palette.len());
        if histogram(&next[0], pv) != histogram(&next[1], pv)
            || histogram(&edge_colours[0], pe) != histogram(&edge_colours[1], pe)
        {
            return None;
        }
        colours = next;
        if pv == classes {
            return Some(colours);
        }
        classes = pv;
    }
}

/// Individualization-refinement search for an isomorphism between `pair[0]` and `pair[1]`.
fn individualize(
    pair: &[&Hypergraph; 2],
    incident: &[Vec<Vec<usize>>; 2],
    target: &[Vec<usize>],
    colours: [Vec<usize>; 2],
) -> Option<Vec<usize>> {
    let colours = refine(pair, incident, colours)?;
    let n = colours[0].len();
    let mut size: HashMap<usize, usize> = HashMap::new();
    for &c in &colours[0] {
        *size.entry(c).or_insert(0) += 1;
    }
    let branch = (0..n)
        .filter(|&v| size[&colours[0][v]] > 1)
        .min_by_key(|&v| (size[&colours[0][v]], v));
    let Some(v) = branch else {
        let mut position: HashMap<usize, usize> = HashMap::new();
        for (w, &c) in colours[1].iter().enumerate() {
            position.insert(c, w);
        }
        let map: Vec<usize> = colours[0].iter().map(|c| position[c]).collect();
        let mut edges: Vec<Vec<usize>> = pair[0]
            .edges
            .iter()
            .map(|e| {
                let mut f: Vec<usize> = e.iter().map(|&u| map[u]).collect();
                f.sort_unstable();
                f
            })
            .collect();
        edges.sort();
        return (edges == target).then_some(map);
    };
    let fresh = n.max(colours[1].len()) + size.len();
    for w in (0..n).filter(|&w| colours[1][w] == colours[0][v]) {
        let mut next = colours.clone();
        next[0][v] = fresh;
        next[1][w] = fresh;
        if let Some(map) = individualize(pair, incident, target, next) {
            return Some(map);
        }
    }
    None
}

impl fmt::Display for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_edge_list())
    }
}

/// Parses the bracketed list-of-lists format, e.g. `[[1, 2, 22, 28], [1, 5, 17, 31]]`.
pub fn parse_edge_list(text: &str) -> Result<Hypergraph, HypergraphError> {
    parse_edge_list_with_count(text, None)
}

/// Like [`parse_edge_list`], but with an explicit vertex count for trailing isolated vertices.
pub fn parse_edge_list_with_count(
    text: &str,
    vertex_count: Option<usize>,
) -> Result<Hypergraph, HypergraphError> {
    let raw: Vec<Vec<i64>> =
        serde_json::from_str(text.trim()).map_err(|e| HypergraphError::Parse(e.to_string()))?;
    let mut edges = Vec::with_capacity(raw.len());
    for edge in raw {
        let mut out = Vec::with_capacity(edge.len());
        for v in edge {
            if v <= 0 {
                return Err(HypergraphError::NonPositiveIndex(v));
            }
            out.push(v as usize);
        }
        edges.push(out);
    }
    Hypergraph::from_one_based(vertex_count, &edges)
}

/// Per-vertex and per-edge facts behind the proper-Eulerian decision. Indices are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Diagnostics {
    pub degrees: Vec<usize>,
    pub odd_degree_vertices: Vec<usize>,
    pub isolated_vertices: Vec<usize>,
    pub empty_edges: Vec<usize>,
    /// Pairs of edges with equal vertex multisets.
    pub duplicate_edges: Vec<(usize, usize)>,
    pub edges_with_repeated_vertices: Vec<usize>,
}

impl Diagnostics {
    #[must_use]
    pub fn of(h: &Hypergraph) -> Self {
        let degrees = h.degrees();
        let odd_degree_vertices = (0..h.vertex_count)
            .filter(|&v| degrees[v] % 2 == 1)
            .map(|v| v + 1)
            .collect();
        let isolated_vertices = (0..h.vertex_count)
            .filter(|&v| degrees[v] == 0)
            .map(|v| v + 1)
            .collect();
        let empty_edges = (0..h.edges.len())
            .filter(|&j| h.edges[j].is_empty())
            .map(|j| j + 1)
            .collect();
        let mut first_seen: HashMap<&[usize], usize> = HashMap::new();
        let mut duplicate_edges = Vec::new();
        for (j, e) in h.edges.iter().enumerate() {
            match first_seen.get(e.as_slice()) {
                Some(&i) => duplicate_edges.push((i + 1, j + 1)),
                None => {
                    first_seen.insert(e, j);
                }
            }
        }
        let edges_with_repeated_vertices = (0..h.edges.len())
            .filter(|&j| h.edges[j].windows(2).any(|w| w[0] == w[1]))
            .map(|j| j + 1)
            .collect();
        Self {
            degrees,
            odd_degree_vertices,
            isolated_vertices,
            empty_edges,
            duplicate_edges,
            edges_with_repeated_vertices,
        }
    }

    #[must_use]
    pub fn is_proper_eulerian(&self) -> bool {
        self.odd_degree_vertices.is_empty()
            && self.isolated_vertices.is_empty()
            && self.empty_edges.is_empty()
            && self.duplicate_edges.is_empty()
            && self.edges_with_repeated_vertices.is_empty()
    }

    /// Human-readable list of the failed conditions.
    #[must_use]
    pub fn problems(&self) -> Vec<String> {
        let mut out = Vec::new();
        if !self.odd_degree_vertices.is_empty() {
            out.push(format!("odd-degree vertices {:?}", self.odd_degree_vertices));
        }
        if !self.isolated_vertices.is_empty() {
            out.push(format!("isolated vertices {:?}", self.isolated_vertices));
        }
        if !self.empty_edges.is_empty() {
            out.push(format!("empty edges {:?}", self.empty_edges));
        }
        if !self.duplicate_edges.is_empty() {
            out.push(format!("duplicate edges {:?}", self.duplicate_edges));
        }
        if !self.edges_with_repeated_vertices.is_empty() {
            out.push(format!(
                "edges with a repeated vertex {:?}",
                self.edges_with_repeated_vertices
            ));
        }
        out
    }
}

/// Histograms of vertex degrees and edge sizes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeProfile {
    /// degree → number of vertices
    pub degrees: BTreeMap<usize, usize>,
    /// edge size → number of edges
    pub edge_sizes: BTreeMap<usize, usize>,
}

fn histogram_string(h: &BTreeMap<usize, usize>) -> String {
    h.iter()
        .map(|(value, count)| format!("{count}_{value}"))
        .collect::<Vec<_>>()
        .join(" + ")
}

impl DegreeProfile {
    /// Observables column, e.g. `30_4 + 5_8`.
    #[must_use]
    pub fn observables(&self) -> String {
        histogram_string(&self.degrees)
    }

    /// Contexts column, e.g. `3_3 + 14_4 + 19_5`.
    #[must_use]
    pub fn contexts(&self) -> String {
        histogram_string(&self.edge_sizes)
    }
}
