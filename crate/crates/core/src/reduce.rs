//! Reduction of non-minimal proper Eulerian hypergraphs along reducible magic Gram matrices.
//!
//! Zero-row vertices are deleted, vertices with identical rows are identified, vertex
//! multiplicities inside each edge and edge multiplicities are taken mod 2, and empty
//! edges are dropped. Recipes replay the same steps from an explicit vertex map.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::gf2::{BitMatrix, BitVec};
use crate::gram::{self, is_magic_gram, is_reduced, GramError, GramMatrix, MagicSpace};
use crate::hypergraph::{Hypergraph, HypergraphError};

#[derive(Debug, Error)]
pub enum ReduceError {
    #[error(transparent)]
    Gram(#[from] GramError),
    #[error(transparent)]
    Hypergraph(#[from] HypergraphError),
    #[error("Gram matrix is already reduced")]
    AlreadyReduced,
    #[error("Gram matrix is not magic")]
    NotMagic,
    #[error("inconsistent recipe: {0}")]
    InconsistentRecipe(String),
    #[error("malformed recipe: {0}")]
    Malformed(String),
    #[error("reduction produced an invalid result: {0}")]
    Inconsistent(String),
}

/// Vertices to delete and a partition of the survivors into new vertices. 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ReductionRecipe {
    pub deleted: BTreeSet<usize>,
    /// `identify[n]` lists the preimages of new vertex `n`; `None` keeps every survivor.
    pub identify: Option<Vec<Vec<usize>>>,
    pub notes: Option<String>,
}

#[derive(Debug, Serialize, Deserialize)]
struct RecipeFile {
    #[serde(default)]
    delete: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    identify: Option<BTreeMap<String, Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    notes: Option<String>,
}

impl ReductionRecipe {
    /// Parses `{"delete": [..], "identify": {"1": [..], ..}}` with 1-based vertices.
    pub fn from_json(text: &str) -> Result<Self, ReduceError> {
        let file: RecipeFile =
            serde_json::from_str(text).map_err(|e| ReduceError::Malformed(e.to_string()))?;
        Self::from_value(file)
    }

    pub fn from_json_value(value: serde_json::Value) -> Result<Self, ReduceError> {
        let file: RecipeFile =
            serde_json::from_value(value).map_err(|e| ReduceError::Malformed(e.to_string()))?;
        Self::from_value(file)
    }

    fn from_value(file: RecipeFile) -> Result<Self, ReduceError> {
        let zero_based = |v: usize| {
            v.checked_sub(1)
                .ok_or_else(|| ReduceError::Malformed("vertex indices start at 1".into()))
        };
        let deleted = file
            .delete
            .iter()
            .map(|&v| zero_based(v))
            .collect::<Result<BTreeSet<_>, _>>()?;
        let identify = match file.identify {
            None => None,
            Some(map) => {
                let mut by_id = BTreeMap::new();
                for (key, pre) in map {
                    let id: usize = key
                        .trim()
                        .parse()
                        .ok()
                        .filter(|&i| i > 0)
                        .ok_or_else(|| ReduceError::Malformed(format!("bad vertex id {key:?}")))?;
                    let pre = pre.iter().map(|&v| zero_based(v)).collect::<Result<Vec<_>, _>>()?;
                    by_id.insert(id, pre);
                }
                if by_id.keys().copied().ne(1..=by_id.len()) {
                    return Err(ReduceError::Malformed(
                        "new vertex ids must be 1..N without gaps".into(),
                    ));
                }
                Some(by_id.into_values().collect())
            }
        };
        Ok(Self {
            deleted,
            identify,
            notes: file.notes,
        })
    }

    #[must_use]
    pub fn to_json(&self) -> String {
        let file = RecipeFile {
            delete: self.deleted.iter().map(|v| v + 1).collect(),
            identify: self.identify.as_ref().map(|classes| {
                classes
                    .iter()
                    .enumerate()
                    .map(|(i, c)| ((i + 1).to_string(), c.iter().map(|v| v + 1).collect()))
                    .collect()
            }),
            notes: self.notes.clone(),
        };
        serde_json::to_string(&file).expect("recipe serializes")
    }

    /// Vertex map `old → Some(new)` after checking the recipe against `vertex_count`.
    fn vertex_map(&self, vertex_count: usize) -> Result<(Vec<Option<usize>>, usize), ReduceError> {
        if let Some(&v) = self.deleted.iter().find(|&&v| v >= vertex_count) {
            return Err(ReduceError::InconsistentRecipe(format!(
                "deleted vertex {} does not exist",
                v + 1
            )));
        }
        let mut map: Vec<Option<usize>> = vec![None; vertex_count];
        match &self.identify {
            None => {
                let mut next = 0;
                for (v, slot) in map.iter_mut().enumerate() {
                    if !self.deleted.contains(&v) {
                        *slot = Some(next);
                        next += 1;
                    }
                }
                Ok((map, next))
            }
            Some(classes) => {
                for (n, class) in classes.iter().enumerate() {
                    if class.is_empty() {
                        return Err(ReduceError::InconsistentRecipe(format!(
                            "new vertex {} has no preimage",
                            n + 1
                        )));
                    }
                    for &v in class {
                        if v >= vertex_count {
                            return Err(ReduceError::InconsistentRecipe(format!(
                                "vertex {} does not exist",
                                v + 1
                            )));
                        }
                        if self.deleted.contains(&v) {
                            return Err(ReduceError::InconsistentRecipe(format!(
                                "vertex {} is both deleted and identified",
                                v + 1
                            )));
                        }
                        if let Some(prev) = map[v] {
                            return Err(ReduceError::InconsistentRecipe(format!(
                                "vertex {} is a preimage of both {} and {}",
                                v + 1,
                                prev + 1,
                                n + 1
                            )));
                        }
                        map[v] = Some(n);
                    }
                }
                if let Some(v) = (0..vertex_count).find(|&v| map[v].is_none() && !self.deleted.contains(&v)) {
                    return Err(ReduceError::InconsistentRecipe(format!(
                        "vertex {} is neither deleted nor identified",
                        v + 1
                    )));
                }
                Ok((map, classes.len()))
            }
        }
    }
}

/// Edge lists (0-based) after each step of a reduction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionSteps {
    /// Original labels, deleted vertices removed from every edge.
    pub after_deletion: Vec<Vec<usize>>,
    /// New labels, with repeats.
    pub after_identification: Vec<Vec<usize>>,
    pub after_vertex_parity: Vec<Vec<usize>>,
    pub after_edge_parity: Vec<Vec<usize>>,
    pub after_empty_removal: Vec<Vec<usize>>,
    /// New labels left without any incidence; removed from the output, which is renumbered
    /// in order over the remaining labels.
    pub isolated_removed: Vec<usize>,
}

/// Output of [`reduce_with`].
#[derive(Debug, Clone)]
pub struct ReductionTrace {
    pub input: Hypergraph,
    pub gram: GramMatrix,
    pub recipe: ReductionRecipe,
    pub steps: ReductionSteps,
    pub output: Hypergraph,
    /// Gram matrix restricted to class representatives, magic for `output`.
    pub reduced_gram: GramMatrix,
}

fn count_mod_two(edge: &[usize]) -> Vec<usize> {
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for &v in edge {
        *counts.entry(v).or_insert(0) += 1;
    }
    counts
        .into_iter()
        .filter(|&(_, c)| c % 2 == 1)
        .map(|(v, _)| v)
        .collect()
}

fn replay(h: &Hypergraph, recipe: &ReductionRecipe) -> Result<(ReductionSteps, Hypergraph), ReduceError> {
    let (map, new_count) = recipe.vertex_map(h.vertex_count())?;
    let after_deletion: Vec<Vec<usize>> = h
        .edges()
        .iter()
        .map(|e| e.iter().copied().filter(|v| !recipe.deleted.contains(v)).collect())
        .collect();
    let after_identification: Vec<Vec<usize>> = after_deletion
        .iter()
        .map(|e| {
            let mut mapped: Vec<usize> = e.iter().map(|&v| map[v].expect("survivor")).collect();
            mapped.sort_unstable();
            mapped
        })
        .collect();
    let after_vertex_parity: Vec<Vec<usize>> =
        after_identification.iter().map(|e| count_mod_two(e)).collect();
    let mut counts: HashMap<&[usize], usize> = HashMap::new();
    for e in &after_vertex_parity {
        *counts.entry(e.as_slice()).or_insert(0) += 1;
    }
    let mut kept: HashSet<&[usize]> = HashSet::new();
    let after_edge_parity: Vec<Vec<usize>> = after_vertex_parity
        .iter()
        .filter(|e| counts[e.as_slice()] % 2 == 1 && kept.insert(e.as_slice()))
        .cloned()
        .collect();
    let after_empty_removal: Vec<Vec<usize>> = after_edge_parity
        .iter()
        .filter(|e| !e.is_empty())
        .cloned()
        .collect();
    let mut used = vec![false; new_count];
    for &v in after_empty_removal.iter().flatten() {
        used[v] = true;
    }
    let isolated_removed: Vec<usize> = (0..new_count).filter(|&v| !used[v]).collect();
    let mut compact = vec![usize::MAX; new_count];
    let mut next = 0;
    for v in (0..new_count).filter(|&v| used[v]) {
        compact[v] = next;
        next += 1;
    }
    let output_edges = after_empty_removal
        .iter()
        .map(|e| e.iter().map(|&v| compact[v]).collect())
        .collect();
    let output = Hypergraph::new(next, output_edges)?;
    Ok((
        ReductionSteps {
            after_deletion,
            after_identification,
            after_vertex_parity,
            after_edge_parity,
            after_empty_removal,
            isolated_removed,
        },
        output,
    ))
}

/// Replays a recipe: delete, identify, then the mod-2 steps.
pub fn apply_recipe(h: &Hypergraph, recipe: &ReductionRecipe) -> Result<Hypergraph, ReduceError> {
    replay(h, recipe).map(|(_, out)| out)
}

/// Recipe induced by a Gram matrix: zero rows deleted, equal rows identified.
///
/// New vertices are numbered by the smallest original index in each class.
#[must_use]
pub fn recipe_from_gram(g: &GramMatrix) -> ReductionRecipe {
    let mut deleted = BTreeSet::new();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut by_row: HashMap<&BitVec, usize> = HashMap::new();
    for i in 0..g.size() {
        let row = g.row(i);
        if row.is_zero() {
            deleted.insert(i);
            continue;
        }
        match by_row.get(row) {
            Some(&c) => classes[c].push(i),
            None => {
                by_row.insert(row, classes.len());
                classes.push(vec![i]);
            }
        }
    }
    ReductionRecipe {
        deleted,
        identify: Some(classes),
        notes: None,
    }
}

/// Reduces `h` along the reducible magic Gram matrix `g`.
pub fn reduce_with(h: &Hypergraph, g: &GramMatrix) -> Result<ReductionTrace, ReduceError> {
    if !is_magic_gram(h, g)? {
        return Err(ReduceError::NotMagic);
    }
    if is_reduced(g) {
        return Err(ReduceError::AlreadyReduced);
    }
    let recipe = recipe_from_gram(g);
    let (steps, output) = replay(h, &recipe)?;
    let classes = recipe.identify.as_ref().expect("recipe from a Gram matrix identifies");
    let reps: Vec<usize> = classes
        .iter()
        .enumerate()
        .filter(|(label, _)| steps.isolated_removed.binary_search(label).is_err())
        .map(|(_, c)| c[0])
        .collect();
    let reduced_gram = GramMatrix::new(g.matrix().submatrix(&reps, &reps))?;
    let (proper, diagnostics) = output.is_proper_eulerian();
    if !proper {
        return Err(ReduceError::Inconsistent(format!(
            "output is not proper Eulerian: {}",
            diagnostics.problems().join("; ")
        )));
    }
    if !is_magic_gram(&output, &reduced_gram)? {
        return Err(ReduceError::Inconsistent("reduced Gram matrix is not magic".into()));
    }
    Ok(ReductionTrace {
        input: h.clone(),
        gram: g.clone(),
        recipe,
        steps,
        output,
        reduced_gram,
    })
}

/// Identity-labeling canonical form: vertex count and the sorted edge list.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    pub vertex_count: usize,
    pub edges: Vec<Vec<usize>>,
}

impl CanonicalForm {
    #[must_use]
    pub fn of(h: &Hypergraph) -> Self {
        Self {
            vertex_count: h.vertex_count(),
            edges: h.canonical_edges(),
        }
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self
            .edges
            .iter()
            .map(|e| {
                let items: Vec<String> = e.iter().map(|v| (v + 1).to_string()).collect();
                format!("[{}]", items.join(", "))
            })
            .collect();
        write!(f, "[{}]", edges.join(", "))
    }
}

/// Limits on a descendant search.
#[derive(Debug, Clone, Copy)]
pub struct SearchBudget {
    /// Maximum number of reductions performed.
    pub max_reductions: u64,
    /// Wall-clock cap; ignored on targets without a clock.
    pub time_limit: Option<std::time::Duration>,
    /// Nonmagic dimension up to which all magic Gram matrices of a node are visited.
    pub enumeration_cap: usize,
    pub dedup: Dedup,
}

/// When two reduction outputs count as the same node.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Dedup {
    /// Same vertex count and sorted edge list under the labels produced by reduction.
    #[default]
    Labeled,
    /// Isomorphic hypergraphs; the first one reached represents the class.
    Isomorphism,
}

impl Default for SearchBudget {
    fn default() -> Self {
        Self {
            max_reductions: 10_000_000,
            time_limit: None,
            enumeration_cap: gram::DEFAULT_ENUMERATION_CAP,
            dedup: Dedup::Labeled,
        }
    }
}

#[derive(Debug, Clone)]
pub struct DescendantReport {
    /// Minimal descendants keyed by canonical form.
    pub minimal: BTreeMap<CanonicalForm, Hypergraph>,
    /// The input itself is minimal.
    pub already_minimal: bool,
    /// Every node was searched exhaustively within the budget.
    pub exhaustive: bool,
    pub budget_exhausted: bool,
    pub reductions: u64,
    pub nodes_visited: usize,
}

impl DescendantReport {
    /// Minimal descendants grouped into isomorphism classes, each class in canonical order.
    #[must_use]
    pub fn isomorphism_classes(&self) -> Vec<Vec<&CanonicalForm>> {
        let mut classes: Vec<(&Hypergraph, Vec<&CanonicalForm>)> = Vec::new();
        for (key, h) in &self.minimal {
            match classes.iter_mut().find(|(rep, _)| rep.is_isomorphic(h)) {
                Some((_, members)) => members.push(key),
                None => classes.push((h, vec![key])),
            }
        }
        classes.into_iter().map(|(_, members)| members).collect()
    }
}

/// Nodes already reached, under the chosen notion of sameness.
struct Seen {
    dedup: Dedup,
    labeled: HashSet<CanonicalForm>,
    classes: HashMap<u64, Vec<Hypergraph>>,
}

impl Seen {
    fn new(dedup: Dedup) -> Self {
        Self {
            dedup,
            labeled: HashSet::new(),
            classes: HashMap::new(),
        }
    }

    /// Records `h`; false if it (or an isomorphic copy) was seen before.
    fn insert(&mut self, h: &Hypergraph) -> bool {
        match self.dedup {
            Dedup::Labeled => self.labeled.insert(CanonicalForm::of(h)),
            Dedup::Isomorphism => {
                let bucket = self.classes.entry(h.invariant_hash()).or_default();
                if bucket.iter().any(|g| g.is_isomorphic(h)) {
                    false
                } else {
                    bucket.push(h.clone());
                    true
                }
            }
        }
    }
}

struct Clock {
    #[cfg(not(target_arch = "wasm32"))]
    start: std::time::Instant,
    limit: Option<std::time::Duration>,
}

impl Clock {
    fn new(limit: Option<std::time::Duration>) -> Self {
        Self {
            #[cfg(not(target_arch = "wasm32"))]
            start: std::time::Instant::now(),
            limit,
        }
    }

    fn expired(&self) -> bool {
        #[cfg(not(target_arch = "wasm32"))]
        {
            self.limit.is_some_and(|l| self.start.elapsed() > l)
        }
        #[cfg(target_arch = "wasm32")]
        {
            let _ = self.limit;
            false
        }
    }
}

/// Packs the Gram matrix of `coords` into `u64` rows; requires `m <= 64`.
fn word_rows(space: &MagicSpace, coords: &BitVec) -> Vec<u64> {
    let g = space.space().to_matrix(coords);
    g.matrix().rows().iter().map(BitVec::low_word).collect()
}

fn rows_reduced(rows: &[u64], scratch: &mut Vec<u64>) -> bool {
    scratch.clear();
    scratch.extend_from_slice(rows);
    scratch.sort_unstable();
    scratch[0] != 0 && scratch.windows(2).all(|w| w[0] != w[1])
}

/// Coordinates of the reducible magic Gram matrices, in Gray-code order.
fn reducible_elements(space: &MagicSpace, cap: usize) -> (Vec<BitVec>, bool) {
    let d = space.dimension();
    let exhaustive = d <= cap;
    let m = space.space().vertex_count();
    if m > 64 {
        let found = space
            .iter_capped(cap)
            .filter(|x| !is_reduced(&space.space().to_matrix(x)))
            .collect();
        return (found, exhaustive);
    }
    let steps = d.min(cap).min(63);
    let deltas: Vec<Vec<u64>> = space.nonmagic_basis()[..steps]
        .iter()
        .map(|b| {
            let mut rows = vec![0u64; m];
            for t in b.iter_ones() {
                let (i, j) = space.space().pairs()[t];
                rows[i] ^= 1 << j;
                rows[j] ^= 1 << i;
            }
            rows
        })
        .collect();
    let mut current = word_rows(space, space.offset());
    let mut scratch = Vec::with_capacity(m);
    let mut coefficients = 0u64;
    let mut found = Vec::new();
    for step in 0..(1u64 << steps) {
        if step > 0 {
            let t = step.trailing_zeros() as usize;
            coefficients ^= 1 << t;
            for (row, delta) in current.iter_mut().zip(&deltas[t]) {
                *row ^= delta;
            }
        }
        if !rows_reduced(&current, &mut scratch) {
            found.push(space.element(&BitVec::from_word(d, coefficients)));
        }
    }
    if !exhaustive {
        if let Some((_, x)) = space.find_reducible() {
            if !found.contains(&x) {
                found.push(x);
            }
        }
    }
    (found, exhaustive)
}

/// Minimal hypergraphs reachable from `h` by repeated reduction.
pub fn find_minimal_descendants(h: &Hypergraph, budget: &SearchBudget) -> Result<DescendantReport, ReduceError> {
    let root = gram::magic_affine_space(h)?.ok_or(GramError::NoMagic)?;
    let mut report = DescendantReport {
        minimal: BTreeMap::new(),
        already_minimal: false,
        exhaustive: true,
        budget_exhausted: false,
        reductions: 0,
        nodes_visited: 0,
    };
    if root.find_reducible().is_none() {
        report.already_minimal = true;
        report.nodes_visited = 1;
        return Ok(report);
    }
    let clock = Clock::new(budget.time_limit);
    let mut visited = Seen::new(budget.dedup);
    visited.insert(h);
    let mut stack: Vec<(Hypergraph, MagicSpace)> = vec![(h.clone(), root)];
    while let Some((node, space)) = stack.pop() {
        report.nodes_visited += 1;
        let (elements, exhaustive) = reducible_elements(&space, budget.enumeration_cap);
        report.exhaustive &= exhaustive;
        if elements.is_empty() {
            report.minimal.insert(CanonicalForm::of(&node), node);
            continue;
        }
        for x in elements {
            if report.reductions >= budget.max_reductions || clock.expired() {
                report.budget_exhausted = true;
                report.exhaustive = false;
                return Ok(report);
            }
            report.reductions += 1;
            let g = space.space().to_matrix(&x);
            let trace = reduce_with(&node, &g)?;
            if !visited.insert(&trace.output) {
                continue;
            }
            let child_space = gram::magic_affine_space(&trace.output)?
                .ok_or_else(|| ReduceError::Inconsistent("reduced hypergraph has no magic Gram matrix".into()))?;
            stack.push((trace.output, child_space));
        }
    }
    Ok(report)
}

/// Gram matrix pulled back from a vertex map: `M[u][v] = target[map(u)][map(v)]`, zero on
/// unmapped vertices.
#[must_use]
pub fn pull_back_gram(target: &GramMatrix, map: &[Option<usize>]) -> GramMatrix {
    let m = map.len();
    let mut out = BitMatrix::zeros(m, m);
    for u in 0..m {
        for v in 0..m {
            if let (Some(a), Some(b)) = (map[u], map[v]) {
                if target.get(a, b) {
                    out.set(u, v, true);
                }
            }
        }
    }
    GramMatrix::new(out).expect("pull-back of a Gram matrix is symmetric with zero diagonal")
}

impl ReductionRecipe {
    /// `old → new` map, `None` for deleted vertices.
    pub fn map(&self, vertex_count: usize) -> Result<Vec<Option<usize>>, ReduceError> {
        self.vertex_map(vertex_count).map(|(m, _)| m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gram::is_minimal;
    use crate::hypergraph::parse_edge_list;
    use crate::pauli::Assignment;

    fn square() -> Hypergraph {
        parse_edge_list("[[1,2,3],[4,5,6],[7,8,9],[1,4,7],[2,5,8],[3,6,9]]").unwrap()
    }

    fn square_gram() -> GramMatrix {
        let a = Assignment::from_letter_strings(&["XI", "IX", "XX", "IZ", "ZI", "ZZ", "XZ", "ZX", "YY"])
            .unwrap();
        GramMatrix::new(a.gram()).unwrap()
    }

    /// Square with vertex 1 split in two copies joined by an extra context.
    fn split_square() -> Hypergraph {
        parse_edge_list("[[1,2,3],[4,5,6],[7,8,9],[10,4,7],[2,5,8],[3,6,9],[1,10]]").unwrap()
    }

    /// Square with an extra vertex added to the first two rows.
    fn padded_square() -> Hypergraph {
        parse_edge_list("[[1,2,3,10],[4,5,6,10],[7,8,9],[1,4,7],[2,5,8],[3,6,9]]").unwrap()
    }

    #[test]
    fn empty_recipe_is_identity() {
        let h = square();
        let out = apply_recipe(&h, &ReductionRecipe::default()).unwrap();
        assert_eq!(CanonicalForm::of(&out), CanonicalForm::of(&h));
        let out = apply_recipe(&h, &ReductionRecipe::from_json("{}").unwrap()).unwrap();
        assert_eq!(out.edges(), h.edges());
    }

    #[test]
    fn recipe_validation() {
        let h = square();
        let r = ReductionRecipe::from_json(r#"{"delete": [1], "identify": {"1": [1, 2]}}"#).unwrap();
        assert!(matches!(apply_recipe(&h, &r), Err(ReduceError::InconsistentRecipe(_))));
        let r = ReductionRecipe::from_json(r#"{"identify": {"1": [1, 2]}}"#).unwrap();
        assert!(matches!(apply_recipe(&h, &r), Err(ReduceError::InconsistentRecipe(_))));
        let r = ReductionRecipe::from_json(r#"{"delete": [10]}"#).unwrap();
        assert!(matches!(apply_recipe(&h, &r), Err(ReduceError::InconsistentRecipe(_))));
        assert!(matches!(
            ReductionRecipe::from_json(r#"{"identify": {"2": [1]}}"#),
            Err(ReduceError::Malformed(_))
        ));
        let r = ReductionRecipe::from_json(r#"{"delete": [2], "identify": {"1": [1, 3], "2": [4,5,6,7,8,9]}}"#)
            .unwrap();
        assert_eq!(ReductionRecipe::from_json(&r.to_json()).unwrap(), r);
    }

    #[test]
    fn mod_two_steps() {
        let h = parse_edge_list("[[1,2,3],[1,2,4],[3,4],[3,4]]").unwrap();
        let r = ReductionRecipe::from_json(r#"{"identify": {"1": [1, 2], "2": [3], "3": [4]}}"#).unwrap();
        let (steps, out) = replay(&h, &r).unwrap();
        assert_eq!(steps.after_identification[0], vec![0, 0, 1]);
        assert_eq!(steps.after_vertex_parity, vec![vec![1], vec![2], vec![1, 2], vec![1, 2]]);
        assert_eq!(steps.after_edge_parity, vec![vec![1], vec![2]]);
        assert_eq!(steps.isolated_removed, vec![0]);
        assert_eq!(out.edges(), &[vec![0], vec![1]]);
    }

    #[test]
    fn split_square_reduces_to_square() {
        let h = split_square();
        assert!(h.is_proper_eulerian().0);
        assert!(!is_minimal(&h).unwrap());
        let mut map: Vec<Option<usize>> = (0..9).map(Some).collect();
        map.push(Some(0));
        let g = pull_back_gram(&square_gram(), &map);
        let trace = reduce_with(&h, &g).unwrap();
        assert!(trace.recipe.deleted.is_empty());
        assert_eq!(trace.recipe.identify.as_ref().unwrap()[0], vec![0, 9]);
        assert!(trace.steps.after_vertex_parity.contains(&vec![]));
        assert_eq!(CanonicalForm::of(&trace.output), CanonicalForm::of(&square()));
        assert_eq!(trace.reduced_gram, square_gram());

        let report = find_minimal_descendants(&h, &SearchBudget::default()).unwrap();
        assert!(!report.already_minimal);
        assert!(report.exhaustive);
        assert!(report.minimal.contains_key(&CanonicalForm::of(&square())), "{:?}", report.minimal.keys());
        for d in report.minimal.values() {
            assert!(is_minimal(d).unwrap());
        }
    }

    #[test]
    fn single_zero_row_deletes_one_vertex() {
        let h = padded_square();
        let mut map: Vec<Option<usize>> = (0..9).map(Some).collect();
        map.push(None);
        let g = pull_back_gram(&square_gram(), &map);
        let trace = reduce_with(&h, &g).unwrap();
        assert_eq!(trace.output.vertex_count(), h.vertex_count() - 1);
        assert_eq!(CanonicalForm::of(&trace.output), CanonicalForm::of(&square()));
    }

    #[test]
    fn errors_on_reduced_or_nonmagic() {
        let h = square();
        assert!(matches!(reduce_with(&h, &square_gram()), Err(ReduceError::AlreadyReduced)));
        assert!(matches!(
            reduce_with(&h, &GramMatrix::zeros(9)),
            Err(ReduceError::NotMagic)
        ));
        let report = find_minimal_descendants(&h, &SearchBudget::default()).unwrap();
        assert!(report.already_minimal && report.minimal.is_empty());
    }
}
