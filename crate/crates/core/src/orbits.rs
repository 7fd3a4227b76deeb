//! Orbits of permutation groups on vertex subsets, and the vertex-transitive candidate
//! hypergraphs they produce.

use std::collections::{HashSet, VecDeque};

use itertools::Itertools;
use serde::Deserialize;
use thiserror::Error;

use crate::hypergraph::Hypergraph;

/// Default bound on the number of subsets visited by [`subset_orbits`].
pub const DEFAULT_SUBSET_CAP: usize = 5_000_000;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum OrbitError {
    #[error("generator {index} is not a permutation of 1..{degree}")]
    NotAPermutation { index: usize, degree: usize },
    #[error("generator {index} has {len} images, expected {degree}")]
    WrongLength { index: usize, len: usize, degree: usize },
    #[error("subset size {s} is out of range 1..={degree}")]
    SubsetSize { s: usize, degree: usize },
    #[error("{count} subsets of size {s} exceed the cap of {cap}")]
    CapExceeded { count: u128, s: usize, cap: usize },
    #[error("malformed generators: {0}")]
    Malformed(String),
}

/// A permutation group on `0..degree` given by generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermutationGroup {
    degree: usize,
    generators: Vec<Vec<usize>>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum GeneratorsFile {
    Images(Vec<Vec<usize>>),
    Full {
        degree: usize,
        generators: Vec<Generator>,
    },
}

#[derive(Deserialize)]
#[serde(untagged)]
enum Generator {
    Images(Vec<usize>),
    Cycles(String),
}

impl PermutationGroup {
    /// Generators as 0-based image lists.
    pub fn new(degree: usize, generators: Vec<Vec<usize>>) -> Result<Self, OrbitError> {
        for (index, g) in generators.iter().enumerate() {
            if g.len() != degree {
                return Err(OrbitError::WrongLength {
                    index: index + 1,
                    len: g.len(),
                    degree,
                });
            }
            let mut hit = vec![false; degree];
            for &image in g {
                if image >= degree || hit[image] {
                    return Err(OrbitError::NotAPermutation {
                        index: index + 1,
                        degree,
                    });
                }
                hit[image] = true;
            }
        }
        Ok(Self { degree, generators })
    }

    /// Generators as 1-based image lists `[g(1), ..., g(N)]`.
    pub fn from_one_based(degree: usize, generators: &[Vec<usize>]) -> Result<Self, OrbitError> {
        let shifted = generators
            .iter()
            .map(|g| g.iter().map(|&v| v.wrapping_sub(1)).collect())
            .collect();
        Self::new(degree, shifted)
    }

    /// Parses a generator file.
    ///
    /// Either a list of 1-based image lists, or `{"degree": N, "generators": [...]}` where
    /// each generator is an image list or a cycle string such as `"(1,2,3)(4,5)"`.
    pub fn from_json(text: &str) -> Result<Self, OrbitError> {
        let file: GeneratorsFile =
            serde_json::from_str(text).map_err(|e| OrbitError::Malformed(e.to_string()))?;
        match file {
            GeneratorsFile::Images(images) => {
                let degree = images.first().map_or(0, Vec::len);
                Self::from_one_based(degree, &images)
            }
            GeneratorsFile::Full { degree, generators } => {
                let images = generators
                    .into_iter()
                    .map(|g| match g {
                        Generator::Images(images) => Ok(images),
                        Generator::Cycles(text) => parse_cycles(degree, &text),
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                Self::from_one_based(degree, &images)
            }
        }
    }

    #[must_use]
    pub fn degree(&self) -> usize {
        self.degree
    }

    #[must_use]
    pub fn generators(&self) -> &[Vec<usize>] {
        &self.generators
    }

    /// Orbit of a single point.
    #[must_use]
    pub fn point_orbit(&self, point: usize) -> Vec<usize> {
        let mut seen = vec![false; self.degree];
        seen[point] = true;
        let mut queue = VecDeque::from([point]);
        while let Some(p) = queue.pop_front() {
            for g in &self.generators {
                if !seen[g[p]] {
                    seen[g[p]] = true;
                    queue.push_back(g[p]);
                }
            }
        }
        (0..self.degree).filter(|&p| seen[p]).collect()
    }

    #[must_use]
    pub fn is_transitive(&self) -> bool {
        self.degree == 0 || self.point_orbit(0).len() == self.degree
    }

    /// Image of a sorted subset under generator `g`, sorted.
    fn apply(&self, g: usize, subset: &[usize]) -> Vec<usize> {
        let mut image: Vec<usize> = subset.iter().map(|&v| self.generators[g][v]).collect();
        image.sort_unstable();
        image
    }

    /// Orbit of one subset, in breadth-first order from the (sorted) seed.
    #[must_use]
    pub fn orbit_of(&self, seed: &[usize]) -> Vec<Vec<usize>> {
        let mut start = seed.to_vec();
        start.sort_unstable();
        let mut seen = HashSet::from([start.clone()]);
        let mut order = Vec::new();
        let mut queue = VecDeque::from([start]);
        while let Some(subset) = queue.pop_front() {
            for g in 0..self.generators.len() {
                let image = self.apply(g, &subset);
                if seen.insert(image.clone()) {
                    queue.push_back(image);
                }
            }
            order.push(subset);
        }
        order
    }

    /// True if every generator maps the edge multiset of `h` onto itself.
    #[must_use]
    pub fn preserves(&self, h: &Hypergraph) -> bool {
        if h.vertex_count() != self.degree {
            return false;
        }
        let edges = h.canonical_edges();
        (0..self.generators.len()).all(|g| {
            let mut images: Vec<Vec<usize>> = edges.iter().map(|e| self.apply(g, e)).collect();
            images.sort();
            images == edges
        })
    }
}

fn parse_cycles(degree: usize, text: &str) -> Result<Vec<usize>, OrbitError> {
    let mut images: Vec<usize> = (1..=degree).collect();
    let malformed = || OrbitError::Malformed(format!("bad cycle notation {text:?}"));
    let trimmed = text.trim();
    if trimmed.is_empty() || trimmed == "()" {
        return Ok(images);
    }
    let body = trimmed
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .ok_or_else(malformed)?;
    for cycle in body.split(")(") {
        let points = cycle
            .split(',')
            .map(|p| p.trim().parse::<usize>().map_err(|_| malformed()))
            .collect::<Result<Vec<_>, _>>()?;
        for (i, &p) in points.iter().enumerate() {
            let next = points[(i + 1) % points.len()];
            if p == 0 || p > degree || next == 0 || next > degree {
                return Err(malformed());
            }
            images[p - 1] = next;
        }
    }
    Ok(images)
}

fn binomial(n: usize, k: usize) -> u128 {
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i as u128 + 1))
}

/// Orbits of the group on all `s`-subsets, seeded in lexicographic order.
///
/// Each orbit is listed in breadth-first order from its lexicographically smallest member.
pub fn subset_orbits(group: &PermutationGroup, s: usize, cap: usize) -> Result<Vec<Vec<Vec<usize>>>, OrbitError> {
    let n = group.degree;
    if s == 0 || s > n {
        return Err(OrbitError::SubsetSize { s, degree: n });
    }
    let count = binomial(n, s);
    if count > cap as u128 {
        return Err(OrbitError::CapExceeded { count, s, cap });
    }
    let mut visited: HashSet<Vec<usize>> = HashSet::new();
    let mut orbits = Vec::new();
    for seed in (0..n).combinations(s) {
        if visited.contains(&seed) {
            continue;
        }
        let orbit = group.orbit_of(&seed);
        visited.extend(orbit.iter().cloned());
        orbits.push(orbit);
    }
    Ok(orbits)
}

/// Hypergraphs formed by orbits of exactly `4N/s` subsets, kept if 4-regular and proper
/// Eulerian.
pub fn candidate_hypergraphs(group: &PermutationGroup, s: usize, cap: usize) -> Result<Vec<Hypergraph>, OrbitError> {
    let n = group.degree;
    if !(4 * n).is_multiple_of(s) {
        return Ok(Vec::new());
    }
    let target = 4 * n / s;
    Ok(subset_orbits(group, s, cap)?
        .into_iter()
        .filter(|orbit| orbit.len() == target)
        .filter_map(|orbit| Hypergraph::new(n, orbit).ok())
        .filter(|h| h.degrees().iter().all(|&d| d == 4) && h.is_proper_eulerian().0)
        .collect())
}

/// Vertex index of `(x, y, z)` in Z_3^3.
#[must_use]
pub fn z3_index(x: usize, y: usize, z: usize) -> usize {
    9 * (x % 3) + 3 * (y % 3) + (z % 3)
}

/// The translation group of Z_3^3 with generators `T_{1,0,0}`, `T_{0,1,0}`, `T_{0,0,1}`.
#[must_use]
pub fn z3_cubed_translations() -> PermutationGroup {
    let shift = |a: usize, b: usize, c: usize| -> Vec<usize> {
        (0..27)
            .map(|v| z3_index(v / 9 + a, (v / 3) % 3 + b, v % 3 + c))
            .collect()
    };
    PermutationGroup::new(27, vec![shift(1, 0, 0), shift(0, 1, 0), shift(0, 0, 1)]).expect("translations")
}

/// The 27-point hypergraph whose edges are the translates `T_{a,b,c}` of the starter
/// context `{(0,0,0), (1,0,0), (0,1,0), (0,0,1)}`.
///
/// Vertex `(x, y, z)` has index `9x + 3y + z`; edge `9a + 3b + c` is `T_{a,b,c}` applied to
/// the starter context.
#[must_use]
pub fn ms327_hypergraph() -> Hypergraph {
    let starter = [(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)];
    let mut edges = Vec::with_capacity(27);
    for a in 0..3 {
        for b in 0..3 {
            for c in 0..3 {
                edges.push(starter.iter().map(|&(x, y, z)| z3_index(x + a, y + b, z + c)).collect());
            }
        }
    }
    let labels = (0..27).map(|v| format!("({},{},{})", v / 9, (v / 3) % 3, v % 3)).collect();
    Hypergraph::new(27, edges)
        .expect("translates are in range")
        .with_name("MS3-27")
        .with_labels(labels)
        .expect("27 labels")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gram;

    #[test]
    fn cyclic_group_on_pairs() {
        let g = PermutationGroup::from_one_based(4, &[vec![2, 3, 4, 1]]).unwrap();
        let orbits = subset_orbits(&g, 2, DEFAULT_SUBSET_CAP).unwrap();
        let sets: Vec<Vec<Vec<usize>>> = orbits
            .into_iter()
            .map(|mut o| {
                o.sort();
                o
            })
            .collect();
        assert_eq!(
            sets,
            vec![
                vec![vec![0, 1], vec![0, 3], vec![1, 2], vec![2, 3]],
                vec![vec![0, 2], vec![1, 3]],
            ]
        );
    }

    #[test]
    fn trivial_group() {
        let g = PermutationGroup::new(5, vec![]).unwrap();
        let orbits = subset_orbits(&g, 2, DEFAULT_SUBSET_CAP).unwrap();
        assert_eq!(orbits.len(), 10);
        assert!(orbits.iter().all(|o| o.len() == 1));
        assert!(candidate_hypergraphs(&g, 4, DEFAULT_SUBSET_CAP).unwrap().is_empty());
    }

    #[test]
    fn validation_and_parsing() {
        assert!(matches!(
            PermutationGroup::from_one_based(3, &[vec![1, 1, 2]]),
            Err(OrbitError::NotAPermutation { index: 1, .. })
        ));
        assert!(matches!(
            PermutationGroup::from_one_based(3, &[vec![1, 2]]),
            Err(OrbitError::WrongLength { .. })
        ));
        let a = PermutationGroup::from_json("[[2,3,4,1]]").unwrap();
        let b = PermutationGroup::from_json(r#"{"degree": 4, "generators": ["(1,2,3,4)"]}"#).unwrap();
        assert_eq!(a, b);
        let c = PermutationGroup::from_json(r#"{"degree": 5, "generators": ["(1,2)(3,5)", [1,2,3,4,5]]}"#).unwrap();
        assert_eq!(c.generators()[0], vec![1, 0, 4, 3, 2]);
        assert!(PermutationGroup::from_json(r#"{"degree": 3, "generators": ["(1,4)"]}"#).is_err());
        let g = PermutationGroup::new(6, vec![]).unwrap();
        assert!(matches!(subset_orbits(&g, 7, 10), Err(OrbitError::SubsetSize { .. })));
        assert!(matches!(subset_orbits(&g, 3, 10), Err(OrbitError::CapExceeded { count: 20, .. })));
    }

    #[test]
    fn ms327_structure() {
        let h = ms327_hypergraph();
        assert_eq!((h.vertex_count(), h.edge_count()), (27, 27));
        assert!(h.degrees().iter().all(|&d| d == 4));
        assert!(h.is_proper_eulerian().0);
        assert_eq!(h.edge(0), &[0, 1, 3, 9]);
        let t = z3_cubed_translations();
        assert!(t.is_transitive());
        assert!(t.preserves(&h));
        assert_eq!(t.orbit_of(h.edge(0)).len(), 27);
        let candidates = candidate_hypergraphs(&t, 4, DEFAULT_SUBSET_CAP).unwrap();
        let target = h.canonical_edges();
        assert!(candidates.iter().any(|c| c.canonical_edges() == target));
        assert!(candidates.iter().all(|c| t.preserves(c)));
        assert_eq!(gram::min_qubits(&h, gram::DEFAULT_ENUMERATION_CAP).unwrap().qubits, 3);
    }

    #[test]
    fn orbits_are_closed() {
        let t = z3_cubed_translations();
        for orbit in subset_orbits(&t, 3, DEFAULT_SUBSET_CAP).unwrap() {
            let members: HashSet<&Vec<usize>> = orbit.iter().collect();
            for subset in &orbit {
                for g in 0..3 {
                    assert!(members.contains(&t.apply(g, subset)));
                }
            }
        }
    }
}
