//! Bundled hypergraphs, assignments and reduction recipes.

use std::collections::BTreeMap;

use serde::Deserialize;
use thiserror::Error;

use crate::hypergraph::{Hypergraph, HypergraphError};
use crate::pauli::{verify_assignment, Assignment, PauliError};
use crate::reduce::{ReduceError, ReductionRecipe};

const FILES: &[(&str, &str)] = &[
    ("square", include_str!("../data/square.json")),
    ("pentagram", include_str!("../data/pentagram.json")),
    ("HA", include_str!("../data/ha.json")),
    ("HB", include_str!("../data/hb.json")),
    ("HC", include_str!("../data/hc.json")),
    ("HD", include_str!("../data/hd.json")),
    ("MS3-27b", include_str!("../data/ms3-27b.json")),
    ("MS3-29", include_str!("../data/ms3-29.json")),
    ("MS4-21b", include_str!("../data/ms4-21b.json")),
    ("MS5-26", include_str!("../data/ms5-26.json")),
    ("MS6-35", include_str!("../data/ms6-35.json")),
];

/// Entries whose assignments come from standard constructions and are checked on load.
const CONSTRUCTED: &[&str] = &["square", "pentagram"];

#[derive(Debug, Error)]
pub enum DatasetError {
    #[error("unknown dataset {0:?}")]
    Unknown(String),
    #[error("dataset {name}: {source}")]
    Json {
        name: String,
        source: serde_json::Error,
    },
    #[error("dataset {name}: {source}")]
    Hypergraph {
        name: String,
        source: HypergraphError,
    },
    #[error("dataset {name}: {source}")]
    Assignment { name: String, source: PauliError },
    #[error("dataset {name}: {source}")]
    Recipe { name: String, source: ReduceError },
    #[error("dataset {0}: bundled assignment is not a valid magic assignment")]
    BadAssignment(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Source {
    Published,
    Computed,
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
pub struct Expected {
    pub value: serde_json::Value,
    pub source: Source,
}

#[derive(Debug, Deserialize)]
struct DerivedFrom {
    parent: String,
    recipe: serde_json::Value,
}

#[derive(Debug, Deserialize)]
struct EntryFile {
    name: String,
    vertices: usize,
    edges: Vec<Vec<usize>>,
    #[serde(default)]
    labels: Option<Vec<String>>,
    #[serde(default)]
    assignment: Option<BTreeMap<String, String>>,
    #[serde(default)]
    derived_from: Option<DerivedFrom>,
    #[serde(default)]
    expected: BTreeMap<String, Expected>,
}

#[derive(Debug, Clone)]
pub struct DatasetEntry {
    pub name: String,
    pub hypergraph: Hypergraph,
    pub assignment: Option<Assignment>,
    /// Parent hypergraph and the recipe reducing it to this entry.
    pub derivation: Option<(String, ReductionRecipe)>,
    pub expected: BTreeMap<String, Expected>,
    /// The raw edge list exactly as bundled (1-based, original vertex order).
    pub raw_edges: Vec<Vec<usize>>,
}

impl DatasetEntry {
    #[must_use]
    pub fn expected(&self, key: &str) -> Option<&serde_json::Value> {
        self.expected.get(key).map(|e| &e.value)
    }

    #[must_use]
    pub fn expected_usize(&self, key: &str) -> Option<usize> {
        self.expected(key)
            .and_then(serde_json::Value::as_u64)
            .and_then(|v| usize::try_from(v).ok())
    }

    #[must_use]
    pub fn expected_str(&self, key: &str) -> Option<&str> {
        self.expected(key).and_then(serde_json::Value::as_str)
    }

    #[must_use]
    pub fn expected_bool(&self, key: &str) -> Option<bool> {
        self.expected(key).and_then(serde_json::Value::as_bool)
    }

    /// Expected `(b, Q)` from a `"b/Q"` string.
    #[must_use]
    pub fn expected_bound(&self) -> Option<(usize, usize)> {
        let (b, q) = self.expected_str("bound")?.split_once('/')?;
        Some((b.trim().parse().ok()?, q.trim().parse().ok()?))
    }
}

/// Names of all bundled entries, in a fixed order.
#[must_use]
pub fn names() -> Vec<&'static str> {
    FILES.iter().map(|(n, _)| *n).collect()
}

/// Raw JSON of a bundled entry.
#[must_use]
pub fn raw(name: &str) -> Option<&'static str> {
    FILES
        .iter()
        .find(|(n, _)| n.eq_ignore_ascii_case(name))
        .map(|(_, text)| *text)
}

/// Loads a bundled entry by name (case-insensitive).
pub fn load(name: &str) -> Result<DatasetEntry, DatasetError> {
    let text = raw(name).ok_or_else(|| DatasetError::Unknown(name.to_string()))?;
    parse_entry(text)
}

/// Parses an entry in the bundled format.
pub fn parse_entry(text: &str) -> Result<DatasetEntry, DatasetError> {
    let file: EntryFile = serde_json::from_str(text).map_err(|source| DatasetError::Json {
        name: "<input>".into(),
        source,
    })?;
    let name = file.name.clone();
    let mut hypergraph = Hypergraph::from_one_based(Some(file.vertices), &file.edges)
        .map_err(|source| DatasetError::Hypergraph {
            name: name.clone(),
            source,
        })?
        .with_name(name.clone());
    if let Some(labels) = file.labels {
        hypergraph = hypergraph
            .with_labels(labels)
            .map_err(|source| DatasetError::Hypergraph {
                name: name.clone(),
                source,
            })?;
    }
    let assignment = match file.assignment {
        None => None,
        Some(map) => {
            let json = serde_json::to_string(&map).expect("map serializes");
            Some(Assignment::from_json(&json).map_err(|source| DatasetError::Assignment {
                name: name.clone(),
                source,
            })?)
        }
    };
    if CONSTRUCTED.iter().any(|c| c.eq_ignore_ascii_case(&name)) {
        let ok = assignment
            .as_ref()
            .is_some_and(|a| verify_assignment(&hypergraph, a).magic);
        if !ok {
            return Err(DatasetError::BadAssignment(name));
        }
    }
    let derivation = match file.derived_from {
        None => None,
        Some(d) => {
            let recipe = ReductionRecipe::from_json_value(d.recipe).map_err(|source| DatasetError::Recipe {
                name: name.clone(),
                source,
            })?;
            Some((d.parent, recipe))
        }
    };
    Ok(DatasetEntry {
        name,
        hypergraph,
        assignment,
        derivation,
        expected: file.expected,
        raw_edges: file.edges,
    })
}

/// Every bundled entry, in [`names`] order.
pub fn all() -> Result<Vec<DatasetEntry>, DatasetError> {
    names().into_iter().map(load).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_entries_load() {
        let entries = all().unwrap();
        assert_eq!(entries.len(), FILES.len());
        for e in &entries {
            assert!(e.hypergraph.is_proper_eulerian().0, "{}", e.name);
            if let Some(a) = &e.assignment {
                assert_eq!(a.len(), e.hypergraph.vertex_count(), "{}", e.name);
            }
        }
    }

    #[test]
    fn sizes() {
        let sizes: Vec<(String, usize, usize)> = all()
            .unwrap()
            .into_iter()
            .map(|e| (e.name.clone(), e.hypergraph.vertex_count(), e.hypergraph.edge_count()))
            .collect();
        let expect = [
            ("square", 9, 6),
            ("pentagram", 10, 5),
            ("HA", 45, 36),
            ("HB", 35, 35),
            ("HC", 39, 39),
            ("HD", 45, 45),
            ("MS3-27b", 27, 27),
            ("MS3-29", 29, 33),
            ("MS4-21b", 21, 16),
            ("MS5-26", 26, 30),
            ("MS6-35", 35, 36),
        ];
        for ((n, v, e), (en, ev, ee)) in sizes.iter().zip(expect) {
            assert_eq!((n.as_str(), *v, *e), (en, ev, ee));
        }
    }

    #[test]
    fn lookup_is_case_insensitive() {
        assert_eq!(load("ms3-29").unwrap().name, "MS3-29");
        assert!(matches!(load("nope"), Err(DatasetError::Unknown(_))));
        assert_eq!(load("MS3-29").unwrap().expected_bound(), Some((19, 33)));
        assert_eq!(load("MS6-35").unwrap().expected_usize("qubits"), Some(6));
    }
}
