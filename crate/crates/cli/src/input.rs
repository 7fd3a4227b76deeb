//! Reading hypergraphs, assignments, sign vectors and other inputs.

use std::fs;
use std::path::Path;

use magicsets::dataset::{self, DatasetEntry};
use magicsets::gf2::BitVec;
use magicsets::gram::GramMatrix;
use magicsets::hypergraph::Hypergraph;
use magicsets::orbits::PermutationGroup;
use magicsets::pauli::Assignment;
use magicsets::reduce::ReductionRecipe;

use crate::CliError;

/// Bundled entries are addressed as `@NAME`.
pub fn bundled(spec: &str) -> Result<Option<DatasetEntry>, CliError> {
    match spec.strip_prefix('@') {
        None => Ok(None),
        Some(name) => dataset::load(name)
            .map(Some)
            .map_err(|e| CliError::input("dataset", e)),
    }
}

pub fn read(path: &str) -> Result<String, CliError> {
    fs::read_to_string(Path::new(path)).map_err(|e| CliError::input("io", format!("{path}: {e}")))
}

pub struct Loaded {
    pub hypergraph: Hypergraph,
    pub entry: Option<DatasetEntry>,
}

pub fn hypergraph(spec: &str) -> Result<Loaded, CliError> {
    if let Some(entry) = bundled(spec)? {
        return Ok(Loaded {
            hypergraph: entry.hypergraph.clone(),
            entry: Some(entry),
        });
    }
    let text = read(spec)?;
    let hypergraph = Hypergraph::parse_any(&text).map_err(|e| CliError::input("hypergraph", e))?;
    Ok(Loaded {
        hypergraph,
        entry: None,
    })
}

pub fn assignment(spec: &str) -> Result<Assignment, CliError> {
    if let Some(entry) = bundled(spec)? {
        return entry
            .assignment
            .ok_or_else(|| CliError::input("dataset", format!("{} has no bundled assignment", entry.name)));
    }
    Assignment::parse_any(&read(spec)?).map_err(|e| CliError::input("pauli", e))
}

pub fn gram(path: &str) -> Result<GramMatrix, CliError> {
    GramMatrix::from_json(&read(path)?).map_err(|e| CliError::input("gram", e))
}

pub fn recipe(path: &str) -> Result<ReductionRecipe, CliError> {
    ReductionRecipe::from_json(&read(path)?).map_err(|e| CliError::input("reduce", e))
}

pub fn group(path: &str) -> Result<PermutationGroup, CliError> {
    PermutationGroup::from_json(&read(path)?).map_err(|e| CliError::input("orbits", e))
}

/// Context signs, `1` meaning a negative context.
///
/// Accepts a string of `0`/`1` or `+`/`-` characters, a JSON list of `0`/`1` flags or `±1`
/// values, or a path to a file holding either.
pub fn signs(spec: &str, contexts: usize) -> Result<BitVec, CliError> {
    let text = if Path::new(spec).is_file() {
        read(spec)?
    } else {
        spec.to_string()
    };
    let text = text.trim();
    let bits: Vec<bool> = if text.starts_with('[') {
        let values: Vec<i64> =
            serde_json::from_str(text).map_err(|e| CliError::input("bound", format!("sign list: {e}")))?;
        // A list containing -1 is read as ±1 values, otherwise as 0/1 flags.
        let plus_minus = values.contains(&-1);
        values
            .into_iter()
            .map(|v| match (v, plus_minus) {
                (-1, true) => Ok(true),
                (1, true) => Ok(false),
                (0 | 1, false) => Ok(v == 1),
                _ => Err(CliError::input("bound", format!("sign value {v} is not 0, 1 or -1"))),
            })
            .collect::<Result<_, _>>()?
    } else {
        text.chars()
            .filter(|c| !c.is_whitespace() && *c != ',')
            .map(|c| match c {
                '0' | '+' => Ok(false),
                '1' | '-' => Ok(true),
                _ => Err(CliError::input("bound", format!("unexpected sign character {c:?}"))),
            })
            .collect::<Result<_, _>>()?
    };
    if bits.len() != contexts {
        return Err(CliError::input(
            "bound",
            format!("{} signs given for {contexts} contexts", bits.len()),
        ));
    }
    Ok(BitVec::from_bools(&bits))
}

pub fn write(path: &str, contents: &str) -> Result<(), CliError> {
    fs::write(path, contents).map_err(|e| CliError::input("io", format!("{path}: {e}")))
}
