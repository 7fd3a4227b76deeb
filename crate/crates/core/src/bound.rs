//! Noncontextual bounds and tolerated error per context.
//!
//! For sign pattern `c` over the edges and incidence matrix `M`, a classical ±1 assignment
//! `a(v) = (-1)^{x_v}` predicts edge signs `xᵀM`, so the largest achievable score is
//! `|E| - 2·w_min` with `w_min` the minimum weight of the coset `c + row(M)`.

use std::fmt;

use num_rational::Ratio;
use serde::Serialize;
use thiserror::Error;

use crate::assign::{assignment_from_gram_with, AssignError, SynthesisOptions};
use crate::gf2::{self, BitMatrix, BitVec, Gf2Error, DEFAULT_COSET_CAP};
use crate::gram::{self, GramError};
use crate::hypergraph::{Hypergraph, HypergraphError};
use crate::pauli::verify_assignment;

/// Default largest vertex count for [`brute_force_bound`].
pub const DEFAULT_BRUTE_FORCE_CAP: usize = 30;

#[derive(Debug, Error)]
pub enum BoundError {
    #[error(transparent)]
    Hypergraph(#[from] HypergraphError),
    #[error(transparent)]
    Gram(#[from] GramError),
    #[error(transparent)]
    Assign(#[from] AssignError),
    #[error("hypergraph is not proper Eulerian: {}", .0.join("; "))]
    NotProperEulerian(Vec<String>),
    #[error("sign vector has length {actual}, hypergraph has {expected} edges")]
    SignLength { expected: usize, actual: usize },
    #[error("{vertices} vertices exceeds the brute-force cap of {cap}")]
    TooManyVertices { vertices: usize, cap: usize },
    #[error("coset search dimension {dimension} exceeds cap {cap}")]
    TooLarge { dimension: usize, cap: usize },
    #[error("bound {b} exceeds quantum value {q}")]
    BoundExceedsQuantum { b: i64, q: usize },
    #[error("quantum value must be positive")]
    EmptyQuantumValue,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Coset,
    BruteForce,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Coset => "coset",
            Method::BruteForce => "brute-force",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub b: i64,
    /// Quantum value, the number of contexts.
    pub q: usize,
    pub w_min: usize,
    /// Largest number of simultaneously satisfied predictions.
    pub s: usize,
    pub epsilon: Ratio<i64>,
    /// Classical assignment achieving `b`: `true` where the vertex takes value −1.
    pub witness: BitVec,
    pub method: Method,
    /// Odd number of negative contexts.
    pub magic: bool,
    /// False when a cap forced an upper bound on `w_min` (so a lower bound on `b`).
    pub exact: bool,
    pub signs: BitVec,
}

impl BoundReport {
    fn new(h: &Hypergraph, signs: &BitVec, w_min: usize, witness: BitVec, method: Method, exact: bool) -> Self {
        let q = h.edge_count();
        let b = q as i64 - 2 * w_min as i64;
        Self {
            b,
            q,
            w_min,
            s: q - w_min,
            epsilon: Ratio::new(q as i64 - b, q.max(1) as i64),
            witness,
            method,
            magic: signs.weight() % 2 == 1,
            exact,
            signs: signs.clone(),
        }
    }

    /// `ε` rounded half-up to `places` decimals.
    #[must_use]
    pub fn epsilon_decimal(&self, places: usize) -> String {
        render_decimal(&self.epsilon, places)
    }

    /// Witness as ±1 values.
    #[must_use]
    pub fn witness_signs(&self) -> Vec<i8> {
        self.witness.to_bools().iter().map(|&neg| if neg { -1 } else { 1 }).collect()
    }

    #[must_use]
    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::json!({
            "b": self.b,
            "Q": self.q,
            "w_min": self.w_min,
            "s": self.s,
            "epsilon": self.epsilon.to_string(),
            "epsilon_decimal": self.epsilon_decimal(3),
            "witness": self.witness_signs(),
            "method": self.method,
            "magic": self.magic,
            "exact": self.exact,
            "signs": self.signs.to_string(),
        })
    }
}

/// `Σ_e sgn(e)·a(e)` for sign pattern `signs` and classical assignment `witness`.
#[must_use]
pub fn score(h: &Hypergraph, signs: &BitVec, witness: &BitVec) -> i64 {
    h.edges()
        .iter()
        .enumerate()
        .map(|(j, e)| {
            let predicted = e.iter().filter(|&&v| witness.get(v)).count() % 2 == 1;
            if predicted == signs.get(j) {
                1
            } else {
                -1
            }
        })
        .sum()
}

fn check_inputs(h: &Hypergraph, signs: &BitVec) -> Result<(), BoundError> {
    let (proper, diagnostics) = h.is_proper_eulerian();
    if !proper {
        return Err(BoundError::NotProperEulerian(diagnostics.problems()));
    }
    if signs.len() != h.edge_count() {
        return Err(BoundError::SignLength {
            expected: h.edge_count(),
            actual: signs.len(),
        });
    }
    Ok(())
}

/// Bound via the minimum-weight coset of the incidence row space.
pub fn noncontextual_bound(h: &Hypergraph, signs: &BitVec) -> Result<BoundReport, BoundError> {
    noncontextual_bound_capped(h, signs, DEFAULT_COSET_CAP)
}

pub fn noncontextual_bound_capped(h: &Hypergraph, signs: &BitVec, cap: usize) -> Result<BoundReport, BoundError> {
    check_inputs(h, signs)?;
    let incidence = h.incidence_matrix()?;
    let (w, y, exact) = match gf2::coset_min_weight_capped(incidence.rows(), signs, cap) {
        Ok(found) => (found.weight, found.witness, true),
        Err(Gf2Error::CosetTooLarge {
            upper_bound,
            witness,
            ..
        }) => (upper_bound, witness, false),
        Err(e) => unreachable!("lengths were checked: {e}"),
    };
    let target = y.xor(signs);
    let x = gf2::solve_row_combination(&incidence, &target)
        .expect("lengths agree")
        .expect("coset elements differ from the offset by a row combination");
    Ok(BoundReport::new(h, signs, w, x, Method::Coset, exact))
}

/// Bound by trying every classical assignment, in Gray-code order.
pub fn brute_force_bound(h: &Hypergraph, signs: &BitVec) -> Result<BoundReport, BoundError> {
    brute_force_bound_capped(h, signs, DEFAULT_BRUTE_FORCE_CAP)
}

pub fn brute_force_bound_capped(h: &Hypergraph, signs: &BitVec, cap: usize) -> Result<BoundReport, BoundError> {
    check_inputs(h, signs)?;
    let m = h.vertex_count();
    if m > cap || m >= 64 {
        return Err(BoundError::TooManyVertices { vertices: m, cap });
    }
    let n = h.edge_count();
    // Edges touched by flipping each vertex, counted with multiplicity.
    let mut stars = vec![BitVec::zeros(n); m];
    for (j, e) in h.edges().iter().enumerate() {
        for &v in e {
            stars[v].flip(j);
        }
    }
    let (best_w, best_x) = if n <= 64 {
        let stars: Vec<u64> = stars.iter().map(BitVec::low_word).collect();
        let mut current = signs.low_word();
        let mut x = 0u64;
        let mut best = (current.count_ones(), 0u64);
        for step in 1..(1u64 << m) {
            let v = step.trailing_zeros() as usize;
            x ^= 1 << v;
            current ^= stars[v];
            let w = current.count_ones();
            if w < best.0 {
                best = (w, x);
            }
        }
        (best.0 as usize, BitVec::from_word(m, best.1))
    } else {
        let mut current = signs.clone();
        let mut x = BitVec::zeros(m);
        let mut best = (current.weight(), x.clone());
        for step in 1..(1u64 << m) {
            let v = step.trailing_zeros() as usize;
            x.flip(v);
            current.xor_assign(&stars[v]);
            let w = current.weight();
            if w < best.0 {
                best = (w, x.clone());
            }
        }
        best
    };
    Ok(BoundReport::new(h, signs, best_w, best_x, Method::BruteForce, true))
}

/// Hypergraph-level bound together with how it was obtained.
#[derive(Debug, Clone)]
pub struct HypergraphBound {
    pub report: BoundReport,
    /// Number of sign patterns (cosets or Gram matrices) compared.
    pub candidates: u64,
    pub exact: bool,
}

/// Smallest bound over magic sign patterns.
///
/// With `pauli_only`, one synthesized Pauli assignment per magic Gram matrix supplies the
/// sign pattern; otherwise every odd-weight coset of the incidence row space is considered.
pub fn hypergraph_bound(h: &Hypergraph, pauli_only: bool, cap: usize) -> Result<HypergraphBound, BoundError> {
    let space = gram::magic_affine_space(h)?.ok_or(GramError::NoMagic)?;
    if pauli_only {
        let opts = SynthesisOptions::default();
        let mut best: Option<BoundReport> = None;
        let mut candidates = 0;
        for x in space.iter_capped(cap) {
            candidates += 1;
            let g = space.space().to_matrix(&x);
            let k = g.rank().div_ceil(2).max(1);
            let a = assignment_from_gram_with(h, &g, k, &opts)?;
            let signs = verify_assignment(h, &a).context_signs;
            let report = noncontextual_bound(h, &signs)?;
            if best.as_ref().is_none_or(|b| report.b < b.b) {
                best = Some(report);
            }
        }
        let report = best.expect("the magic space is nonempty");
        let exact = space.dimension() <= cap && report.exact;
        return Ok(HypergraphBound {
            report,
            candidates,
            exact,
        });
    }
    let incidence = h.incidence_matrix()?;
    let n = h.edge_count();
    let (checks, dist) = match gf2::all_coset_min_weights(incidence.rows(), n, cap) {
        Ok(t) => t,
        Err(Gf2Error::CosetTooLarge { dimension, cap, .. }) => {
            return Err(BoundError::TooLarge { dimension, cap })
        }
        Err(e) => unreachable!("lengths agree: {e}"),
    };
    // Parity of a coset is read off its syndrome: the all-ones vector is a check.
    let check_matrix = BitMatrix::from_rows(checks.clone(), n).expect("equal lengths");
    let parity = gf2::solve_row_combination(&check_matrix, &BitVec::ones(n))
        .expect("lengths agree")
        .expect("vertex stars have even size");
    let parity_mask = parity.iter_ones().fold(0u64, |acc, i| acc | 1 << i);
    let (syndrome, _) = dist
        .iter()
        .enumerate()
        .filter(|&(s, _)| (s as u64 & parity_mask).count_ones() % 2 == 1)
        .max_by_key(|&(s, &d)| (d, std::cmp::Reverse(s)))
        .expect("odd cosets exist");
    let target = BitVec::from_word(checks.len(), syndrome as u64);
    let transposed = check_matrix.transpose();
    let signs = gf2::solve_row_combination(&transposed, &target)
        .expect("lengths agree")
        .expect("checks are independent");
    let report = noncontextual_bound(h, &signs)?;
    Ok(HypergraphBound {
        candidates: dist.len() as u64 / 2,
        exact: report.exact,
        report,
    })
}

/// `ε = (Q − b)/Q`.
pub fn tolerated_error(b: i64, q: usize) -> Result<Ratio<i64>, BoundError> {
    if q == 0 {
        return Err(BoundError::EmptyQuantumValue);
    }
    if b > q as i64 {
        return Err(BoundError::BoundExceedsQuantum { b, q });
    }
    Ok(Ratio::new(q as i64 - b, q as i64))
}

/// Decimal rendering of a nonnegative rational, rounded half-up.
#[must_use]
pub fn render_decimal(r: &Ratio<i64>, places: usize) -> String {
    render(r, places, true)
}

/// Decimal rendering of a nonnegative rational, truncated.
#[must_use]
pub fn render_truncated(r: &Ratio<i64>, places: usize) -> String {
    render(r, places, false)
}

fn render(r: &Ratio<i64>, places: usize, round: bool) -> String {
    let scale = 10i64.pow(places as u32);
    let num = *r.numer() * scale;
    let den = *r.denom();
    let scaled = if round { (2 * num + den) / (2 * den) } else { num / den };
    let int = scaled / scale;
    let frac = scaled % scale;
    if places == 0 {
        int.to_string()
    } else {
        format!("{int}.{frac:0places$}")
    }
}

/// Whether `r` agrees with a printed decimal to its printed precision.
///
/// Both rounding and truncation are accepted, since published tables mix the two.
#[must_use]
pub fn matches_printed(r: &Ratio<i64>, printed: &str) -> bool {
    let places = printed.split_once('.').map_or(0, |(_, f)| f.len());
    render_decimal(r, places) == printed || render_truncated(r, places) == printed
}
