//! Synthesis of Pauli assignments realizing a given Gram matrix.
//!
//! A row basis `B` of the Gram matrix is embedded into `Z_2^{2k}` by backtracking, one
//! vector per basis row, so that symplectic products match the submatrix `M_B`. Every
//! other vertex is then the linear combination of basis images matching its row.
//! Candidates at each depth form an affine space, enumerated in lexicographic order.

use thiserror::Error;

use crate::gf2::{self, BitMatrix, BitVec};
use crate::gram::{check_valid, GramError, GramMatrix};
use crate::hypergraph::Hypergraph;
use crate::pauli::{verify_assignment, Assignment, DEFAULT_MAX_QUBITS};

/// Default cap on backtracking nodes per call.
pub const DEFAULT_NODE_BUDGET: u64 = 50_000_000;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum AssignError {
    #[error(transparent)]
    Gram(#[from] GramError),
    #[error("Gram matrix has rank {rank}, which needs at least {} qubits, got {qubits}", rank.div_ceil(2))]
    RankTooLarge { rank: usize, qubits: usize },
    #[error("qubit count {qubits} outside 1..={max}")]
    QubitRange { qubits: usize, max: usize },
    #[error("Gram submatrix on the row basis {basis:?} is singular")]
    SingularBasis { basis: Vec<usize> },
    #[error("search budget of {nodes} nodes exhausted")]
    BudgetExhausted { nodes: u64 },
    #[error("no embedding exists")]
    NoEmbedding,
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
}

#[derive(Debug, Clone, Copy)]
pub struct SynthesisOptions {
    pub node_budget: u64,
    pub max_qubits: usize,
}

impl Default for SynthesisOptions {
    fn default() -> Self {
        Self {
            node_budget: DEFAULT_NODE_BUDGET,
            max_qubits: DEFAULT_MAX_QUBITS,
        }
    }
}

/// Basis rows and how every vertex decomposes over them.
#[derive(Debug, Clone)]
struct Plan {
    qubits: usize,
    basis: Vec<usize>,
    /// `gram_b[i]` is row `i` of `M_B` as a bitmask over basis positions.
    gram_b: Vec<u64>,
    /// Coefficients of each vertex row over the basis rows, as bitmasks.
    combos: Vec<u64>,
}

fn plan(h: &Hypergraph, g: &GramMatrix, k: usize, opts: &SynthesisOptions) -> Result<Plan, AssignError> {
    let max = opts.max_qubits.min(32);
    if k == 0 || k > max {
        return Err(AssignError::QubitRange { qubits: k, max });
    }
    check_valid(h, g)?;
    let rows = g.matrix().rows();
    let basis = gf2::independent_subset(rows);
    if basis.len() > 2 * k {
        return Err(AssignError::RankTooLarge {
            rank: basis.len(),
            qubits: k,
        });
    }
    let sub = g.matrix().submatrix(&basis, &basis);
    if gf2::rank(&sub) != basis.len() {
        return Err(AssignError::SingularBasis {
            basis: basis.iter().map(|b| b + 1).collect(),
        });
    }
    let gram_b = (0..basis.len())
        .map(|i| {
            (0..basis.len()).fold(0u64, |acc, j| if sub.get(i, j) { acc | 1 << j } else { acc })
        })
        .collect();
    let basis_rows = BitMatrix::from_rows(basis.iter().map(|&b| rows[b].clone()).collect(), g.size())
        .expect("rows share a length");
    let combos = rows
        .iter()
        .map(|r| {
            let x = gf2::solve_row_combination(&basis_rows, r)
                .expect("lengths agree")
                .expect("every row lies in the span of a row basis");
            x.iter_ones().fold(0u64, |acc, i| acc | 1 << i)
        })
        .collect();
    Ok(Plan {
        qubits: k,
        basis,
        gram_b,
        combos,
    })
}

#[inline]
fn swap_halves(w: u64, k: usize) -> u64 {
    let mask = if k == 32 { u64::from(u32::MAX) } else { (1u64 << k) - 1 };
    ((w >> k) & mask) | ((w & mask) << k)
}

/// Symplectic product of two packed vectors of length 2k.
#[cfg(test)]
fn omega(a: u64, b: u64, k: usize) -> bool {
    (a & swap_halves(b, k)).count_ones() % 2 == 1
}

/// Bit position of coordinate `c` (coordinate 0 is most significant in the lex order).
#[inline]
fn bit(c: usize) -> u64 {
    1u64 << c
}

/// Affine solution set `{v : Ω(v, w_i) = t_i}` in lexicographic order.
#[derive(Debug, Clone)]
struct Candidates {
    particular: u64,
    /// Null vectors, one per free coordinate, most significant coordinate first.
    free: Vec<u64>,
    next: u64,
    total: u64,
}

impl Candidates {
    /// Returns `None` if the system is inconsistent.
    fn new(images: &[u64], targets: &[bool], k: usize) -> Option<Self> {
        let n = 2 * k;
        // Row-reduce with pivots on the highest coordinate, so each pivot coordinate is a
        // function of lower free coordinates only. Then lex order on solutions is the
        // order of the free coefficients.
        let mut rows: Vec<(u64, bool)> = images
            .iter()
            .zip(targets)
            .map(|(&w, &t)| (swap_halves(w, k), t))
            .collect();
        let mut pivots: Vec<(usize, u64, bool)> = Vec::new();
        for c in (0..n).rev() {
            let Some(pos) = rows.iter().position(|(r, _)| r & bit(c) != 0) else {
                continue;
            };
            let (pr, pt) = rows.swap_remove(pos);
            for (r, t) in rows.iter_mut() {
                if *r & bit(c) != 0 {
                    *r ^= pr;
                    *t ^= pt;
                }
            }
            for (_, r, t) in pivots.iter_mut() {
                if *r & bit(c) != 0 {
                    *r ^= pr;
                    *t ^= pt;
                }
            }
            pivots.push((c, pr, pt));
        }
        if rows.iter().any(|&(r, t)| r == 0 && t) {
            return None;
        }
        let pivot_mask = pivots.iter().fold(0u64, |acc, &(c, _, _)| acc | bit(c));
        let particular = pivots
            .iter()
            .fold(0u64, |acc, &(c, _, t)| if t { acc | bit(c) } else { acc });
        let free: Vec<u64> = (0..n)
            .filter(|&c| pivot_mask & bit(c) == 0)
            .map(|f| {
                pivots
                    .iter()
                    .fold(bit(f), |acc, &(c, r, _)| if r & bit(f) != 0 { acc | bit(c) } else { acc })
            })
            .collect();
        let total = if free.len() >= 64 { u64::MAX } else { 1u64 << free.len() };
        Some(Self {
            particular,
            free,
            next: 0,
            total,
        })
    }
}

impl Iterator for Candidates {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        if self.next >= self.total {
            return None;
        }
        let t = self.next;
        self.next += 1;
        let f = self.free.len();
        let mut v = self.particular;
        for (j, nv) in self.free.iter().enumerate() {
            if (t >> (f - 1 - j)) & 1 == 1 {
                v ^= nv;
            }
        }
        Some(v)
    }
}

/// Reduces `v` against rows kept as `(pivot bit, row)`, each pivot bit in one row only.
fn reduce_against(basis: &[(u64, u64)], mut v: u64) -> u64 {
    for &(low, row) in basis {
        if v & low != 0 {
            v ^= row;
        }
    }
    v
}

/// Depth-first search over embeddings of the basis rows, yielding complete assignments.
#[derive(Debug, Clone)]
pub struct AssignmentStream {
    plan: Plan,
    stack: Vec<Candidates>,
    chosen: Vec<u64>,
    echelon: Vec<Vec<(u64, u64)>>,
    nodes: u64,
    budget: u64,
    remaining: usize,
    exhausted_budget: bool,
    done: bool,
    failure: Option<AssignError>,
    h: Hypergraph,
    g: GramMatrix,
}

impl AssignmentStream {
    /// True if the stream stopped because the node budget ran out.
    #[must_use]
    pub fn budget_exhausted(&self) -> bool {
        self.exhausted_budget
    }

    #[must_use]
    pub fn nodes(&self) -> u64 {
        self.nodes
    }

    /// An internal-consistency failure, if one stopped the stream.
    #[must_use]
    pub fn failure(&self) -> Option<&AssignError> {
        self.failure.as_ref()
    }

    fn open_level(&self) -> Candidates {
        let depth = self.chosen.len();
        let targets: Vec<bool> = (0..depth)
            .map(|i| self.plan.gram_b[depth] >> i & 1 == 1)
            .collect();
        Candidates::new(&self.chosen, &targets, self.plan.qubits)
            .expect("independent images give a consistent system")
    }

    fn build(&self) -> Result<Assignment, AssignError> {
        let k = self.plan.qubits;
        let vectors: Vec<BitVec> = self
            .plan
            .combos
            .iter()
            .map(|&c| {
                let mut w = 0u64;
                for (i, img) in self.chosen.iter().enumerate() {
                    if c >> i & 1 == 1 {
                        w ^= img;
                    }
                }
                BitVec::from_word(2 * k, w)
            })
            .collect();
        let a = Assignment::from_symplectic(&vectors);
        if a.gram() != *self.g.matrix() {
            return Err(AssignError::Inconsistent(
                "synthesized Gram matrix differs from the target".into(),
            ));
        }
        let report = verify_assignment(&self.h, &a);
        if !report.valid {
            return Err(AssignError::Inconsistent(format!(
                "synthesized assignment is invalid: {}",
                report.violations[0]
            )));
        }
        Ok(a)
    }
}

impl Iterator for AssignmentStream {
    type Item = Assignment;

    fn next(&mut self) -> Option<Assignment> {
        if self.done || self.remaining == 0 {
            return None;
        }
        let r = self.plan.basis.len();
        if r == 0 {
            // Zero Gram matrix: the all-identity assignment is the only one.
            self.done = true;
            self.remaining -= 1;
            return match self.build() {
                Ok(a) => Some(a),
                Err(e) => {
                    self.failure = Some(e);
                    None
                }
            };
        }
        if self.stack.is_empty() && self.chosen.is_empty() && self.nodes == 0 {
            let first = self.open_level();
            self.stack.push(first);
            self.echelon.push(Vec::new());
        }
        loop {
            if self.stack.is_empty() {
                self.done = true;
                return None;
            }
            let depth = self.stack.len() - 1;
            // Drop the vector chosen at this depth on a previous visit.
            self.chosen.truncate(depth);
            self.echelon.truncate(depth + 1);
            let Some(v) = self.stack[depth].next() else {
                self.stack.pop();
                self.echelon.truncate(depth);
                continue;
            };
            self.nodes += 1;
            if self.nodes > self.budget {
                self.exhausted_budget = true;
                self.done = true;
                return None;
            }
            // Dependent images can never complete: M_B is invertible.
            let reduced = reduce_against(&self.echelon[depth], v);
            if reduced == 0 {
                continue;
            }
            self.chosen.push(v);
            if self.chosen.len() == r {
                let result = self.build();
                match result {
                    Ok(a) => {
                        self.remaining -= 1;
                        if self.remaining == 0 {
                            self.done = true;
                        }
                        return Some(a);
                    }
                    Err(e) => {
                        self.failure = Some(e);
                        self.done = true;
                        return None;
                    }
                }
            }
            let mut next_echelon = self.echelon[depth].clone();
            let low = reduced & reduced.wrapping_neg();
            for (_, row) in next_echelon.iter_mut() {
                if *row & low != 0 {
                    *row ^= reduced;
                }
            }
            next_echelon.push((low, reduced));
            self.echelon.push(next_echelon);
            let next_level = self.open_level();
            self.stack.push(next_level);
        }
    }
}

/// Lazily enumerates up to `limit` distinct assignments realizing `g`, in a fixed order.
pub fn enumerate_assignments(
    h: &Hypergraph,
    g: &GramMatrix,
    k: usize,
    limit: usize,
    opts: &SynthesisOptions,
) -> Result<AssignmentStream, AssignError> {
    let plan = plan(h, g, k, opts)?;
    Ok(AssignmentStream {
        plan,
        stack: Vec::new(),
        chosen: Vec::new(),
        echelon: Vec::new(),
        nodes: 0,
        budget: opts.node_budget,
        remaining: limit,
        exhausted_budget: false,
        done: false,
        failure: None,
        h: h.clone(),
        g: g.clone(),
    })
}

/// First assignment of the stream, with diagnostics if there is none.
pub fn assignment_from_gram_with(
    h: &Hypergraph,
    g: &GramMatrix,
    k: usize,
    opts: &SynthesisOptions,
) -> Result<Assignment, AssignError> {
    let mut stream = enumerate_assignments(h, g, k, 1, opts)?;
    match stream.next() {
        Some(a) => Ok(a),
        None => Err(match stream.failure {
            Some(e) => e,
            None if stream.exhausted_budget => AssignError::BudgetExhausted {
                nodes: opts.node_budget,
            },
            None => AssignError::NoEmbedding,
        }),
    }
}

/// Synthesizes a k-qubit assignment whose Gram matrix is `g`.
pub fn assignment_from_gram(h: &Hypergraph, g: &GramMatrix, k: usize) -> Result<Assignment, AssignError> {
    assignment_from_gram_with(h, g, k, &SynthesisOptions::default())
}
