//! Gram matrices of assignments and the magic affine space.
//!
//! A Gram matrix records which pairs of observables anticommute. For a proper Eulerian
//! hypergraph the valid Gram matrices form a subspace; the magic ones are a coset of a
//! hyperplane in it, cut out by the parity of an inversion sum over the context list.
//! Elements of the space are handled in coordinates over the free upper-triangular
//! entries (pairs of vertices that never share a context).

use std::fmt;

use thiserror::Error;

use crate::gf2::{self, BitMatrix, BitVec, Echelon};
use crate::hypergraph::Hypergraph;

/// Default cap on the nonmagic dimension enumerated by [`min_qubits`].
pub const DEFAULT_ENUMERATION_CAP: usize = 24;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum GramError {
    #[error("hypergraph is not proper Eulerian: {}", .0.join("; "))]
    NotProperEulerian(Vec<String>),
    #[error("matrix is {rows}x{cols}, expected {expected}x{expected}")]
    Shape {
        rows: usize,
        cols: usize,
        expected: usize,
    },
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("matrix has a nonzero diagonal entry at {0}")]
    NonzeroDiagonal(usize),
    #[error("matrix violates the validity conditions: {0}")]
    NotValid(String),
    #[error("hypergraph has no magic Gram matrix")]
    NoMagic,
    #[error("malformed Gram matrix: {0}")]
    Malformed(String),
}

/// Symmetric zero-diagonal matrix over GF(2).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GramMatrix(BitMatrix);

impl GramMatrix {
    pub fn new(m: BitMatrix) -> Result<Self, GramError> {
        if m.num_rows() != m.num_cols() {
            return Err(GramError::Shape {
                rows: m.num_rows(),
                cols: m.num_cols(),
                expected: m.num_rows(),
            });
        }
        if let Some(i) = (0..m.num_rows()).find(|&i| m.get(i, i)) {
            return Err(GramError::NonzeroDiagonal(i + 1));
        }
        if !m.is_symmetric() {
            return Err(GramError::NotSymmetric);
        }
        Ok(Self(m))
    }

    #[must_use]
    pub fn zeros(m: usize) -> Self {
        Self(BitMatrix::zeros(m, m))
    }

    #[must_use]
    pub fn size(&self) -> usize {
        self.0.num_rows()
    }

    #[must_use]
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.0.get(i, j)
    }

    #[must_use]
    pub fn matrix(&self) -> &BitMatrix {
        &self.0
    }

    #[must_use]
    pub fn row(&self, i: usize) -> &BitVec {
        self.0.row(i)
    }

    #[must_use]
    pub fn rank(&self) -> usize {
        gf2::rank(&self.0)
    }

    #[must_use]
    pub fn add(&self, other: &GramMatrix) -> GramMatrix {
        let mut m = self.0.clone();
        m.xor_assign(&other.0);
        GramMatrix(m)
    }

    /// JSON array of 0/1 rows.
    #[must_use]
    pub fn to_json(&self) -> String {
        let rows: Vec<String> = self
            .0
            .rows()
            .iter()
            .map(|r| {
                let bits: Vec<&str> = r.to_bools().iter().map(|&b| if b { "1" } else { "0" }).collect();
                format!("[{}]", bits.join(","))
            })
            .collect();
        format!("[\n  {}\n]", rows.join(",\n  "))
    }

    pub fn from_json(text: &str) -> Result<Self, GramError> {
        let rows: Vec<Vec<u8>> =
            serde_json::from_str(text).map_err(|e| GramError::Malformed(e.to_string()))?;
        if rows.iter().flatten().any(|&b| b > 1) {
            return Err(GramError::Malformed("entries must be 0 or 1".into()));
        }
        let n = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(GramError::Shape {
                rows: n,
                cols: bad.len(),
                expected: n,
            });
        }
        let m = BitMatrix::from_dense(&rows).map_err(|e| GramError::Malformed(e.to_string()))?;
        Self::new(m)
    }
}

impl fmt::Debug for GramMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gram{:?}", self.0)
    }
}

/// True iff no row is zero and no two rows are equal.
#[must_use]
pub fn is_reduced(g: &GramMatrix) -> bool {
    let rows = g.0.rows();
    if rows.iter().any(BitVec::is_zero) {
        return false;
    }
    let mut sorted: Vec<&BitVec> = rows.iter().collect();
    sorted.sort();
    sorted.windows(2).all(|w| w[0] != w[1])
}

/// Checks conditions (a) and (b) directly on the matrix.
pub fn check_valid(h: &Hypergraph, g: &GramMatrix) -> Result<(), GramError> {
    let m = h.vertex_count();
    if g.size() != m {
        return Err(GramError::Shape {
            rows: g.size(),
            cols: g.size(),
            expected: m,
        });
    }
    for (k, edge) in h.edges().iter().enumerate() {
        for &u in edge {
            for &v in edge {
                if u != v && g.get(u, v) {
                    return Err(GramError::NotValid(format!(
                        "vertices {} and {} share edge {} but anticommute",
                        u + 1,
                        v + 1,
                        k + 1
                    )));
                }
            }
        }
        let mut sum = BitVec::zeros(m);
        for &u in edge {
            sum.xor_assign(g.row(u));
        }
        if let Some(j) = sum.first_one() {
            return Err(GramError::NotValid(format!(
                "edge {} has odd anticommutation with vertex {}",
                k + 1,
                j + 1
            )));
        }
    }
    Ok(())
}

#[must_use]
pub fn is_valid_gram(h: &Hypergraph, g: &GramMatrix) -> bool {
    check_valid(h, g).is_ok()
}

/// Inversion-sum parity over an explicit context list.
///
/// `rank_of[v]` gives the position of vertex `v` in the chosen total order. Contexts are
/// taken in the given order and their vertices in the given order.
#[must_use]
pub fn inversion_parity(contexts: &[Vec<usize>], rank_of: &[usize], g: &GramMatrix) -> bool {
    let list: Vec<usize> = contexts.iter().flatten().copied().collect();
    let mut s = false;
    for (p, &a) in list.iter().enumerate() {
        for &b in &list[p + 1..] {
            if rank_of[a] > rank_of[b] && g.get(a, b) {
                s = !s;
            }
        }
    }
    s
}

/// Whether a valid Gram matrix is magic, using the stored edge order and natural vertex order.
pub fn is_magic_gram(h: &Hypergraph, g: &GramMatrix) -> Result<bool, GramError> {
    check_valid(h, g)?;
    let identity: Vec<usize> = (0..h.vertex_count()).collect();
    Ok(inversion_parity(h.edges(), &identity, g))
}

fn require_proper(h: &Hypergraph) -> Result<(), GramError> {
    let (ok, diagnostics) = h.is_proper_eulerian();
    if ok {
        Ok(())
    } else {
        Err(GramError::NotProperEulerian(diagnostics.problems()))
    }
}

/// The valid Gram space of a proper Eulerian hypergraph, in pair coordinates.
#[derive(Debug, Clone)]
pub struct GramSpace {
    vertex_count: usize,
    /// Free entries `(i, j)`, `i < j`, in lexicographic order.
    pairs: Vec<(usize, usize)>,
    basis: Vec<BitVec>,
    /// Linear functional on coordinates whose value is the magic parity.
    magic_functional: BitVec,
}

/// Computes the valid Gram space.
pub fn valid_gram_space(h: &Hypergraph) -> Result<GramSpace, GramError> {
    require_proper(h)?;
    let m = h.vertex_count();
    let co = h.cocontextual();
    let mut index = vec![vec![usize::MAX; m]; m];
    let mut pairs = Vec::new();
    for i in 0..m {
        for j in (i + 1)..m {
            if !co.get(i, j) {
                index[i][j] = pairs.len();
                index[j][i] = pairs.len();
                pairs.push((i, j));
            }
        }
    }
    let n = pairs.len();
    let mut equations = Vec::new();
    for edge in h.edges() {
        for j in 0..m {
            let mut eq = BitVec::zeros(n);
            for &i in edge {
                if i != j && index[i][j] != usize::MAX {
                    eq.flip(index[i][j]);
                }
            }
            if !eq.is_zero() {
                equations.push(eq);
            }
        }
    }
    let basis = if equations.is_empty() {
        (0..n).map(|t| BitVec::from_indices(n, [t])).collect()
    } else {
        let system = BitMatrix::from_rows(equations, n).expect("equal lengths");
        Echelon::new(&system).kernel()
    };

    // Magic functional: coefficient of a pair is the parity of its inversions in the
    // concatenated context list.
    let mut functional = BitVec::zeros(n);
    let mut seen_odd = vec![false; m];
    for a in h.occurrences() {
        for (b, &odd) in seen_odd.iter().enumerate().skip(a + 1) {
            if odd && index[a][b] != usize::MAX {
                functional.flip(index[a][b]);
            }
        }
        seen_odd[a] = !seen_odd[a];
    }
    Ok(GramSpace {
        vertex_count: m,
        pairs,
        basis,
        magic_functional: functional,
    })
}

impl GramSpace {
    #[must_use]
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    #[must_use]
    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    #[must_use]
    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// Basis vectors in pair coordinates.
    #[must_use]
    pub fn basis(&self) -> &[BitVec] {
        &self.basis
    }

    #[must_use]
    pub fn basis_matrices(&self) -> Vec<GramMatrix> {
        self.basis.iter().map(|b| self.to_matrix(b)).collect()
    }

    /// Magic parity of a coordinate vector.
    #[must_use]
    pub fn is_magic_coords(&self, coords: &BitVec) -> bool {
        self.magic_functional.dot(coords)
    }

    #[must_use]
    pub fn to_matrix(&self, coords: &BitVec) -> GramMatrix {
        let mut m = BitMatrix::zeros(self.vertex_count, self.vertex_count);
        for t in coords.iter_ones() {
            let (i, j) = self.pairs[t];
            m.set(i, j, true);
            m.set(j, i, true);
        }
        GramMatrix(m)
    }

    /// Pair coordinates of a matrix, or `None` if it has entries outside the free pairs.
    #[must_use]
    pub fn to_coords(&self, g: &GramMatrix) -> Option<BitVec> {
        let mut coords = BitVec::zeros(self.pairs.len());
        let mut count = 0;
        for (t, &(i, j)) in self.pairs.iter().enumerate() {
            if g.get(i, j) {
                coords.set(t, true);
                count += 1;
            }
        }
        let total: usize = g.matrix().rows().iter().map(BitVec::weight).sum();
        (total == 2 * count).then_some(coords)
    }

    /// Splits the space into a magic offset plus the nonmagic subspace.
    #[must_use]
    pub fn magic_affine_space(&self) -> Option<MagicSpace> {
        let pivot = self.basis.iter().position(|b| self.is_magic_coords(b))?;
        let offset = self.basis[pivot].clone();
        let nonmagic_basis = self
            .basis
            .iter()
            .enumerate()
            .filter(|&(t, _)| t != pivot)
            .map(|(_, b)| {
                if self.is_magic_coords(b) {
                    b.xor(&offset)
                } else {
                    b.clone()
                }
            })
            .collect();
        Some(MagicSpace {
            space: self.clone(),
            offset,
            nonmagic_basis,
        })
    }
}

/// The magic Gram matrices: `offset + span(nonmagic_basis)`.
#[derive(Debug, Clone)]
pub struct MagicSpace {
    space: GramSpace,
    offset: BitVec,
    nonmagic_basis: Vec<BitVec>,
}

/// Computes the magic affine space, or `None` if no magic Gram matrix exists.
pub fn magic_affine_space(h: &Hypergraph) -> Result<Option<MagicSpace>, GramError> {
    Ok(valid_gram_space(h)?.magic_affine_space())
}

/// Where a magic Gram matrix fails to be reduced. Indices are 0-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Defect {
    ZeroRow(usize),
    EqualRows(usize, usize),
}

impl MagicSpace {
    #[must_use]
    pub fn space(&self) -> &GramSpace {
        &self.space
    }

    #[must_use]
    pub fn offset(&self) -> &BitVec {
        &self.offset
    }

    #[must_use]
    pub fn offset_matrix(&self) -> GramMatrix {
        self.space.to_matrix(&self.offset)
    }

    #[must_use]
    pub fn nonmagic_basis(&self) -> &[BitVec] {
        &self.nonmagic_basis
    }

    /// Dimension of the nonmagic subspace; there are `2^dimension` magic matrices.
    #[must_use]
    pub fn dimension(&self) -> usize {
        self.nonmagic_basis.len()
    }

    /// Coordinates of the magic element with the given coefficients on the nonmagic basis.
    #[must_use]
    pub fn element(&self, coefficients: &BitVec) -> BitVec {
        let mut x = self.offset.clone();
        for t in coefficients.iter_ones() {
            x.xor_assign(&self.nonmagic_basis[t]);
        }
        x
    }

    /// Magic Gram matrices in Gray-code order over the nonmagic basis, starting at the offset.
    ///
    /// Yields at most `2^min(dimension, cap)` elements.
    pub fn iter_capped(&self, cap: usize) -> impl Iterator<Item = BitVec> + '_ {
        let d = self.dimension().min(cap).min(63);
        let total = 1u64 << d;
        let mut current = self.offset.clone();
        let mut step = 0u64;
        std::iter::from_fn(move || {
            if step >= total {
                return None;
            }
            if step > 0 {
                let t = step.trailing_zeros() as usize;
                current.xor_assign(&self.nonmagic_basis[t]);
            }
            step += 1;
            Some(current.clone())
        })
    }

    /// Rows of each basis element as `u64` words, for `m <= 64`.
    fn word_rows(&self, coords: &BitVec) -> Vec<u64> {
        let m = self.space.vertex_count;
        let mut rows = vec![0u64; m];
        for t in coords.iter_ones() {
            let (i, j) = self.space.pairs[t];
            rows[i] ^= 1 << j;
            rows[j] ^= 1 << i;
        }
        rows
    }

    /// Linear map from nonmagic coefficients to a chosen row combination.
    ///
    /// Returns the image of the offset and the images of the basis vectors under
    /// `coords ↦ Σ_{i ∈ rows} row_i(matrix(coords))`.
    fn row_images(&self, rows: &[usize]) -> (BitVec, Vec<BitVec>) {
        let image = |coords: &BitVec| {
            let g = self.space.to_matrix(coords);
            let mut acc = BitVec::zeros(self.space.vertex_count);
            for &i in rows {
                acc.xor_assign(g.row(i));
            }
            acc
        };
        (
            image(&self.offset),
            self.nonmagic_basis.iter().map(image).collect(),
        )
    }

    /// Finds a magic Gram matrix with a zero row or two equal rows, if one exists.
    ///
    /// Each defect is an affine condition, so each check is a single membership test.
    /// Zero rows are tried first, then pairs in lexicographic order.
    #[must_use]
    pub fn find_reducible(&self) -> Option<(Defect, BitVec)> {
        let m = self.space.vertex_count;
        let candidates = (0..m)
            .map(|i| (Defect::ZeroRow(i), vec![i]))
            .chain((0..m).flat_map(|i| ((i + 1)..m).map(move |j| (Defect::EqualRows(i, j), vec![i, j]))));
        for (defect, rows) in candidates {
            let (target, images) = self.row_images(&rows);
            if target.is_zero() {
                return Some((defect, self.offset.clone()));
            }
            if images.is_empty() {
                continue;
            }
            let system = BitMatrix::from_rows(images, m).expect("equal lengths");
            if let Some(x) = gf2::solve_row_combination(&system, &target).expect("lengths agree") {
                return Some((defect, self.element(&x)));
            }
        }
        None
    }
}

/// Whether every magic Gram matrix of `h` is reduced.
pub fn is_minimal(h: &Hypergraph) -> Result<bool, GramError> {
    let space = magic_affine_space(h)?.ok_or(GramError::NoMagic)?;
    Ok(space.find_reducible().is_none())
}

/// Result of a minimum-rank search over the magic Gram matrices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinQubits {
    pub qubits: usize,
    pub rank: usize,
    /// Every magic Gram matrix was examined.
    pub exact: bool,
    /// Coordinates of a magic Gram matrix achieving `rank`.
    pub witness: BitVec,
    pub examined: u64,
    pub dimension: usize,
}

/// Rank of `rows`, abandoning the computation once it reaches `stop`.
fn rank_at_most(rows: &mut [u64], stop: usize) -> usize {
    let mut rank = 0;
    for i in 0..rows.len() {
        let pivot_row = rows[i];
        if pivot_row == 0 {
            continue;
        }
        rank += 1;
        if rank >= stop {
            return rank;
        }
        let low = pivot_row & pivot_row.wrapping_neg();
        for row in rows[i + 1..].iter_mut() {
            if *row & low != 0 {
                *row ^= pivot_row;
            }
        }
    }
    rank
}

/// Minimum number of qubits of a Pauli magic assignment, as half the minimum rank.
///
/// Exact when the nonmagic dimension is at most `cap`; otherwise the minimum over the
/// first `2^cap` elements, flagged inexact.
pub fn min_qubits(h: &Hypergraph, cap: usize) -> Result<MinQubits, GramError> {
    let space = magic_affine_space(h)?.ok_or(GramError::NoMagic)?;
    Ok(space.min_qubits(cap))
}

impl MagicSpace {
    pub fn min_qubits(&self, cap: usize) -> MinQubits {
        let m = self.space.vertex_count;
        let d = self.dimension();
        let exact = d <= cap;
        if m > 64 {
            let mut best: Option<(usize, BitVec)> = None;
            let mut examined = 0;
            for x in self.iter_capped(cap) {
                examined += 1;
                let r = self.space.to_matrix(&x).rank();
                if best.as_ref().is_none_or(|(b, _)| r < *b) {
                    best = Some((r, x));
                }
            }
            let (rank, witness) = best.expect("at least the offset");
            return MinQubits {
                qubits: rank / 2,
                rank,
                exact,
                witness,
                examined,
                dimension: d,
            };
        }
        let steps = d.min(cap).min(63);
        let basis_rows: Vec<Vec<u64>> = self.nonmagic_basis[..steps]
            .iter()
            .map(|b| self.word_rows(b))
            .collect();
        let mut current = self.word_rows(&self.offset);
        let mut scratch = current.clone();
        let mut coefficients = 0u64;
        let mut best_rank = rank_at_most(&mut scratch, usize::MAX);
        let mut best_coefficients = 0u64;
        let total = 1u64 << steps;
        for step in 1..total {
            let t = step.trailing_zeros() as usize;
            coefficients ^= 1 << t;
            for (row, delta) in current.iter_mut().zip(&basis_rows[t]) {
                *row ^= delta;
            }
            scratch.copy_from_slice(&current);
            let r = rank_at_most(&mut scratch, best_rank);
            if r < best_rank {
                best_rank = r;
                best_coefficients = coefficients;
            }
        }
        let witness = self.element(&BitVec::from_word(d, best_coefficients));
        MinQubits {
            qubits: best_rank / 2,
            rank: best_rank,
            exact,
            witness,
            examined: total,
            dimension: d,
        }
    }
}
