//! Dense linear algebra over GF(2).
//!
//! Vectors are bit-packed into `u64` words, coordinate `i` living in bit `i % 64`
//! of word `i / 64`. Matrices are row-major lists of [`BitVec`]. Every routine is
//! deterministic: pivots are always chosen as the lowest available index.
//!
//! The minimum-weight coset search picks between two exact strategies: Gray-code
//! enumeration of the span when its dimension is the smaller one, and a breadth-first
//! search over syndromes when the codimension is smaller.

use std::cmp::Ordering;
use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

/// Default hard cap on `min(dim, codim)` for [`coset_min_weight`].
pub const DEFAULT_COSET_CAP: usize = 30;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Gf2Error {
    #[error("length mismatch: expected {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },
    #[error("coset too large: search dimension {dimension} exceeds cap {cap} (best upper bound {upper_bound})")]
    CosetTooLarge {
        dimension: usize,
        cap: usize,
        upper_bound: usize,
        witness: BitVec,
    },
}

/// A vector over GF(2).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitVec {
    words: Vec<u64>,
    len: usize,
}

#[inline]
fn word_count(len: usize) -> usize {
    len.div_ceil(64)
}

impl BitVec {
    #[must_use]
    pub fn zeros(len: usize) -> Self {
        Self {
            words: vec![0; word_count(len)],
            len,
        }
    }

    #[must_use]
    pub fn ones(len: usize) -> Self {
        let mut v = Self::zeros(len);
        for i in 0..len {
            v.set(i, true);
        }
        v
    }

    /// Vector of length `len` with the given coordinates set to one.
    ///
    /// Repeated indices toggle, so this is the GF(2) sum of unit vectors.
    #[must_use]
    pub fn from_indices(len: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut v = Self::zeros(len);
        for i in indices {
            v.flip(i);
        }
        v
    }

    #[must_use]
    pub fn from_bools(bits: &[bool]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            v.set(i, b);
        }
        v
    }

    /// Builds a vector from a word of at most 64 coordinates.
    #[must_use]
    pub fn from_word(len: usize, word: u64) -> Self {
        assert!(len <= 64, "from_word supports at most 64 coordinates");
        let mask = if len == 64 { u64::MAX } else { (1u64 << len) - 1 };
        let mut v = Self::zeros(len);
        if len > 0 {
            v.words[0] = word & mask;
        }
        v
    }

    /// Parses a string of `0`/`1` characters; whitespace is ignored.
    pub fn parse_bits(s: &str) -> Option<Self> {
        let bits: Option<Vec<bool>> = s
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c {
                '0' => Some(false),
                '1' => Some(true),
                _ => None,
            })
            .collect();
        bits.map(|b| Self::from_bools(&b))
    }

    #[must_use]
    pub fn len(&self) -> usize {
        self.len
    }

    #[must_use]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[must_use]
    pub fn words(&self) -> &[u64] {
        &self.words
    }

    /// The first word; only meaningful when `len <= 64`.
    #[must_use]
    pub fn low_word(&self) -> u64 {
        self.words.first().copied().unwrap_or(0)
    }

    #[inline]
    #[must_use]
    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit index {i} out of range for length {}", self.len);
        (self.words[i / 64] >> (i % 64)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit index {i} out of range for length {}", self.len);
        let mask = 1u64 << (i % 64);
        if value {
            self.words[i / 64] |= mask;
        } else {
            self.words[i / 64] &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len, "bit index {i} out of range for length {}", self.len);
        self.words[i / 64] ^= 1u64 << (i % 64);
    }

    /// Hamming weight.
    #[must_use]
    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[must_use]
    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn xor_assign(&mut self, other: &BitVec) {
        assert_eq!(self.len, other.len, "xor of vectors with different lengths");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    #[must_use]
    pub fn xor(&self, other: &BitVec) -> BitVec {
        let mut out = self.clone();
        out.xor_assign(other);
        out
    }

    /// Standard inner product over GF(2).
    #[must_use]
    pub fn dot(&self, other: &BitVec) -> bool {
        assert_eq!(self.len, other.len, "dot of vectors with different lengths");
        let ones: u32 = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones())
            .sum();
        ones % 2 == 1
    }

    /// Indices of the nonzero coordinates, ascending.
    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut word = w;
            std::iter::from_fn(move || {
                if word == 0 {
                    None
                } else {
                    let t = word.trailing_zeros() as usize;
                    word &= word - 1;
                    Some(wi * 64 + t)
                }
            })
        })
    }

    #[must_use]
    pub fn first_one(&self) -> Option<usize> {
        self.iter_ones().next()
    }

    #[must_use]
    pub fn to_bools(&self) -> Vec<bool> {
        (0..self.len).map(|i| self.get(i)).collect()
    }

    /// Concatenation `self | other`.
    #[must_use]
    pub fn concat(&self, other: &BitVec) -> BitVec {
        let mut out = BitVec::zeros(self.len + other.len);
        for i in self.iter_ones() {
            out.set(i, true);
        }
        for i in other.iter_ones() {
            out.set(self.len + i, true);
        }
        out
    }

    /// Coordinates `start..end` as a new vector.
    #[must_use]
    pub fn slice(&self, start: usize, end: usize) -> BitVec {
        assert!(start <= end && end <= self.len);
        let mut out = BitVec::zeros(end - start);
        for i in self.iter_ones().filter(|&i| i >= start && i < end) {
            out.set(i - start, true);
        }
        out
    }
}

/// Lexicographic order on coordinate vectors: coordinate 0 is most significant
/// and `0 < 1`. Vectors of different length compare by length first.
impl Ord for BitVec {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len.cmp(&other.len).then_with(|| {
            for (a, b) in self.words.iter().zip(&other.words) {
                let diff = a ^ b;
                if diff != 0 {
                    let first = diff.trailing_zeros();
                    return if (a >> first) & 1 == 1 {
                        Ordering::Greater
                    } else {
                        Ordering::Less
                    };
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for BitVec {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVec({self})")
    }
}

/// A dense matrix over GF(2), stored row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    rows: Vec<BitVec>,
    cols: usize,
}

impl BitMatrix {
    #[must_use]
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows: vec![BitVec::zeros(cols); rows],
            cols,
        }
    }

    #[must_use]
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn from_rows(rows: Vec<BitVec>, cols: usize) -> Result<Self, Gf2Error> {
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Gf2Error::LengthMismatch {
                expected: cols,
                actual: bad.len(),
            });
        }
        Ok(Self { rows, cols })
    }

    /// Builds a matrix from nested 0/1 rows. All rows must have equal length.
    pub fn from_dense<R: AsRef<[u8]>>(rows: &[R]) -> Result<Self, Gf2Error> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let vecs = rows
            .iter()
            .map(|r| BitVec::from_bools(&r.as_ref().iter().map(|&b| b & 1 == 1).collect::<Vec<_>>()))
            .collect();
        Self::from_rows(vecs, cols)
    }

    #[must_use]
    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    #[must_use]
    pub fn num_cols(&self) -> usize {
        self.cols
    }

    #[must_use]
    pub fn get(&self, r: usize, c: usize) -> bool {
        self.rows[r].get(c)
    }

    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        self.rows[r].set(c, value);
    }

    pub fn flip(&mut self, r: usize, c: usize) {
        self.rows[r].flip(c);
    }

    #[must_use]
    pub fn row(&self, r: usize) -> &BitVec {
        &self.rows[r]
    }

    #[must_use]
    pub fn rows(&self) -> &[BitVec] {
        &self.rows
    }

    #[must_use]
    pub fn into_rows(self) -> Vec<BitVec> {
        self.rows
    }

    pub fn xor_assign(&mut self, other: &BitMatrix) {
        assert_eq!(self.rows.len(), other.rows.len());
        assert_eq!(self.cols, other.cols);
        for (a, b) in self.rows.iter_mut().zip(&other.rows) {
            a.xor_assign(b);
        }
    }

    #[must_use]
    pub fn transpose(&self) -> BitMatrix {
        let mut t = BitMatrix::zeros(self.cols, self.rows.len());
        for (r, row) in self.rows.iter().enumerate() {
            for c in row.iter_ones() {
                t.set(c, r, true);
            }
        }
        t
    }

    #[must_use]
    pub fn is_symmetric(&self) -> bool {
        self.rows.len() == self.cols && *self == self.transpose()
    }

    #[must_use]
    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(BitVec::is_zero)
    }

    /// `self · v` for a column vector `v`.
    pub fn mul_vec(&self, v: &BitVec) -> Result<BitVec, Gf2Error> {
        if v.len() != self.cols {
            return Err(Gf2Error::LengthMismatch {
                expected: self.cols,
                actual: v.len(),
            });
        }
        Ok(BitVec::from_bools(&self.rows.iter().map(|r| r.dot(v)).collect::<Vec<_>>()))
    }

    /// `xᵀ · self` for a row-combination vector `x`.
    pub fn combine_rows(&self, x: &BitVec) -> Result<BitVec, Gf2Error> {
        if x.len() != self.rows.len() {
            return Err(Gf2Error::LengthMismatch {
                expected: self.rows.len(),
                actual: x.len(),
            });
        }
        let mut out = BitVec::zeros(self.cols);
        for i in x.iter_ones() {
            out.xor_assign(&self.rows[i]);
        }
        Ok(out)
    }

    /// Submatrix on the given row and column index lists.
    #[must_use]
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> BitMatrix {
        let mut out = BitMatrix::zeros(rows.len(), cols.len());
        for (ri, &r) in rows.iter().enumerate() {
            for (ci, &c) in cols.iter().enumerate() {
                if self.get(r, c) {
                    out.set(ri, ci, true);
                }
            }
        }
        out
    }

    #[must_use]
    pub fn rank(&self) -> usize {
        rank(self)
    }

    /// Reduced row echelon form.
    #[must_use]
    pub fn echelon(&self) -> Echelon {
        Echelon::new(self)
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{} [", self.rows.len(), self.cols)?;
        for r in &self.rows {
            writeln!(f, "  {r}")?;
        }
        write!(f, "]")
    }
}

/// Reduced row echelon form of a matrix. Pivot rows come first, in increasing pivot column.
#[derive(Debug, Clone)]
pub struct Echelon {
    /// Nonzero rows of the reduced form.
    pub rows: Vec<BitVec>,
    /// Pivot column of each row in `rows`.
    pub pivots: Vec<usize>,
    pub cols: usize,
}

impl Echelon {
    #[must_use]
    pub fn new(m: &BitMatrix) -> Self {
        let mut rows: Vec<BitVec> = m.rows().to_vec();
        let mut pivots = Vec::new();
        let mut next = 0;
        for col in 0..m.num_cols() {
            let Some(found) = (next..rows.len()).find(|&r| rows[r].get(col)) else {
                continue;
            };
            rows.swap(next, found);
            let pivot_row = rows[next].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r != next && row.get(col) {
                    row.xor_assign(&pivot_row);
                }
            }
            pivots.push(col);
            next += 1;
            if next == rows.len() {
                break;
            }
        }
        rows.truncate(next);
        Self {
            rows,
            pivots,
            cols: m.num_cols(),
        }
    }

    #[must_use]
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the pivot rows; the result is zero iff `v` is in the row space.
    #[must_use]
    pub fn reduce(&self, v: &BitVec) -> BitVec {
        let mut out = v.clone();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if out.get(p) {
                out.xor_assign(row);
            }
        }
        out
    }

    /// Basis of `{v : m·v = 0}`, one vector per free column in increasing order.
    #[must_use]
    pub fn kernel(&self) -> Vec<BitVec> {
        let mut is_pivot = vec![false; self.cols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = BitVec::zeros(self.cols);
                v.set(free, true);
                for (row, &p) in self.rows.iter().zip(&self.pivots) {
                    if row.get(free) {
                        v.set(p, true);
                    }
                }
                v
            })
            .collect()
    }
}

/// GF(2) rank.
#[must_use]
pub fn rank(m: &BitMatrix) -> usize {
    if m.num_cols() <= 64 {
        let mut words: Vec<u64> = m.rows().iter().map(BitVec::low_word).collect();
        return rank_of_words(&mut words);
    }
    Echelon::new(m).rank()
}

/// Rank of a matrix whose rows fit in single words. The slice is clobbered.
#[must_use]
pub fn rank_of_words(rows: &mut [u64]) -> usize {
    let mut rank = 0;
    for i in 0..rows.len() {
        let pivot_row = rows[i];
        if pivot_row == 0 {
            continue;
        }
        rank += 1;
        let low = pivot_row & pivot_row.wrapping_neg();
        for row in rows[i + 1..].iter_mut() {
            if *row & low != 0 {
                *row ^= pivot_row;
            }
        }
    }
    rank
}

/// Basis of the null space `{v : m·v = 0}`.
#[must_use]
pub fn null_space_basis(m: &BitMatrix) -> Vec<BitVec> {
    Echelon::new(m).kernel()
}

/// Whether `v` is a GF(2) combination of the rows of `m`.
pub fn in_row_space(m: &BitMatrix, v: &BitVec) -> Result<bool, Gf2Error> {
    if v.len() != m.num_cols() {
        return Err(Gf2Error::LengthMismatch {
            expected: m.num_cols(),
            actual: v.len(),
        });
    }
    Ok(Echelon::new(m).reduce(v).is_zero())
}

/// Finds `x` with `xᵀ·m = v`, if one exists.
pub fn solve_row_combination(m: &BitMatrix, v: &BitVec) -> Result<Option<BitVec>, Gf2Error> {
    if v.len() != m.num_cols() {
        return Err(Gf2Error::LengthMismatch {
            expected: m.num_cols(),
            actual: v.len(),
        });
    }
    // Row-reduce [m | I] and read the combination off the identity block.
    let n = m.num_rows();
    let augmented: Vec<BitVec> = m
        .rows()
        .iter()
        .enumerate()
        .map(|(i, r)| r.concat(&BitVec::from_indices(n, [i])))
        .collect();
    let mut reducer = RowReducer::new(m.num_cols() + n);
    for row in augmented {
        reducer.insert_masked(row, m.num_cols());
    }
    let target = v.concat(&BitVec::zeros(n));
    let residual = reducer.reduce_masked(&target, m.num_cols());
    if !residual.slice(0, m.num_cols()).is_zero() {
        return Ok(None);
    }
    Ok(Some(residual.slice(m.num_cols(), m.num_cols() + n)))
}

/// An independent basis for the span of `vectors` (a subset of them, in order).
#[must_use]
pub fn independent_subset(vectors: &[BitVec]) -> Vec<usize> {
    let Some(first) = vectors.first() else {
        return Vec::new();
    };
    let mut reducer = RowReducer::new(first.len());
    vectors
        .iter()
        .enumerate()
        .filter_map(|(i, v)| reducer.insert(v.clone()).then_some(i))
        .collect()
}

/// Incremental Gaussian elimination keyed on the first `mask_len` coordinates.
struct RowReducer {
    rows: Vec<(usize, BitVec)>,
    len: usize,
}

impl RowReducer {
    fn new(len: usize) -> Self {
        Self {
            rows: Vec::new(),
            len,
        }
    }

    fn reduce_masked(&self, v: &BitVec, mask_len: usize) -> BitVec {
        let mut out = v.clone();
        for (p, row) in &self.rows {
            if *p < mask_len && out.get(*p) {
                out.xor_assign(row);
            }
        }
        out
    }

    fn insert_masked(&mut self, v: BitVec, mask_len: usize) -> bool {
        debug_assert_eq!(v.len(), self.len);
        let reduced = self.reduce_masked(&v, mask_len);
        let lead = reduced.iter_ones().next().filter(|&p| p < mask_len);
        match lead {
            Some(p) => {
                for (_, row) in &mut self.rows {
                    if row.get(p) {
                        row.xor_assign(&reduced);
                    }
                }
                self.rows.push((p, reduced));
                true
            }
            None => false,
        }
    }

    fn insert(&mut self, v: BitVec) -> bool {
        let len = self.len;
        self.insert_masked(v, len)
    }
}

/// Result of a minimum-weight coset search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetMinimum {
    pub weight: usize,
    /// Lexicographically smallest coset element of minimum weight.
    pub witness: BitVec,
    /// Dimension of the span after removing dependent basis vectors.
    pub span_dim: usize,
    pub strategy: CosetStrategy,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CosetStrategy {
    /// Gray-code walk over all `2^dim` span elements.
    SpanEnumeration,
    /// Breadth-first search over the `2^codim` syndromes.
    SyndromeSearch,
}

/// Minimum Hamming weight over `offset + span(basis)` with the default cap.
pub fn coset_min_weight(basis: &[BitVec], offset: &BitVec) -> Result<CosetMinimum, Gf2Error> {
    coset_min_weight_capped(basis, offset, DEFAULT_COSET_CAP)
}

/// Minimum Hamming weight over `offset + span(basis)`.
///
/// Dependent basis vectors are dropped first. The search runs over `2^min(dim, codim)`
/// states; if that exponent exceeds `cap` the call fails with
/// [`Gf2Error::CosetTooLarge`] carrying the weight of `offset` reduced against the basis
/// as an upper bound.
pub fn coset_min_weight_capped(
    basis: &[BitVec],
    offset: &BitVec,
    cap: usize,
) -> Result<CosetMinimum, Gf2Error> {
    let n = offset.len();
    if let Some(bad) = basis.iter().find(|b| b.len() != n) {
        return Err(Gf2Error::LengthMismatch {
            expected: n,
            actual: bad.len(),
        });
    }
    let independent: Vec<BitVec> = independent_subset(basis)
        .into_iter()
        .map(|i| basis[i].clone())
        .collect();
    let dim = independent.len();
    let codim = n - dim;
    let search = dim.min(codim);
    if search > cap || search >= 64 {
        let echelon = Echelon::new(&BitMatrix::from_rows(independent, n)?);
        let witness = echelon.reduce(offset);
        return Err(Gf2Error::CosetTooLarge {
            dimension: search,
            cap,
            upper_bound: witness.weight(),
            witness,
        });
    }
    if dim <= codim {
        Ok(span_enumeration(&independent, offset))
    } else {
        Ok(syndrome_search(&independent, offset))
    }
}

fn span_enumeration(basis: &[BitVec], offset: &BitVec) -> CosetMinimum {
    let n = offset.len();
    let dim = basis.len();
    let (weight, witness) = if n <= 64 {
        let gens: Vec<u64> = basis.iter().map(BitVec::low_word).collect();
        let mut current = offset.low_word();
        let mut best = current;
        let mut best_weight = current.count_ones();
        for step in 1u64..(1u64 << dim) {
            current ^= gens[step.trailing_zeros() as usize];
            let w = current.count_ones();
            // Bit-reversal turns lexicographic coordinate order into integer order.
            if w < best_weight || (w == best_weight && current.reverse_bits() < best.reverse_bits()) {
                best = current;
                best_weight = w;
            }
        }
        (best_weight as usize, BitVec::from_word(n, best))
    } else {
        let mut current = offset.clone();
        let mut best = current.clone();
        let mut best_weight = current.weight();
        for step in 1u64..(1u64 << dim) {
            current.xor_assign(&basis[step.trailing_zeros() as usize]);
            let w = current.weight();
            if w < best_weight || (w == best_weight && current < best) {
                best = current.clone();
                best_weight = w;
            }
        }
        (best_weight, best)
    };
    CosetMinimum {
        weight,
        witness,
        span_dim: dim,
        strategy: CosetStrategy::SpanEnumeration,
    }
}

fn syndrome_search(basis: &[BitVec], offset: &BitVec) -> CosetMinimum {
    let n = offset.len();
    let generator = BitMatrix::from_rows(basis.to_vec(), n).expect("lengths checked");
    let checks = null_space_basis(&generator);
    let r = checks.len();
    // columns[j] = syndrome of the j-th unit vector
    let columns: Vec<u64> = (0..n)
        .map(|j| {
            checks
                .iter()
                .enumerate()
                .fold(0u64, |acc, (i, h)| if h.get(j) { acc | (1 << i) } else { acc })
        })
        .collect();
    let target = checks
        .iter()
        .enumerate()
        .fold(0u64, |acc, (i, h)| if h.dot(offset) { acc | (1 << i) } else { acc });
    let dist = syndrome_distances(&columns, r);
    let weight = dist[target as usize] as usize;

    // Depth-first completion in coordinate order, trying 0 before 1, yields the
    // lexicographically smallest vector of that weight.
    let mut chosen = BitVec::zeros(n);
    let found = lex_first_completion(&columns, &dist, 0, target, weight, &mut chosen);
    debug_assert!(found, "syndrome distance table promised a completion");
    CosetMinimum {
        weight,
        witness: chosen,
        span_dim: basis.len(),
        strategy: CosetStrategy::SyndromeSearch,
    }
}

/// `dist[s]` = fewest columns summing to syndrome `s`.
fn syndrome_distances(columns: &[u64], r: usize) -> Vec<u8> {
    let size = 1usize << r;
    let mut dist = vec![u8::MAX; size];
    dist[0] = 0;
    let mut queue = VecDeque::from([0u64]);
    let mut distinct: Vec<u64> = columns.iter().copied().filter(|&c| c != 0).collect();
    distinct.sort_unstable();
    distinct.dedup();
    while let Some(s) = queue.pop_front() {
        let d = dist[s as usize];
        for &c in &distinct {
            let t = (s ^ c) as usize;
            if dist[t] == u8::MAX {
                dist[t] = d + 1;
                queue.push_back(t as u64);
            }
        }
    }
    dist
}

fn lex_first_completion(
    columns: &[u64],
    dist: &[u8],
    j: usize,
    remaining: u64,
    budget: usize,
    chosen: &mut BitVec,
) -> bool {
    if remaining == 0 && budget == 0 {
        return true;
    }
    if j == columns.len() || (dist[remaining as usize] as usize) > budget {
        return false;
    }
    if lex_first_completion(columns, dist, j + 1, remaining, budget, chosen) {
        return true;
    }
    if budget > 0 {
        chosen.set(j, true);
        if lex_first_completion(columns, dist, j + 1, remaining ^ columns[j], budget - 1, chosen) {
            return true;
        }
        chosen.set(j, false);
    }
    false
}

/// Minimum weight of every coset of `span(basis)`, keyed by syndrome.
///
/// Returns the parity-check vectors defining the syndromes together with the table.
/// Used when all cosets are needed at once, e.g. for the largest odd-coset weight.
pub fn all_coset_min_weights(
    basis: &[BitVec],
    len: usize,
    cap: usize,
) -> Result<(Vec<BitVec>, Vec<u8>), Gf2Error> {
    if let Some(bad) = basis.iter().find(|b| b.len() != len) {
        return Err(Gf2Error::LengthMismatch {
            expected: len,
            actual: bad.len(),
        });
    }
    let generator = BitMatrix::from_rows(basis.to_vec(), len)?;
    let checks = null_space_basis(&generator);
    let r = checks.len();
    if r > cap || r >= 64 {
        return Err(Gf2Error::CosetTooLarge {
            dimension: r,
            cap,
            upper_bound: len,
            witness: BitVec::zeros(len),
        });
    }
    let columns: Vec<u64> = (0..len)
        .map(|j| {
            checks
                .iter()
                .enumerate()
                .fold(0u64, |acc, (i, h)| if h.get(j) { acc | (1 << i) } else { acc })
        })
        .collect();
    let dist = syndrome_distances(&columns, r);
    Ok((checks, dist))
}
