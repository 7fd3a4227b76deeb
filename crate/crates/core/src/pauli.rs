//! Pauli observables in binary symplectic form.
//!
//! A k-qubit Pauli string is a vector `(x_1..x_k | z_1..z_k)` over GF(2), with the
//! per-qubit encoding `I = (0,0)`, `X = (1,0)`, `Y = (0,1)`, `Z = (1,1)`. Commutation is
//! the symplectic form `Ω(s, t) = x_s·z_t + z_s·x_t`. Products are phase-tracked with the
//! usual single-qubit table (`XY = iZ` and cyclic).

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::gf2::{BitMatrix, BitVec};
use crate::hypergraph::Hypergraph;

/// Largest qubit count accepted by the synthesis routines unless overridden.
pub const DEFAULT_MAX_QUBITS: usize = 32;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum PauliError {
    #[error("invalid Pauli letter {0:?}")]
    InvalidLetter(char),
    #[error("empty Pauli string")]
    Empty,
    #[error("qubit count mismatch: {0} vs {1}")]
    QubitMismatch(usize, usize),
    #[error("assignment is missing vertex {0}")]
    MissingVertex(usize),
    #[error("assignment key {0:?} is not a positive vertex index")]
    BadKey(String),
    #[error("malformed assignment: {0}")]
    Malformed(String),
}

/// Single-qubit Pauli letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    I,
    X,
    Y,
    Z,
}

impl Letter {
    /// `(x, z)` bits in the symplectic encoding.
    #[must_use]
    pub fn bits(self) -> (bool, bool) {
        match self {
            Letter::I => (false, false),
            Letter::X => (true, false),
            Letter::Y => (false, true),
            Letter::Z => (true, true),
        }
    }

    #[must_use]
    pub fn from_bits(x: bool, z: bool) -> Self {
        match (x, z) {
            (false, false) => Letter::I,
            (true, false) => Letter::X,
            (false, true) => Letter::Y,
            (true, true) => Letter::Z,
        }
    }

    #[must_use]
    pub fn as_char(self) -> char {
        match self {
            Letter::I => 'I',
            Letter::X => 'X',
            Letter::Y => 'Y',
            Letter::Z => 'Z',
        }
    }

    pub fn from_char(c: char) -> Result<Self, PauliError> {
        match c {
            'I' => Ok(Letter::I),
            'X' => Ok(Letter::X),
            'Y' => Ok(Letter::Y),
            'Z' => Ok(Letter::Z),
            other => Err(PauliError::InvalidLetter(other)),
        }
    }

    /// `self · other = i^power · letter`.
    #[must_use]
    pub fn times(self, other: Letter) -> (u8, Letter) {
        use Letter::{I, X, Y, Z};
        match (self, other) {
            (I, p) | (p, I) => (0, p),
            (a, b) if a == b => (0, I),
            (X, Y) => (1, Z),
            (Y, Z) => (1, X),
            (Z, X) => (1, Y),
            (Y, X) => (3, Z),
            (Z, Y) => (3, X),
            (X, Z) => (3, Y),
            _ => unreachable!(),
        }
    }
}

/// An unsigned k-qubit Pauli string.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PauliString {
    x: BitVec,
    z: BitVec,
}

impl PauliString {
    #[must_use]
    pub fn identity(qubits: usize) -> Self {
        Self {
            x: BitVec::zeros(qubits),
            z: BitVec::zeros(qubits),
        }
    }

    pub fn from_parts(x: BitVec, z: BitVec) -> Result<Self, PauliError> {
        if x.len() != z.len() {
            return Err(PauliError::QubitMismatch(x.len(), z.len()));
        }
        Ok(Self { x, z })
    }

    /// Splits a length-2k symplectic vector into a Pauli string.
    #[must_use]
    pub fn from_symplectic(v: &BitVec) -> Self {
        assert!(v.len().is_multiple_of(2), "symplectic vectors have even length");
        let k = v.len() / 2;
        Self {
            x: v.slice(0, k),
            z: v.slice(k, 2 * k),
        }
    }

    /// Encodes a letter string such as `IXYXZ`.
    pub fn encode(letters: &str) -> Result<Self, PauliError> {
        let letters: Vec<Letter> = letters
            .trim()
            .chars()
            .map(Letter::from_char)
            .collect::<Result<_, _>>()?;
        if letters.is_empty() {
            return Err(PauliError::Empty);
        }
        Ok(Self::from_letters(&letters))
    }

    #[must_use]
    pub fn from_letters(letters: &[Letter]) -> Self {
        let mut p = Self::identity(letters.len());
        for (i, l) in letters.iter().enumerate() {
            let (x, z) = l.bits();
            p.x.set(i, x);
            p.z.set(i, z);
        }
        p
    }

    #[must_use]
    pub fn decode(&self) -> String {
        self.letters().into_iter().map(Letter::as_char).collect()
    }

    #[must_use]
    pub fn letters(&self) -> Vec<Letter> {
        (0..self.qubits())
            .map(|i| Letter::from_bits(self.x.get(i), self.z.get(i)))
            .collect()
    }

    #[must_use]
    pub fn qubits(&self) -> usize {
        self.x.len()
    }

    #[must_use]
    pub fn x_part(&self) -> &BitVec {
        &self.x
    }

    #[must_use]
    pub fn z_part(&self) -> &BitVec {
        &self.z
    }

    /// The concatenated vector `(x | z)` of length 2k.
    #[must_use]
    pub fn symplectic(&self) -> BitVec {
        self.x.concat(&self.z)
    }

    #[must_use]
    pub fn is_identity(&self) -> bool {
        self.x.is_zero() && self.z.is_zero()
    }

    /// Symplectic product: `false` iff the operators commute.
    pub fn symplectic_product(&self, other: &PauliString) -> Result<bool, PauliError> {
        if self.qubits() != other.qubits() {
            return Err(PauliError::QubitMismatch(self.qubits(), other.qubits()));
        }
        Ok(self.x.dot(&other.z) ^ self.z.dot(&other.x))
    }

    #[must_use]
    pub fn commutes_with(&self, other: &PauliString) -> bool {
        !self.symplectic_product(other).expect("equal qubit counts")
    }
}

impl FromStr for PauliString {
    type Err = PauliError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::encode(s)
    }
}

impl fmt::Display for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.decode())
    }
}

impl fmt::Debug for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Pauli({})", self.decode())
    }
}

/// A power of `i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Phase {
    PlusOne,
    PlusI,
    MinusOne,
    MinusI,
}

impl Phase {
    #[must_use]
    pub fn from_power(power: u8) -> Self {
        match power % 4 {
            0 => Phase::PlusOne,
            1 => Phase::PlusI,
            2 => Phase::MinusOne,
            _ => Phase::MinusI,
        }
    }

    #[must_use]
    pub fn power(self) -> u8 {
        match self {
            Phase::PlusOne => 0,
            Phase::PlusI => 1,
            Phase::MinusOne => 2,
            Phase::MinusI => 3,
        }
    }

    #[must_use]
    pub fn is_real(self) -> bool {
        matches!(self, Phase::PlusOne | Phase::MinusOne)
    }
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Phase::PlusOne => "+",
            Phase::PlusI => "+i",
            Phase::MinusOne => "-",
            Phase::MinusI => "-i",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedPauli {
    pub phase: Phase,
    pub body: PauliString,
}

impl fmt::Display for SignedPauli {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.phase, self.body)
    }
}

/// Ordered product `ps[0] · ps[1] · …` with exact phase.
pub fn multiply(ps: &[PauliString]) -> Result<SignedPauli, PauliError> {
    let Some(first) = ps.first() else {
        return Err(PauliError::Empty);
    };
    let k = first.qubits();
    let mut letters = vec![Letter::I; k];
    let mut power = 0u8;
    for p in ps {
        if p.qubits() != k {
            return Err(PauliError::QubitMismatch(k, p.qubits()));
        }
        for (acc, l) in letters.iter_mut().zip(p.letters()) {
            let (dp, out) = acc.times(l);
            power = (power + dp) % 4;
            *acc = out;
        }
    }
    Ok(SignedPauli {
        phase: Phase::from_power(power),
        body: PauliString::from_letters(&letters),
    })
}

/// A map from vertices (0-based) to k-qubit Pauli strings, all of equal length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Assignment {
    qubits: usize,
    ops: Vec<PauliString>,
}

impl Assignment {
    pub fn new(ops: Vec<PauliString>) -> Result<Self, PauliError> {
        let qubits = ops.first().map_or(0, PauliString::qubits);
        if let Some(bad) = ops.iter().find(|p| p.qubits() != qubits) {
            return Err(PauliError::QubitMismatch(qubits, bad.qubits()));
        }
        Ok(Self { qubits, ops })
    }

    pub fn from_letter_strings<S: AsRef<str>>(strings: &[S]) -> Result<Self, PauliError> {
        let ops = strings
            .iter()
            .map(|s| PauliString::encode(s.as_ref()))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(ops)
    }

    /// Builds an assignment from length-2k symplectic vectors.
    #[must_use]
    pub fn from_symplectic(vectors: &[BitVec]) -> Self {
        Self::new(vectors.iter().map(PauliString::from_symplectic).collect())
            .expect("vectors share a length")
    }

    #[must_use]
    pub fn qubits(&self) -> usize {
        self.qubits
    }

    #[must_use]
    pub fn len(&self) -> usize {
        self.ops.len()
    }

    #[must_use]
    pub fn is_empty(&self) -> bool {
        self.ops.is_empty()
    }

    #[must_use]
    pub fn ops(&self) -> &[PauliString] {
        &self.ops
    }

    #[must_use]
    pub fn get(&self, vertex: usize) -> &PauliString {
        &self.ops[vertex]
    }

    /// Commutation matrix: entry `(i, j)` is the symplectic product of vertices i and j.
    #[must_use]
    pub fn gram(&self) -> BitMatrix {
        let m = self.ops.len();
        let mut g = BitMatrix::zeros(m, m);
        for i in 0..m {
            for j in (i + 1)..m {
                if !self.ops[i].commutes_with(&self.ops[j]) {
                    g.set(i, j, true);
                    g.set(j, i, true);
                }
            }
        }
        g
    }

    /// Sign vector over edges: bit set where the ordered context product has phase −1.
    ///
    /// Only meaningful for valid assignments; see [`verify_assignment`].
    #[must_use]
    pub fn context_signs(&self, h: &Hypergraph) -> BitVec {
        let mut c = BitVec::zeros(h.edge_count());
        for (j, edge) in h.edges().iter().enumerate() {
            let ops: Vec<PauliString> = edge.iter().map(|&v| self.ops[v].clone()).collect();
            if let Ok(p) = multiply(&ops) {
                if p.phase == Phase::MinusOne {
                    c.set(j, true);
                }
            }
        }
        c
    }

    /// JSON map from 1-based vertex index to letter string.
    #[must_use]
    pub fn to_json(&self) -> String {
        let map: BTreeMap<usize, String> = self
            .ops
            .iter()
            .enumerate()
            .map(|(i, p)| (i + 1, p.decode()))
            .collect();
        let ordered: serde_json::Map<String, serde_json::Value> = map
            .into_iter()
            .map(|(k, v)| (k.to_string(), serde_json::Value::String(v)))
            .collect();
        serde_json::to_string_pretty(&ordered).expect("assignment serializes")
    }

    /// Parses the JSON map format, e.g. `{"1": "IIZ", "2": "IIX"}`.
    pub fn from_json(text: &str) -> Result<Self, PauliError> {
        let raw: BTreeMap<String, String> =
            serde_json::from_str(text).map_err(|e| PauliError::Malformed(e.to_string()))?;
        Self::from_pairs(raw.into_iter())
    }

    /// Parses an unquoted listing such as `{1: IIZ, 2: IIX, 3: IZY}` (braces optional).
    pub fn from_listing(text: &str) -> Result<Self, PauliError> {
        let body = text.trim().trim_start_matches('{').trim_end_matches('}');
        let mut pairs = Vec::new();
        for item in body.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (key, value) = item
                .split_once(':')
                .ok_or_else(|| PauliError::Malformed(item.to_string()))?;
            pairs.push((key.trim().to_string(), value.trim().to_string()));
        }
        Self::from_pairs(pairs.into_iter())
    }

    /// Accepts either JSON or the unquoted listing.
    pub fn parse_any(text: &str) -> Result<Self, PauliError> {
        Self::from_json(text).or_else(|_| Self::from_listing(text))
    }

    fn from_pairs(pairs: impl Iterator<Item = (String, String)>) -> Result<Self, PauliError> {
        let mut by_index = BTreeMap::new();
        for (k, v) in pairs {
            let idx: usize = k
                .trim()
                .parse()
                .ok()
                .filter(|&i| i > 0)
                .ok_or_else(|| PauliError::BadKey(k.clone()))?;
            by_index.insert(idx, PauliString::encode(&v)?);
        }
        let count = by_index.keys().next_back().copied().unwrap_or(0);
        let mut ops = Vec::with_capacity(count);
        for i in 1..=count {
            ops.push(by_index.remove(&i).ok_or(PauliError::MissingVertex(i))?);
        }
        Self::new(ops)
    }
}

/// Why an assignment fails to be valid. Vertex and edge numbers are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    VertexCount { expected: usize, actual: usize },
    AnticommutingPair { edge: usize, first: usize, second: usize },
    NonScalarProduct { edge: usize, product: String },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::VertexCount { expected, actual } => {
                write!(f, "assignment covers {actual} vertices, hypergraph has {expected}")
            }
            Violation::AnticommutingPair {
                edge,
                first,
                second,
            } => write!(f, "edge {edge}: vertices {first} and {second} anticommute"),
            Violation::NonScalarProduct { edge, product } => {
                write!(f, "edge {edge}: product is {product}, not ±I")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    /// Every context commutes and multiplies to ±I.
    pub valid: bool,
    /// Valid with an odd number of negative contexts.
    pub magic: bool,
    pub context_signs: BitVec,
    pub negatives: usize,
    pub violations: Vec<Violation>,
}

/// Checks the assignment conditions context by context. Failures are reported, not raised.
#[must_use]
pub fn verify_assignment(h: &Hypergraph, a: &Assignment) -> VerificationReport {
    let mut violations = Vec::new();
    let mut signs = BitVec::zeros(h.edge_count());
    if a.len() != h.vertex_count() {
        violations.push(Violation::VertexCount {
            expected: h.vertex_count(),
            actual: a.len(),
        });
        return VerificationReport {
            valid: false,
            magic: false,
            context_signs: signs,
            negatives: 0,
            violations,
        };
    }
    for (j, edge) in h.edges().iter().enumerate() {
        let mut commuting = true;
        for (pos, &u) in edge.iter().enumerate() {
            for &v in &edge[pos + 1..] {
                if !a.get(u).commutes_with(a.get(v)) {
                    commuting = false;
                    violations.push(Violation::AnticommutingPair {
                        edge: j + 1,
                        first: u + 1,
                        second: v + 1,
                    });
                }
            }
        }
        let ops: Vec<PauliString> = edge.iter().map(|&v| a.get(v).clone()).collect();
        let product = match multiply(&ops) {
            Ok(p) => p,
            Err(_) => SignedPauli {
                phase: Phase::PlusOne,
                body: PauliString::identity(a.qubits()),
            },
        };
        if !product.body.is_identity() || !product.phase.is_real() {
            violations.push(Violation::NonScalarProduct {
                edge: j + 1,
                product: product.to_string(),
            });
        } else if commuting && product.phase == Phase::MinusOne {
            signs.set(j, true);
        }
    }
    let valid = violations.is_empty();
    let negatives = signs.weight();
    VerificationReport {
        valid,
        magic: valid && negatives % 2 == 1,
        context_signs: signs,
        negatives,
        violations,
    }
}

/// Sign vector after replacing the observable at `vertex` by its negative.
#[must_use]
pub fn negate_observable(h: &Hypergraph, signs: &BitVec, vertex: usize) -> BitVec {
    let mut out = signs.clone();
    for (j, edge) in h.edges().iter().enumerate() {
        for &v in edge {
            if v == vertex {
                out.flip(j);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::parse_edge_list;
    use proptest::prelude::*;

    /// Dense complex 2^k × 2^k matrices as an independent product oracle.
    type C = (i64, i64);

    fn cmul(a: C, b: C) -> C {
        (a.0 * b.0 - a.1 * b.1, a.0 * b.1 + a.1 * b.0)
    }

    fn letter_matrix(l: char) -> [[C; 2]; 2] {
        let z = (0, 0);
        let one = (1, 0);
        match l {
            'I' => [[one, z], [z, one]],
            'X' => [[z, one], [one, z]],
            'Y' => [[z, (0, -1)], [(0, 1), z]],
            'Z' => [[one, z], [z, (-1, 0)]],
            _ => unreachable!(),
        }
    }

    fn kron(a: &[Vec<C>], b: &[[C; 2]; 2]) -> Vec<Vec<C>> {
        let n = a.len();
        let mut out = vec![vec![(0, 0); 2 * n]; 2 * n];
        for i in 0..n {
            for j in 0..n {
                for k in 0..2 {
                    for l in 0..2 {
                        out[2 * i + k][2 * j + l] = cmul(a[i][j], b[k][l]);
                    }
                }
            }
        }
        out
    }

    fn dense(s: &str) -> Vec<Vec<C>> {
        s.chars()
            .fold(vec![vec![(1, 0)]], |acc, c| kron(&acc, &letter_matrix(c)))
    }

    fn matmul(a: &[Vec<C>], b: &[Vec<C>]) -> Vec<Vec<C>> {
        let n = a.len();
        let mut out = vec![vec![(0, 0); n]; n];
        for i in 0..n {
            for j in 0..n {
                let mut acc = (0, 0);
                for k in 0..n {
                    let p = cmul(a[i][k], b[k][j]);
                    acc = (acc.0 + p.0, acc.1 + p.1);
                }
                out[i][j] = acc;
            }
        }
        out
    }

    fn scale(a: &[Vec<C>], s: C) -> Vec<Vec<C>> {
        a.iter()
            .map(|r| r.iter().map(|&x| cmul(x, s)).collect())
            .collect()
    }

    fn phase_value(p: Phase) -> C {
        match p {
            Phase::PlusOne => (1, 0),
            Phase::PlusI => (0, 1),
            Phase::MinusOne => (-1, 0),
            Phase::MinusI => (0, -1),
        }
    }

    #[test]
    fn encode_examples() {
        let p = PauliString::encode("IXYXZ").unwrap();
        assert_eq!(p.symplectic().to_string(), "0101100101");
        assert_eq!(PauliString::encode("I").unwrap().symplectic().to_string(), "00");
        assert_eq!(PauliString::encode("Z").unwrap().symplectic().to_string(), "11");
        assert_eq!(p.decode(), "IXYXZ");
        assert_eq!(PauliString::encode("IQ"), Err(PauliError::InvalidLetter('Q')));
    }

    #[test]
    fn symplectic_product_examples() {
        let x = PauliString::encode("X").unwrap();
        let z = PauliString::encode("Z").unwrap();
        assert!(x.symplectic_product(&z).unwrap());
        assert!(!x.symplectic_product(&x).unwrap());
        let xx = PauliString::encode("XX").unwrap();
        let zz = PauliString::encode("ZZ").unwrap();
        assert!(!xx.symplectic_product(&zz).unwrap());
        assert_eq!(x.symplectic_product(&xx), Err(PauliError::QubitMismatch(1, 2)));
    }

    #[test]
    fn multiply_examples() {
        let ps: Vec<PauliString> = ["XX", "YY", "ZZ"].iter().map(|s| s.parse().unwrap()).collect();
        let prod = multiply(&ps).unwrap();
        assert_eq!(prod.phase, Phase::MinusOne);
        assert!(prod.body.is_identity());
        // dense oracle
        let m = matmul(&matmul(&dense("XX"), &dense("YY")), &dense("ZZ"));
        assert_eq!(m, scale(&dense("II"), (-1, 0)));

        let p: PauliString = "XYZ".parse().unwrap();
        assert_eq!(multiply(std::slice::from_ref(&p)).unwrap().body, p);
        let xs: Vec<PauliString> = vec!["X".parse().unwrap(), "X".parse().unwrap()];
        let prod = multiply(&xs).unwrap();
        assert_eq!((prod.phase, prod.body.decode()), (Phase::PlusOne, "I".into()));
    }

    #[test]
    fn square_assignment_is_magic() {
        let h = parse_edge_list("[[1,2,3],[4,5,6],[7,8,9],[1,4,7],[2,5,8],[3,6,9]]").unwrap();
        let a = Assignment::from_letter_strings(&["XI", "IX", "XX", "IZ", "ZI", "ZZ", "XZ", "ZX", "YY"])
            .unwrap();
        let report = verify_assignment(&h, &a);
        assert!(report.valid && report.magic, "{report:?}");
        assert_eq!(report.negatives, 1);
        assert_eq!(report.context_signs, a.context_signs(&h));

        let trivial = Assignment::from_letter_strings(&["II"; 9]).unwrap();
        let report = verify_assignment(&h, &trivial);
        assert!(report.valid && !report.magic);
        assert_eq!(report.negatives, 0);
    }

    #[test]
    fn violations_are_reported() {
        let h = parse_edge_list("[[1,2],[1,2,3]]").unwrap();
        let a = Assignment::from_letter_strings(&["X", "Z", "I"]).unwrap();
        let report = verify_assignment(&h, &a);
        assert!(!report.valid);
        assert!(report
            .violations
            .contains(&Violation::AnticommutingPair { edge: 1, first: 1, second: 2 }));
        let short = Assignment::from_letter_strings(&["X"]).unwrap();
        assert!(matches!(
            verify_assignment(&h, &short).violations[0],
            Violation::VertexCount { .. }
        ));
        let noncommuting_free = Assignment::from_letter_strings(&["X", "I", "I"]).unwrap();
        let report = verify_assignment(&h, &noncommuting_free);
        assert!(matches!(report.violations[0], Violation::NonScalarProduct { edge: 1, .. }));
    }

    #[test]
    fn listing_and_json_parse() {
        let a = Assignment::from_listing("{1: IIZ, 2: IIX, 3: IZY}").unwrap();
        assert_eq!(a.len(), 3);
        assert_eq!(a.get(2).decode(), "IZY");
        let back = Assignment::from_json(&a.to_json()).unwrap();
        assert_eq!(back, a);
        assert_eq!(Assignment::parse_any("1: X, 2: Y").unwrap().len(), 2);
        assert!(matches!(
            Assignment::from_listing("1: X, 3: Y"),
            Err(PauliError::MissingVertex(2))
        ));
        assert!(matches!(
            Assignment::from_json(r#"{"0": "X"}"#),
            Err(PauliError::BadKey(_))
        ));
    }

    fn pauli_strategy(k: usize) -> impl Strategy<Value = PauliString> {
        proptest::collection::vec(0u8..4, k).prop_map(|ls| {
            PauliString::from_letters(
                &ls.iter()
                    .map(|&l| [Letter::I, Letter::X, Letter::Y, Letter::Z][l as usize])
                    .collect::<Vec<_>>(),
            )
        })
    }

    proptest! {
        #[test]
        fn symplectic_form_is_symmetric_bilinear_alternating(
            (a, b, c) in (1usize..=8).prop_flat_map(|k| (pauli_strategy(k), pauli_strategy(k), pauli_strategy(k)))
        ) {
            prop_assert!(!a.symplectic_product(&a).unwrap());
            prop_assert_eq!(a.symplectic_product(&b).unwrap(), b.symplectic_product(&a).unwrap());
            let bc = PauliString::from_symplectic(&b.symplectic().xor(&c.symplectic()));
            prop_assert_eq!(
                a.symplectic_product(&bc).unwrap(),
                a.symplectic_product(&b).unwrap() ^ a.symplectic_product(&c).unwrap()
            );
        }

        #[test]
        fn product_body_is_vector_sum(ps in (1usize..=6).prop_flat_map(|k| proptest::collection::vec(pauli_strategy(k), 1..6))) {
            let prod = multiply(&ps).unwrap();
            let sum = ps.iter().fold(BitVec::zeros(2 * ps[0].qubits()), |acc, p| acc.xor(&p.symplectic()));
            prop_assert_eq!(prod.body.symplectic(), sum);
        }

        #[test]
        fn product_matches_dense_matrices(ps in (1usize..=3).prop_flat_map(|k| proptest::collection::vec(pauli_strategy(k), 1..5))) {
            let prod = multiply(&ps).unwrap();
            let mut m = dense(&ps[0].decode());
            for p in &ps[1..] {
                m = matmul(&m, &dense(&p.decode()));
            }
            prop_assert_eq!(m, scale(&dense(&prod.body.decode()), phase_value(prod.phase)));
        }

        #[test]
        fn commutation_matches_dense_matrices((a, b) in (1usize..=3).prop_flat_map(|k| (pauli_strategy(k), pauli_strategy(k)))) {
            let ab = matmul(&dense(&a.decode()), &dense(&b.decode()));
            let ba = matmul(&dense(&b.decode()), &dense(&a.decode()));
            prop_assert_eq!(a.commutes_with(&b), ab == ba);
        }
    }
}
