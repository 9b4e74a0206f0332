//! Brute-force enumeration of the combinatorial families generated by the
//! built-in grammars, weighted by the same labels the grammars use.
//!
//! These are deliberately naive: every object is generated and its weight
//! computed directly from the definitions, so they serve as ground truth
//! for the grammar computations.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::grammar::{derive_n, Grammar, GrammarName};
use crate::laurent::{var, LaurentPoly, Monomial, VarId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CombinatError {
    #[error("{what} = {value} outside supported range {min}..={max}")]
    OutOfRange {
        what: &'static str,
        value: i64,
        min: i64,
        max: i64,
    },
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("not an increasing tree: {0}")]
    InvalidTree(String),
    #[error("grammar output violates the T(n,k) x^(2k+1) y^(n-2k) shape: {0}")]
    ShapeViolation(String),
}

pub(crate) fn check_range(
    what: &'static str,
    value: usize,
    min: usize,
    max: usize,
) -> Result<(), CombinatError> {
    if value < min || value > max {
        return Err(CombinatError::OutOfRange {
            what,
            value: value as i64,
            min: min as i64,
            max: max as i64,
        });
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// permutations

/// A permutation of `[n]` in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<u32>);

impl Permutation {
    pub fn new(word: Vec<u32>) -> Result<Self, CombinatError> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &v in &word {
            let idx = v as usize;
            if idx == 0 || idx > n || seen[idx] {
                return Err(CombinatError::InvalidPermutation(format!(
                    "{word:?} is not a permutation of 1..={n}"
                )));
            }
            seen[idx] = true;
        }
        Ok(Permutation(word))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n as u32).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    /// `π_i` with 1-based `i`.
    pub fn at(&self, i: usize) -> u32 {
        self.0[i - 1]
    }

    /// All permutations of `[n]` in lexicographic order.
    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        (1..=n as u32).permutations(n).map(Permutation)
    }

    /// `π_1 > π_2 < π_3 > ...`
    pub fn is_down_up(&self) -> bool {
        self.0.windows(2).enumerate().all(
            |(i, w)| {
                if i % 2 == 0 {
                    w[0] > w[1]
                } else {
                    w[0] < w[1]
                }
            },
        )
    }

    pub fn to_wire(&self) -> String {
        self.0.iter().join(",")
    }

    pub fn stats(&self) -> PermutationStats {
        perm_stats(self)
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({})", self.to_wire())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_wire())
    }
}

impl FromStr for Permutation {
    type Err = CombinatError;

    /// Parses the comma-separated wire format, e.g. `5,3,4,6,7,2,1`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let word = s
            .split(',')
            .map(|p| p.trim().parse::<u32>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| CombinatError::InvalidPermutation(format!("{s:?}: {e}")))?;
        Permutation::new(word)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct PermutationStats {
    pub asc: usize,
    pub des: usize,
    pub ext_peaks: usize,
    pub valleys: usize,
}

/// Ascents and descents over `1 <= i < n`; exterior peaks are interior
/// peaks plus `i = 1` when `π_1 > π_2` (the last position never counts);
/// valleys are interior only.
pub fn perm_stats(p: &Permutation) -> PermutationStats {
    let w = p.as_slice();
    let n = w.len();
    let mut s = PermutationStats::default();
    for i in 0..n.saturating_sub(1) {
        if w[i] < w[i + 1] {
            s.asc += 1;
        } else {
            s.des += 1;
        }
    }
    if n >= 2 && w[0] > w[1] {
        s.ext_peaks += 1;
    }
    for i in 1..n.saturating_sub(1) {
        if w[i - 1] < w[i] && w[i] > w[i + 1] {
            s.ext_peaks += 1;
        }
        if w[i - 1] > w[i] && w[i] < w[i + 1] {
            s.valleys += 1;
        }
    }
    s
}

fn xy_poly(counts: HashMap<(i64, i64), u64>) -> LaurentPoly {
    let (x, y) = (var("x"), var("y"));
    LaurentPoly::from_terms(counts.into_iter().map(|((a, b), c)| {
        (
            Monomial::from_pairs([(x.clone(), a), (y.clone(), b)]),
            BigRational::from_integer(BigInt::from(c)),
        )
    }))
}

/// `Σ_{π ∈ S_n} x^(asc+1) y^(des+1)`.
pub fn eulerian_oracle(n: usize) -> Result<LaurentPoly, CombinatError> {
    check_range("n", n, 1, 9)?;
    let mut counts = HashMap::new();
    for p in Permutation::all(n) {
        let s = perm_stats(&p);
        *counts
            .entry((s.asc as i64 + 1, s.des as i64 + 1))
            .or_insert(0) += 1;
    }
    Ok(xy_poly(counts))
}

/// `Σ x^asc_c(σ) y^des_c(σ)` over the cyclic permutations of `[n+1]`,
/// where `i` is a cyclic ascent when `i < σ(i)`.
pub fn cyclic_oracle(n: usize) -> Result<LaurentPoly, CombinatError> {
    check_range("n", n, 1, 8)?;
    let size = n + 1;
    let mut counts = HashMap::new();
    let mut succ = vec![0usize; size + 1];
    // each n-cycle is written uniquely as (1 a_1 ... a_n)
    for rest in (2..=size).permutations(n) {
        let mut prev = 1;
        for &a in &rest {
            succ[prev] = a;
            prev = a;
        }
        succ[prev] = 1;
        let asc = (1..=size).filter(|&i| i < succ[i]).count() as i64;
        *counts.entry((asc, size as i64 - asc)).or_insert(0) += 1;
    }
    Ok(xy_poly(counts))
}

/// A word on the multiset `{1^r, ..., n^r}` in which every letter lying
/// between two copies of `i` is at least `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StirlingWord {
    word: Vec<u32>,
    r: usize,
}

impl StirlingWord {
    pub fn new(word: Vec<u32>, r: usize) -> Option<Self> {
        is_stirling(&word, r).then_some(StirlingWord { word, r })
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.word
    }

    pub fn r(&self) -> usize {
        self.r
    }

    /// `(ascents, descents + plateaux)` of the word padded as `0 w 0`.
    pub fn padded_weights(&self) -> (usize, usize) {
        let mut padded = Vec::with_capacity(self.word.len() + 2);
        padded.push(0);
        padded.extend_from_slice(&self.word);
        padded.push(0);
        let asc = padded.windows(2).filter(|w| w[0] < w[1]).count();
        (asc, padded.len() - 1 - asc)
    }
}

/// Checks the multiset and the betweenness condition directly.
pub fn is_stirling(word: &[u32], r: usize) -> bool {
    if r == 0 || !word.len().is_multiple_of(r) {
        return false;
    }
    let n = word.len() / r;
    let mut counts = vec![0usize; n + 1];
    for &v in word {
        if v == 0 || v as usize > n {
            return false;
        }
        counts[v as usize] += 1;
    }
    if counts[1..].iter().any(|&c| c != r) {
        return false;
    }
    (1..=n as u32).all(|i| {
        let first = word.iter().position(|&v| v == i).unwrap();
        let last = word.iter().rposition(|&v| v == i).unwrap();
        word[first..=last].iter().all(|&v| v >= i)
    })
}

/// All `r`-Stirling words on `[n]`, built by inserting the block `n^r`
/// into every gap of each word on `[n-1]`.
pub fn stirling_words(n: usize, r: usize) -> Vec<StirlingWord> {
    let mut words: Vec<Vec<u32>> = vec![Vec::new()];
    for i in 1..=n as u32 {
        let mut next = Vec::with_capacity(words.len() * (words[0].len() + 1));
        for w in &words {
            for pos in 0..=w.len() {
                let mut v = Vec::with_capacity(w.len() + r);
                v.extend_from_slice(&w[..pos]);
                v.extend(std::iter::repeat_n(i, r));
                v.extend_from_slice(&w[pos..]);
                next.push(v);
            }
        }
        words = next;
    }
    words
        .into_iter()
        .map(|word| StirlingWord { word, r })
        .collect()
}

/// `Σ x^asc y^(des+plateaux)` over `r`-Stirling words on `[n]`, each word
/// padded with a zero at both ends.
pub fn stirling_oracle(n: usize, r: usize) -> Result<LaurentPoly, CombinatError> {
    check_range("n", n, 1, 14)?;
    check_range("r", r, 2, 14)?;
    check_range("r*n", r * n, 2, 14)?;
    let mut counts = HashMap::new();
    for w in stirling_words(n, r) {
        let (a, b) = w.padded_weights();
        *counts.entry((a as i64, b as i64)).or_insert(0) += 1;
    }
    Ok(xy_poly(counts))
}

/// A set partition of `[n]` whose blocks are linearly ordered.
pub type ListPartition = Vec<Vec<u32>>;

/// All partitions of `[n]` into lists: element `i` either opens a new list
/// or is inserted at any position of an existing one.
pub fn list_partitions(n: usize) -> Vec<ListPartition> {
    let mut parts: Vec<ListPartition> = vec![Vec::new()];
    for i in 1..=n as u32 {
        let mut next = Vec::new();
        for p in &parts {
            let mut fresh = p.clone();
            fresh.push(vec![i]);
            next.push(fresh);
            for (b, block) in p.iter().enumerate() {
                for pos in 0..=block.len() {
                    let mut q = p.clone();
                    q[b].insert(pos, i);
                    next.push(q);
                }
            }
        }
        parts = next;
    }
    parts
}

/// `z · Σ ∏_lists x^asc y^des` with each list padded as `0 σ 0`.
pub fn list_partition_oracle(n: usize) -> Result<LaurentPoly, CombinatError> {
    check_range("n", n, 1, 7)?;
    let mut counts = HashMap::new();
    for p in list_partitions(n) {
        let (mut a, mut d) = (0i64, 0i64);
        for block in &p {
            let mut prev = 0;
            for &v in block.iter().chain(std::iter::once(&0)) {
                if prev < v {
                    a += 1;
                } else {
                    d += 1;
                }
                prev = v;
            }
        }
        *counts.entry((a, d)).or_insert(0) += 1;
    }
    Ok(&xy_poly(counts) * &LaurentPoly::var(var("z")))
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    (0..k).fold(BigInt::one(), |acc, i| {
        acc * BigInt::from(n - i) / BigInt::from(i + 1)
    })
}

/// Signless Lah number `binom(n-1, k-1) · n!/k!`.
pub fn lah_number(n: u64, k: u64) -> Result<BigInt, CombinatError> {
    if k < 1 || k > n {
        return Err(CombinatError::OutOfRange {
            what: "k",
            value: k as i64,
            min: 1,
            max: n as i64,
        });
    }
    let falling: BigInt = (k + 1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i));
    Ok(binomial(n - 1, k - 1) * falling)
}

// ---------------------------------------------------------------------------
// increasing trees

/// A rooted tree on `{0, ..., n}` with root 0 in which every vertex has a
/// smaller parent. Children are unordered; the tree is its parent array.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IncreasingTree {
    /// `parents[v - 1]` is the parent of vertex `v`.
    parents: Vec<u32>,
}

impl IncreasingTree {
    pub fn from_parents(parents: Vec<u32>) -> Result<Self, CombinatError> {
        for (i, &p) in parents.iter().enumerate() {
            let v = i as u32 + 1;
            if p >= v {
                return Err(CombinatError::InvalidTree(format!(
                    "parent of {v} is {p}, which is not smaller"
                )));
            }
        }
        Ok(IncreasingTree { parents })
    }

    pub fn n(&self) -> usize {
        self.parents.len()
    }

    pub fn parents(&self) -> &[u32] {
        &self.parents
    }

    pub fn parent(&self, v: u32) -> u32 {
        self.parents[v as usize - 1]
    }

    /// Number of children of each vertex `0..=n`.
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n() + 1];
        for &p in &self.parents {
            deg[p as usize] += 1;
        }
        deg
    }

    pub fn children(&self, v: u32) -> Vec<u32> {
        (1..=self.n() as u32)
            .filter(|&c| self.parent(c) == v)
            .collect()
    }

    pub fn even_degree_count(&self) -> usize {
        self.degrees().iter().filter(|&&d| d % 2 == 0).count()
    }

    pub fn to_wire(&self) -> String {
        self.parents.iter().join(",")
    }

    pub fn to_json(&self) -> TreeJson {
        TreeJson {
            n: self.n(),
            parents: self.parents.clone(),
        }
    }

    pub fn from_json(json: &TreeJson) -> Result<Self, CombinatError> {
        if json.parents.len() != json.n {
            return Err(CombinatError::InvalidTree(format!(
                "n = {} but {} parents given",
                json.n,
                json.parents.len()
            )));
        }
        Self::from_parents(json.parents.clone())
    }
}

impl fmt::Debug for IncreasingTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IncreasingTree[{}]", self.to_wire())
    }
}

impl FromStr for IncreasingTree {
    type Err = CombinatError;

    /// Comma-separated parents of vertices `1..=n`; the empty string is
    /// the single-vertex tree.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.trim().is_empty() {
            return Ok(IncreasingTree {
                parents: Vec::new(),
            });
        }
        let parents = s
            .split(',')
            .map(|p| p.trim().parse::<u32>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| CombinatError::InvalidTree(format!("{s:?}: {e}")))?;
        IncreasingTree::from_parents(parents)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeJson {
    pub n: usize,
    pub parents: Vec<u32>,
}

/// Iterates over the `n!` increasing trees on `{0..n}` as a mixed-radix
/// counter: vertex `v` picks its parent in `0..v`.
pub struct IncreasingTrees {
    current: Option<Vec<u32>>,
}

impl Iterator for IncreasingTrees {
    type Item = IncreasingTree;

    fn next(&mut self) -> Option<IncreasingTree> {
        let cur = self.current.as_mut()?;
        let out = IncreasingTree {
            parents: cur.clone(),
        };
        let mut i = cur.len();
        loop {
            if i == 0 {
                self.current = None;
                break;
            }
            i -= 1;
            // vertex i+1 may have parents 0..=i
            if cur[i] < i as u32 {
                cur[i] += 1;
                break;
            }
            cur[i] = 0;
        }
        Some(out)
    }
}

pub fn enumerate_increasing_trees(n: usize) -> Result<IncreasingTrees, CombinatError> {
    check_range("n", n, 0, 9)?;
    Ok(IncreasingTrees {
        current: Some(vec![0; n]),
    })
}

/// `Σ_T ∏_i x_i^(m_i(T))` where `m_i(T)` counts vertices with `i` children.
pub fn tree_degree_oracle(n: usize) -> Result<LaurentPoly, CombinatError> {
    check_range("n", n, 0, 8)?;
    let mut counts: HashMap<Vec<usize>, u64> = HashMap::new();
    for t in enumerate_increasing_trees(n)? {
        let mut hist = vec![0usize; n + 1];
        for d in t.degrees() {
            hist[d] += 1;
        }
        *counts.entry(hist).or_insert(0) += 1;
    }
    Ok(LaurentPoly::from_terms(counts.into_iter().map(
        |(hist, c)| {
            let m = Monomial::from_pairs(hist.iter().enumerate().map(|(i, &k)| {
                (
                    VarId::indexed("x", i as u32).expect("indexed var"),
                    k as i64,
                )
            }));
            (m, BigRational::from_integer(BigInt::from(c)))
        },
    )))
}

/// `Σ_T x^(#even-degree vertices) y^(#odd-degree vertices)`.
pub fn tree_parity_oracle(n: usize) -> Result<LaurentPoly, CombinatError> {
    check_range("n", n, 0, 9)?;
    let mut counts = HashMap::new();
    for t in enumerate_increasing_trees(n)? {
        let even = t.even_degree_count() as i64;
        *counts.entry((even, n as i64 + 1 - even)).or_insert(0) += 1;
    }
    Ok(xy_poly(counts))
}

/// The substitution `x_{2i} -> x, x_{2i+1} -> y` on `x0..=x{max_index}`.
pub fn parity_collapse(max_index: usize) -> BTreeMap<VarId, LaurentPoly> {
    (0..=max_index as u32)
        .map(|i| {
            let target = if i % 2 == 0 { "x" } else { "y" };
            (
                VarId::indexed("x", i).expect("indexed var"),
                LaurentPoly::var(var(target)),
            )
        })
        .collect()
}

/// Increasing trees on `{0..n}` in which no vertex has more than two
/// children, by recursive parent choice.
pub fn zero_one_two_trees(n: usize) -> Vec<IncreasingTree> {
    fn go(
        v: usize,
        n: usize,
        parents: &mut Vec<u32>,
        deg: &mut Vec<u8>,
        out: &mut Vec<IncreasingTree>,
    ) {
        if v > n {
            out.push(IncreasingTree {
                parents: parents.clone(),
            });
            return;
        }
        for p in 0..v {
            if deg[p] < 2 {
                deg[p] += 1;
                parents.push(p as u32);
                go(v + 1, n, parents, deg, out);
                parents.pop();
                deg[p] -= 1;
            }
        }
    }
    let mut out = Vec::new();
    go(1, n, &mut Vec::new(), &mut vec![0; n + 1], &mut out);
    out
}

/// `E_n(x,y) = Σ_T x^(leaves) y^(vertices with one child)` over 0-1-2
/// increasing trees on `{0..n-1}`.
pub fn andre_oracle(n: usize) -> Result<LaurentPoly, CombinatError> {
    check_range("n", n, 1, 10)?;
    let mut counts = HashMap::new();
    for t in zero_one_two_trees(n - 1) {
        let deg = t.degrees();
        let leaves = deg.iter().filter(|&&d| d == 0).count() as i64;
        let unary = deg.iter().filter(|&&d| d == 1).count() as i64;
        *counts.entry((leaves, unary)).or_insert(0) += 1;
    }
    Ok(xy_poly(counts))
}

// ---------------------------------------------------------------------------
// exterior peaks

/// Row `k -> T(n,k)` of the exterior-peak triangle.
pub type TriangleRow = BTreeMap<u32, u64>;

/// `T(n,k)` by enumeration of `S_n`.
pub fn peaks_oracle(n: usize) -> Result<TriangleRow, CombinatError> {
    check_range("n", n, 1, 9)?;
    let mut row = TriangleRow::new();
    for p in Permutation::all(n) {
        *row.entry(perm_stats(&p).ext_peaks as u32).or_insert(0) += 1;
    }
    Ok(row)
}

/// `T(n,k)` read off `D^n(x)` under `x -> xy, y -> x^2`, as the
/// coefficient of `x^(2k+1) y^(n-2k)`.
pub fn peaks_from_grammar(n: usize) -> Result<TriangleRow, CombinatError> {
    check_range("n", n, 1, 20)?;
    let d = derive_n(
        &Grammar::builtin(GrammarName::ExtPeaks),
        &LaurentPoly::named("x"),
        n,
    );
    peaks_row_from_poly(&d, n)
}

/// Extracts `T(n,k)` from a polynomial of the form
/// `Σ T(n,k) x^(2k+1) y^(n-2k)`; any other monomial is an error.
pub fn peaks_row_from_poly(p: &LaurentPoly, n: usize) -> Result<TriangleRow, CombinatError> {
    let (x, y) = (var("x"), var("y"));
    let mut row = TriangleRow::new();
    for (m, c) in p.terms() {
        let ex = m.exponent(&x);
        let ey = m.exponent(&y);
        let only_xy = m.iter().all(|(v, _)| *v == x || *v == y);
        let shape_ok = only_xy && ex >= 1 && ex % 2 == 1 && ey == n as i64 + 1 - ex && ey >= 0;
        if !shape_ok {
            return Err(CombinatError::ShapeViolation(format!(
                "monomial {m} at n = {n}"
            )));
        }
        let count = c
            .is_integer()
            .then(|| c.numer())
            .filter(|v| v.is_positive())
            .and_then(|v| v.to_u64())
            .ok_or_else(|| CombinatError::ShapeViolation(format!("coefficient {c} of {m}")))?;
        row.insert(((ex - 1) / 2) as u32, count);
    }
    Ok(row)
}

/// `T_n(x) = Σ_k T(n,k) x^k`.
pub fn row_polynomial(row: &TriangleRow) -> LaurentPoly {
    let x = var("x");
    LaurentPoly::from_terms(row.iter().map(|(&k, &c)| {
        (
            Monomial::from_pairs([(x.clone(), k as i64)]),
            BigRational::from_integer(BigInt::from(c)),
        )
    }))
}

/// A named number triangle, serialized as
/// `{"name": "T", "rows": {"1": [1], "2": [1, 1], ...}}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Triangle {
    pub name: String,
    pub rows: BTreeMap<u32, Vec<u64>>,
}

// ---------------------------------------------------------------------------
// recurrences

/// One checked identity in a verification report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckEntry {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl CheckEntry {
    pub fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        CheckEntry {
            name: name.into(),
            passed,
            detail: detail.into(),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub entries: Vec<CheckEntry>,
}

impl Report {
    pub fn push(&mut self, entry: CheckEntry) {
        self.entries.push(entry);
    }

    pub fn check(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.push(CheckEntry::new(name, passed, detail));
    }

    pub fn extend(&mut self, other: Report) {
        self.entries.extend(other.entries);
    }

    pub fn all_passed(&self) -> bool {
        self.entries.iter().all(|e| e.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckEntry> {
        self.entries.iter().filter(|e| !e.passed)
    }
}

fn specialize_y_to_one(p: &LaurentPoly) -> LaurentPoly {
    let img: BTreeMap<_, _> = [(var("y"), LaurentPoly::one())].into_iter().collect();
    p.substitute(&img)
        .expect("y -> 1 is a polynomial substitution")
}

fn int_poly(v: BigInt) -> LaurentPoly {
    LaurentPoly::constant(BigRational::from_integer(v))
}

/// Checks, for `1 <= n <= max_n`,
/// `A_n(x) = Σ_{k<n} binom(n,k) A_k(x) (x-1)^(n-1-k)` with `A_n = D^n(x)|_{y=1}`
/// under the Eulerian grammar. The `k = 0` term uses `D^0(x)|_{y=1} = x`,
/// which is what the Leibniz expansion of `D^n(x · x^-1 y)` produces. Also
/// `T_n(x) = Σ_{j>=1} binom(n,j) (-1)^(j-1) (1-x)^⌊j/2⌋ T_{n-j}(x)` with `T_n`
/// read from the exterior-peaks grammar and `T_0 = 1`, together with
/// `D^n(x)|_{y=1} = x T_n(x^2)`.
pub fn verify_recurrences(max_n: usize) -> Result<Report, CombinatError> {
    check_range("max_n", max_n, 0, 10)?;
    let mut report = Report::default();
    let x = LaurentPoly::named("x");

    let eulerian = Grammar::builtin(GrammarName::Eulerian);
    let a: Vec<LaurentPoly> = crate::grammar::derivative_sequence(&eulerian, &x, max_n)
        .iter()
        .map(specialize_y_to_one)
        .collect();
    let x_minus_1 = crate::laurent::poly("x - 1");
    for n in 1..=max_n {
        let mut rhs = LaurentPoly::zero();
        for (k, ak) in a.iter().enumerate().take(n) {
            let term = &(ak * &x_minus_1.pow((n - 1 - k) as i64).expect("nonnegative"))
                * &int_poly(binomial(n as u64, k as u64));
            rhs.add_assign_ref(&term);
        }
        report.check(
            format!("eulerian recurrence n={n}"),
            rhs == a[n],
            format!("A_{n}(x) = {}", a[n]),
        );
    }

    let peaks = Grammar::builtin(GrammarName::ExtPeaks);
    let mut t: Vec<LaurentPoly> = vec![LaurentPoly::one()];
    let mut dx = x.clone();
    let x_squared: BTreeMap<_, _> = [(var("x"), crate::laurent::poly("x^2"))]
        .into_iter()
        .collect();
    for n in 1..=max_n {
        dx = crate::grammar::formal_derivative(&peaks, &dx);
        let row = peaks_row_from_poly(&dx, n)?;
        let tn = row_polynomial(&row);
        let lifted = &x * &tn.substitute(&x_squared).expect("polynomial substitution");
        report.check(
            format!("peaks specialization n={n}"),
            lifted == specialize_y_to_one(&dx),
            "D^n(x)|_{y=1} = x T_n(x^2)".to_string(),
        );
        t.push(tn);
    }
    let one_minus_x = crate::laurent::poly("1 - x");
    for n in 1..=max_n {
        let mut rhs = LaurentPoly::zero();
        for j in 1..=n {
            let sign = if j % 2 == 1 { 1 } else { -1 };
            let coeff = binomial(n as u64, j as u64) * BigInt::from(sign);
            let term = &(&one_minus_x.pow((j / 2) as i64).expect("nonnegative") * &t[n - j])
                * &int_poly(coeff);
            rhs.add_assign_ref(&term);
        }
        report.check(
            format!("peaks recurrence n={n}"),
            rhs == t[n],
            format!("T_{n}(x) = {}", t[n]),
        );
    }
    Ok(report)
}
