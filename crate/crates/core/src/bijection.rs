//! The bijection `Φ` from permutations of `[n]` to increasing trees on
//! `{0..n}` carrying exterior peaks to even-degree vertices, and its
//! inverse `Ψ`.
//!
//! `Φ` reads the inversion-table code `c_1..c_n` of `σ` and grows a forest
//! one vertex at a time. At step `k` the vertices not yet used split into
//! `U_k` (an odd number of current roots lie above) and `V_k` (an even
//! number do); the code picks one of the two sets and an element `i_k` of
//! it, and every root larger than `i_k` becomes a child of `i_k`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::combinat::{
    check_range, perm_stats, CombinatError, IncreasingTree, Permutation, Report,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BijectionError {
    #[error("invalid code: {0}")]
    InvalidCode(String),
    #[error("not an increasing tree: {0}")]
    NotIncreasingTree(String),
    #[error("internal invariant violated at step {step}: {detail}")]
    Internal { step: usize, detail: String },
    #[error(transparent)]
    Combinat(#[from] CombinatError),
}

/// Inversion table: `c_i` counts `j > i` with `σ_i > σ_j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PermutationCode(Vec<u32>);

impl PermutationCode {
    pub fn new(c: Vec<u32>) -> Result<Self, BijectionError> {
        let n = c.len();
        for (i, &ci) in c.iter().enumerate() {
            let bound = (n - 1 - i) as u32;
            if ci > bound {
                return Err(BijectionError::InvalidCode(format!(
                    "c_{} = {ci} exceeds n - k = {bound}",
                    i + 1
                )));
            }
        }
        Ok(PermutationCode(c))
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

    /// `c_k` with 1-based `k`; `c_0 = 0`.
    pub fn get(&self, k: usize) -> u32 {
        if k == 0 {
            0
        } else {
            self.0[k - 1]
        }
    }
}

impl fmt::Display for PermutationCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", join(&self.0))
    }
}

fn join(items: &[u32]) -> String {
    items
        .iter()
        .map(u32::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

pub fn perm_code(p: &Permutation) -> PermutationCode {
    let w = p.as_slice();
    PermutationCode(
        (0..w.len())
            .map(|i| w[i + 1..].iter().filter(|&&v| v < w[i]).count() as u32)
            .collect(),
    )
}

/// `σ_i` is the `(c_i + 1)`-th smallest value not yet used.
pub fn code_to_perm(c: &PermutationCode) -> Result<Permutation, BijectionError> {
    let c = PermutationCode::new(c.0.clone())?;
    let mut remaining: Vec<u32> = (1..=c.len() as u32).collect();
    let word =
        c.0.iter()
            .map(|&ci| remaining.remove(ci as usize))
            .collect();
    Ok(Permutation::new(word)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Side {
    U,
    V,
}

/// Snapshot of the construction after step `k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PhiState {
    pub k: usize,
    /// Vertices of `F_k`.
    pub vertices: Vec<u32>,
    /// Roots of `F_k`.
    pub roots: Vec<u32>,
    /// `U_k` and `V_k`, computed from the roots of `F_{k-1}`.
    pub u: Vec<u32>,
    pub v: Vec<u32>,
    /// `M_k`; absent at `k = 1`.
    pub m: Option<Vec<u32>>,
    pub side: Option<Side>,
    pub i_k: u32,
    /// Parent of each vertex of `F_k`, `None` for roots.
    pub forest: BTreeMap<u32, Option<u32>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PhiTrace {
    pub steps: Vec<PhiState>,
}

impl PhiTrace {
    /// One row per step with columns `k`, `M_k`, `i_k`, `J_k`.
    pub fn to_table(&self) -> String {
        let fmt_set = |s: &[u32]| format!("{{{}}}", join(s));
        let rows: Vec<[String; 4]> = self
            .steps
            .iter()
            .map(|s| {
                [
                    s.k.to_string(),
                    s.m.as_deref().map_or_else(|| "-".to_string(), fmt_set),
                    s.i_k.to_string(),
                    fmt_set(&s.roots),
                ]
            })
            .collect();
        let header = ["k", "M_k", "i_k", "J_k"].map(String::from);
        let mut widths = header.clone().map(|h| h.len());
        for r in &rows {
            for (w, cell) in widths.iter_mut().zip(r) {
                *w = (*w).max(cell.len());
            }
        }
        std::iter::once(&header)
            .chain(&rows)
            .map(|r| {
                r.iter()
                    .zip(widths)
                    .map(|(cell, w)| format!("{cell:<w$}"))
                    .collect::<Vec<_>>()
                    .join("  ")
                    .trim_end()
                    .to_string()
            })
            .collect::<Vec<_>>()
            .join("\n")
    }
}

/// Splits `candidates` by the parity of the number of roots above each one.
fn split_uv(candidates: &[u32], roots: &BTreeSet<u32>) -> (Vec<u32>, Vec<u32>) {
    candidates
        .iter()
        .partition(|&&m| roots.range(m + 1..).count() % 2 == 1)
}

fn internal(step: usize, detail: String) -> BijectionError {
    BijectionError::Internal { step, detail }
}

fn run_phi(p: &Permutation, record: bool) -> Result<(Vec<u32>, Vec<PhiState>), BijectionError> {
    let n = p.len();
    let code = perm_code(p);
    let c = |k: usize| code.get(k) as usize;
    let mut parent: Vec<Option<u32>> = vec![None; n + 1];
    let mut present = vec![false; n + 1];
    let mut roots = BTreeSet::new();
    let mut steps = Vec::new();

    for k in 1..=n {
        let complement: Vec<u32> = (1..=n as u32).filter(|&m| !present[m as usize]).collect();
        let (u, v) = split_uv(&complement, &roots);
        let (i_k, m_set, side) = if k == 1 {
            ((n - c(1)) as u32, None, None)
        } else {
            let (a, b, d) = (c(k - 2), c(k - 1), c(k));
            let side = if (a <= b && b <= d) || (a > b && b > d) {
                Side::U
            } else {
                Side::V
            };
            let m = if side == Side::U { &u } else { &v };
            let expected = if b > d { b } else { n - k + 1 - b };
            if m.len() != expected {
                return Err(internal(
                    k,
                    format!("|M_k| = {} but expected {expected} (M_k = {m:?})", m.len()),
                ));
            }
            let idx = if b > d { d + 1 } else { n - k + 1 - d };
            let i_k = *m
                .get(idx.wrapping_sub(1))
                .ok_or_else(|| internal(k, format!("index {idx} outside M_k = {m:?}")))?;
            (i_k, Some(m.clone()), Some(side))
        };
        if i_k == 0 || i_k as usize > n || present[i_k as usize] {
            return Err(internal(k, format!("chosen vertex {i_k} is not available")));
        }
        let above: Vec<u32> = roots.range(i_k + 1..).copied().collect();
        for r in above {
            roots.remove(&r);
            parent[r as usize] = Some(i_k);
        }
        roots.insert(i_k);
        present[i_k as usize] = true;

        if record {
            let forest: BTreeMap<u32, Option<u32>> = (1..=n as u32)
                .filter(|&x| present[x as usize])
                .map(|x| (x, parent[x as usize]))
                .collect();
            if forest.len() != k {
                return Err(internal(k, format!("forest has {} vertices", forest.len())));
            }
            steps.push(PhiState {
                k,
                vertices: forest.keys().copied().collect(),
                roots: roots.iter().copied().collect(),
                u,
                v,
                m: m_set,
                side,
                i_k,
                forest,
            });
        }
    }
    let parents = parent[1..].iter().map(|p| p.unwrap_or(0)).collect();
    Ok((parents, steps))
}

pub fn phi(p: &Permutation) -> Result<IncreasingTree, BijectionError> {
    let (parents, _) = run_phi(p, false)?;
    IncreasingTree::from_parents(parents)
        .map_err(|e| internal(p.len(), format!("result is not increasing: {e}")))
}

pub fn phi_trace(p: &Permutation) -> Result<PhiTrace, BijectionError> {
    let (_, steps) = run_phi(p, true)?;
    Ok(PhiTrace { steps })
}

pub fn psi(t: &IncreasingTree) -> Result<Permutation, BijectionError> {
    let n = t.n();
    if n == 0 {
        return Err(BijectionError::NotIncreasingTree(
            "tree has no vertex besides the root".into(),
        ));
    }
    // peel F_n, F_{n-1}, ..., recording the roots J_k and the removed i_k
    let mut roots: BTreeSet<u32> = t.children(0).into_iter().collect();
    let mut present = vec![true; n + 1];
    let mut removed = vec![0u32; n + 1];
    let mut roots_at: Vec<BTreeSet<u32>> = vec![BTreeSet::new(); n + 1];
    let mut children: Vec<Vec<u32>> = vec![Vec::new(); n + 1];
    for v in 1..=n as u32 {
        children[t.parent(v) as usize].push(v);
    }
    for k in (1..=n).rev() {
        roots_at[k] = roots.clone();
        let i_k = *roots.iter().next_back().expect("forest is nonempty");
        roots.remove(&i_k);
        roots.extend(children[i_k as usize].iter().copied());
        present[i_k as usize] = false;
        removed[k] = i_k;
    }
    // present is now empty; rebuild I_{k-1} forward to classify i_k
    let mut sides = vec![Side::U; n + 1];
    let mut sizes = vec![0usize; n + 1];
    let mut used = vec![false; n + 1];
    used[removed[1] as usize] = true;
    for k in 2..=n {
        let complement: Vec<u32> = (1..=n as u32).filter(|&m| !used[m as usize]).collect();
        let (u, v) = split_uv(&complement, &roots_at[k - 1]);
        let i_k = removed[k];
        let (side, m) = if u.contains(&i_k) {
            (Side::U, u)
        } else {
            (Side::V, v)
        };
        sides[k] = side;
        sizes[k] = m.len();
        used[i_k as usize] = true;
    }
    if n >= 2 && sizes[n] != 1 {
        return Err(internal(n, format!("|M_n| = {} instead of 1", sizes[n])));
    }

    let mut c = vec![0usize; n + 1];
    if n >= 2 {
        c[n - 1] = usize::from(t.degrees()[0].is_multiple_of(2));
    }
    for k in (1..=n.saturating_sub(2)).rev() {
        let descent_before = match sides[k + 2] {
            Side::U => c[k + 1] > c[k + 2],
            Side::V => c[k + 1] <= c[k + 2],
        };
        c[k] = if descent_before {
            sizes[k + 1]
        } else {
            (n - k)
                .checked_sub(sizes[k + 1])
                .ok_or_else(|| internal(k, format!("|M_{}| = {} too large", k + 1, sizes[k + 1])))?
        };
    }
    let code = PermutationCode::new(c[1..].iter().map(|&v| v as u32).collect())
        .map_err(|e| internal(1, e.to_string()))?;
    code_to_perm(&code)
}

/// Exhaustive checks over `S_n` and the increasing trees on `{0..n}` for
/// `1 <= n <= max_n`.
pub fn verify_bijection(max_n: usize) -> Result<Report, BijectionError> {
    check_range("max_n", max_n, 0, 8)?;
    let mut report = Report::default();
    for n in 1..=max_n {
        let mut images: BTreeSet<IncreasingTree> = BTreeSet::new();
        let (mut round_trip, mut transport, mut root_parity, mut down_up, mut leaf) =
            (true, true, true, true, true);
        let (mut down_up_count, mut total, mut first_bad) = (0usize, 0usize, None);
        for p in Permutation::all(n) {
            total += 1;
            let t = phi(&p)?;
            let code = perm_code(&p);
            let deg = t.degrees();
            let mut ok = true;
            if psi(&t)? != p {
                round_trip = false;
                ok = false;
            }
            if t.even_degree_count() != 2 * perm_stats(&p).ext_peaks + 1 {
                transport = false;
                ok = false;
            }
            if (deg[0] % 2 == 0) != (code.get(n - 1) == 1) {
                root_parity = false;
                ok = false;
            }
            if p.is_down_up() {
                down_up_count += 1;
                if deg[1..].iter().any(|d| d % 2 == 1) {
                    down_up = false;
                    ok = false;
                }
            }
            let i1 = (n - code.get(1) as usize) as u32;
            if deg[i1 as usize] != 0 {
                leaf = false;
                ok = false;
            }
            if !ok && first_bad.is_none() {
                first_bad = Some(p.to_wire());
            }
            images.insert(t);
        }
        let suffix = first_bad.map_or_else(String::new, |p| format!("; first failure at {p}"));
        report.check(
            format!("phi injective n={n}"),
            images.len() == total,
            format!("{} distinct trees from {total} permutations", images.len()),
        );
        report.check(
            format!("psi(phi) = id n={n}"),
            round_trip,
            format!("{total} permutations{suffix}"),
        );
        report.check(
            format!("even degrees = 2*ext_peaks+1 n={n}"),
            transport,
            format!("{total} permutations{suffix}"),
        );
        report.check(
            format!("root parity n={n}"),
            root_parity,
            format!("root degree even iff c_(n-1) = 1{suffix}"),
        );
        report.check(
            format!("down-up gives even tree n={n}"),
            down_up,
            format!("{down_up_count} down-up permutations"),
        );
        report.check(
            format!("i_1 is a leaf n={n}"),
            leaf,
            format!("{total} permutations{suffix}"),
        );

        let mut inverse_ok = true;
        let mut trees = 0usize;
        for t in crate::combinat::enumerate_increasing_trees(n)? {
            trees += 1;
            if phi(&psi(&t)?)? != t {
                inverse_ok = false;
            }
        }
        report.check(
            format!("phi(psi) = id n={n}"),
            inverse_ok,
            format!("{trees} trees"),
        );
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    const EXAMPLE: &str = "5,3,4,6,7,2,1";

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn code_examples() {
        assert_eq!(perm_code(&perm(EXAMPLE)).as_slice(), &[4, 2, 2, 2, 2, 1, 0]);
        assert_eq!(perm_code(&Permutation::identity(5)).as_slice(), &[0; 5]);
        assert_eq!(perm_code(&perm("4,3,2,1")).as_slice(), &[3, 2, 1, 0]);
        let c = PermutationCode::new(vec![4, 2, 2, 2, 2, 1, 0]).unwrap();
        assert_eq!(code_to_perm(&c).unwrap(), perm(EXAMPLE));
        assert_eq!(
            code_to_perm(&PermutationCode::new(vec![1, 0]).unwrap()).unwrap(),
            perm("2,1")
        );
        assert_eq!(
            code_to_perm(&PermutationCode(vec![0; 3])).unwrap(),
            Permutation::identity(3)
        );
        let err = PermutationCode::new(vec![0, 1]).unwrap_err();
        assert!(err.to_string().starts_with("invalid code"));
        assert!(code_to_perm(&PermutationCode(vec![3, 0, 0])).is_err());
        assert_eq!(c.to_string(), "(4,2,2,2,2,1,0)");
    }

    #[test]
    fn code_round_trip() {
        for n in 0..=6 {
            for p in Permutation::all(n) {
                assert_eq!(code_to_perm(&perm_code(&p)).unwrap(), p);
            }
        }
    }

    #[test]
    fn phi_worked_example() {
        let t = phi(&perm(EXAMPLE)).unwrap();
        assert_eq!(t.to_wire(), "0,1,2,0,4,2,2");
        assert_eq!(t.children(0), vec![1, 4]);
        assert_eq!(t.children(2), vec![3, 6, 7]);
        assert_eq!(t.even_degree_count(), 5);
    }

    #[test]
    fn trace_matches_table() {
        let tr = phi_trace(&perm(EXAMPLE)).unwrap();
        let m: Vec<Option<Vec<u32>>> = tr.steps.iter().map(|s| s.m.clone()).collect();
        let i: Vec<u32> = tr.steps.iter().map(|s| s.i_k).collect();
        assert_eq!(i, vec![3, 6, 7, 2, 1, 5, 4]);
        assert_eq!(m[0], None);
        assert_eq!(m[1], Some(vec![4, 5, 6, 7]));
        assert_eq!(m[2], Some(vec![1, 2, 7]));
        assert_eq!(m[3], Some(vec![1, 2]));
        assert_eq!(m[4], Some(vec![1]));
        assert_eq!(m[5], Some(vec![4, 5]));
        assert_eq!(m[6], Some(vec![4]));
        assert_eq!(tr.steps[4].roots, vec![1]);
        for s in &tr.steps {
            assert_eq!(s.forest.len(), s.k);
            let mut all: Vec<u32> = s.u.iter().chain(&s.v).copied().collect();
            all.sort();
            let expect: Vec<u32> = (1..=7)
                .filter(|x| !tr.steps[..s.k - 1].iter().any(|p| p.i_k == *x))
                .collect();
            assert_eq!(all, expect);
        }
        let final_forest = &tr.steps[6].forest;
        let t = phi(&perm(EXAMPLE)).unwrap();
        for (&v, &p) in final_forest {
            assert_eq!(p.unwrap_or(0), t.parent(v));
        }
        let table = tr.to_table();
        let lines: Vec<&str> = table.lines().collect();
        assert_eq!(lines.len(), 8);
        assert!(lines[0].starts_with("k"));
        assert!(lines[1].starts_with("1  -"));
        assert!(lines[2].contains("{4,5,6,7}"));
    }

    #[test]
    fn small_cases() {
        assert_eq!(phi(&perm("1")).unwrap().to_wire(), "0");
        let t = phi(&perm("2,1")).unwrap();
        assert_eq!(t.to_wire(), "0,0");
        assert_eq!(t.even_degree_count(), 3);
        assert_eq!(phi(&perm("1,2")).unwrap().to_wire(), "0,1");
        assert_eq!(psi(&"0".parse().unwrap()).unwrap(), perm("1"));
        assert_eq!(psi(&"0,1".parse().unwrap()).unwrap(), perm("1,2"));
        assert!(psi(&"".parse().unwrap())
            .unwrap_err()
            .to_string()
            .starts_with("not an increasing tree"));
    }

    #[test]
    fn psi_worked_example() {
        let t: IncreasingTree = "0,1,2,0,4,2,2".parse().unwrap();
        assert_eq!(psi(&t).unwrap(), perm(EXAMPLE));
    }

    #[test]
    fn verify_small() {
        let r = verify_bijection(4).unwrap();
        assert!(r.all_passed(), "{:?}", r.failures().collect::<Vec<_>>());
        assert!(verify_bijection(1).unwrap().all_passed());
        assert!(verify_bijection(9).is_err());
    }
}
