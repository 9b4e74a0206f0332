//! Context-free grammars as substitution rules, and the formal derivative
//! they induce on Laurent polynomials.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

use crate::laurent::{parse_poly, LaurentError, LaurentPoly, Monomial, VarId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GrammarError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}: duplicate rule for {var}")]
    DuplicateRule { line: usize, var: VarId },
    #[error("unknown grammar {0:?}")]
    UnknownGrammar(String),
    #[error("rule for {0} overlaps the indexed family")]
    FamilyOverlap(VarId),
    #[error(transparent)]
    Laurent(#[from] LaurentError),
}

type FamilyFn = dyn Fn(u32) -> LaurentPoly + Send + Sync;

/// Rules for an infinite indexed alphabet `p0, p1, p2, ...`.
#[derive(Clone)]
pub struct FamilyRule {
    prefix: String,
    rule: Arc<FamilyFn>,
}

impl FamilyRule {
    pub fn new<F>(prefix: &str, rule: F) -> Self
    where
        F: Fn(u32) -> LaurentPoly + Send + Sync + 'static,
    {
        FamilyRule {
            prefix: prefix.to_string(),
            rule: Arc::new(rule),
        }
    }

    pub fn prefix(&self) -> &str {
        &self.prefix
    }

    /// Index of `v` in the family, if `v` is `prefix` followed by a
    /// canonical decimal number.
    pub fn index_of(&self, v: &VarId) -> Option<u32> {
        let digits = v.as_str().strip_prefix(self.prefix.as_str())?;
        if digits.is_empty()
            || !digits.bytes().all(|b| b.is_ascii_digit())
            || (digits.len() > 1 && digits.starts_with('0'))
        {
            return None;
        }
        digits.parse().ok()
    }

    pub fn rule(&self, index: u32) -> LaurentPoly {
        (self.rule)(index)
    }
}

impl fmt::Debug for FamilyRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FamilyRule({}<i> -> {})", self.prefix, self.rule(0))
    }
}

/// A set of substitution rules. Letters without a rule are constants.
#[derive(Clone, Debug)]
pub struct Grammar {
    rules: BTreeMap<VarId, LaurentPoly>,
    family: Option<FamilyRule>,
}

impl Grammar {
    pub fn new(rules: BTreeMap<VarId, LaurentPoly>) -> Self {
        Grammar {
            rules,
            family: None,
        }
    }

    pub fn with_family(
        rules: BTreeMap<VarId, LaurentPoly>,
        family: FamilyRule,
    ) -> Result<Self, GrammarError> {
        if let Some(v) = rules.keys().find(|v| family.index_of(v).is_some()) {
            return Err(GrammarError::FamilyOverlap(v.clone()));
        }
        Ok(Grammar {
            rules,
            family: Some(family),
        })
    }

    pub fn rules(&self) -> &BTreeMap<VarId, LaurentPoly> {
        &self.rules
    }

    pub fn family(&self) -> Option<&FamilyRule> {
        self.family.as_ref()
    }

    /// `D(v)`, or `None` when `v` is a constant.
    pub fn rule_for(&self, v: &VarId) -> Option<LaurentPoly> {
        if let Some(p) = self.rules.get(v) {
            return Some(p.clone());
        }
        let fam = self.family.as_ref()?;
        fam.index_of(v).map(|i| fam.rule(i))
    }

    pub fn builtin(name: GrammarName) -> Grammar {
        let finite = |pairs: &[(&str, &str)]| {
            Grammar::new(
                pairs
                    .iter()
                    .map(|(v, p)| (crate::laurent::var(v), crate::laurent::poly(p)))
                    .collect(),
            )
        };
        match name {
            GrammarName::Eulerian => finite(&[("x", "x*y"), ("y", "x*y")]),
            GrammarName::Stirling(r) => {
                let rhs = format!("x*y^{r}");
                finite(&[("x", &rhs), ("y", &rhs)])
            }
            GrammarName::Lah => finite(&[("z", "x*y*z"), ("x", "x*y"), ("y", "x*y")]),
            GrammarName::LahSignless => finite(&[("z", "x^2*z"), ("x", "x^2")]),
            GrammarName::Andre => finite(&[("x", "x*y"), ("y", "x")]),
            GrammarName::ExtPeaks => finite(&[("x", "x*y"), ("y", "x^2")]),
            GrammarName::ExtPeaksWeighted => finite(&[("x", "x*y"), ("y", "w*x^2")]),
            GrammarName::AuxUv => finite(&[("u", "v^2"), ("v", "v")]),
            GrammarName::TreeDegrees => {
                let family = FamilyRule::new("x", |i| {
                    LaurentPoly::monomial(Monomial::from_pairs([
                        (VarId::indexed("x", 0).expect("x0"), 1),
                        (VarId::indexed("x", i + 1).expect("indexed var"), 1),
                    ]))
                });
                Grammar::with_family(BTreeMap::new(), family).expect("no finite rules")
            }
        }
    }

    /// Renders the finite rules in the grammar file format.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        if let Some(fam) = &self.family {
            let p = &fam.prefix;
            out.push_str(&format!(
                "# indexed family {p}<i>, e.g. {p}0 -> {}\n",
                fam.rule(0)
            ));
        }
        for (v, p) in &self.rules {
            out.push_str(&format!("{v} -> {p}\n"));
        }
        out
    }
}

/// The formal derivative of `p`: linear over terms, and on a monomial
/// `∏ v^e` it is `Σ_v e·v^(e-1)·(rest)·D(v)`, for exponents of either sign.
pub fn formal_derivative(g: &Grammar, p: &LaurentPoly) -> LaurentPoly {
    let mut cache: BTreeMap<VarId, Option<LaurentPoly>> = BTreeMap::new();
    let mut out = LaurentPoly::zero();
    for (m, c) in p.terms() {
        for (v, e) in m.iter() {
            let dv = cache.entry(v.clone()).or_insert_with(|| g.rule_for(v));
            let Some(dv) = dv else { continue };
            if dv.is_zero() {
                continue;
            }
            let factor = c * BigRational::from_integer(BigInt::from(e));
            let lowered = m.shift(v, -1);
            out.add_assign_ref(&dv.mul_monomial(&lowered, &factor));
        }
    }
    out
}

/// `D^n(p)`.
pub fn derive_n(g: &Grammar, p: &LaurentPoly, n: usize) -> LaurentPoly {
    let mut cur = p.clone();
    for _ in 0..n {
        cur = formal_derivative(g, &cur);
    }
    cur
}

/// `[p, D(p), ..., D^n(p)]`.
pub fn derivative_sequence(g: &Grammar, p: &LaurentPoly, n: usize) -> Vec<LaurentPoly> {
    let mut out = Vec::with_capacity(n + 1);
    out.push(p.clone());
    for k in 0..n {
        let next = formal_derivative(g, &out[k]);
        out.push(next);
    }
    out
}

/// Checks that `phi` intertwines the two derivatives on `vars`:
/// `D_dst(phi(v)) == phi(D_src(v))` for each `v`.
pub fn check_morphism(
    src: &Grammar,
    dst: &Grammar,
    phi: &BTreeMap<VarId, LaurentPoly>,
    vars: &BTreeSet<VarId>,
) -> Result<bool, LaurentError> {
    for v in vars {
        let image = phi
            .get(v)
            .cloned()
            .unwrap_or_else(|| LaurentPoly::var(v.clone()));
        let lhs = formal_derivative(dst, &image);
        let rhs = formal_derivative(src, &LaurentPoly::var(v.clone())).substitute(phi)?;
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Parses the grammar file format: one `<var> -> <polynomial>` per line,
/// blank lines and `#` comment lines ignored.
pub fn parse_grammar(text: &str) -> Result<Grammar, GrammarError> {
    let mut rules = BTreeMap::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let (lhs, rhs) = trimmed
            .split_once("->")
            .ok_or_else(|| GrammarError::Parse {
                line,
                message: "expected `<var> -> <polynomial>`".into(),
            })?;
        let var = VarId::new(lhs.trim()).map_err(|e| GrammarError::Parse {
            line,
            message: e.to_string(),
        })?;
        let poly = parse_poly(rhs).map_err(|e| GrammarError::Parse {
            line,
            message: e.to_string(),
        })?;
        if rules.insert(var.clone(), poly).is_some() {
            return Err(GrammarError::DuplicateRule { line, var });
        }
    }
    Ok(Grammar::new(rules))
}

/// The catalog of built-in grammars.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GrammarName {
    /// `x -> xy, y -> xy`
    Eulerian,
    /// `x -> xy^r, y -> xy^r`, `r >= 2`
    Stirling(u32),
    /// `z -> xyz, x -> xy, y -> xy`
    Lah,
    /// `z -> x^2 z, x -> x^2`
    LahSignless,
    /// `x -> xy, y -> x`
    Andre,
    /// `x -> xy, y -> x^2`
    ExtPeaks,
    /// `x -> xy, y -> w x^2`
    ExtPeaksWeighted,
    /// `u -> v^2, v -> v`
    AuxUv,
    /// `x_i -> x_0 x_{i+1}` for all `i >= 0`
    TreeDegrees,
}

impl GrammarName {
    pub const ALL: [GrammarName; 9] = [
        GrammarName::Eulerian,
        GrammarName::Stirling(2),
        GrammarName::Lah,
        GrammarName::LahSignless,
        GrammarName::Andre,
        GrammarName::ExtPeaks,
        GrammarName::ExtPeaksWeighted,
        GrammarName::AuxUv,
        GrammarName::TreeDegrees,
    ];
}

impl fmt::Display for GrammarName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GrammarName::Eulerian => f.write_str("eulerian"),
            GrammarName::Stirling(2) => f.write_str("stirling"),
            GrammarName::Stirling(r) => write!(f, "stirling:{r}"),
            GrammarName::Lah => f.write_str("lah"),
            GrammarName::LahSignless => f.write_str("lah_signless"),
            GrammarName::Andre => f.write_str("andre"),
            GrammarName::ExtPeaks => f.write_str("ext_peaks"),
            GrammarName::ExtPeaksWeighted => f.write_str("ext_peaks_weighted"),
            GrammarName::AuxUv => f.write_str("aux_uv"),
            GrammarName::TreeDegrees => f.write_str("tree_degrees"),
        }
    }
}

impl FromStr for GrammarName {
    type Err = GrammarError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let unknown = || GrammarError::UnknownGrammar(s.to_string());
        Ok(match s {
            "eulerian" => GrammarName::Eulerian,
            "stirling" => GrammarName::Stirling(2),
            "lah" => GrammarName::Lah,
            "lah_signless" => GrammarName::LahSignless,
            "andre" => GrammarName::Andre,
            "ext_peaks" => GrammarName::ExtPeaks,
            "ext_peaks_weighted" => GrammarName::ExtPeaksWeighted,
            "aux_uv" => GrammarName::AuxUv,
            "tree_degrees" => GrammarName::TreeDegrees,
            other => {
                let r = other
                    .strip_prefix("stirling:")
                    .and_then(|r| r.parse::<u32>().ok())
                    .ok_or_else(unknown)?;
                if r < 2 {
                    return Err(unknown());
                }
                GrammarName::Stirling(r)
            }
        })
    }
}
