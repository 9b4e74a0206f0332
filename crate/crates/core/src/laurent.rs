//! Multivariate Laurent polynomials with arbitrary-precision rational
//! coefficients.
//!
//! A [`LaurentPoly`] is a sparse map from [`Monomial`] to a nonzero
//! [`BigRational`]. Exponents are signed, so `x^-1*y` is an ordinary
//! monomial and single-term polynomials are units of the ring.
//!
//! Terms iterate (and print) in graded lexicographic order: ascending total
//! degree, ties broken by comparing exponent vectors variable by variable
//! in ascending name order.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LaurentError {
    #[error("invalid variable name {0:?}")]
    InvalidVar(String),
    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },
    #[error("not invertible: {0}")]
    NotInvertible(String),
    #[error("pole at evaluation point: {0} = 0 occurs with a negative exponent")]
    Pole(VarId),
    #[error("variable {0} has no assigned value")]
    Unassigned(VarId),
}

/// An indeterminate such as `x`, `u` or `x3`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VarId(Arc<str>);

impl VarId {
    pub fn new(name: &str) -> Result<Self, LaurentError> {
        if Self::is_valid_name(name) {
            Ok(VarId(Arc::from(name)))
        } else {
            Err(LaurentError::InvalidVar(name.to_string()))
        }
    }

    /// `prefix` followed by the decimal index, e.g. `indexed("x", 4)` is `x4`.
    pub fn indexed(prefix: &str, index: u32) -> Result<Self, LaurentError> {
        Self::new(&format!("{prefix}{index}"))
    }

    pub fn is_valid_name(name: &str) -> bool {
        let mut chars = name.chars();
        matches!(chars.next(), Some(c) if c.is_ascii_lowercase())
            && chars.all(|c| c.is_ascii_lowercase() || c.is_ascii_digit())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl FromStr for VarId {
    type Err = LaurentError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        VarId::new(s)
    }
}

/// A power product `∏ v^e` with nonzero integer exponents, kept sorted by
/// variable name.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: Vec<(VarId, i64)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial { exps: Vec::new() }
    }

    pub fn var(v: VarId) -> Self {
        Monomial { exps: vec![(v, 1)] }
    }

    /// Builds a monomial from `(variable, exponent)` pairs; repeated
    /// variables have their exponents added and zeros are dropped.
    pub fn from_pairs<I: IntoIterator<Item = (VarId, i64)>>(pairs: I) -> Self {
        let mut map: BTreeMap<VarId, i64> = BTreeMap::new();
        for (v, e) in pairs {
            *map.entry(v).or_insert(0) += e;
        }
        Monomial {
            exps: map.into_iter().filter(|&(_, e)| e != 0).collect(),
        }
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exponent(&self, v: &VarId) -> i64 {
        self.exps
            .binary_search_by(|(w, _)| w.cmp(v))
            .map(|i| self.exps[i].1)
            .unwrap_or(0)
    }

    pub fn total_degree(&self) -> i64 {
        self.exps.iter().map(|&(_, e)| e).sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&VarId, i64)> + '_ {
        self.exps.iter().map(|(v, e)| (v, *e))
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.exps.len() + other.exps.len());
        let (mut i, mut j) = (0, 0);
        while i < self.exps.len() && j < other.exps.len() {
            let (a, ea) = &self.exps[i];
            let (b, eb) = &other.exps[j];
            match a.cmp(b) {
                Ordering::Less => {
                    out.push((a.clone(), *ea));
                    i += 1;
                }
                Ordering::Greater => {
                    out.push((b.clone(), *eb));
                    j += 1;
                }
                Ordering::Equal => {
                    if ea + eb != 0 {
                        out.push((a.clone(), ea + eb));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.exps[i..]);
        out.extend_from_slice(&other.exps[j..]);
        Monomial { exps: out }
    }

    pub fn pow(&self, k: i64) -> Monomial {
        if k == 0 {
            return Monomial::one();
        }
        Monomial {
            exps: self.exps.iter().map(|(v, e)| (v.clone(), e * k)).collect(),
        }
    }

    pub fn inverse(&self) -> Monomial {
        self.pow(-1)
    }

    /// The same monomial with the exponent of `v` shifted by `delta`.
    pub fn shift(&self, v: &VarId, delta: i64) -> Monomial {
        self.mul(&Monomial {
            exps: vec![(v.clone(), delta)],
        })
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| {
                let (mut i, mut j) = (0, 0);
                loop {
                    let a = self.exps.get(i);
                    let b = other.exps.get(j);
                    let (ea, eb) = match (a, b) {
                        (None, None) => return Ordering::Equal,
                        (Some((_, ea)), None) => {
                            i += 1;
                            (*ea, 0)
                        }
                        (None, Some((_, eb))) => {
                            j += 1;
                            (0, *eb)
                        }
                        (Some((va, ea)), Some((vb, eb))) => match va.cmp(vb) {
                            Ordering::Less => {
                                i += 1;
                                (*ea, 0)
                            }
                            Ordering::Greater => {
                                j += 1;
                                (0, *eb)
                            }
                            Ordering::Equal => {
                                i += 1;
                                j += 1;
                                (*ea, *eb)
                            }
                        },
                    };
                    match ea.cmp(&eb) {
                        Ordering::Equal => continue,
                        ord => return ord,
                    }
                }
            })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        for (idx, (v, e)) in self.exps.iter().enumerate() {
            if idx > 0 {
                f.write_str("*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Exact Laurent polynomial. The zero polynomial is the empty term map.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<Monomial, BigRational>,
}

fn add_term(terms: &mut BTreeMap<Monomial, BigRational>, m: Monomial, c: BigRational) {
    if c.is_zero() {
        return;
    }
    match terms.entry(m) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::term(Monomial::one(), c)
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn term(m: Monomial, c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        add_term(&mut terms, m, c);
        LaurentPoly { terms }
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(m, BigRational::one())
    }

    pub fn var(v: VarId) -> Self {
        Self::monomial(Monomial::var(v))
    }

    /// Convenience for literal variable names in code; panics on an invalid name.
    pub fn named(name: &str) -> Self {
        Self::var(VarId::new(name).expect("valid variable name"))
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, BigRational)>>(iter: I) -> Self {
        let mut terms = BTreeMap::new();
        for (m, c) in iter {
            add_term(&mut terms, m, c);
        }
        LaurentPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> + '_ {
        self.terms.iter()
    }

    /// Coefficient of `m`, zero when absent.
    pub fn coefficient(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    /// The single term of a one-term polynomial.
    pub fn as_single_term(&self) -> Option<(&Monomial, &BigRational)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    /// Multiplicative inverse when `self` is a nonzero rational times a monomial.
    pub fn unit_inverse(&self) -> Option<LaurentPoly> {
        self.as_single_term()
            .map(|(m, c)| LaurentPoly::term(m.inverse(), c.recip()))
    }

    pub fn variables(&self) -> Vec<VarId> {
        let mut vars: Vec<VarId> = self
            .terms
            .keys()
            .flat_map(|m| m.iter().map(|(v, _)| v.clone()))
            .collect();
        vars.sort();
        vars.dedup();
        vars
    }

    pub fn scale(&self, c: &BigRational) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &BigRational) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        // multiplying by a monomial is injective on monomials, no collisions
        LaurentPoly {
            terms: self.terms.iter().map(|(n, a)| (n.mul(m), a * c)).collect(),
        }
    }

    /// Adds `c * m` in place.
    pub fn add_term(&mut self, m: Monomial, c: BigRational) {
        add_term(&mut self.terms, m, c);
    }

    pub fn add_assign_ref(&mut self, other: &LaurentPoly) {
        for (m, c) in &other.terms {
            add_term(&mut self.terms, m.clone(), c.clone());
        }
    }

    /// `self^k`. Negative `k` is only defined for single-term polynomials.
    pub fn pow(&self, k: i64) -> Result<LaurentPoly, LaurentError> {
        if k < 0 {
            let inv = self
                .unit_inverse()
                .ok_or_else(|| LaurentError::NotInvertible(format!("({self})^{k}")))?;
            return inv.pow(-k);
        }
        if let Some((m, c)) = self.as_single_term() {
            return Ok(LaurentPoly::term(
                m.pow(k),
                num_traits::pow(c.clone(), k as usize),
            ));
        }
        let mut result = LaurentPoly::one();
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        Ok(result)
    }

    /// Replaces each variable by its image; unmapped variables stay put.
    /// Variables occurring with a negative exponent need a single-term image.
    pub fn substitute(
        &self,
        image: &BTreeMap<VarId, LaurentPoly>,
    ) -> Result<LaurentPoly, LaurentError> {
        let mut powers: BTreeMap<(VarId, i64), LaurentPoly> = BTreeMap::new();
        let mut out = LaurentPoly::zero();
        for (m, c) in &self.terms {
            let mut kept = Vec::new();
            let mut acc = LaurentPoly::one();
            for (v, e) in m.iter() {
                match image.get(v) {
                    None => kept.push((v.clone(), e)),
                    Some(img) => {
                        let key = (v.clone(), e);
                        if !powers.contains_key(&key) {
                            let p = img.pow(e).map_err(|_| {
                                LaurentError::NotInvertible(format!("{v}^{e} with {v} -> {img}"))
                            })?;
                            powers.insert(key.clone(), p);
                        }
                        acc = &acc * &powers[&key];
                    }
                }
            }
            let rest = Monomial::from_pairs(kept);
            out.add_assign_ref(&acc.mul_monomial(&rest, c));
        }
        Ok(out)
    }

    /// Exact value at a point assigning every variable of `self`.
    pub fn evaluate(
        &self,
        point: &BTreeMap<VarId, BigRational>,
    ) -> Result<BigRational, LaurentError> {
        let mut total = BigRational::zero();
        for (m, c) in &self.terms {
            let mut value = c.clone();
            for (v, e) in m.iter() {
                let a = point
                    .get(v)
                    .ok_or_else(|| LaurentError::Unassigned(v.clone()))?;
                if e < 0 && a.is_zero() {
                    return Err(LaurentError::Pole(v.clone()));
                }
                value *= pow_rational(a, e);
            }
            total += value;
        }
        Ok(total)
    }
}

fn pow_rational(a: &BigRational, e: i64) -> BigRational {
    if e >= 0 {
        num_traits::pow(a.clone(), e as usize)
    } else {
        num_traits::pow(a.recip(), (-e) as usize)
    }
}

pub(crate) fn fmt_rational(c: &BigRational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            if idx > 0 {
                f.write_str(" + ")?;
            }
            if m.is_one() {
                f.write_str(&fmt_rational(c))?;
            } else if c.is_one() {
                write!(f, "{m}")?;
            } else if (-c).is_one() {
                write!(f, "-{m}")?;
            } else {
                write!(f, "{}*{m}", fmt_rational(c))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl FromStr for LaurentPoly {
    type Err = LaurentError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_poly(s)
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out.add_assign_ref(rhs);
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        for (m, c) in rhs.terms {
            add_term(&mut self.terms, m, c);
        }
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            add_term(&mut out.terms, m.clone(), -c);
        }
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut terms = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                add_term(&mut terms, m1.mul(m2), c1 * c2);
            }
        }
        LaurentPoly { terms }
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

// ---------------------------------------------------------------------------
// text format parser

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(src: &str) -> Result<Vec<(usize, Tok)>, LaurentError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let n: BigInt = src[start..i].parse().expect("digits");
            out.push((col, Tok::Num(n)));
            continue;
        }
        if c.is_ascii_lowercase() {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_lowercase() || bytes[i].is_ascii_digit()) {
                i += 1;
            }
            out.push((col, Tok::Ident(src[start..i].to_string())));
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            _ => {
                return Err(LaurentError::Parse {
                    column: col,
                    message: format!("unexpected character {c:?}"),
                })
            }
        };
        out.push((col, tok));
        i += c.len_utf8();
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end_col: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn column(&self) -> usize {
        self.toks
            .get(self.pos)
            .map(|(c, _)| *c)
            .unwrap_or(self.end_col)
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T, LaurentError> {
        Err(LaurentError::Parse {
            column: self.column(),
            message: message.into(),
        })
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    // expr := term (('+'|'-') term)*
    fn expr(&mut self) -> Result<LaurentPoly, LaurentError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    acc = acc + self.term()?;
                }
                Some(Tok::Minus) => {
                    self.bump();
                    acc = acc - self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    // term := ('+'|'-')* factor ('*' factor)*
    fn term(&mut self) -> Result<LaurentPoly, LaurentError> {
        let mut negate = false;
        loop {
            match self.peek() {
                Some(Tok::Minus) => {
                    negate = !negate;
                    self.bump();
                }
                Some(Tok::Plus) => {
                    self.bump();
                }
                _ => break,
            }
        }
        let mut acc = self.factor()?;
        while let Some(Tok::Star) = self.peek() {
            self.bump();
            acc = &acc * &self.factor()?;
        }
        Ok(if negate { -acc } else { acc })
    }

    // factor := atom ('^' ('+'|'-')? INT)?
    fn factor(&mut self) -> Result<LaurentPoly, LaurentError> {
        let base = self.atom()?;
        if let Some(Tok::Caret) = self.peek() {
            self.bump();
            let mut negative = false;
            match self.peek() {
                Some(Tok::Minus) => {
                    negative = true;
                    self.bump();
                }
                Some(Tok::Plus) => {
                    self.bump();
                }
                _ => {}
            }
            let col = self.column();
            let Some(Tok::Num(n)) = self.bump() else {
                return Err(LaurentError::Parse {
                    column: col,
                    message: "expected integer exponent".into(),
                });
            };
            let k: i64 = i64::try_from(&n).map_err(|_| LaurentError::Parse {
                column: col,
                message: "exponent out of range".into(),
            })?;
            return base.pow(if negative { -k } else { k });
        }
        Ok(base)
    }

    // atom := INT ('/' INT)? | IDENT | '(' expr ')'
    fn atom(&mut self) -> Result<LaurentPoly, LaurentError> {
        let col = self.column();
        match self.bump() {
            Some(Tok::Num(n)) => {
                if let Some(Tok::Slash) = self.peek() {
                    self.bump();
                    let dcol = self.column();
                    let Some(Tok::Num(d)) = self.bump() else {
                        return Err(LaurentError::Parse {
                            column: dcol,
                            message: "expected denominator".into(),
                        });
                    };
                    if d.is_zero() {
                        return Err(LaurentError::Parse {
                            column: dcol,
                            message: "zero denominator".into(),
                        });
                    }
                    return Ok(LaurentPoly::constant(BigRational::new(n, d)));
                }
                Ok(LaurentPoly::constant(BigRational::from_integer(n)))
            }
            Some(Tok::Ident(name)) => Ok(LaurentPoly::var(VarId::new(&name)?)),
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                match self.bump() {
                    Some(Tok::RParen) => Ok(inner),
                    _ => Err(LaurentError::Parse {
                        column: col,
                        message: "unclosed parenthesis".into(),
                    }),
                }
            }
            Some(t) => Err(LaurentError::Parse {
                column: col,
                message: format!("unexpected token {t:?}"),
            }),
            None => Err(LaurentError::Parse {
                column: col,
                message: "unexpected end of input".into(),
            }),
        }
    }
}

/// Parses the polynomial text format, e.g. `-1/2*x^-1*y^2 + 3*x`.
///
/// Besides the canonical output of `Display` this accepts binary `-`,
/// parentheses and integer powers of parenthesised groups.
pub fn parse_poly(src: &str) -> Result<LaurentPoly, LaurentError> {
    let toks = tokenize(src)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end_col: src.len() + 1,
    };
    if p.peek().is_none() {
        return p.err("empty polynomial");
    }
    let poly = p.expr()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(poly)
}

/// Parses a single monomial such as `x^3*y`; coefficients are rejected.
pub fn parse_monomial(src: &str) -> Result<Monomial, LaurentError> {
    let p = parse_poly(src)?;
    match p.as_single_term() {
        Some((m, c)) if c.is_one() => Ok(m.clone()),
        _ => Err(LaurentError::Parse {
            column: 1,
            message: format!("{src:?} is not a monomial"),
        }),
    }
}

pub fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Shorthand used pervasively in tests and builtins: parses or panics.
pub fn poly(src: &str) -> LaurentPoly {
    parse_poly(src).unwrap_or_else(|e| panic!("bad polynomial literal {src:?}: {e}"))
}

pub fn var(name: &str) -> VarId {
    VarId::new(name).unwrap_or_else(|e| panic!("{e}"))
}
