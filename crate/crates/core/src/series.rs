//! Power series in `t` truncated at a fixed order, with Laurent polynomial
//! coefficients.
//!
//! Exponential generating functions `Gen(w, t) = Σ D^n(w) t^n / n!` are
//! stored with the `1/n!` already applied, so the ordinary Cauchy product
//! is the product of generating functions.
//!
//! The closed forms built here avoid square roots: for a polynomial `A`,
//! `sin(t√A) = √A·S` and `cos(t√A) = C` where `S` and `C` are power series
//! in `t` with polynomial coefficients (see [`sqrtfree_pair`]).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::grammar::{derivative_sequence, Grammar};
use crate::laurent::{parse_poly, LaurentError, LaurentPoly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("leading coefficient not a unit: {0}")]
    NotUnit(String),
    #[error("cannot differentiate a series of order 0")]
    ZeroOrder,
    #[error("malformed series: {0}")]
    Malformed(String),
    #[error(transparent)]
    Laurent(#[from] LaurentError),
}

/// `c_0 + c_1 t + ... + c_N t^N`.
#[derive(Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<LaurentPoly>,
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

fn inv_factorial(n: usize) -> BigRational {
    BigRational::new(BigInt::one(), factorial(n))
}

impl TruncatedSeries {
    /// Series with the given coefficients; at least one is required.
    pub fn from_coeffs(coeffs: Vec<LaurentPoly>) -> Result<Self, SeriesError> {
        if coeffs.is_empty() {
            return Err(SeriesError::Malformed("no coefficients".into()));
        }
        Ok(TruncatedSeries { coeffs })
    }

    /// Series whose `t^n` coefficient is `numerators[n] / n!`.
    pub fn from_egf_numerators(numerators: Vec<LaurentPoly>) -> Result<Self, SeriesError> {
        let coeffs = numerators
            .iter()
            .enumerate()
            .map(|(n, p)| p.scale(&inv_factorial(n)))
            .collect();
        Self::from_coeffs(coeffs)
    }

    pub fn constant(c: LaurentPoly, order: usize) -> Self {
        let mut coeffs = vec![LaurentPoly::zero(); order + 1];
        coeffs[0] = c;
        TruncatedSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::constant(LaurentPoly::zero(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::constant(LaurentPoly::one(), order)
    }

    /// The series `t`, truncated at `order`.
    pub fn t(order: usize) -> Self {
        let mut s = Self::zero(order);
        if order >= 1 {
            s.coeffs[1] = LaurentPoly::one();
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &LaurentPoly {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[LaurentPoly] {
        &self.coeffs
    }

    /// `n! · c_n` for each `n`, i.e. the `D^n(w)` of an exponential
    /// generating function.
    pub fn egf_numerators(&self) -> Vec<LaurentPoly> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| c.scale(&BigRational::from_integer(factorial(n))))
            .collect()
    }

    pub fn truncate(&self, order: usize) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs[..=order.min(self.order())].to_vec(),
        }
    }

    /// Multiplies every coefficient by the polynomial `p`.
    pub fn scale(&self, p: &LaurentPoly) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| c * p).collect(),
        }
    }

    /// Cauchy product, truncated at the smaller order.
    pub fn mul_series(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(other.order());
        let coeffs = (0..=order)
            .map(|n| {
                let mut acc = LaurentPoly::zero();
                for k in 0..=n {
                    let a = &self.coeffs[k];
                    let b = &other.coeffs[n - k];
                    if !a.is_zero() && !b.is_zero() {
                        acc.add_assign_ref(&(a * b));
                    }
                }
                acc
            })
            .collect();
        TruncatedSeries { coeffs }
    }

    /// `q` with `q · other = self` through the smaller order. The constant
    /// coefficient of `other` must be a unit of the Laurent ring.
    pub fn divide(&self, other: &TruncatedSeries) -> Result<TruncatedSeries, SeriesError> {
        let order = self.order().min(other.order());
        let lead_inv = other.coeffs[0]
            .unit_inverse()
            .ok_or_else(|| SeriesError::NotUnit(other.coeffs[0].to_string()))?;
        let mut q: Vec<LaurentPoly> = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut acc = self.coeffs[n].clone();
            for k in 1..=n {
                let b = &other.coeffs[k];
                if !b.is_zero() && !q[n - k].is_zero() {
                    acc = &acc - &(b * &q[n - k]);
                }
            }
            q.push(&acc * &lead_inv);
        }
        Ok(TruncatedSeries { coeffs: q })
    }

    /// Termwise `d/dt`; the order drops by one.
    pub fn ddt(&self) -> Result<TruncatedSeries, SeriesError> {
        if self.order() == 0 {
            return Err(SeriesError::ZeroOrder);
        }
        let coeffs = self.coeffs[1..]
            .iter()
            .enumerate()
            .map(|(k, c)| c.scale(&BigRational::from_integer(BigInt::from(k + 1))))
            .collect();
        Ok(TruncatedSeries { coeffs })
    }

    /// One line per coefficient: `n: <n!·c_n>`.
    pub fn to_text(&self) -> String {
        self.egf_numerators()
            .iter()
            .enumerate()
            .map(|(n, p)| format!("{n}: {p}\n"))
            .collect()
    }

    pub fn to_json(&self) -> SeriesJson {
        SeriesJson {
            order: self.order(),
            coeffs: self
                .egf_numerators()
                .iter()
                .map(|p| p.to_string())
                .collect(),
        }
    }

    pub fn from_json(json: &SeriesJson) -> Result<Self, SeriesError> {
        if json.coeffs.len() != json.order + 1 {
            return Err(SeriesError::Malformed(format!(
                "order {} needs {} coefficients, got {}",
                json.order,
                json.order + 1,
                json.coeffs.len()
            )));
        }
        let numerators = json
            .coeffs
            .iter()
            .map(|s| parse_poly(s))
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_egf_numerators(numerators)
    }
}

/// JSON form: `{"order": N, "coeffs": [n!·c_0, ..., n!·c_N]}` with
/// polynomials in the text format.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesJson {
    pub order: usize,
    pub coeffs: Vec<String>,
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries(self.coeffs.iter().map(|c| c.to_string()))
            .finish()
    }
}

impl<'a> Add<&'a TruncatedSeries> for &'a TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        TruncatedSeries {
            coeffs: (0..=order)
                .map(|n| &self.coeffs[n] + &rhs.coeffs[n])
                .collect(),
        }
    }
}

impl<'a> Sub<&'a TruncatedSeries> for &'a TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        TruncatedSeries {
            coeffs: (0..=order)
                .map(|n| &self.coeffs[n] - &rhs.coeffs[n])
                .collect(),
        }
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl<'a> Mul<&'a TruncatedSeries> for &'a TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self.mul_series(rhs)
    }
}

/// `Gen(w, t)` through `t^order`: the coefficient of `t^n` is `D^n(w)/n!`.
pub fn egf(g: &Grammar, w: &LaurentPoly, order: usize) -> TruncatedSeries {
    TruncatedSeries::from_egf_numerators(derivative_sequence(g, w, order))
        .expect("order + 1 coefficients")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairKind {
    Trig,
    Hyperbolic,
}

/// `(S, C)` with `S = Σ s^n A^n t^(2n+1)/(2n+1)!` and
/// `C = Σ s^n A^n t^(2n)/(2n)!`, where `s = -1` for [`PairKind::Trig`]
/// and `s = 1` for [`PairKind::Hyperbolic`].
pub fn sqrtfree_pair(
    kind: PairKind,
    a: &LaurentPoly,
    order: usize,
) -> (TruncatedSeries, TruncatedSeries) {
    let step = match kind {
        PairKind::Trig => -a,
        PairKind::Hyperbolic => a.clone(),
    };
    let mut s = TruncatedSeries::zero(order);
    let mut c = TruncatedSeries::zero(order);
    let mut power = LaurentPoly::one();
    let mut k = 0;
    while 2 * k <= order {
        c.coeffs[2 * k] = power.scale(&inv_factorial(2 * k));
        if 2 * k < order {
            s.coeffs[2 * k + 1] = power.scale(&inv_factorial(2 * k + 1));
        }
        power = &power * &step;
        k += 1;
    }
    (s, c)
}

/// Closed form of the André generating function `Σ E_n(x,y) t^n/n!`,
/// with numerator and denominator divided by `√(2x − y²)`.
pub fn andre_gf_rhs(order: usize) -> TruncatedSeries {
    let p = crate::laurent::poly;
    let a = p("2*x - y^2");
    let (s, c) = sqrtfree_pair(PairKind::Trig, &a, order);
    let x_minus_y2 = p("x - y^2");
    let y = p("y");
    let numerator =
        &(&TruncatedSeries::constant(p("x"), order) + &s.scale(&(&y * &a))) - &c.scale(&x_minus_y2);
    let denominator = &s.scale(&x_minus_y2) + &c.scale(&y);
    numerator
        .divide(&denominator)
        .expect("leading denominator coefficient is y")
}

/// Closed form of `Σ T_n(x) t^n/n!` (exterior peaks), with numerator and
/// denominator divided by `√(1 − x)`: `1 / (Ch − Sh)`.
pub fn gessel_gf_rhs(order: usize) -> TruncatedSeries {
    let b = crate::laurent::poly("1 - x");
    let (sh, ch) = sqrtfree_pair(PairKind::Hyperbolic, &b, order);
    TruncatedSeries::one(order)
        .divide(&(&ch - &sh))
        .expect("leading denominator coefficient is 1")
}

/// `v / (u cosh t + (v² − u) sinh t)`.
pub fn aux_gf_rhs(order: usize) -> TruncatedSeries {
    let p = crate::laurent::poly;
    let (sinh, cosh) = sqrtfree_pair(PairKind::Hyperbolic, &LaurentPoly::one(), order);
    let denominator = &cosh.scale(&p("u")) + &sinh.scale(&p("v^2 - u"));
    TruncatedSeries::constant(p("v"), order)
        .divide(&denominator)
        .expect("leading denominator coefficient is u")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grammar::GrammarName;
    use crate::laurent::{poly, rational};

    fn series(coeffs: &[&str]) -> TruncatedSeries {
        TruncatedSeries::from_coeffs(coeffs.iter().map(|s| poly(s)).collect()).unwrap()
    }

    #[test]
    fn egf_examples() {
        let aux = Grammar::builtin(GrammarName::AuxUv);
        assert_eq!(
            egf(&aux, &poly("v"), 3),
            series(&["v", "v", "1/2*v", "1/6*v"])
        );

        let eul = Grammar::builtin(GrammarName::Eulerian);
        assert_eq!(
            egf(&eul, &poly("x"), 2),
            series(&["x", "x*y", "1/2*(x*y^2 + x^2*y)"])
        );
        for name in GrammarName::ALL {
            assert_eq!(
                egf(&Grammar::builtin(name), &poly("1"), 5),
                TruncatedSeries::one(5)
            );
        }
    }

    #[test]
    fn mul_examples() {
        let eul = Grammar::builtin(GrammarName::Eulerian);
        let prod = egf(&eul, &poly("x"), 6).mul_series(&egf(&eul, &poly("x^-1"), 6));
        assert_eq!(prod, TruncatedSeries::one(6));

        let a = series(&["x", "y^-1", "3"]);
        assert_eq!(a.mul_series(&TruncatedSeries::one(2)), a);
        assert_eq!(
            series(&["1", "1", "0"]).mul_series(&series(&["1", "-1", "0"])),
            series(&["1", "0", "-1"])
        );
    }

    #[test]
    fn mixed_orders_truncate_to_smaller() {
        let a = series(&["1", "1", "1", "1"]);
        let b = series(&["1", "1"]);
        assert_eq!((&a + &b).order(), 1);
        assert_eq!(a.mul_series(&b), series(&["1", "2"]));
        assert_eq!(a.divide(&b).unwrap().order(), 1);
    }

    #[test]
    fn div_examples() {
        let geometric = TruncatedSeries::one(3)
            .divide(&series(&["1", "-1", "0", "0"]))
            .unwrap();
        assert_eq!(geometric, series(&["1", "1", "1", "1"]));

        let (sh, ch) = sqrtfree_pair(PairKind::Hyperbolic, &LaurentPoly::zero(), 3);
        assert_eq!(
            TruncatedSeries::one(3).divide(&(&ch - &sh)).unwrap(),
            series(&["1", "1", "1", "1"])
        );

        assert!(matches!(
            TruncatedSeries::one(2).divide(&series(&["1 + x", "1", "0"])),
            Err(SeriesError::NotUnit(_))
        ));
        assert!(matches!(
            TruncatedSeries::one(2).divide(&series(&["0", "1", "0"])),
            Err(SeriesError::NotUnit(_))
        ));
    }

    #[test]
    fn ddt_examples() {
        let eul = Grammar::builtin(GrammarName::Eulerian);
        assert_eq!(
            egf(&eul, &poly("x"), 6).ddt().unwrap(),
            egf(&eul, &poly("x*y"), 5)
        );
        assert_eq!(
            TruncatedSeries::one(3).ddt().unwrap(),
            TruncatedSeries::zero(2)
        );
        assert_eq!(
            series(&["0", "0", "1/2"]).ddt().unwrap(),
            series(&["0", "1"])
        );
        assert_eq!(TruncatedSeries::one(0).ddt(), Err(SeriesError::ZeroOrder));
    }

    #[test]
    fn sqrtfree_examples() {
        let (s, c) = sqrtfree_pair(PairKind::Trig, &LaurentPoly::one(), 5);
        assert_eq!(s, series(&["0", "1", "0", "-1/6", "0", "1/120"]));
        assert_eq!(c, series(&["1", "0", "-1/2", "0", "1/24", "0"]));

        let (s, c) = sqrtfree_pair(PairKind::Hyperbolic, &LaurentPoly::zero(), 3);
        assert_eq!(s, series(&["0", "1", "0", "0"]));
        assert_eq!(c, series(&["1", "0", "0", "0"]));

        let (s, _) = sqrtfree_pair(PairKind::Trig, &poly("2*x - y^2"), 3);
        assert_eq!(*s.coeff(1), LaurentPoly::one());
        assert_eq!(*s.coeff(3), poly("-1/6*(2*x - y^2)"));
    }

    #[test]
    fn andre_rhs_examples() {
        let rhs = andre_gf_rhs(3);
        assert_eq!(*rhs.coeff(0), poly("y"));
        assert_eq!(rhs.egf_numerators()[3], poly("x*y^2 + x^2"));
        let at_one: std::collections::BTreeMap<_, _> = [
            (crate::laurent::var("x"), rational(1, 1)),
            (crate::laurent::var("y"), rational(1, 1)),
        ]
        .into_iter()
        .collect();
        let values: Vec<BigRational> = rhs
            .egf_numerators()
            .iter()
            .map(|p| p.evaluate(&at_one).unwrap())
            .collect();
        assert_eq!(values, [1, 1, 1, 2].map(|v| rational(v, 1)));
    }

    #[test]
    fn gessel_rhs_examples() {
        let rhs = gessel_gf_rhs(4);
        let nums = rhs.egf_numerators();
        assert_eq!(nums[0], LaurentPoly::one());
        assert_eq!(nums[3], poly("1 + 5*x"));
        assert_eq!(nums[4], poly("1 + 18*x + 5*x^2"));
    }

    #[test]
    fn aux_rhs_examples() {
        let rhs = aux_gf_rhs(2);
        assert_eq!(*rhs.coeff(0), poly("u^-1*v"));
        assert_eq!(*rhs.coeff(1), poly("u^-1*v*(1 - u^-1*v^2)"));
    }

    #[test]
    fn text_and_json() {
        let eul = Grammar::builtin(GrammarName::Eulerian);
        let s = egf(&eul, &poly("x"), 2);
        assert_eq!(s.to_text(), "0: x\n1: x*y\n2: x*y^2 + x^2*y\n");
        let json = serde_json::to_string(&s.to_json()).unwrap();
        assert_eq!(json, r#"{"order":2,"coeffs":["x","x*y","x*y^2 + x^2*y"]}"#);
        let back: SeriesJson = serde_json::from_str(&json).unwrap();
        assert_eq!(TruncatedSeries::from_json(&back).unwrap(), s);
        let bad = SeriesJson {
            order: 3,
            coeffs: vec!["1".into()],
        };
        assert!(TruncatedSeries::from_json(&bad).is_err());
    }
}
