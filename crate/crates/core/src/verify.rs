//! Verification suites: every grammar identity is compared exactly against
//! an independent computation (brute-force enumeration, a closed form or a
//! recurrence) and the outcome is collected into a [`Report`].

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use thiserror::Error;

use crate::bijection::{perm_code, phi, phi_trace, psi, verify_bijection, BijectionError};
use crate::combinat::{self, CombinatError, Permutation};
use crate::grammar::{
    check_morphism, derivative_sequence, derive_n, formal_derivative, Grammar, GrammarName,
};
use crate::laurent::{poly, var, LaurentError, LaurentPoly, Monomial, VarId};
use crate::series::{self, egf, PairKind, SeriesError, TruncatedSeries};

pub use crate::combinat::{CheckEntry, Report};

pub const MAX_N_RANGE: (usize, usize) = (1, 10);
pub const ORDER_RANGE: (usize, usize) = (1, 16);

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("{what} = {value} outside supported range {min}..={max}")]
    OutOfRange {
        what: &'static str,
        value: usize,
        min: usize,
        max: usize,
    },
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
    #[error(transparent)]
    Laurent(#[from] LaurentError),
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Combinat(#[from] CombinatError),
    #[error(transparent)]
    Bijection(#[from] BijectionError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VerifySuiteId {
    All,
    Eulerian,
    Cyclic,
    Stirling,
    Lah,
    Andre,
    Peaks,
    Trees,
    Gf,
    Recurrences,
    Bijection,
    Morphism,
}

impl VerifySuiteId {
    /// Every concrete suite, in the order `all` runs them.
    pub const SUITES: [VerifySuiteId; 11] = [
        VerifySuiteId::Andre,
        VerifySuiteId::Bijection,
        VerifySuiteId::Cyclic,
        VerifySuiteId::Eulerian,
        VerifySuiteId::Gf,
        VerifySuiteId::Lah,
        VerifySuiteId::Morphism,
        VerifySuiteId::Peaks,
        VerifySuiteId::Recurrences,
        VerifySuiteId::Stirling,
        VerifySuiteId::Trees,
    ];

    pub fn name(self) -> &'static str {
        match self {
            VerifySuiteId::All => "all",
            VerifySuiteId::Eulerian => "eulerian",
            VerifySuiteId::Cyclic => "cyclic",
            VerifySuiteId::Stirling => "stirling",
            VerifySuiteId::Lah => "lah",
            VerifySuiteId::Andre => "andre",
            VerifySuiteId::Peaks => "peaks",
            VerifySuiteId::Trees => "trees",
            VerifySuiteId::Gf => "gf",
            VerifySuiteId::Recurrences => "recurrences",
            VerifySuiteId::Bijection => "bijection",
            VerifySuiteId::Morphism => "morphism",
        }
    }
}

impl fmt::Display for VerifySuiteId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for VerifySuiteId {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        std::iter::once(VerifySuiteId::All)
            .chain(VerifySuiteId::SUITES)
            .find(|id| id.name() == s)
            .ok_or_else(|| VerifyError::UnknownSuite(s.to_string()))
    }
}

/// Bounds shared by all suites. Each suite further caps `max_n` at the
/// largest size its brute-force oracle supports.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyParams {
    pub max_n: usize,
    pub order: usize,
}

impl Default for VerifyParams {
    fn default() -> Self {
        VerifyParams {
            max_n: 7,
            order: 10,
        }
    }
}

impl VerifyParams {
    pub fn new(max_n: usize, order: usize) -> Result<Self, VerifyError> {
        let check = |what, value, (min, max): (usize, usize)| {
            if value < min || value > max {
                Err(VerifyError::OutOfRange {
                    what,
                    value,
                    min,
                    max,
                })
            } else {
                Ok(())
            }
        };
        check("max_n", max_n, MAX_N_RANGE)?;
        check("order", order, ORDER_RANGE)?;
        Ok(VerifyParams { max_n, order })
    }
}

/// Runs one suite, or all of them. Failures inside a suite become failed
/// report entries; only bad parameters are returned as errors.
pub fn run_suite(id: VerifySuiteId, params: VerifyParams) -> Result<Report, VerifyError> {
    let params = VerifyParams::new(params.max_n, params.order)?;
    let ids: Vec<VerifySuiteId> = match id {
        VerifySuiteId::All => VerifySuiteId::SUITES.to_vec(),
        one => vec![one],
    };
    let mut report = Report::default();
    for id in ids {
        let result = match id {
            VerifySuiteId::Eulerian => eulerian_suite(params),
            VerifySuiteId::Cyclic => cyclic_suite(params),
            VerifySuiteId::Stirling => stirling_suite(params),
            VerifySuiteId::Lah => lah_suite(params),
            VerifySuiteId::Andre => andre_suite(params),
            VerifySuiteId::Peaks => peaks_suite(params),
            VerifySuiteId::Trees => trees_suite(params),
            VerifySuiteId::Gf => gf_suite(params),
            VerifySuiteId::Recurrences => {
                combinat::verify_recurrences(params.max_n).map_err(Into::into)
            }
            VerifySuiteId::Bijection => bijection_suite(params),
            VerifySuiteId::Morphism => morphism_suite(),
            VerifySuiteId::All => unreachable!("expanded above"),
        };
        match result {
            Ok(mut r) => {
                for e in &mut r.entries {
                    e.name = format!("{id}: {}", e.name);
                }
                report.extend(r);
            }
            Err(e) => report.check(format!("{id}: suite aborted"), false, e.to_string()),
        }
    }
    Ok(report)
}

fn eq_entry(name: String, lhs: &LaurentPoly, rhs: &LaurentPoly) -> CheckEntry {
    let detail = if lhs == rhs {
        lhs.to_string()
    } else {
        format!("{lhs} != {rhs}")
    };
    CheckEntry::new(name, lhs == rhs, detail)
}

fn builtin(name: GrammarName) -> Grammar {
    Grammar::builtin(name)
}

fn ints(values: impl IntoIterator<Item = u64>) -> Vec<BigRational> {
    values
        .into_iter()
        .map(|v| BigRational::from_integer(BigInt::from(v)))
        .collect()
}

fn substitute_vars(p: &LaurentPoly, pairs: &[(&str, &str)]) -> Result<LaurentPoly, LaurentError> {
    let map: BTreeMap<VarId, LaurentPoly> =
        pairs.iter().map(|(v, img)| (var(v), poly(img))).collect();
    p.substitute(&map)
}

fn evaluate_at_ones(p: &LaurentPoly) -> Result<BigRational, LaurentError> {
    let ones = p
        .variables()
        .into_iter()
        .map(|v| (v, BigRational::one()))
        .collect();
    p.evaluate(&ones)
}

pub fn eulerian_suite(params: VerifyParams) -> Result<Report, VerifyError> {
    let g = builtin(GrammarName::Eulerian);
    let x = LaurentPoly::named("x");
    let mut report = Report::default();
    let seq = derivative_sequence(&g, &x, params.max_n.min(9));
    for (n, d) in seq.iter().enumerate().skip(1) {
        report.push(eq_entry(
            format!("D^{n}(x) = permutations by asc/des n={n}"),
            d,
            &combinat::eulerian_oracle(n)?,
        ));
    }
    let w = poly("x^-1*y");
    let x_minus_y = poly("x - y");
    for (n, d) in derivative_sequence(&g, &w, params.max_n).iter().enumerate() {
        let rhs = &w * &x_minus_y.pow(n as i64)?;
        report.push(eq_entry(
            format!("D^{n}(x^-1*y) = x^-1*y*(x-y)^{n}"),
            d,
            &rhs,
        ));
    }
    report.check(
        "n range",
        true,
        format!(
            "oracle 1..={}, Laurent identity 0..={}",
            params.max_n.min(9),
            params.max_n
        ),
    );
    Ok(report)
}

pub fn cyclic_suite(params: VerifyParams) -> Result<Report, VerifyError> {
    let g = builtin(GrammarName::Eulerian);
    let mut report = Report::default();
    let top = params.max_n.min(8);
    for n in 1..=top {
        let cyc = combinat::cyclic_oracle(n)?;
        report.push(eq_entry(
            format!("cyclic = D^{n}(x) n={n}"),
            &cyc,
            &derive_n(&g, &LaurentPoly::named("x"), n),
        ));
        if n <= 9 {
            report.push(eq_entry(
                format!("cyclic = linear n={n}"),
                &cyc,
                &combinat::eulerian_oracle(n)?,
            ));
        }
    }
    Ok(report)
}

pub fn stirling_suite(params: VerifyParams) -> Result<Report, VerifyError> {
    let mut report = Report::default();
    for r in 2..=4usize {
        let g = builtin(GrammarName::Stirling(r as u32));
        let top = params.max_n.min(14 / r);
        let seq = derivative_sequence(&g, &LaurentPoly::named("x"), top);
        for (n, d) in seq.iter().enumerate().skip(1) {
            report.push(eq_entry(
                format!("r={r} D^{n}(x) = Stirling words n={n}"),
                d,
                &combinat::stirling_oracle(n, r)?,
            ));
        }
    }
    Ok(report)
}

pub fn lah_suite(params: VerifyParams) -> Result<Report, VerifyError> {
    let mut report = Report::default();
    let z = LaurentPoly::named("z");
    let lah = derivative_sequence(&builtin(GrammarName::Lah), &z, params.max_n);
    let signless = derivative_sequence(&builtin(GrammarName::LahSignless), &z, params.max_n);
    for n in 1..=params.max_n {
        if n <= 7 {
            report.push(eq_entry(
                format!("D^{n}(z) = list partitions n={n}"),
                &lah[n],
                &combinat::list_partition_oracle(n)?,
            ));
        }
        let x = var("x");
        let mut expected = LaurentPoly::zero();
        for k in 1..=n {
            let m = Monomial::from_pairs([(x.clone(), (n + k) as i64), (var("z"), 1)]);
            expected.add_term(
                m,
                BigRational::from_integer(combinat::lah_number(n as u64, k as u64)?),
            );
        }
        report.push(eq_entry(
            format!("D^{n}(z)|_(y=x) = x^n z sum L(n,k) x^k n={n}"),
            &substitute_vars(&lah[n], &[("y", "x")])?,
            &expected,
        ));
        report.push(eq_entry(
            format!("signless grammar D^{n}(z) n={n}"),
            &signless[n],
            &expected,
        ));
    }
    Ok(report)
}

fn andre_identities(report: &mut Report) -> Result<(), VerifyError> {
    let g = builtin(GrammarName::Andre);
    let w = poly("x^-1*y");
    let base = poly("y^2 - 2*x");
    let odd = poly("1 - x^-1*y^2");
    let seq = derivative_sequence(&g, &w, 11);
    for m in 0..=5usize {
        let pw = base.pow(m as i64)?;
        report.push(eq_entry(
            format!("D^{}(x^-1*y) = x^-1*y*(y^2-2x)^{m}", 2 * m),
            &seq[2 * m],
            &(&w * &pw),
        ));
        report.push(eq_entry(
            format!("D^{}(x^-1*y) = (1-x^-1*y^2)*(y^2-2x)^{m}", 2 * m + 1),
            &seq[2 * m + 1],
            &(&odd * &pw),
        ));
    }
    Ok(())
}

pub fn andre_suite(params: VerifyParams) -> Result<Report, VerifyError> {
    let g = builtin(GrammarName::Andre);
    let mut report = Report::default();
    let seq = derivative_sequence(&g, &LaurentPoly::named("y"), params.max_n);
    for (n, d) in seq.iter().enumerate().skip(1) {
        report.push(eq_entry(
            format!("D^{n}(y) = 0-1-2 trees n={n}"),
            d,
            &combinat::andre_oracle(n)?,
        ));
    }
    let euler = seq
        .iter()
        .map(evaluate_at_ones)
        .collect::<Result<Vec<_>, _>>()?;
    let known = ints([1, 1, 1, 2, 5, 16, 61, 272, 1385, 7936, 50521]);
    report.check(
        "Euler numbers at x=y=1",
        euler[..] == known[..euler.len()],
        euler
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(","),
    );
    andre_identities(&mut report)?;
    Ok(report)
}

fn peaks_identities(report: &mut Report) -> Result<(), VerifyError> {
    let g = builtin(GrammarName::ExtPeaks);
    let w = poly("x^-1");
    let base = poly("y^2 - x^2");
    let odd = poly("-x^-1*y");
    let seq = derivative_sequence(&g, &w, 11);
    for m in 0..=5usize {
        let pw = base.pow(m as i64)?;
        report.push(eq_entry(
            format!("D^{}(x^-1) = x^-1*(y^2-x^2)^{m}", 2 * m),
            &seq[2 * m],
            &(&w * &pw),
        ));
        report.push(eq_entry(
            format!("D^{}(x^-1) = -x^-1*y*(y^2-x^2)^{m}", 2 * m + 1),
            &seq[2 * m + 1],
            &(&odd * &pw),
        ));
    }
    Ok(())
}

pub fn peaks_suite(params: VerifyParams) -> Result<Report, VerifyError> {
    let mut report = Report::default();
    let top = params.max_n.min(9);
    let weighted = derivative_sequence(
        &builtin(GrammarName::ExtPeaksWeighted),
        &LaurentPoly::named("x"),
        top,
    );
    for (n, weighted_n) in weighted.iter().enumerate().skip(1) {
        let oracle = combinat::peaks_oracle(n)?;
        let from_grammar = combinat::peaks_from_grammar(n)?;
        report.check(
            format!("T(n,k) grammar = enumeration n={n}"),
            from_grammar == oracle,
            format!("{:?}", oracle.values().collect::<Vec<_>>()),
        );
        let (x, y, w) = (var("x"), var("y"), var("w"));
        let expected = LaurentPoly::from_terms(oracle.iter().map(|(&k, &c)| {
            let k = k as i64;
            (
                Monomial::from_pairs([
                    (x.clone(), 2 * k + 1),
                    (y.clone(), n as i64 - 2 * k),
                    (w.clone(), k),
                ]),
                BigRational::from_integer(BigInt::from(c)),
            )
        }));
        report.push(eq_entry(
            format!("weighted D^{n}(x) n={n}"),
            weighted_n,
            &expected,
        ));
    }
    peaks_identities(&mut report)?;
    Ok(report)
}

pub fn trees_suite(params: VerifyParams) -> Result<Report, VerifyError> {
    let mut report = Report::default();
    let top = params.max_n.min(8);
    let x0 = LaurentPoly::var(VarId::indexed("x", 0)?);
    let degrees = derivative_sequence(&builtin(GrammarName::TreeDegrees), &x0, top);
    let peaks = derivative_sequence(
        &builtin(GrammarName::ExtPeaks),
        &LaurentPoly::named("x"),
        top,
    );
    let collapse = combinat::parity_collapse(top + 1);
    for n in 1..=top {
        report.push(eq_entry(
            format!("D^{n}(x0) = trees by degree n={n}"),
            &degrees[n],
            &combinat::tree_degree_oracle(n)?,
        ));
        let parity = combinat::tree_parity_oracle(n)?;
        report.push(eq_entry(
            format!("parity collapse = trees by parity n={n}"),
            &degrees[n].substitute(&collapse)?,
            &parity,
        ));
        report.push(eq_entry(
            format!("trees by parity = D^{n}(x) under peaks grammar n={n}"),
            &parity,
            &peaks[n],
        ));
    }
    Ok(report)
}

/// Sample words for the sum and product rules, built from the grammar's
/// own letters.
fn sample_words(g: &Grammar) -> (LaurentPoly, LaurentPoly) {
    let mut letters: Vec<VarId> = g.rules().keys().cloned().collect();
    if let Some(f) = g.family() {
        letters.push(VarId::indexed(f.prefix(), 0).expect("family prefix"));
        letters.push(VarId::indexed(f.prefix(), 1).expect("family prefix"));
    }
    let a = LaurentPoly::var(letters[0].clone());
    let b = LaurentPoly::var(letters.get(1).unwrap_or(&letters[0]).clone());
    let u = &(&a.pow(-1).expect("monomial") * &b) + &LaurentPoly::from_int(2);
    let v = &(&a * &LaurentPoly::from_int(3)) - &b.pow(2).expect("nonnegative");
    (u, v)
}

pub fn gf_suite(params: VerifyParams) -> Result<Report, VerifyError> {
    let order = params.order;
    let mut report = Report::default();

    let andre = egf(
        &builtin(GrammarName::Andre),
        &LaurentPoly::named("y"),
        order,
    );
    report.check(
        format!("Gen(y) under andre = closed form, order {order}"),
        andre == series::andre_gf_rhs(order),
        format!("{} coefficients", order + 1),
    );
    let euler = andre
        .egf_numerators()
        .iter()
        .map(evaluate_at_ones)
        .collect::<Result<Vec<_>, _>>()?;
    // sec t + tan t = (1 + sin t) / cos t
    let (sin, cos) = series::sqrtfree_pair(PairKind::Trig, &LaurentPoly::one(), order);
    let sec_tan = (&TruncatedSeries::one(order) + &sin).divide(&cos)?;
    let expected = sec_tan
        .egf_numerators()
        .iter()
        .map(evaluate_at_ones)
        .collect::<Result<Vec<_>, _>>()?;
    report.check(
        "Euler numbers = sec t + tan t",
        euler == expected,
        euler
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(","),
    );

    let mut t_rows = vec![LaurentPoly::one()];
    for n in 1..=order.min(12) {
        t_rows.push(combinat::row_polynomial(&combinat::peaks_from_grammar(n)?));
    }
    let gessel_order = order.min(12);
    report.check(
        format!("sum T_n(x) t^n/n! = closed form, order {gessel_order}"),
        TruncatedSeries::from_egf_numerators(t_rows)? == series::gessel_gf_rhs(gessel_order),
        format!("{} coefficients", gessel_order + 1),
    );

    let aux = egf(&builtin(GrammarName::AuxUv), &poly("u^-1*v"), order);
    report.check(
        format!("Gen(u^-1*v) under aux = closed form, order {order}"),
        aux == series::aux_gf_rhs(order),
        format!("{} coefficients", order + 1),
    );

    let rule_order = order.min(8);
    for name in GrammarName::ALL {
        let g = builtin(name);
        let (u, v) = sample_words(&g);
        let gen_u = egf(&g, &u, rule_order);
        let lhs = gen_u.ddt()?;
        let rhs = egf(&g, &formal_derivative(&g, &u), rule_order - 1);
        report.check(
            format!("{name}: d/dt Gen(w) = Gen(D(w))"),
            lhs == rhs,
            format!("w = {u}, order {rule_order}"),
        );
        let small = rule_order.min(6);
        let (gu, gv) = (egf(&g, &u, small), egf(&g, &v, small));
        report.check(
            format!("{name}: Gen(u+v) = Gen(u) + Gen(v)"),
            egf(&g, &(&u + &v), small) == &gu + &gv,
            format!("u = {u}, v = {v}, order {small}"),
        );
        report.check(
            format!("{name}: Gen(uv) = Gen(u) Gen(v)"),
            egf(&g, &(&u * &v), small) == &gu * &gv,
            format!("u = {u}, v = {v}, order {small}"),
        );
    }
    let eul = builtin(GrammarName::Eulerian);
    let small = order.min(6);
    let product = &egf(&eul, &LaurentPoly::named("x"), small) * &egf(&eul, &poly("x^-1"), small);
    report.check(
        "Gen(x) Gen(x^-1) = 1 under eulerian",
        product == TruncatedSeries::one(small),
        format!("order {small}"),
    );
    Ok(report)
}

pub fn bijection_suite(params: VerifyParams) -> Result<Report, VerifyError> {
    let mut report = verify_bijection(params.max_n.min(8))?;
    let sigma: Permutation = "5,3,4,6,7,2,1".parse()?;
    let tree = phi(&sigma)?;
    report.check(
        "worked example code",
        perm_code(&sigma).as_slice() == [4, 2, 2, 2, 2, 1, 0],
        perm_code(&sigma).to_string(),
    );
    report.check(
        "worked example phi",
        tree.to_wire() == "0,1,2,0,4,2,2",
        tree.to_wire(),
    );
    report.check(
        "worked example psi",
        psi(&"0,1,2,0,4,2,2".parse()?)? == sigma,
        sigma.to_wire(),
    );
    let trace = phi_trace(&sigma)?;
    let rows: Vec<(Option<Vec<u32>>, u32)> =
        trace.steps.iter().map(|s| (s.m.clone(), s.i_k)).collect();
    let expected: Vec<(Option<Vec<u32>>, u32)> = vec![
        (None, 3),
        (Some(vec![4, 5, 6, 7]), 6),
        (Some(vec![1, 2, 7]), 7),
        (Some(vec![1, 2]), 2),
        (Some(vec![1]), 1),
        (Some(vec![4, 5]), 5),
        (Some(vec![4]), 4),
    ];
    report.check(
        "worked example trace",
        rows == expected && trace.steps[4].roots == [1],
        "M_k and i_k for k = 1..7",
    );
    Ok(report)
}

pub fn morphism_suite() -> Result<Report, VerifyError> {
    let mut report = Report::default();
    let phi_map: BTreeMap<VarId, LaurentPoly> =
        [("x", "u^-1*v"), ("y", "1 - u^-1*v^2"), ("w", "v^2 - 2*u")]
            .into_iter()
            .map(|(v, img)| (var(v), poly(img)))
            .collect();
    let vars: BTreeSet<VarId> = ["x", "y", "w"].into_iter().map(var).collect();
    report.check(
        "weighted peaks -> aux",
        check_morphism(
            &builtin(GrammarName::ExtPeaksWeighted),
            &builtin(GrammarName::AuxUv),
            &phi_map,
            &vars,
        )?,
        "x -> u^-1*v, y -> 1 - u^-1*v^2, w -> v^2 - 2*u",
    );

    let collapse = combinat::parity_collapse(9);
    let tree_vars: BTreeSet<VarId> = collapse.keys().take(9).cloned().collect();
    report.check(
        "tree degrees -> peaks by parity",
        check_morphism(
            &builtin(GrammarName::TreeDegrees),
            &builtin(GrammarName::ExtPeaks),
            &collapse,
            &tree_vars,
        )?,
        "x_(2i) -> x, x_(2i+1) -> y for x0..x8",
    );

    let identity = BTreeMap::new();
    let xy: BTreeSet<VarId> = ["x", "y"].into_iter().map(var).collect();
    report.check(
        "identity on eulerian",
        check_morphism(
            &builtin(GrammarName::Eulerian),
            &builtin(GrammarName::Eulerian),
            &identity,
            &xy,
        )?,
        "identity map",
    );
    report.check(
        "identity eulerian -> andre is rejected",
        !check_morphism(
            &builtin(GrammarName::Eulerian),
            &builtin(GrammarName::Andre),
            &identity,
            &xy,
        )?,
        "rules differ on y",
    );
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> VerifyParams {
        VerifyParams::new(4, 6).unwrap()
    }

    #[test]
    fn suite_names_round_trip() {
        for id in VerifySuiteId::SUITES {
            assert_eq!(id.name().parse::<VerifySuiteId>().unwrap(), id);
        }
        assert_eq!("all".parse::<VerifySuiteId>().unwrap(), VerifySuiteId::All);
        assert!("nope".parse::<VerifySuiteId>().is_err());
    }

    #[test]
    fn params_bounds() {
        assert!(VerifyParams::new(0, 10).is_err());
        assert!(VerifyParams::new(11, 10).is_err());
        assert!(VerifyParams::new(7, 0).is_err());
        assert!(VerifyParams::new(7, 17).is_err());
        assert_eq!(VerifyParams::default(), VerifyParams::new(7, 10).unwrap());
    }

    #[test]
    fn every_suite_passes_small() {
        let r = run_suite(VerifySuiteId::All, small()).unwrap();
        assert!(r.all_passed(), "{:#?}", r.failures().collect::<Vec<_>>());
        for id in VerifySuiteId::SUITES {
            let prefix = format!("{id}: ");
            assert!(
                r.entries.iter().any(|e| e.name.starts_with(&prefix)),
                "{id} missing"
            );
        }
    }

    #[test]
    fn sample_words_use_grammar_letters() {
        let (u, v) = sample_words(&builtin(GrammarName::TreeDegrees));
        assert_eq!(u, poly("x0^-1*x1 + 2"));
        assert_eq!(v, poly("3*x0 - x1^2"));
    }
}
