//! Acceptance criteria. Run with `cargo test -p cfgcalc --test acceptance`.
//! Prints one `[PASS]`/`[FAIL]` line per criterion and exits nonzero if
//! any criterion fails or exceeds its time limit.

#![allow(clippy::needless_range_loop)]

use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

use cfgcalc::bijection::{perm_code, phi, phi_trace, psi, verify_bijection};
use cfgcalc::combinat::{self, IncreasingTree, Permutation, TriangleRow};
use cfgcalc::grammar::{check_morphism, derivative_sequence, Grammar, GrammarName};
use cfgcalc::laurent::{poly, var};
use cfgcalc::series::{self, egf, TruncatedSeries};
use cfgcalc::{LaurentPoly, Monomial, VarId};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn ensure_eq<T: PartialEq + std::fmt::Display>(what: &str, lhs: &T, rhs: &T) -> Result<(), String> {
    ensure(lhs == rhs, || format!("{what}: {lhs} != {rhs}"))
}

fn g(name: GrammarName) -> Grammar {
    Grammar::builtin(name)
}

fn xy_row(p: &LaurentPoly) -> Vec<String> {
    p.terms().map(|(_, c)| c.to_string()).collect()
}

fn ones(p: &LaurentPoly) -> BigRational {
    let point = p
        .variables()
        .into_iter()
        .map(|v| (v, BigRational::one()))
        .collect();
    p.evaluate(&point).expect("polynomial in x, y")
}

fn int(v: u64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

fn peaks_poly(row: &TriangleRow, n: usize, w: Option<&str>) -> LaurentPoly {
    LaurentPoly::from_terms(row.iter().map(|(&k, &c)| {
        let k = k as i64;
        let mut pairs = vec![(var("x"), 2 * k + 1), (var("y"), n as i64 - 2 * k)];
        if let Some(w) = w {
            pairs.push((var(w), k));
        }
        (Monomial::from_pairs(pairs), int(c))
    }))
}

fn eulerian() -> Outcome {
    let seq = derivative_sequence(&g(GrammarName::Eulerian), &poly("x"), 8);
    for n in 1..=8 {
        ensure_eq(
            &format!("n={n}"),
            &seq[n],
            &combinat::eulerian_oracle(n).map_err(|e| e.to_string())?,
        )?;
    }
    ensure(xy_row(&seq[3]) == ["1", "4", "1"], || {
        format!("n=3 row {:?}", xy_row(&seq[3]))
    })?;
    Ok("n = 1..8 match, n=3 row (1,4,1)".into())
}

fn cyclic() -> Outcome {
    for n in 1..=7 {
        ensure_eq(
            &format!("n={n}"),
            &combinat::cyclic_oracle(n).map_err(|e| e.to_string())?,
            &combinat::eulerian_oracle(n).map_err(|e| e.to_string())?,
        )?;
    }
    Ok("n = 1..7 match".into())
}

fn stirling() -> Outcome {
    let seq = derivative_sequence(&g(GrammarName::Stirling(2)), &poly("x"), 6);
    for n in 1..=6 {
        ensure_eq(
            &format!("n={n}"),
            &seq[n],
            &combinat::stirling_oracle(n, 2).map_err(|e| e.to_string())?,
        )?;
    }
    ensure(xy_row(&seq[3]) == ["1", "8", "6"], || {
        format!("n=3 row {:?}", xy_row(&seq[3]))
    })?;
    Ok("n = 1..6 match, n=3 row (1,8,6)".into())
}

fn lah() -> Outcome {
    let seq = derivative_sequence(&g(GrammarName::Lah), &poly("z"), 8);
    for n in 1..=7 {
        ensure_eq(
            &format!("n={n}"),
            &seq[n],
            &combinat::list_partition_oracle(n).map_err(|e| e.to_string())?,
        )?;
    }
    let y_to_x: BTreeMap<VarId, LaurentPoly> = [(var("y"), poly("x"))].into_iter().collect();
    for n in 1..=8u64 {
        let mut expected = LaurentPoly::zero();
        for k in 1..=n {
            let l = combinat::lah_number(n, k).map_err(|e| e.to_string())?;
            expected.add_term(
                Monomial::from_pairs([(var("x"), (n + k) as i64), (var("z"), 1)]),
                BigRational::from_integer(l),
            );
        }
        let specialized = seq[n as usize]
            .substitute(&y_to_x)
            .map_err(|e| e.to_string())?;
        ensure_eq(&format!("y=x n={n}"), &specialized, &expected)?;
    }
    Ok("list partitions n = 1..7, Lah specialization n = 1..8".into())
}

fn andre() -> Outcome {
    let lhs = egf(&g(GrammarName::Andre), &poly("y"), 10);
    ensure(lhs == series::andre_gf_rhs(10), || {
        "egf(andre, y, 10) differs from closed form".into()
    })?;
    let numerators = lhs.egf_numerators();
    let euler: Vec<BigRational> = numerators.iter().map(ones).collect();
    let expected: Vec<BigRational> = [1, 1, 1, 2, 5, 16, 61, 272, 1385, 7936, 50521]
        .map(int)
        .to_vec();
    ensure(euler == expected, || format!("Euler numbers {euler:?}"))?;
    for n in 1..=9 {
        ensure_eq(
            &format!("trees n={n}"),
            &numerators[n],
            &combinat::andre_oracle(n).map_err(|e| e.to_string())?,
        )?;
    }
    Ok("order 10 exact, E_0..E_10 = 1,1,1,2,5,16,61,272,1385,7936,50521".into())
}

fn peaks() -> Outcome {
    for n in 1..=8 {
        let a = combinat::peaks_from_grammar(n).map_err(|e| e.to_string())?;
        let b = combinat::peaks_oracle(n).map_err(|e| e.to_string())?;
        ensure(a == b, || format!("n={n}: {a:?} != {b:?}"))?;
    }
    let rows: Vec<Vec<u64>> = (2..=4)
        .map(|n| {
            combinat::peaks_oracle(n)
                .unwrap()
                .values()
                .copied()
                .collect()
        })
        .collect();
    ensure(rows == [vec![1, 1], vec![1, 5], vec![1, 18, 5]], || {
        format!("rows {rows:?}")
    })?;
    Ok("n = 1..8 match, rows (1,1) (1,5) (1,18,5)".into())
}

fn gessel() -> Outcome {
    let mut numerators = vec![LaurentPoly::one()];
    for n in 1..=12 {
        numerators.push(combinat::row_polynomial(
            &combinat::peaks_from_grammar(n).map_err(|e| e.to_string())?,
        ));
    }
    let lhs = TruncatedSeries::from_egf_numerators(numerators).map_err(|e| e.to_string())?;
    ensure(lhs == series::gessel_gf_rhs(12), || "series differ".into())?;
    Ok("order 12 exact".into())
}

fn auxiliary() -> Outcome {
    let lhs = egf(&g(GrammarName::AuxUv), &poly("u^-1*v"), 10);
    ensure(lhs == series::aux_gf_rhs(10), || "series differ".into())?;
    Ok("order 10 exact".into())
}

fn recurrences() -> Outcome {
    let report = combinat::verify_recurrences(10).map_err(|e| e.to_string())?;
    let failed: Vec<String> = report.failures().map(|e| e.name.clone()).collect();
    ensure(failed.is_empty(), || format!("failed: {failed:?}"))?;
    Ok(format!("{} identities, n = 1..10", report.entries.len()))
}

fn laurent_identities() -> Outcome {
    let w = poly("x^-1*y");
    let seq = derivative_sequence(&g(GrammarName::Eulerian), &w, 10);
    for (n, d) in seq.iter().enumerate() {
        ensure_eq(
            &format!("eulerian n={n}"),
            d,
            &(&w * &poly("x - y").pow(n as i64).unwrap()),
        )?;
    }
    let seq = derivative_sequence(&g(GrammarName::Andre), &w, 11);
    let seq_peaks = derivative_sequence(&g(GrammarName::ExtPeaks), &poly("x^-1"), 11);
    for m in 0..=5usize {
        let a = poly("y^2 - 2*x").pow(m as i64).unwrap();
        ensure_eq(&format!("andre 2m, m={m}"), &seq[2 * m], &(&w * &a))?;
        ensure_eq(
            &format!("andre 2m+1, m={m}"),
            &seq[2 * m + 1],
            &(&poly("1 - x^-1*y^2") * &a),
        )?;
        let b = poly("y^2 - x^2").pow(m as i64).unwrap();
        ensure_eq(
            &format!("peaks 2m, m={m}"),
            &seq_peaks[2 * m],
            &(&poly("x^-1") * &b),
        )?;
        ensure_eq(
            &format!("peaks 2m+1, m={m}"),
            &seq_peaks[2 * m + 1],
            &(&poly("-x^-1*y") * &b),
        )?;
    }
    Ok("x^-1*y under eulerian n <= 10, andre and peaks m <= 5".into())
}

fn trees() -> Outcome {
    let x0 = LaurentPoly::var(VarId::indexed("x", 0).unwrap());
    let seq = derivative_sequence(&g(GrammarName::TreeDegrees), &x0, 8);
    let collapse = combinat::parity_collapse(9);
    for n in 1..=8 {
        ensure_eq(
            &format!("degrees n={n}"),
            &seq[n],
            &combinat::tree_degree_oracle(n).map_err(|e| e.to_string())?,
        )?;
        let parity = combinat::tree_parity_oracle(n).map_err(|e| e.to_string())?;
        ensure_eq(
            &format!("collapse n={n}"),
            &seq[n].substitute(&collapse).map_err(|e| e.to_string())?,
            &parity,
        )?;
        let peaks = peaks_poly(
            &combinat::peaks_oracle(n).map_err(|e| e.to_string())?,
            n,
            None,
        );
        ensure_eq(&format!("peaks form n={n}"), &parity, &peaks)?;
    }
    Ok("n = 1..8 match".into())
}

fn bijection() -> Outcome {
    let report = verify_bijection(8).map_err(|e| e.to_string())?;
    let failed: Vec<String> = report
        .failures()
        .map(|e| format!("{} ({})", e.name, e.detail))
        .collect();
    ensure(failed.is_empty(), || format!("failed: {failed:?}"))?;
    ensure(
        report
            .entries
            .iter()
            .any(|e| e.name == "phi injective n=8" && e.detail.contains("40320 distinct")),
        || "n=8 injectivity entry missing".into(),
    )?;

    let sigma: Permutation = "5,3,4,6,7,2,1".parse().unwrap();
    ensure(
        perm_code(&sigma).as_slice() == [4, 2, 2, 2, 2, 1, 0],
        || perm_code(&sigma).to_string(),
    )?;
    let tree = phi(&sigma).map_err(|e| e.to_string())?;
    ensure(tree.to_wire() == "0,1,2,0,4,2,2", || tree.to_wire())?;
    let back =
        psi(&"0,1,2,0,4,2,2".parse::<IncreasingTree>().unwrap()).map_err(|e| e.to_string())?;
    ensure(back == sigma, || back.to_wire())?;

    let trace = phi_trace(&sigma).map_err(|e| e.to_string())?;
    let rows: Vec<(Option<Vec<u32>>, u32, Vec<u32>)> = trace
        .steps
        .iter()
        .map(|s| (s.m.clone(), s.i_k, s.roots.clone()))
        .collect();
    let expected: Vec<(Option<Vec<u32>>, u32, Vec<u32>)> = vec![
        (None, 3, vec![3]),
        (Some(vec![4, 5, 6, 7]), 6, vec![3, 6]),
        (Some(vec![1, 2, 7]), 7, vec![3, 6, 7]),
        (Some(vec![1, 2]), 2, vec![2]),
        (Some(vec![1]), 1, vec![1]),
        (Some(vec![4, 5]), 5, vec![1, 5]),
        (Some(vec![4]), 4, vec![1, 4]),
    ];
    ensure(rows == expected, || format!("trace {rows:?}"))?;
    Ok(format!(
        "{} checks over n = 1..8, worked example and trace match",
        report.entries.len()
    ))
}

fn morphism() -> Outcome {
    let phi_map: BTreeMap<VarId, LaurentPoly> =
        [("x", "u^-1*v"), ("y", "1 - u^-1*v^2"), ("w", "v^2 - 2*u")]
            .into_iter()
            .map(|(v, img)| (var(v), poly(img)))
            .collect();
    let vars: BTreeSet<VarId> = ["x", "y", "w"].into_iter().map(var).collect();
    let ok = check_morphism(
        &g(GrammarName::ExtPeaksWeighted),
        &g(GrammarName::AuxUv),
        &phi_map,
        &vars,
    )
    .map_err(|e| e.to_string())?;
    ensure(ok, || "check_morphism returned false".into())?;
    Ok("x -> u^-1*v, y -> 1 - u^-1*v^2, w -> v^2 - 2*u".into())
}

struct Criterion {
    id: u32,
    name: &'static str,
    limit: Option<Duration>,
    run: fn() -> Outcome,
}

fn main() {
    let secs = |s| Some(Duration::from_secs(s));
    let criteria = [
        Criterion {
            id: 1,
            name: "Eulerian polynomials",
            limit: secs(10),
            run: eulerian,
        },
        Criterion {
            id: 2,
            name: "cyclic permutations",
            limit: None,
            run: cyclic,
        },
        Criterion {
            id: 3,
            name: "Stirling permutations",
            limit: None,
            run: stirling,
        },
        Criterion {
            id: 4,
            name: "partitions into lists",
            limit: None,
            run: lah,
        },
        Criterion {
            id: 5,
            name: "Andre generating function",
            limit: secs(5),
            run: andre,
        },
        Criterion {
            id: 6,
            name: "exterior peaks",
            limit: None,
            run: peaks,
        },
        Criterion {
            id: 7,
            name: "exterior peak generating function",
            limit: None,
            run: gessel,
        },
        Criterion {
            id: 8,
            name: "auxiliary generating function",
            limit: None,
            run: auxiliary,
        },
        Criterion {
            id: 9,
            name: "recurrences",
            limit: None,
            run: recurrences,
        },
        Criterion {
            id: 10,
            name: "Laurent identities",
            limit: None,
            run: laurent_identities,
        },
        Criterion {
            id: 11,
            name: "increasing trees",
            limit: None,
            run: trees,
        },
        Criterion {
            id: 12,
            name: "bijection",
            limit: secs(60),
            run: bijection,
        },
        Criterion {
            id: 13,
            name: "grammar morphism",
            limit: None,
            run: morphism,
        },
    ];
    let mut failures = 0;
    for c in &criteria {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let outcome = match (outcome, c.limit) {
            (Ok(_), Some(limit)) if elapsed > limit => {
                Err(format!("took {elapsed:.2?}, limit {limit:?}"))
            }
            (o, _) => o,
        };
        let (tag, detail) = match &outcome {
            Ok(d) => ("PASS", d.as_str()),
            Err(d) => ("FAIL", d.as_str()),
        };
        if outcome.is_err() {
            failures += 1;
        }
        println!("[{tag}] {:>2} {}: {detail} ({elapsed:.2?})", c.id, c.name);
    }
    println!("{} criteria, {failures} failed", criteria.len());
    if failures > 0 {
        std::process::exit(1);
    }
}
