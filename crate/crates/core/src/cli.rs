//! The `cfgcalc` command line.
//!
//! Exit codes: 0 on success, 1 when a verification suite reports a
//! failure, 2 on usage, parse or range errors.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::Path;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::bijection::{phi, phi_trace, psi};
use crate::combinat::{self, IncreasingTree, Permutation, Triangle};
use crate::grammar::{derive_n, parse_grammar, Grammar, GrammarName};
use crate::laurent::{parse_poly, LaurentPoly};
use crate::series::egf;
use crate::verify::{run_suite, VerifyParams, VerifySuiteId};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "cfgcalc",
    version,
    about = "Context-free grammar calculus on Laurent polynomials"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Apply the formal derivative n times to a word.
    Derive {
        /// Builtin grammar name or path to a grammar file.
        #[arg(long)]
        grammar: String,
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        #[arg(long)]
        n: usize,
    },
    /// Truncated exponential generating function of a word.
    Egf {
        #[arg(long)]
        grammar: String,
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        #[arg(long)]
        order: usize,
    },
    /// Brute-force generating polynomials for n = 1..=max_n.
    Enumerate {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long, default_value_t = 5)]
        max_n: usize,
    },
    /// Run verification suites.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 7)]
        max_n: usize,
        #[arg(long, default_value_t = 10)]
        order: usize,
    },
    /// Permutation <-> increasing tree bijection.
    Bijection {
        #[command(subcommand)]
        direction: Direction,
    },
}

#[derive(Debug, Subcommand)]
pub enum Direction {
    /// Permutation to tree.
    Phi {
        /// Comma-separated one-line word, e.g. 5,3,4,6,7,2,1.
        #[arg(long)]
        perm: String,
        /// Print the step table.
        #[arg(long)]
        trace: bool,
    },
    /// Tree to permutation.
    Psi {
        /// Comma-separated parents of vertices 1..n, e.g. 0,1,2,0,4,2,2.
        #[arg(long, allow_hyphen_values = true)]
        tree: String,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Eulerian,
    Cyclic,
    Stirling,
    Lah,
    Andre,
    Peaks,
    Trees,
    TreeParity,
}

struct Failure {
    code: i32,
    message: String,
}

fn usage(message: impl ToString) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.to_string(),
    }
}

/// Parses `args` (including the program name) and runs the command,
/// writing results to `out` and diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if code == EXIT_OK { out } else { err };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

pub fn load_grammar(source: &str) -> Result<Grammar, String> {
    if let Ok(name) = source.parse::<GrammarName>() {
        return Ok(Grammar::builtin(name));
    }
    let path = Path::new(source);
    if !path.exists() {
        return Err(format!(
            "{source:?} is neither a builtin grammar nor a file (builtins: {})",
            GrammarName::ALL.map(|g| g.to_string()).join(", ")
        ));
    }
    let text = std::fs::read_to_string(path).map_err(|e| format!("{source}: {e}"))?;
    parse_grammar(&text).map_err(|e| format!("{source}: {e}"))
}

fn emit(out: &mut dyn Write, text: &str) -> Result<(), Failure> {
    writeln!(out, "{text}").map_err(|e| Failure {
        code: EXIT_FAILED,
        message: e.to_string(),
    })
}

fn to_json(value: &impl serde::Serialize) -> String {
    serde_json::to_string_pretty(value).expect("serializable")
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32, Failure> {
    let json = cli.format == Format::Json;
    match &cli.command {
        Command::Derive { grammar, word, n } => {
            let g = load_grammar(grammar).map_err(usage)?;
            let w = parse_poly(word).map_err(|e| usage(format!("--word: {e}")))?;
            let d = derive_n(&g, &w, *n);
            if json {
                emit(
                    out,
                    &to_json(&json!({
                        "grammar": grammar,
                        "word": w.to_string(),
                        "n": n,
                        "result": d.to_string(),
                    })),
                )?;
            } else {
                emit(out, &d.to_string())?;
            }
        }
        Command::Egf {
            grammar,
            word,
            order,
        } => {
            let g = load_grammar(grammar).map_err(usage)?;
            let w = parse_poly(word).map_err(|e| usage(format!("--word: {e}")))?;
            let s = egf(&g, &w, *order);
            if json {
                emit(out, &to_json(&s.to_json()))?;
            } else {
                emit(out, s.to_text().trim_end())?;
            }
        }
        Command::Enumerate { family, max_n } => enumerate(*family, *max_n, json, out)?,
        Command::Verify {
            suite,
            max_n,
            order,
        } => {
            let id: VerifySuiteId = suite.parse().map_err(usage)?;
            let params = VerifyParams::new(*max_n, *order).map_err(usage)?;
            let report = run_suite(id, params).map_err(usage)?;
            if json {
                emit(out, &to_json(&report))?;
            } else {
                for e in &report.entries {
                    let tag = if e.passed { "PASS" } else { "FAIL" };
                    emit(out, &format!("[{tag}] {}: {}", e.name, e.detail))?;
                }
                let failed = report.failures().count();
                emit(
                    out,
                    &format!("{} checks, {failed} failed", report.entries.len()),
                )?;
            }
            return Ok(if report.all_passed() {
                EXIT_OK
            } else {
                EXIT_FAILED
            });
        }
        Command::Bijection { direction } => match direction {
            Direction::Phi { perm, trace } => {
                let p: Permutation = perm.parse().map_err(usage)?;
                let t = phi(&p).map_err(|e| Failure {
                    code: EXIT_FAILED,
                    message: e.to_string(),
                })?;
                let tr = if *trace {
                    Some(phi_trace(&p).map_err(usage)?)
                } else {
                    None
                };
                if json {
                    let mut v = serde_json::to_value(t.to_json()).expect("serializable");
                    if let Some(tr) = &tr {
                        v["trace"] = serde_json::to_value(tr).expect("serializable");
                    }
                    emit(out, &to_json(&v))?;
                } else {
                    if let Some(tr) = &tr {
                        emit(out, &tr.to_table())?;
                    }
                    emit(out, &t.to_wire())?;
                }
            }
            Direction::Psi { tree } => {
                let t: IncreasingTree = tree.parse().map_err(usage)?;
                let p = psi(&t).map_err(usage)?;
                if json {
                    emit(
                        out,
                        &to_json(&json!({ "n": p.len(), "perm": p.as_slice() })),
                    )?;
                } else {
                    emit(out, &p.to_wire())?;
                }
            }
        },
    }
    Ok(EXIT_OK)
}

fn enumerate(family: Family, max_n: usize, json: bool, out: &mut dyn Write) -> Result<(), Failure> {
    if family == Family::Peaks {
        let mut rows = BTreeMap::new();
        for n in 1..=max_n {
            let row = combinat::peaks_oracle(n).map_err(usage)?;
            rows.insert(n as u32, row.values().copied().collect::<Vec<u64>>());
        }
        let triangle = Triangle {
            name: "T".into(),
            rows,
        };
        if json {
            return emit(out, &to_json(&triangle));
        }
        for (n, row) in &triangle.rows {
            emit(
                out,
                &format!(
                    "{n}: {}",
                    row.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
                ),
            )?;
        }
        return Ok(());
    }
    let oracle = |n: usize| -> Result<LaurentPoly, combinat::CombinatError> {
        match family {
            Family::Eulerian => combinat::eulerian_oracle(n),
            Family::Cyclic => combinat::cyclic_oracle(n),
            Family::Stirling => combinat::stirling_oracle(n, 2),
            Family::Lah => combinat::list_partition_oracle(n),
            Family::Andre => combinat::andre_oracle(n),
            Family::Trees => combinat::tree_degree_oracle(n),
            Family::TreeParity => combinat::tree_parity_oracle(n),
            Family::Peaks => unreachable!("handled above"),
        }
    };
    let mut rows = BTreeMap::new();
    for n in 1..=max_n {
        rows.insert(n.to_string(), oracle(n).map_err(usage)?.to_string());
    }
    if json {
        let name = family
            .to_possible_value()
            .expect("named")
            .get_name()
            .to_string();
        return emit(out, &to_json(&json!({ "family": name, "rows": rows })));
    }
    for n in 1..=max_n {
        emit(out, &format!("{n}: {}", rows[&n.to_string()]))?;
    }
    Ok(())
}
