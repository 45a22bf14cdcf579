//! The `skein` command line: argument grammar, dispatch and exit codes.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::bmw::{check_relations, BmwError, IdempotentStore};
use crate::coeff::RatFn;
use crate::eval::{kauffman_closure, EvalError, TangleVector};
use crate::tangle::SliceWord;
use crate::torus::{hat, s1s2_report, TorusError};
use crate::young::YoungDiagram;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_VERIFY: i32 = 2;
pub const EXIT_LIMIT: i32 = 3;

/// Environment variable overriding `--cache-dir`.
pub const CACHE_ENV: &str = "SKEIN_CACHE_DIR";

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Output {
    Json,
    Table,
}

#[derive(Parser, Debug)]
#[command(name = "skein", version, about = "Exact Kauffman skein computations")]
pub struct Cli {
    /// Largest strand count the algebra computations may use.
    #[arg(long, global = true, default_value_t = 4, value_parser = clap::value_parser!(u32).range(1..))]
    pub max_n: u32,
    /// Directory for cached idempotents and convention bits.
    #[arg(long, global = true, env = CACHE_ENV)]
    pub cache_dir: Option<PathBuf>,
    /// Expected ε (relation I twist sign); verification fails on mismatch.
    #[arg(long, global = true, allow_hyphen_values = true, value_parser = parse_sign)]
    pub epsilon: Option<i8>,
    /// Expected ε′ (relation II framing sign).
    #[arg(long, global = true, allow_hyphen_values = true, value_parser = parse_sign)]
    pub epsilon_prime: Option<i8>,
    #[arg(long, global = true, value_enum, default_value_t = Output::Table)]
    pub output: Output,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Kauffman polynomial of the plane closure of a word.
    Eval {
        word: String,
        #[arg(long)]
        strands: Option<usize>,
    },
    /// Products and reductions in the BMW algebra.
    Bmw {
        #[command(subcommand)]
        op: BmwOp,
    },
    /// Computes (and caches) the section idempotent of a partition.
    Idem { lambda: String },
    /// Quantum dimension of a partition.
    Qdim { lambda: String },
    /// Decomposes the annulus closure of a square word in the ŷ̃ basis.
    Hat {
        word: String,
        #[arg(long)]
        strands: Option<usize>,
    },
    /// Verification suites.
    Verify {
        #[command(subcommand)]
        suite: VerifySuite,
    },
}

#[derive(Subcommand, Debug)]
pub enum BmwOp {
    /// Product of words, top to bottom.
    Mul {
        #[arg(required = true)]
        words: Vec<String>,
        #[arg(long)]
        strands: Option<usize>,
    },
    /// Coordinates of one word.
    Reduce {
        word: String,
        #[arg(long)]
        strands: Option<usize>,
    },
}

#[derive(Subcommand, Debug)]
pub enum VerifySuite {
    /// (B₁)(B₂)(R₁)(R₂)(K) on n strands.
    Relations { n: usize },
    /// Handle-slide relations presenting K(S¹×S²), to size N.
    S1s2 { n: usize },
}

fn parse_sign(s: &str) -> Result<i8, String> {
    match s {
        "+1" | "1" => Ok(1),
        "-1" => Ok(-1),
        _ => Err(format!("expected +1 or -1, got {s:?}")),
    }
}

/// A failure with its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn invalid(m: impl ToString) -> Self {
        Failure {
            code: EXIT_INVALID,
            message: m.to_string(),
        }
    }
}

impl From<BmwError> for Failure {
    fn from(e: BmwError) -> Self {
        let code = match e {
            BmwError::TooLarge { .. } => EXIT_LIMIT,
            BmwError::Mismatch { .. } => EXIT_INVALID,
            _ => EXIT_VERIFY,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<TorusError> for Failure {
    fn from(e: TorusError) -> Self {
        match e {
            TorusError::Bmw(b) => b.into(),
            TorusError::InvalidCell(..) => Failure::invalid(e),
            _ => Failure {
                code: EXIT_VERIFY,
                message: e.to_string(),
            },
        }
    }
}

impl From<EvalError> for Failure {
    fn from(e: EvalError) -> Self {
        let code = match e {
            EvalError::TooLarge { .. } => EXIT_LIMIT,
            EvalError::NotPlanar => EXIT_INVALID,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn word(text: &str, strands: Option<usize>) -> Result<SliceWord, Failure> {
    match strands {
        Some(n) => SliceWord::parse(text, n),
        None => SliceWord::parse_infer(text),
    }
    .map_err(Failure::invalid)
}

fn partition(text: &str) -> Result<YoungDiagram, Failure> {
    text.parse().map_err(Failure::invalid)
}

fn limit(n: usize, max: usize) -> Result<(), Failure> {
    if n > max {
        Err(EvalError::TooLarge { n, max }.into())
    } else {
        Ok(())
    }
}

fn vector_json(v: &TangleVector) -> Value {
    json!({
        "top": v.top(),
        "bottom": v.bottom(),
        "terms": v.iter().map(|(m, c)| json!({"matching": m.to_string(), "coeff": c.to_string()})).collect::<Vec<_>>(),
    })
}

fn vector_table(v: &TangleVector) -> String {
    if v.is_zero() {
        return "0\n".into();
    }
    v.iter().map(|(m, c)| format!("{m}\t{c}\n")).collect()
}

/// What a subcommand produced: JSON, its table rendering, and whether a
/// verification passed.
struct Report {
    json: Value,
    table: String,
    ok: bool,
}

impl Report {
    fn plain(json: Value, table: String) -> Self {
        Report { json, table, ok: true }
    }
}

fn ratfn_report(key: &str, value: &RatFn) -> Report {
    Report::plain(json!({ key: value.to_string() }), format!("{value}\n"))
}

fn dispatch(cli: &Cli) -> Result<Report, Failure> {
    let max_n = cli.max_n as usize;
    let store = || IdempotentStore::new(max_n, cli.cache_dir.clone());
    match &cli.command {
        Command::Eval { word: w, strands } => {
            let w = word(w, *strands)?;
            if !w.is_square() {
                return Err(Failure::invalid("eval needs a square word"));
            }
            Ok(ratfn_report("kauffman", &kauffman_closure(&w)))
        }
        Command::Bmw { op } => {
            let st = store();
            let alg = st.algebra();
            let v = match op {
                BmwOp::Reduce { word: w, strands } => {
                    let w = word(w, *strands)?;
                    limit(w.strands(), max_n)?;
                    alg.reduce(&w)
                }
                BmwOp::Mul { words, strands } => {
                    let ws = words.iter().map(|w| word(w, *strands)).collect::<Result<Vec<_>, _>>()?;
                    let vs: Vec<TangleVector> = ws
                        .iter()
                        .map(|w| limit(w.strands(), max_n).map(|_| alg.reduce(w)))
                        .collect::<Result<_, _>>()?;
                    let refs: Vec<&TangleVector> = vs.iter().collect();
                    alg.mul_all(&refs).map_err(Failure::invalid)?
                }
            };
            Ok(Report::plain(vector_json(&v), vector_table(&v)))
        }
        Command::Idem { lambda } => {
            let l = partition(lambda)?;
            let s = store().section(&l)?;
            Ok(Report::plain(
                json!({
                    "lambda": l.to_string(),
                    "qdim": s.qdim.to_string(),
                    "idempotent": vector_json(&s.idempotent),
                }),
                format!("⟨{l}⟩ = {}\n{} terms\n", s.qdim, s.idempotent.len()),
            ))
        }
        Command::Qdim { lambda } => {
            let l = partition(lambda)?;
            Ok(ratfn_report("qdim", &store().qdim(&l)?))
        }
        Command::Hat { word: w, strands } => {
            let w = word(w, *strands)?;
            if !w.is_square() {
                return Err(Failure::invalid("hat needs a square word"));
            }
            limit(w.strands(), max_n)?;
            let st = store();
            let h = hat(&st, &st.algebra().reduce(&w))?;
            let terms: Vec<Value> = h
                .iter()
                .map(|(l, c)| json!({"lambda": l.to_string(), "coeff": c.to_string()}))
                .collect();
            let table: String = if h.is_zero() {
                "0\n".into()
            } else {
                h.iter().map(|(l, c)| format!("{l}\t{c}\n")).collect()
            };
            Ok(Report::plain(json!({ "terms": terms }), table))
        }
        Command::Verify {
            suite: VerifySuite::Relations { n },
        } => {
            limit(*n, max_n)?;
            let st = store();
            let checks = check_relations(st.algebra(), *n);
            let ok = checks.iter().all(|c| c.holds);
            let table = checks
                .iter()
                .map(|c| format!("{}\t{}\t{}\n", if c.holds { "ok" } else { "FAIL" }, c.name, c.instance))
                .collect();
            Ok(Report {
                json: json!({ "n": n, "checks": checks, "ok": ok }),
                table,
                ok,
            })
        }
        Command::Verify {
            suite: VerifySuite::S1s2 { n },
        } => {
            // Q″ generators of size N live on N + 1 strands.
            limit(n + 1, max_n)?;
            let st = store();
            let rep = s1s2_report(&st, *n, cli.cache_dir.as_deref())?;
            let mut ok = rep.verified;
            let mut table = rep.table();
            if let Some(c) = rep.convention {
                for (name, want, got) in [("ε", cli.epsilon, c.epsilon), ("ε′", cli.epsilon_prime, c.epsilon_prime)] {
                    if want.is_some_and(|w| w != got) {
                        ok = false;
                        table.push_str(&format!("{name} expected {:+}, found {got:+}\n", want.unwrap()));
                    }
                }
            } else if cli.epsilon.is_some() || cli.epsilon_prime.is_some() {
                ok = false;
            }
            let json = serde_json::to_value(&rep).expect("serializable");
            Ok(Report { json, table, ok })
        }
    }
}

/// Runs the command line with `args` (including the program name), writing
/// results to `out` and diagnostics to `err`; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(err, "{e}")
            } else {
                write!(out, "{e}")
            };
            return code;
        }
    };
    match dispatch(&cli) {
        Ok(r) => {
            let _ = match cli.output {
                Output::Json => writeln!(out, "{}", serde_json::to_string_pretty(&r.json).expect("json")),
                Output::Table => write!(out, "{}", r.table),
            };
            if r.ok {
                EXIT_OK
            } else {
                EXIT_VERIFY
            }
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}
