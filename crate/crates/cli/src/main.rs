//! cyclex: exact verification of circumference / dominating-cycle
//! statements over newline-delimited graph6 corpora.
//!
//! Exit codes: 0 clean, 1 counterexamples found (or, with --strict,
//! budget-exhausted verdicts), 2 usage or I/O errors.

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use cyclex_core::graph::{construct_h, m_ka_plus_kb, VERTEX_CAP};
use cyclex_core::graph6::encode_graph6;
use cyclex_core::harness::{
    hunt_counterexamples, run_check, run_invariants, CheckReport, InvariantReport, RunConfig,
};
use cyclex_core::selftest::{run_selftest, SelftestConfig};
use cyclex_core::theorems::StatementId;
use std::io::Read;
use std::time::Instant;

#[derive(Parser)]
#[command(name = "cyclex", version, about = "Exact cycle-structure verification for small graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Args)]
struct CorpusArgs {
    /// Input file of graph6 lines, or "-" for standard input.
    #[arg(long, default_value = "-")]
    input: String,
    /// Worker threads (falls back to CYCLEX_WORKERS, then 1).
    #[arg(long)]
    workers: Option<usize>,
    /// Search-node budget per graph and statement.
    #[arg(long, default_value_t = 200_000_000)]
    budget: u64,
    /// Reject graphs with more vertices than this.
    #[arg(long, default_value_t = VERTEX_CAP)]
    max_n: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Fail (exit 1) when any verdict is indeterminate.
    #[arg(long)]
    strict: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate statement predicates on every input graph.
    Check {
        /// Statement ids (repeatable): T1, T1-strict, T2..T5, A..M, Lemma4,
        /// Conj1, Conj2.
        #[arg(long = "statement", required = true)]
        statements: Vec<String>,
        #[command(flatten)]
        corpus: CorpusArgs,
    },
    /// Report (n, delta, kappa, alpha, c, dominating?) per graph.
    Invariants {
        #[command(flatten)]
        corpus: CorpusArgs,
    },
    /// Print the graph6 encoding of a named construction.
    Construct {
        /// Family id: "mKa+Kb" (args m a b) or "H" (args a b t kappa).
        family: String,
        params: Vec<usize>,
    },
    /// Run the built-in verification battery.
    Selftest {
        /// Largest cycle length in the scheme sweep (also caps the duality
        /// sweep's graph order).
        #[arg(long, default_value_t = 14)]
        max_n: usize,
        #[arg(long)]
        workers: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Test hook: corrupt the scheme bound table to prove detection.
        #[arg(long, hide = true)]
        corrupt_bounds: bool,
    },
    /// Like check, but the report keeps only failing graphs.
    Hunt {
        #[arg(long = "statement", required = true)]
        statements: Vec<String>,
        #[command(flatten)]
        corpus: CorpusArgs,
    },
}

fn worker_count(flag: Option<usize>) -> usize {
    flag.or_else(|| std::env::var("CYCLEX_WORKERS").ok().and_then(|v| v.parse().ok()))
        .unwrap_or(1)
        .max(1)
}

fn read_lines(input: &str) -> Result<Vec<String>> {
    let text = if input == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf).context("reading standard input")?;
        buf
    } else {
        std::fs::read_to_string(input).with_context(|| format!("reading {input}"))?
    };
    Ok(text.lines().filter(|l| !l.trim().is_empty()).map(|l| l.to_string()).collect())
}

fn parse_statements(names: &[String]) -> Result<Vec<StatementId>> {
    names.iter().map(|s| Ok(StatementId::parse(s)?)).collect()
}

fn run_cfg(corpus: &CorpusArgs, statements: Vec<StatementId>) -> RunConfig {
    RunConfig {
        statements,
        workers: worker_count(corpus.workers),
        budget: corpus.budget,
        max_n: corpus.max_n.min(VERTEX_CAP),
        strict: corpus.strict,
    }
}

fn main() {
    // Die quietly on a closed output pipe, like the rest of the Unix
    // toolchain, instead of panicking mid-print.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    match real_main() {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            std::process::exit(2);
        }
    }
}

fn real_main() -> Result<i32> {
    let cli = Cli::parse();
    match cli.command {
        Command::Check { statements, corpus } => {
            let cfg = run_cfg(&corpus, parse_statements(&statements)?);
            let lines = read_lines(&corpus.input)?;
            let started = Instant::now();
            let report = run_check(&lines, &cfg);
            emit_check(&report, corpus.format, started.elapsed())?;
            Ok(report.exit_code(cfg.strict))
        }
        Command::Hunt { statements, corpus } => {
            let cfg = run_cfg(&corpus, parse_statements(&statements)?);
            let lines = read_lines(&corpus.input)?;
            let started = Instant::now();
            let report = hunt_counterexamples(&lines, &cfg);
            emit_check(&report, corpus.format, started.elapsed())?;
            Ok(report.exit_code(cfg.strict))
        }
        Command::Invariants { corpus } => {
            let cfg = run_cfg(&corpus, Vec::new());
            let lines = read_lines(&corpus.input)?;
            let report = run_invariants(&lines, &cfg);
            emit_invariants(&report, corpus.format)?;
            Ok(0)
        }
        Command::Construct { family, params } => {
            let g = match (family.as_str(), params.as_slice()) {
                ("mKa+Kb", [m, a, b]) => m_ka_plus_kb(*m, *a, *b)?,
                ("H", [a, b, t, kappa]) => construct_h(*a, *b, *t, *kappa)?,
                _ => {
                    bail!("usage: construct mKa+Kb <m> <a> <b> | construct H <a> <b> <t> <kappa>")
                }
            };
            println!("{}", encode_graph6(&g)?);
            Ok(0)
        }
        Command::Selftest { max_n, workers, format, corrupt_bounds } => {
            let cfg = SelftestConfig {
                max_q: max_n.clamp(3, 20),
                duality_max_n: max_n.min(7),
                corrupt_bounds,
                ..SelftestConfig::default()
            };
            let report = rayon::ThreadPoolBuilder::new()
                .num_threads(worker_count(workers))
                .build()
                .expect("thread pool")
                .install(|| run_selftest(&cfg));
            match format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&report)?),
                _ => {
                    for line in &report.lines {
                        println!(
                            "{} {}: {}",
                            if line.pass { "PASS" } else { "FAIL" },
                            line.suite,
                            line.detail
                        );
                    }
                }
            }
            Ok(if report.passed() { 0 } else { 1 })
        }
    }
}

fn emit_check(report: &CheckReport, format: Format, elapsed: std::time::Duration) -> Result<()> {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(report)?),
        Format::Csv => {
            println!(
                "line,graph6,statement,applicable,holds,indeterminate,n,delta,kappa,circumference"
            );
            for r in &report.records {
                if let Some(err) = &r.decode_error {
                    println!("{},{},decode-error:{},,,,,,,", r.line, r.graph6, err.replace(',', ";"));
                    continue;
                }
                for v in &r.verdicts {
                    println!(
                        "{},{},{},{},{},{},{},{},{},{}",
                        r.line,
                        r.graph6,
                        v.statement,
                        v.applicable,
                        v.holds,
                        v.indeterminate,
                        v.n.map_or(String::new(), |x| x.to_string()),
                        v.delta.map_or(String::new(), |x| x.to_string()),
                        v.kappa.map_or(String::new(), |x| x.to_string()),
                        v.circumference.map_or(String::new(), |x| x.to_string()),
                    );
                }
            }
        }
        Format::Text => {
            for r in &report.records {
                if let Some(err) = &r.decode_error {
                    println!("line {}: {} -- decode error: {err}", r.line, r.graph6);
                    continue;
                }
                for v in &r.verdicts {
                    let status = if v.indeterminate {
                        "indeterminate"
                    } else if !v.applicable {
                        "not applicable"
                    } else if v.holds {
                        "holds"
                    } else {
                        "COUNTEREXAMPLE"
                    };
                    println!("line {}: {} [{}] {}", r.line, r.graph6, v.statement, status);
                }
            }
            let a = &report.aggregate;
            println!(
                "scanned {} | applicable {} | holds {} | counterexamples {} | indeterminate {} | decode errors {} | {:.3}s",
                a.scanned,
                a.applicable,
                a.holds,
                a.counterexamples,
                a.indeterminate,
                a.decode_errors,
                elapsed.as_secs_f64()
            );
        }
    }
    Ok(())
}

fn emit_invariants(report: &InvariantReport, format: Format) -> Result<()> {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(report)?),
        Format::Csv => {
            println!("line,graph6,n,delta,kappa,alpha,circumference,dominating");
            for r in &report.records {
                if let Some(err) = &r.decode_error {
                    println!("{},{},decode-error:{},,,,,", r.line, r.graph6, err.replace(',', ";"));
                    continue;
                }
                println!(
                    "{},{},{},{},{},{},{},{}",
                    r.line,
                    r.graph6,
                    r.n.unwrap(),
                    r.delta.map_or(String::new(), |x| x.to_string()),
                    r.kappa.map_or(String::new(), |x| x.to_string()),
                    r.alpha.map_or(String::new(), |x| x.to_string()),
                    r.circumference.map_or(String::new(), |x| x.to_string()),
                    r.has_dominating_cycle.map_or(String::new(), |x| x.to_string()),
                );
            }
        }
        Format::Text => {
            for r in &report.records {
                if let Some(err) = &r.decode_error {
                    println!("line {}: {} -- decode error: {err}", r.line, r.graph6);
                    continue;
                }
                println!(
                    "line {}: {} n={} delta={} kappa={} alpha={} c={} dominating={}",
                    r.line,
                    r.graph6,
                    r.n.unwrap(),
                    r.delta.map_or("?".into(), |x| x.to_string()),
                    r.kappa.map_or("?".into(), |x| x.to_string()),
                    r.alpha.map_or("?".into(), |x| x.to_string()),
                    r.circumference.map_or("?".into(), |x| x.to_string()),
                    r.has_dominating_cycle.map_or("?".into(), |x| x.to_string()),
                );
            }
        }
    }
    Ok(())
}
