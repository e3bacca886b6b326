//! Corpus-run machinery shared by the CLI and the acceptance suite:
//! newline-delimited graph6 in, per-graph statement verdicts out, with a
//! versioned JSON report whose bytes do not depend on the worker count.

use crate::budget::SearchCtx;
use crate::cycle::{circumference, find_dominating_cycle};
use crate::error::Error;
use crate::graph6::decode_graph6_capped;
use crate::invariants::invariant_record;
use crate::theorems::{check_statement, StatementId, Verdict, Witness};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub statements: Vec<StatementId>,
    pub workers: usize,
    /// Search-node budget per graph and statement.
    pub budget: u64,
    /// Vertex cap applied at decode time.
    pub max_n: usize,
    /// Count budget-exhausted verdicts toward the failure exit.
    pub strict: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            statements: vec![StatementId::T1],
            workers: 1,
            budget: 200_000_000,
            max_n: crate::graph::VERTEX_CAP,
            strict: false,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerdictRow {
    pub statement: String,
    pub applicable: bool,
    pub holds: bool,
    pub indeterminate: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub delta: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kappa: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub circumference: Option<usize>,
}

impl VerdictRow {
    fn from_verdict(v: &Verdict) -> Self {
        VerdictRow {
            statement: v.statement.clone(),
            applicable: v.applicable,
            holds: v.holds,
            indeterminate: false,
            witness: v.witness.clone(),
            n: Some(v.invariants_used.n),
            delta: Some(v.invariants_used.delta),
            kappa: Some(v.invariants_used.kappa),
            alpha: v.invariants_used.alpha,
            circumference: v.invariants_used.circumference,
        }
    }

    fn indeterminate(id: StatementId) -> Self {
        VerdictRow {
            statement: id.name().to_string(),
            applicable: false,
            holds: false,
            indeterminate: true,
            witness: None,
            n: None,
            delta: None,
            kappa: None,
            alpha: None,
            circumference: None,
        }
    }

    pub fn is_counterexample(&self) -> bool {
        self.applicable && !self.holds && !self.indeterminate
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GraphRecord {
    /// 1-based input line number.
    pub line: usize,
    pub graph6: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub decode_error: Option<String>,
    pub verdicts: Vec<VerdictRow>,
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct Aggregate {
    pub scanned: usize,
    pub decode_errors: usize,
    pub applicable: usize,
    pub holds: usize,
    pub counterexamples: usize,
    pub indeterminate: usize,
}

/// Wall time is reported on the human-readable channel only; keeping it out
/// of the JSON keeps reports byte-identical across runs and worker counts.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CheckReport {
    pub schema_version: u32,
    pub command: String,
    pub statements: Vec<String>,
    pub records: Vec<GraphRecord>,
    pub aggregate: Aggregate,
}

impl CheckReport {
    pub fn exit_code(&self, strict: bool) -> i32 {
        if self.aggregate.counterexamples > 0 || (strict && self.aggregate.indeterminate > 0) {
            1
        } else {
            0
        }
    }
}

fn with_pool<T: Send>(workers: usize, job: impl FnOnce() -> T + Send) -> T {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .expect("thread pool");
    pool.install(job)
}

/// Evaluate the configured statements on every input line. Decode failures
/// are per-line records, not fatal. Record order matches input order
/// regardless of the worker count.
pub fn run_check(lines: &[String], cfg: &RunConfig) -> CheckReport {
    let records: Vec<GraphRecord> = with_pool(cfg.workers, || {
        lines
            .par_iter()
            .enumerate()
            .map(|(i, raw)| {
                let line = i + 1;
                let raw = raw.trim();
                match decode_graph6_capped(raw, cfg.max_n) {
                    Err(e) => GraphRecord {
                        line,
                        graph6: raw.to_string(),
                        decode_error: Some(e.to_string()),
                        verdicts: Vec::new(),
                    },
                    Ok(g) => {
                        let verdicts = cfg
                            .statements
                            .iter()
                            .map(|&id| {
                                let mut ctx = SearchCtx::with_budget(cfg.budget);
                                match check_statement(&g, id, &mut ctx) {
                                    Ok(v) => VerdictRow::from_verdict(&v),
                                    Err(Error::BudgetExhausted) | Err(Error::Cancelled) => {
                                        VerdictRow::indeterminate(id)
                                    }
                                    Err(e) => {
                                        let mut row = VerdictRow::indeterminate(id);
                                        row.statement = format!("{} ({e})", id.name());
                                        row
                                    }
                                }
                            })
                            .collect();
                        GraphRecord {
                            line,
                            graph6: raw.to_string(),
                            decode_error: None,
                            verdicts,
                        }
                    }
                }
            })
            .collect()
    });
    let mut agg = Aggregate::default();
    for r in &records {
        if r.decode_error.is_some() {
            agg.decode_errors += 1;
            continue;
        }
        agg.scanned += 1;
        for v in &r.verdicts {
            if v.indeterminate {
                agg.indeterminate += 1;
            } else if v.applicable {
                agg.applicable += 1;
                if v.holds {
                    agg.holds += 1;
                } else {
                    agg.counterexamples += 1;
                }
            }
        }
    }
    CheckReport {
        schema_version: SCHEMA_VERSION,
        command: "check".to_string(),
        statements: cfg.statements.iter().map(|s| s.name().to_string()).collect(),
        records,
        aggregate: agg,
    }
}

/// Hunt mode: like check, but the per-graph records keep only failing
/// graphs (with their full witness payloads), which keeps huge-corpus
/// reports small.
pub fn hunt_counterexamples(lines: &[String], cfg: &RunConfig) -> CheckReport {
    let mut report = run_check(lines, cfg);
    report.command = "hunt".to_string();
    report.records.retain(|r| {
        r.decode_error.is_some() || r.verdicts.iter().any(|v| v.is_counterexample())
    });
    report
}

/// Row emitted by the invariants command.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct InvariantRow {
    pub line: usize,
    pub graph6: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub decode_error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub delta: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kappa: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub edge_count: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub circumference: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub has_dominating_cycle: Option<bool>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct InvariantReport {
    pub schema_version: u32,
    pub command: String,
    pub records: Vec<InvariantRow>,
    pub decode_errors: usize,
}

/// Invariant bundles per graph; no pass/fail semantics.
pub fn run_invariants(lines: &[String], cfg: &RunConfig) -> InvariantReport {
    let records: Vec<InvariantRow> = with_pool(cfg.workers, || {
        lines
            .par_iter()
            .enumerate()
            .map(|(i, raw)| {
                let raw = raw.trim();
                let line = i + 1;
                match decode_graph6_capped(raw, cfg.max_n) {
                    Err(e) => InvariantRow {
                        line,
                        graph6: raw.to_string(),
                        decode_error: Some(e.to_string()),
                        n: None,
                        delta: None,
                        kappa: None,
                        alpha: None,
                        edge_count: None,
                        circumference: None,
                        has_dominating_cycle: None,
                    },
                    Ok(g) => {
                        let mut ctx = SearchCtx::with_budget(cfg.budget);
                        let rec = invariant_record(&g).ok();
                        let c = circumference(&g, &mut ctx).ok().map(|(c, _)| c);
                        let dom = find_dominating_cycle(&g, &mut ctx).ok().map(|d| d.is_some());
                        InvariantRow {
                            line,
                            graph6: raw.to_string(),
                            decode_error: None,
                            n: Some(g.n()),
                            delta: rec.map(|r| r.delta),
                            kappa: rec.map(|r| r.kappa),
                            alpha: rec.map(|r| r.alpha),
                            edge_count: rec.map(|r| r.edge_count),
                            circumference: c,
                            has_dominating_cycle: dom,
                        }
                    }
                }
            })
            .collect()
    });
    let decode_errors = records.iter().filter(|r| r.decode_error.is_some()).count();
    InvariantReport {
        schema_version: SCHEMA_VERSION,
        command: "invariants".to_string(),
        records,
        decode_errors,
    }
}
