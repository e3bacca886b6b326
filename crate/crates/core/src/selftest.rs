//! The self-test battery: scheme-bound soundness sweep, fragment duality
//! sweep, circumference oracle-equivalence sweep, and limit-example
//! certification. Each suite reports one pass/fail line.

use crate::budget::SearchCtx;
use crate::census::all_graphs;
use crate::cycle::{circumference, oracle_circumference};
use crate::fragments::check_fragment_duality;
use crate::graph::{construct_h, m_ka_plus_kb, Graph};
use crate::schemes::{soundness_sweep, SweepConfig};
use crate::theorems::certify_limit_examples;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone)]
pub struct SelftestConfig {
    /// Largest cycle length in the scheme sweep.
    pub max_q: usize,
    /// Largest graph order in the fragment duality sweep.
    pub duality_max_n: usize,
    /// Random graphs in the circumference oracle-equivalence sweep.
    pub oracle_samples: usize,
    /// Negative-control hook: corrupt the scheme bound table by one.
    pub corrupt_bounds: bool,
}

impl Default for SelftestConfig {
    fn default() -> Self {
        SelftestConfig { max_q: 14, duality_max_n: 7, oracle_samples: 10_000, corrupt_bounds: false }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SuiteLine {
    pub suite: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SelftestReport {
    pub schema_version: u32,
    pub lines: Vec<SuiteLine>,
}

impl SelftestReport {
    pub fn passed(&self) -> bool {
        self.lines.iter().all(|l| l.pass)
    }
}

pub fn run_selftest(cfg: &SelftestConfig) -> SelftestReport {
    let mut lines = Vec::new();

    let sweep = soundness_sweep(&SweepConfig {
        max_q: cfg.max_q,
        corrupt_bounds: cfg.corrupt_bounds,
        ..SweepConfig::default()
    });
    lines.push(SuiteLine {
        suite: "scheme-soundness".to_string(),
        pass: sweep.passed(),
        detail: format!(
            "{} schemes, {} violations, {} review-log entries",
            sweep.schemes_checked,
            sweep.violations.len(),
            sweep.review_log.len()
        ),
    });

    let (duality_checked, duality_violations) = fragment_duality_sweep(cfg.duality_max_n);
    lines.push(SuiteLine {
        suite: "fragment-duality".to_string(),
        pass: duality_violations.is_empty(),
        detail: format!(
            "{duality_checked} graphs, {} violations",
            duality_violations.len()
        ),
    });

    let (oracle_checked, mismatches) = oracle_equivalence_sweep(cfg.oracle_samples);
    lines.push(SuiteLine {
        suite: "circumference-oracle".to_string(),
        pass: mismatches == 0,
        detail: format!("{oracle_checked} graphs, {mismatches} mismatches"),
    });

    let certify = certify_limit_examples(&mut SearchCtx::unlimited());
    match certify {
        Ok(report) => {
            let failed: Vec<String> = report
                .claims
                .iter()
                .filter(|c| !c.pass)
                .map(|c| format!("{} {}", c.example, c.claim))
                .collect();
            lines.push(SuiteLine {
                suite: "limit-examples".to_string(),
                pass: report.passed(),
                detail: if failed.is_empty() {
                    format!("{} claims certified", report.claims.len())
                } else {
                    format!("failed: {}", failed.join("; "))
                },
            });
        }
        Err(e) => lines.push(SuiteLine {
            suite: "limit-examples".to_string(),
            pass: false,
            detail: format!("error: {e}"),
        }),
    }

    SelftestReport { schema_version: crate::harness::SCHEMA_VERSION, lines }
}

/// Duality, partition, and minimality axioms over every graph up to the cap
/// (connected, non-complete), up to isomorphism.
pub fn fragment_duality_sweep(max_n: usize) -> (usize, Vec<String>) {
    let mut checked = 0;
    let mut violations = Vec::new();
    for n in 2..=max_n {
        let results: Vec<Option<String>> = all_graphs(n)
            .into_par_iter()
            .filter(|g| g.is_connected() && !g.is_complete())
            .map(|g| check_fragment_duality(&g).unwrap())
            .collect();
        checked += results.len();
        violations.extend(results.into_iter().flatten());
    }
    (checked, violations)
}

/// Branch-and-bound circumference against the naive enumeration on the
/// pinned fixtures plus seeded random graphs with n <= 9.
pub fn oracle_equivalence_sweep(samples: usize) -> (usize, usize) {
    let fixtures = vec![
        Graph::petersen(),
        Graph::cycle(6).unwrap(),
        Graph::complete_bipartite(3, 3).unwrap(),
        m_ka_plus_kb(4, 2, 3).unwrap(),
        m_ka_plus_kb(5, 2, 4).unwrap(),
        construct_h(1, 3, 5, 4).unwrap(),
    ];
    let mismatches_fixtures = fixtures
        .par_iter()
        .filter(|g| {
            circumference(g, &mut SearchCtx::unlimited()).unwrap().0 != oracle_circumference(g)
        })
        .count();

    let mismatches_random: usize = (0..samples as u64)
        .into_par_iter()
        .filter(|&seed| {
            let mut rng = ChaCha8Rng::seed_from_u64(0xC0FFEE ^ seed);
            let n = rng.random_range(1..=9);
            let p = rng.random_range(0.1..0.9);
            let mut edges = Vec::new();
            for i in 0..n {
                for j in (i + 1)..n {
                    if rng.random_bool(p) {
                        edges.push((i, j));
                    }
                }
            }
            let g = Graph::from_edges(n, &edges).unwrap();
            circumference(&g, &mut SearchCtx::unlimited()).unwrap().0 != oracle_circumference(&g)
        })
        .count();

    (fixtures.len() + samples, mismatches_fixtures + mismatches_random)
}
