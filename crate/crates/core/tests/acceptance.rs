//! Acceptance suite: one test per release criterion, each printing a
//! PASS/FAIL line and enforcing its stated time budget. Run with
//! `cargo test --release --test acceptance` (the workspace test profile is
//! optimized, so plain `cargo test` works too).

use cyclex_core::budget::SearchCtx;
use cyclex_core::census::{all_graphs, kappa_census};
use cyclex_core::cycle::{
    circumference, find_dominating_cycle, has_hamilton_cycle, oracle_circumference,
};
use cyclex_core::graph::{construct_h, m_ka_plus_kb, Graph};
use cyclex_core::graph6::{decode_graph6, encode_graph6};
use cyclex_core::harness::{run_check, RunConfig};
use cyclex_core::invariants::{
    connectivity, min_degree, oracle_connectivity, oracle_independence_number,
};
use cyclex_core::lemmas::{
    check_lemmas_on_graph, lemma_e_exhaustive, run_fixture_corpus, FixtureAnnotation, LemmaClause,
    LemmaReport,
};
use cyclex_core::schemes::{soundness_sweep, SweepConfig};
use cyclex_core::selftest::{fragment_duality_sweep, oracle_equivalence_sweep};
use cyclex_core::theorems::{check_theorem1, StatementId};
use std::time::{Duration, Instant};

fn ctx() -> SearchCtx {
    SearchCtx::unlimited()
}

fn report(criterion: u32, pass: bool, detail: &str, elapsed: Duration) {
    println!(
        "criterion {criterion}: {} — {detail} ({:.2}s)",
        if pass { "PASS" } else { "FAIL" },
        elapsed.as_secs_f64()
    );
    assert!(pass, "criterion {criterion} failed: {detail}");
}

/// Criterion 1: the 3-connected limit example has exactly the pinned
/// invariants, no dominating cycle, and falsifies the dichotomy conclusion,
/// so 4-connectivity cannot be weakened. All values via brute-force oracles.
#[test]
fn criterion_1_limit_example_4k2_k3() {
    let started = Instant::now();
    let g = m_ka_plus_kb(4, 2, 3).unwrap();
    let n = g.n();
    let delta = min_degree(&g).unwrap();
    let kappa = oracle_connectivity(&g).unwrap();
    let alpha = oracle_independence_number(&g).unwrap();
    let c = oracle_circumference(&g);
    let dom = find_dominating_cycle(&g, &mut ctx()).unwrap();
    let t1 = check_theorem1(&g, &mut ctx()).unwrap();
    let pass = (n, delta, kappa, alpha, c) == (11, 4, 3, 4, 9)
        && dom.is_none()
        && !t1.applicable
        && !t1.holds
        && (c as i64) < 4 * delta as i64 - 2 * kappa as i64;
    let elapsed = started.elapsed();
    report(
        1,
        pass && elapsed < Duration::from_secs(5),
        &format!("4K2+K3: (n,delta,kappa,alpha,c)=({n},{delta},{kappa},{alpha},{c}), dominating={}, conclusion fails at kappa=3", dom.is_some()),
        elapsed,
    );
}

/// Criterion 2: the 4-connected limit example meets the cycle bound with
/// equality and has no dominating cycle, so the bound cannot be raised.
#[test]
fn criterion_2_tightness_5k2_k4() {
    let started = Instant::now();
    let g = m_ka_plus_kb(5, 2, 4).unwrap();
    let delta = min_degree(&g).unwrap();
    let kappa = connectivity(&g).unwrap();
    let c_fast = circumference(&g, &mut ctx()).unwrap().0;
    let c_naive = oracle_circumference(&g);
    let dom = find_dominating_cycle(&g, &mut ctx()).unwrap();
    let strict = cyclex_core::theorems::check_statement(&g, StatementId::T1Strict, &mut ctx())
        .unwrap();
    let pass = c_fast == 12
        && c_naive == 12
        && 4 * delta - 2 * kappa == 12
        && dom.is_none()
        && strict.is_counterexample();
    let elapsed = started.elapsed();
    report(
        2,
        pass && elapsed < Duration::from_secs(30),
        &format!("5K2+K4: c={c_fast}=4*{delta}-2*{kappa}, no dominating cycle, +1 variant falsified"),
        elapsed,
    );
}

/// Criterion 3: the H-family example separates dominating from Hamilton.
#[test]
fn criterion_3_h_family() {
    let started = Instant::now();
    let g = construct_h(1, 3, 5, 4).unwrap();
    let delta = min_degree(&g).unwrap();
    let kappa = oracle_connectivity(&g).unwrap();
    let dom = find_dominating_cycle(&g, &mut ctx()).unwrap();
    let (ham, _) = has_hamilton_cycle(&g, &mut ctx()).unwrap();
    let dom_ok = dom
        .as_ref()
        .map(|c| cyclex_core::cycle::dominating_witness_ok(&g, c))
        .unwrap_or(false);
    let pass = delta == 5 && kappa == 4 && dom_ok && !ham;
    let elapsed = started.elapsed();
    report(
        3,
        pass && elapsed < Duration::from_secs(60),
        &format!("H(1,3,5,4): delta={delta}, kappa={kappa}, dominating={dom_ok}, hamilton={ham}"),
        elapsed,
    );
}

/// Criterion 4: zero counterexamples to the dichotomy over every
/// 4-connected graph on at most 9 vertices, fed through the corpus pipeline
/// as graph6 lines, with a byte-identical report across worker counts.
#[test]
fn criterion_4_theorem1_sweep_n9() {
    let started = Instant::now();
    let mut lines: Vec<String> = Vec::new();
    for n in 5..=9 {
        for g in kappa_census(n, 4) {
            lines.push(encode_graph6(&g).unwrap());
        }
    }
    lines.sort();
    let dir = std::env::temp_dir().join("cyclex-acceptance");
    std::fs::create_dir_all(&dir).unwrap();
    let corpus_path = dir.join("four_connected_n9.g6");
    std::fs::write(&corpus_path, lines.join("\n") + "\n").unwrap();
    let reread: Vec<String> = std::fs::read_to_string(&corpus_path)
        .unwrap()
        .lines()
        .map(|s| s.to_string())
        .collect();

    let cfg8 = RunConfig {
        statements: vec![StatementId::T1],
        workers: 8,
        ..RunConfig::default()
    };
    let report8 = run_check(&reread, &cfg8);
    let cfg1 = RunConfig { workers: 1, ..cfg8.clone() };
    let report1 = run_check(&reread, &cfg1);
    let bytes8 = serde_json::to_vec(&report8).unwrap();
    let bytes1 = serde_json::to_vec(&report1).unwrap();

    let agg = &report8.aggregate;
    let pass = agg.counterexamples == 0
        && agg.decode_errors == 0
        && agg.indeterminate == 0
        && agg.scanned == reread.len()
        && agg.applicable == agg.scanned
        && bytes8 == bytes1;
    let elapsed = started.elapsed();
    report(
        4,
        pass && elapsed < Duration::from_secs(30 * 60),
        &format!(
            "{} four-connected graphs on <= 9 vertices, {} applicable, {} counterexamples, reports byte-identical across 1/8 workers",
            agg.scanned, agg.applicable, agg.counterexamples
        ),
        elapsed,
    );
}

/// Criterion 5: zero counterexamples to the 3-connected regression
/// statement over every 3-connected graph on at most 8 vertices.
#[test]
fn criterion_5_theorem_m_sweep_n8() {
    let started = Instant::now();
    let mut lines: Vec<String> = Vec::new();
    for n in 4..=8 {
        for g in kappa_census(n, 3) {
            lines.push(encode_graph6(&g).unwrap());
        }
    }
    lines.sort();
    let cfg = RunConfig {
        statements: vec![StatementId::M],
        workers: 8,
        ..RunConfig::default()
    };
    let rep = run_check(&lines, &cfg);
    let agg = &rep.aggregate;
    let pass = agg.counterexamples == 0
        && agg.indeterminate == 0
        && agg.scanned == lines.len()
        && agg.applicable == agg.scanned;
    let elapsed = started.elapsed();
    report(
        5,
        pass && elapsed < Duration::from_secs(10 * 60),
        &format!(
            "{} three-connected graphs on <= 8 vertices, {} counterexamples",
            agg.scanned, agg.counterexamples
        ),
        elapsed,
    );
}

/// Criterion 6: the full scheme-bound soundness sweep is violation-free
/// outside the small-r review log for the two min-form clauses.
#[test]
fn criterion_6_scheme_soundness_sweep() {
    let started = Instant::now();
    let sweep = soundness_sweep(&SweepConfig::default());
    let pass = sweep.violations.is_empty();
    let elapsed = started.elapsed();
    report(
        6,
        pass && elapsed < Duration::from_secs(15 * 60),
        &format!(
            "{} valid nontrivial schemes over cycles up to length 14, {} violations, {} review-log entries",
            sweep.schemes_checked,
            sweep.violations.len(),
            sweep.review_log.len()
        ),
        elapsed,
    );
}

/// Criterion 7: fragment duality and partition axioms hold on every graph
/// with at most 7 vertices.
#[test]
fn criterion_7_fragment_duality_n7() {
    let started = Instant::now();
    let (checked, violations) = fragment_duality_sweep(7);
    // Connected graphs on 2..=7 vertices number 1+2+6+21+112+853 = 995;
    // dropping the six complete graphs leaves 989 eligible inputs.
    let pass = violations.is_empty() && checked == 989;
    let elapsed = started.elapsed();
    report(
        7,
        pass && elapsed < Duration::from_secs(5 * 60),
        &format!("{checked} graphs checked, {} violations", violations.len()),
        elapsed,
    );
}

/// Criterion 8: branch-and-bound circumference equals the naive
/// enumeration on the fixtures and >= 10^4 seeded random graphs.
#[test]
fn criterion_8_oracle_equivalence() {
    let started = Instant::now();
    let (checked, mismatches) = oracle_equivalence_sweep(10_000);
    let pass = mismatches == 0 && checked >= 10_000;
    let elapsed = started.elapsed();
    report(8, pass, &format!("{checked} graphs compared, {mismatches} mismatches"), elapsed);
}

fn load_corpus() -> (Vec<(String, Graph)>, Vec<FixtureAnnotation>) {
    let g6 = include_str!("data/lemma_fixtures.g6");
    let ann: Vec<FixtureAnnotation> =
        serde_json::from_str(include_str!("data/lemma_fixtures.json")).unwrap();
    let graphs = g6
        .lines()
        .zip(ann.iter())
        .map(|(line, a)| (a.name.clone(), decode_graph6(line).unwrap()))
        .collect();
    (graphs, ann)
}

/// Criterion 9: the lemma statement suites pass on the annotated corpus
/// with zero violations; every lemma (5-10, D, E, F) is exercised, and each
/// realizable clause has a fixture whose hypothesis holds. The two
/// special-path clauses whose hypotheses never materialize (the down-system
/// would need f = 2 with an uncovered separator vertex under the
/// delta >= 2*kappa - 2 preamble) are machine-checked to be unrealizable
/// over the whole small-graph census rather than silently skipped.
#[test]
fn criterion_9_lemma_suites() {
    let started = Instant::now();
    let (graphs, ann) = load_corpus();
    let mut ctx = SearchCtx::with_budget(4_000_000_000);
    let (mut merged, errors) = run_fixture_corpus(&graphs, &ann, &mut ctx).unwrap();

    // Lemma E exhaustively over all graphs on <= 7 vertices.
    let (le_checked, le_violations) = lemma_e_exhaustive(7, &mut ctx).unwrap();

    // Absence proof for the two unrealizable clauses: nothing in the
    // connected census up to 7 vertices fires them either.
    let mut census_report = LemmaReport::default();
    for n in 4..=7 {
        for g in all_graphs(n) {
            if g.is_connected() && !g.is_complete() && connectivity(&g).unwrap() >= 2 {
                census_report.merge(check_lemmas_on_graph(&g, &mut ctx).unwrap());
            }
        }
    }

    let realizable: Vec<LemmaClause> = cyclex_core::lemmas::ALL_LEMMA_CLAUSES
        .into_iter()
        .filter(|c| !matches!(c, LemmaClause::L8d2 | LemmaClause::L9e2))
        .collect();
    let missing: Vec<&str> = realizable
        .iter()
        .filter(|c| merged.count(**c) == 0)
        .map(|c| c.name())
        .collect();
    merged.merge(census_report.clone());

    let unrealizable_absent = census_report.count(LemmaClause::L8d2) == 0
        && census_report.count(LemmaClause::L9e2) == 0
        && merged.count(LemmaClause::L8d2) == 0
        && merged.count(LemmaClause::L9e2) == 0;

    let pass = errors.is_empty()
        && merged.violations.is_empty()
        && le_violations.is_empty()
        && le_checked > 0
        && missing.is_empty()
        && unrealizable_absent;
    let elapsed = started.elapsed();
    report(
        9,
        pass,
        &format!(
            "13/15 clauses exercised on the corpus ({} instances), zero violations; Lemma E exhaustive n<=7 ({le_checked} hamiltonian instances); clauses L8-d2, L9-e2 confirmed hypothesis-free over the census (their f=2 uncovered-separator configuration cannot arise; see docs)",
            merged.exercised.values().sum::<usize>()
        ),
        elapsed,
    );
}

/// Criterion 10: the headline statement quantifies over all graphs and is
/// not reproducible in full generality; the declared desk-scale substitute
/// is exactly the parameter set enforced by criteria 4-9 above.
#[test]
fn criterion_10_declared_scope() {
    let started = Instant::now();
    // The substitute's parameters, pinned: exhaustive dichotomy check to
    // n = 9 (4-connected), regression to n = 8 (3-connected), scheme cycles
    // to length 14, duality to n = 7, >= 10^4 oracle samples, Lemma E to
    // n = 7. Their enforcement lives in criteria 4-9; this records intent.
    let declared = (9, 8, 14, 7, 10_000, 7);
    let enforced = (9, 8, SweepConfig::default().max_q, 7, 10_000, 7);
    let pass = declared == enforced;
    report(
        10,
        pass,
        "full-generality proof out of scope by design; criteria 4-9 are the property-based desk-scale substitute",
        started.elapsed(),
    );
}
