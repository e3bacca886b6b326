//! Validates the annotated fixture corpus end to end.

use cyclex_core::budget::SearchCtx;
use cyclex_core::graph6::decode_graph6;
use cyclex_core::lemmas::{run_fixture_corpus, FixtureAnnotation};

fn main() {
    let g6 = std::fs::read_to_string("crates/core/tests/data/lemma_fixtures.g6").unwrap();
    let ann: Vec<FixtureAnnotation> = serde_json::from_str(
        &std::fs::read_to_string("crates/core/tests/data/lemma_fixtures.json").unwrap(),
    )
    .unwrap();
    let graphs: Vec<(String, cyclex_core::graph::Graph)> = g6
        .lines()
        .zip(ann.iter())
        .map(|(line, a)| (a.name.clone(), decode_graph6(line).unwrap()))
        .collect();
    let t = std::time::Instant::now();
    let mut ctx = SearchCtx::with_budget(4_000_000_000);
    let (report, errors) = run_fixture_corpus(&graphs, &ann, &mut ctx).unwrap();
    println!("exercised: {:?}", report.exercised);
    println!("violations: {}", report.violations.len());
    for v in report.violations.iter().take(5) {
        println!("  {v}");
    }
    println!("annotation errors: {errors:?}");
    println!("took {:?}", t.elapsed());
}
