//! Development tool: scan the small-graph census plus designed families for
//! graphs whose lemma-clause hypotheses hold, to pick the annotated fixture
//! corpus. Prints clause -> candidate graphs.

use cyclex_core::budget::SearchCtx;
use cyclex_core::census::all_graphs;
use cyclex_core::graph::{construct_h, m_ka_plus_kb, Graph};
use cyclex_core::graph6::encode_graph6;
use cyclex_core::invariants::connectivity;
use cyclex_core::lemmas::{check_lemmas_on_graph, ALL_LEMMA_CLAUSES};
use rayon::prelude::*;
use std::collections::BTreeMap;

fn designed() -> Vec<(String, Graph)> {
    let mut out: Vec<(String, Graph)> = Vec::new();
    let mut push = |name: &str, g: Graph| out.push((name.to_string(), g));

    for (m, a, b) in [
        (4, 2, 3),
        (5, 2, 4),
        (3, 2, 3),
        (4, 2, 4),
        (3, 3, 3),
        (2, 3, 3),
        (2, 4, 3),
        (3, 1, 3),
        (4, 1, 3),
        (5, 1, 4),
        (4, 1, 4),
        (5, 1, 3),
        (2, 2, 2),
        (3, 2, 2),
        (2, 5, 4),
        (2, 4, 4),
    ] {
        push(&format!("{m}K{a}+K{b}"), m_ka_plus_kb(m, a, b).unwrap());
    }
    for (a, b, t, k) in [(1, 3, 5, 4), (1, 2, 4, 3), (1, 2, 5, 4), (2, 2, 3, 3), (1, 4, 5, 4)] {
        push(&format!("H({a},{b},{t},{k})"), construct_h(a, b, t, k).unwrap());
    }
    // Mixed blocks joined to cliques / independent sets.
    let k2 = Graph::complete(2).unwrap();
    let k1 = Graph::complete(1).unwrap();
    let mixes: Vec<(&str, Graph)> = vec![
        ("2K2u2K1", Graph::disjoint_copies(2, &k2).unwrap().disjoint_union(&Graph::disjoint_copies(2, &k1).unwrap()).unwrap()),
        ("K2uK3", k2.disjoint_union(&Graph::complete(3).unwrap()).unwrap()),
        ("2K3", Graph::disjoint_copies(2, &Graph::complete(3).unwrap()).unwrap()),
        ("C5uP4", Graph::cycle(5).unwrap().disjoint_union(&Graph::path(4).unwrap()).unwrap()),
        ("C6uP5", Graph::cycle(6).unwrap().disjoint_union(&Graph::path(5).unwrap()).unwrap()),
        ("C5uP3", Graph::cycle(5).unwrap().disjoint_union(&Graph::path(3).unwrap()).unwrap()),
        ("P4uP4", Graph::path(4).unwrap().disjoint_union(&Graph::path(4).unwrap()).unwrap()),
        ("C5uC5", Graph::cycle(5).unwrap().disjoint_union(&Graph::cycle(5).unwrap()).unwrap()),
        ("C7uC4", Graph::cycle(7).unwrap().disjoint_union(&Graph::cycle(4).unwrap()).unwrap()),
        ("C8uC4", Graph::cycle(8).unwrap().disjoint_union(&Graph::cycle(4).unwrap()).unwrap()),
        ("K4uK2", Graph::complete(4).unwrap().disjoint_union(&k2).unwrap()),
        ("3K2uK1", Graph::disjoint_copies(3, &k2).unwrap().disjoint_union(&k1).unwrap()),
        ("2K2uK1", Graph::disjoint_copies(2, &k2).unwrap().disjoint_union(&k1).unwrap()),
        ("K3uK2uK1", Graph::complete(3).unwrap().disjoint_union(&k2).unwrap().disjoint_union(&k1).unwrap()),
    ];
    for (bn, blocks) in mixes {
        for kb in 2..=4 {
            if blocks.n() + kb <= 14 {
                push(
                    &format!("({bn})+K{kb}"),
                    blocks.join(&Graph::complete(kb).unwrap()).unwrap(),
                );
            }
        }
        for ib in 3..=4 {
            if blocks.n() + ib <= 14 {
                push(
                    &format!("({bn})+I{ib}"),
                    blocks.join(&Graph::empty(ib).unwrap()).unwrap(),
                );
            }
        }
    }
    // Bipartite up side K_{4,5} whose maximum up-systems tie between
    // covering and omitting the third separator vertex; a C8 down side whose
    // completion detours through the omitted vertex (f = 3).
    {
        let mut edges = Vec::new();
        for i in 0..8 {
            edges.push((i, (i + 1) % 8)); // B = C8
        }
        for s in [8, 9] {
            for b in 0..8 {
                edges.push((s, b));
            }
        }
        edges.push((10, 2));
        edges.push((10, 6));
        for y in 11..15 {
            for s in 8..11 {
                edges.push((y, s));
            }
            for x in 15..20 {
                edges.push((y, x));
            }
        }
        push("K45-C8-detour", Graph::from_edges(20, &edges).unwrap());
    }
    // Complement-of-C8 down block pinned two-per-vertex to a 4-vertex
    // separator, K9 up side: two-path optima with f = 4.
    {
        let mut edges = Vec::new();
        for i in 0..8usize {
            for j in (i + 1)..8 {
                // complement of C8
                if j - i != 1 && j - i != 7 {
                    edges.push((i, j));
                }
            }
        }
        for (p, s) in [(0, 8), (1, 9), (2, 10), (3, 11), (4, 8), (5, 9), (6, 10), (7, 11)] {
            edges.push((p, s));
        }
        for q in 12..21 {
            for s in 8..12 {
                edges.push((q, s));
            }
            for q2 in 12..q {
                edges.push((q2, q));
            }
        }
        push("compC8-K9", Graph::from_edges(21, &edges).unwrap());
    }
    // K5 core with pinned separator attachments and a down clique.
    // p0..p4 = K5, s = 5..8 pinned to p0..p3, b-block joined to all s.
    for bsz in 2..=5 {
        let mut edges = Vec::new();
        for i in 0..5 {
            for j in (i + 1)..5 {
                edges.push((i, j));
            }
        }
        for (s, p) in [(5, 0), (6, 1), (7, 2), (8, 3)] {
            edges.push((s, p));
        }
        for b in 0..bsz {
            for s in 5..9 {
                edges.push((9 + b, s));
            }
            for b2 in 0..b {
                edges.push((9 + b, 9 + b2));
            }
        }
        push(&format!("K5-pinned+B{bsz}"), Graph::from_edges(9 + bsz, &edges).unwrap());
    }
    out
}

fn main() {
    let mut candidates: Vec<(String, Graph)> = designed();
    for n in 4..=8 {
        for (i, g) in all_graphs(n).into_iter().enumerate() {
            if g.is_connected() && !g.is_complete() && connectivity(&g).unwrap() >= 2 {
                candidates.push((format!("census{n}-{i}"), g));
            }
        }
    }
    eprintln!("scanning {} candidates", candidates.len());
    let results: Vec<(String, String, BTreeMap<String, usize>, Vec<String>)> = candidates
        .par_iter()
        .filter_map(|(name, g)| {
            let mut ctx = SearchCtx::with_budget(200_000_000);
            match check_lemmas_on_graph(g, &mut ctx) {
                Ok(report) => Some((
                    name.clone(),
                    encode_graph6(g).unwrap(),
                    report.exercised.clone(),
                    report.violations.clone(),
                )),
                Err(e) => {
                    eprintln!("skip {name}: {e}");
                    None
                }
            }
        })
        .collect();

    let mut by_clause: BTreeMap<&str, Vec<(String, String, usize)>> = BTreeMap::new();
    let mut violations = Vec::new();
    for (name, g6, exercised, viols) in &results {
        for (clause, count) in exercised {
            by_clause
                .entry(ALL_LEMMA_CLAUSES.iter().find(|c| c.name() == clause).unwrap().name())
                .or_default()
                .push((name.clone(), g6.clone(), *count));
        }
        for v in viols {
            violations.push(format!("{name}: {v}"));
        }
    }
    for clause in ALL_LEMMA_CLAUSES {
        match by_clause.get(clause.name()) {
            None => println!("{:8} NO FIXTURE FOUND", clause.name()),
            Some(hits) => {
                let mut hits = hits.clone();
                hits.sort_by_key(|(n, _, _)| (n.starts_with("census"), n.clone()));
                let shown: Vec<String> = hits
                    .iter()
                    .take(6)
                    .map(|(n, g6, c)| format!("{n}[{g6}]x{c}"))
                    .collect();
                println!("{:8} {} hits: {}", clause.name(), hits.len(), shown.join(" "));
            }
        }
    }
    println!("violations: {}", violations.len());
    for v in violations.iter().take(20) {
        println!("  VIOLATION {v}");
    }
}
