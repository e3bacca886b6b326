//! Regenerates the annotated lemma fixture corpus under tests/data/.
//! Run after changing fixture constructions; output is deterministic.

use cyclex_core::graph::{m_ka_plus_kb, Graph};
use cyclex_core::graph6::encode_graph6;

fn k45_c8_detour() -> Graph {
    let mut edges = Vec::new();
    for i in 0..8 {
        edges.push((i, (i + 1) % 8));
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
    Graph::from_edges(20, &edges).unwrap()
}

fn path_tie_special() -> Graph {
    let mut edges = vec![
        (0, 1),
        (1, 2),
        (2, 3),
        (3, 4),
        (0, 5),
        (0, 6),
        (1, 5),
        (2, 6),
        (3, 5),
        (4, 5),
        (4, 6),
        (7, 1),
        (7, 3),
    ];
    for y in 8..11 {
        for s in 5..8 {
            edges.push((y, s));
        }
        for x in 11..14 {
            edges.push((y, x));
        }
    }
    Graph::from_edges(14, &edges).unwrap()
}

fn main() {
    let two_triangles = Graph::disjoint_copies(2, &Graph::complete(3).unwrap()).unwrap();
    let c6_p5 = Graph::cycle(6).unwrap().disjoint_union(&Graph::path(5).unwrap()).unwrap();
    let mixed = Graph::disjoint_copies(2, &Graph::complete(2).unwrap())
        .unwrap()
        .disjoint_union(&Graph::empty(2).unwrap())
        .unwrap();
    let fixtures: Vec<(&str, Graph, &[&str])> = vec![
        ("4K2+K3", m_ka_plus_kb(4, 2, 3).unwrap(), &["L5", "L7", "LD", "LF"]),
        ("5K2+K4", m_ka_plus_kb(5, 2, 4).unwrap(), &["L6"]),
        (
            "2K3+K4",
            two_triangles.join(&Graph::complete(4).unwrap()).unwrap(),
            &["L8-d1", "L8-d3", "LD"],
        ),
        ("C6uP5+K3", c6_p5.join(&Graph::complete(3).unwrap()).unwrap(), &["L9-e3"]),
        (
            "2K2u2K1+K3",
            mixed.join(&Graph::complete(3).unwrap()).unwrap(),
            &["L10-f1", "L10-f2", "L7"],
        ),
        ("K45-C8-detour", k45_c8_detour(), &["L9-e1", "L9-e3", "L10-f1"]),
        ("path-tie-special", path_tie_special(), &["L10-f3", "L10-f2", "L7"]),
        ("C6", Graph::cycle(6).unwrap(), &["LE", "L7"]),
    ];

    let mut g6 = String::new();
    let mut ann = String::from("[\n");
    for (i, (name, g, clauses)) in fixtures.iter().enumerate() {
        g6.push_str(&encode_graph6(g).unwrap());
        g6.push('\n');
        let clauses: Vec<String> = clauses.iter().map(|c| format!("\"{c}\"")).collect();
        ann.push_str(&format!(
            "  {{ \"name\": \"{name}\", \"line\": {}, \"expect_clauses\": [{}] }}{}\n",
            i + 1,
            clauses.join(", "),
            if i + 1 == fixtures.len() { "" } else { "," }
        ));
    }
    ann.push_str("]\n");
    std::fs::create_dir_all("crates/core/tests/data").unwrap();
    std::fs::write("crates/core/tests/data/lemma_fixtures.g6", g6).unwrap();
    std::fs::write("crates/core/tests/data/lemma_fixtures.json", ann).unwrap();
    println!("wrote {} fixtures", fixtures.len());
}
