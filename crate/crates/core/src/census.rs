//! Small-graph census machinery: canonical labelling (color refinement plus
//! individualization with full backtracking) and vertex-augmentation
//! enumeration of all graphs up to isomorphism, optionally filtered by a
//! connectivity floor level by level. Census output feeds the exhaustive
//! verification sweeps; the check/hunt commands themselves only consume
//! externally supplied graph6 streams.

use crate::graph::Graph;
use crate::graph6::encode_graph6;
use crate::invariants::connectivity;
use rayon::prelude::*;
use std::collections::HashSet;

/// Known graph counts up to isomorphism for n = 0..=8; the census asserts
/// against these.
pub const GRAPH_COUNTS: [u64; 9] = [1, 1, 2, 4, 11, 34, 156, 1044, 12346];

/// Canonically relabelled adjacency rows: the lexicographically least row
/// vector over all labelings compatible with iterated refinement.
pub fn canonical_form(g: &Graph) -> Vec<u64> {
    let n = g.n();
    if n == 0 {
        return Vec::new();
    }
    let mut best: Option<Vec<u64>> = None;
    let cells: Vec<Vec<u8>> = vec![(0..n as u8).collect()];
    canon_search(g, cells, &mut best);
    best.unwrap()
}

fn canon_search(g: &Graph, mut cells: Vec<Vec<u8>>, best: &mut Option<Vec<u64>>) {
    refine(g, &mut cells);
    if let Some(cell_idx) = cells.iter().position(|c| c.len() > 1) {
        let targets = cells[cell_idx].clone();
        for v in targets {
            let mut child = cells.clone();
            let rest: Vec<u8> = child[cell_idx].iter().copied().filter(|&u| u != v).collect();
            child[cell_idx] = vec![v];
            child.insert(cell_idx + 1, rest);
            canon_search(g, child, best);
        }
        return;
    }
    // Discrete partition: read the labeling and encode.
    let n = g.n();
    let mut label = vec![0usize; n];
    for (pos, cell) in cells.iter().enumerate() {
        label[cell[0] as usize] = pos;
    }
    let mut rows = vec![0u64; n];
    for v in 0..n {
        for w in g.neighbors(v).iter() {
            rows[label[v]] |= 1u64 << label[w];
        }
    }
    match best {
        None => *best = Some(rows),
        Some(b) => {
            if rows < *b {
                *best = Some(rows);
            }
        }
    }
}

/// Equitable refinement of an ordered partition: repeatedly split cells by
/// neighbor counts into every current cell, keeping a deterministic order.
fn refine(g: &Graph, cells: &mut Vec<Vec<u8>>) {
    loop {
        let mut changed = false;
        'splitters: for s_idx in 0..cells.len() {
            let splitter = cells[s_idx]
                .iter()
                .fold(0u64, |m, &v| m | 1u64 << v);
            for c_idx in 0..cells.len() {
                if cells[c_idx].len() == 1 {
                    continue;
                }
                let mut groups: Vec<(u32, Vec<u8>)> = Vec::new();
                for &v in &cells[c_idx] {
                    let cnt = (g.neighbors(v as usize).0 & splitter).count_ones();
                    match groups.iter_mut().find(|(c, _)| *c == cnt) {
                        Some((_, vs)) => vs.push(v),
                        None => groups.push((cnt, Vec::from([v]))),
                    }
                }
                if groups.len() > 1 {
                    groups.sort_by_key(|(c, _)| *c);
                    let replacement: Vec<Vec<u8>> = groups.into_iter().map(|(_, vs)| vs).collect();
                    cells.splice(c_idx..=c_idx, replacement);
                    changed = true;
                    break 'splitters;
                }
            }
        }
        if !changed {
            return;
        }
    }
}

/// The canonically labelled copy of `g`.
pub fn canonical_graph(g: &Graph) -> Graph {
    let rows = canonical_form(g);
    let mut edges = Vec::new();
    for (v, &row) in rows.iter().enumerate() {
        let mut bits = row;
        while bits != 0 {
            let w = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            if w > v {
                edges.push((v, w));
            }
        }
    }
    Graph::from_edges(rows.len(), &edges).unwrap()
}

/// graph6 of the canonical labelling; equal strings iff isomorphic graphs.
pub fn canonical_g6(g: &Graph) -> String {
    encode_graph6(&canonical_graph(g)).unwrap()
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n() && canonical_form(a) == canonical_form(b)
}

/// All graphs on exactly `n` vertices up to isomorphism, canonically
/// labelled, in a deterministic order. Vertex augmentation with canonical
/// dedup; practical to n = 8 (the count is asserted against the known
/// census sizes). The two expensive levels are cached process-wide.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= 8, "full census capped at n = 8; use kappa_census beyond");
    static CACHE7: std::sync::OnceLock<Vec<Graph>> = std::sync::OnceLock::new();
    static CACHE8: std::sync::OnceLock<Vec<Graph>> = std::sync::OnceLock::new();
    match n {
        7 => CACHE7.get_or_init(|| compute_census(7)).clone(),
        8 => CACHE8.get_or_init(|| compute_census(8)).clone(),
        _ => compute_census(n),
    }
}

fn compute_census(n: usize) -> Vec<Graph> {
    let mut level: Vec<Graph> = vec![Graph::empty(0).unwrap()];
    for k in 0..n {
        level = augment_level(&level, k, 0);
        debug_assert_eq!(level.len() as u64, GRAPH_COUNTS[k + 1]);
    }
    level
}

/// All graphs on `n` vertices with connectivity at least `kappa_min`, up to
/// isomorphism. Uses the fact that deleting a vertex lowers connectivity by
/// at most one: level k of the tower only needs graphs with connectivity at
/// least kappa_min - (n - k).
pub fn kappa_census(n: usize, kappa_min: usize) -> Vec<Graph> {
    if n <= 8 && (kappa_min == 0 || n <= 7) {
        let all = all_graphs(n);
        return filter_kappa(all, kappa_min);
    }
    if n <= 8 {
        return filter_kappa(all_graphs(n), kappa_min);
    }
    let parents = kappa_census(n - 1, kappa_min.saturating_sub(1));
    let children = augment_level(&parents, n - 1, kappa_min);
    filter_kappa(children, kappa_min)
}

fn filter_kappa(graphs: Vec<Graph>, kappa_min: usize) -> Vec<Graph> {
    if kappa_min == 0 {
        return graphs;
    }
    graphs
        .into_par_iter()
        .filter(|g| connectivity(g).unwrap() >= kappa_min)
        .collect()
}

/// Extend every parent by one vertex adjacent to each subset of the parent
/// (subsets smaller than `min_new_degree` skipped), dedupe canonically.
fn augment_level(parents: &[Graph], k: usize, min_new_degree: usize) -> Vec<Graph> {
    let forms: HashSet<Vec<u64>> = parents
        .par_iter()
        .flat_map_iter(|p| {
            (0u64..1u64 << k).filter_map(move |mask| {
                if (mask.count_ones() as usize) < min_new_degree {
                    return None;
                }
                let mut edges = p.edges();
                for v in 0..k {
                    if mask >> v & 1 == 1 {
                        edges.push((v, k));
                    }
                }
                let child = Graph::from_edges(k + 1, &edges).unwrap();
                Some(canonical_form(&child))
            })
        })
        .collect();
    let mut sorted: Vec<Vec<u64>> = forms.into_iter().collect();
    sorted.sort();
    sorted
        .into_iter()
        .map(|rows| {
            let mut edges = Vec::new();
            for (v, &row) in rows.iter().enumerate() {
                let mut bits = row;
                while bits != 0 {
                    let w = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    if w > v {
                        edges.push((v, w));
                    }
                }
            }
            Graph::from_edges(rows.len(), &edges).unwrap()
        })
        .collect()
}
