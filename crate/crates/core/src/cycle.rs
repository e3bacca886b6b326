//! Exact cycle machinery: branch-and-bound circumference, Hamilton cycles,
//! dominating cycles (degenerate 1- and 2-cycles included), longest paths
//! between vertex pairs, and the naive enumeration oracles the fast searches
//! are checked against.

use crate::budget::SearchCtx;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use serde::{Deserialize, Serialize};

/// An oriented cycle as its vertex sequence with implicit wraparound.
///
/// Proper cycles have at least 3 distinct vertices with consecutive ones
/// adjacent. A single vertex and a single edge are admitted as degenerate
/// cycles of lengths 1 and 2 respectively.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleSeq {
    vertices: Vec<usize>,
}

impl CycleSeq {
    pub fn new(g: &Graph, vertices: Vec<usize>) -> Self {
        assert!(!vertices.is_empty());
        let mut seen = VertexSet::EMPTY;
        for &v in &vertices {
            assert!(v < g.n(), "vertex off graph");
            assert!(!seen.contains(v), "repeated vertex on cycle");
            seen.insert(v);
        }
        if vertices.len() >= 3 {
            for i in 0..vertices.len() {
                let u = vertices[i];
                let v = vertices[(i + 1) % vertices.len()];
                assert!(g.has_edge(u, v), "non-adjacent consecutive cycle vertices");
            }
        } else if vertices.len() == 2 {
            assert!(g.has_edge(vertices[0], vertices[1]));
        }
        CycleSeq { vertices }
    }

    /// Length |Q| = |E(Q)|; by convention a vertex counts 1 and an edge 2.
    pub fn length(&self) -> usize {
        match self.vertices.len() {
            1 => 1,
            2 => 2,
            k => k,
        }
    }

    pub fn is_degenerate(&self) -> bool {
        self.vertices.len() < 3
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::from_iter(self.vertices.iter().copied())
    }

    /// Rotate/reflect to the lexicographically least sequence starting at the
    /// smallest vertex. Ties among witnesses resolve through this form.
    pub fn canonicalize(&mut self) {
        if self.vertices.len() < 3 {
            self.vertices.sort_unstable();
            return;
        }
        let k = self.vertices.len();
        let pos = (0..k).min_by_key(|&i| self.vertices[i]).unwrap();
        let forward: Vec<usize> = (0..k).map(|i| self.vertices[(pos + i) % k]).collect();
        let backward: Vec<usize> = (0..k).map(|i| self.vertices[(pos + k - i) % k]).collect();
        self.vertices = forward.min(backward);
    }

    /// Arc length from x to y along the orientation (0 when x == y), or None
    /// if either vertex is off the cycle.
    pub fn arc_len(&self, x: usize, y: usize) -> Option<usize> {
        let k = self.vertices.len();
        let px = self.vertices.iter().position(|&v| v == x)?;
        let py = self.vertices.iter().position(|&v| v == y)?;
        Some((py + k - px) % k)
    }
}

/// A simple path as its vertex sequence. F(P) is the first vertex, L(P) the
/// last.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathSeq {
    vertices: Vec<usize>,
}

impl PathSeq {
    pub fn new(g: &Graph, vertices: Vec<usize>) -> Self {
        assert!(!vertices.is_empty());
        let mut seen = VertexSet::EMPTY;
        for &v in &vertices {
            assert!(v < g.n());
            assert!(!seen.contains(v), "repeated vertex on path");
            seen.insert(v);
        }
        for w in vertices.windows(2) {
            assert!(g.has_edge(w[0], w[1]), "non-adjacent consecutive path vertices");
        }
        PathSeq { vertices }
    }

    pub fn first(&self) -> usize {
        self.vertices[0]
    }

    pub fn last(&self) -> usize {
        *self.vertices.last().unwrap()
    }

    /// Edge count.
    pub fn length(&self) -> usize {
        self.vertices.len() - 1
    }

    /// Vertex count.
    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::from_iter(self.vertices.iter().copied())
    }

    /// Direction-independent form: the lexicographically smaller of the
    /// sequence and its reverse.
    pub fn canonical(&self) -> Vec<usize> {
        let mut rev = self.vertices.clone();
        rev.reverse();
        self.vertices.clone().min(rev)
    }
}

/// Longest proper cycle length (>= 3) with one witness, or (0, None) on
/// acyclic graphs. Degenerate 1-/2-cycles deliberately do not count here:
/// the circumference feeds length comparisons that they would trivialize.
pub fn circumference(g: &Graph, ctx: &mut SearchCtx) -> Result<(usize, Option<CycleSeq>)> {
    let mut best: Vec<usize> = Vec::new();
    // Anchor each search at the smallest vertex of the sought cycle; only
    // larger vertices extend, so each cycle is seen from one anchor only.
    for anchor in 0..g.n() {
        let avail = VertexSet(g.vertices().0 & !((1u64 << anchor) - 1))
            .minus(VertexSet::singleton(anchor));
        let mut path = vec![anchor];
        longest_cycle_dfs(g, anchor, avail, &mut path, &mut best, ctx)?;
    }
    if best.is_empty() {
        Ok((0, None))
    } else {
        let mut cyc = CycleSeq::new(g, best);
        cyc.canonicalize();
        Ok((cyc.length(), Some(cyc)))
    }
}

fn longest_cycle_dfs(
    g: &Graph,
    anchor: usize,
    avail: VertexSet,
    path: &mut Vec<usize>,
    best: &mut Vec<usize>,
    ctx: &mut SearchCtx,
) -> Result<()> {
    ctx.tick()?;
    let cur = *path.last().unwrap();
    if path.len() >= 3 && g.has_edge(cur, anchor) {
        if path.len() > best.len() {
            *best = path.clone();
        } else if path.len() == best.len() {
            let mut cand = CycleSeq::new(g, path.clone());
            cand.canonicalize();
            let mut incumbent = CycleSeq::new(g, best.clone());
            incumbent.canonicalize();
            if cand.vertices() < incumbent.vertices() {
                *best = cand.vertices().to_vec();
            }
        }
    }
    // Bound: the path can only grow into vertices reachable from the current
    // endpoint through available vertices, and must return to the anchor.
    let reach = g
        .reachable_within(cur, avail.union(VertexSet::singleton(cur)))
        .minus(VertexSet::singleton(cur));
    if path.len() + reach.len() < best.len().max(3).max(path.len() + 1) {
        return Ok(());
    }
    if !reach.iter().any(|v| g.has_edge(v, anchor)) && !(path.len() >= 3 && g.has_edge(cur, anchor))
    {
        return Ok(());
    }
    for v in g.neighbors(cur).intersect(avail).iter() {
        path.push(v);
        longest_cycle_dfs(g, anchor, avail.minus(VertexSet::singleton(v)), path, best, ctx)?;
        path.pop();
    }
    Ok(())
}

/// Naive circumference: enumerate every simple cycle by DFS with no pruning
/// beyond the smallest-vertex anchor. The reference the fast search is
/// checked against.
pub fn oracle_circumference(g: &Graph) -> usize {
    fn dfs(g: &Graph, anchor: usize, avail: VertexSet, path: &mut Vec<usize>, best: &mut usize) {
        let cur = *path.last().unwrap();
        if path.len() >= 3 && g.has_edge(cur, anchor) && path.len() > *best {
            *best = path.len();
        }
        for v in g.neighbors(cur).intersect(avail).iter() {
            path.push(v);
            dfs(g, anchor, avail.minus(VertexSet::singleton(v)), path, best);
            path.pop();
        }
    }
    let mut best = 0;
    for anchor in 0..g.n() {
        let avail = VertexSet(g.vertices().0 & !((1u64 << anchor) - 1))
            .minus(VertexSet::singleton(anchor));
        dfs(g, anchor, avail, &mut vec![anchor], &mut best);
    }
    best
}

/// Does the graph have a spanning proper cycle? Requires n >= 3 to be true.
pub fn has_hamilton_cycle(g: &Graph, ctx: &mut SearchCtx) -> Result<(bool, Option<CycleSeq>)> {
    if g.n() < 3 {
        return Ok((false, None));
    }
    let delta = (0..g.n()).map(|v| g.degree(v)).min().unwrap();
    if delta < 2 || !g.is_connected() {
        return Ok((false, None));
    }
    let mut path = vec![0];
    let avail = g.vertices().minus(VertexSet::singleton(0));
    if let Some(cycle) = hamilton_dfs(g, avail, &mut path, ctx)? {
        let mut cyc = CycleSeq::new(g, cycle);
        cyc.canonicalize();
        Ok((true, Some(cyc)))
    } else {
        Ok((false, None))
    }
}

fn hamilton_dfs(
    g: &Graph,
    avail: VertexSet,
    path: &mut Vec<usize>,
    ctx: &mut SearchCtx,
) -> Result<Option<Vec<usize>>> {
    ctx.tick()?;
    let cur = *path.last().unwrap();
    if avail.is_empty() {
        if g.has_edge(cur, path[0]) {
            return Ok(Some(path.clone()));
        }
        return Ok(None);
    }
    if !g.is_connected_within(avail.union(VertexSet::singleton(cur))) {
        return Ok(None);
    }
    for v in g.neighbors(cur).intersect(avail).iter() {
        path.push(v);
        if let Some(found) = hamilton_dfs(g, avail.minus(VertexSet::singleton(v)), path, ctx)? {
            return Ok(Some(found));
        }
        path.pop();
    }
    Ok(None)
}

/// Search for a dominating cycle: a cycle C (degenerate forms allowed) with
/// V(G) - V(C) independent.
///
/// The complement of a dominating cycle extends to a maximal independent
/// set, so it suffices to iterate maximal independent sets I (ascending by
/// size, then bits) and look for any cycle through all of V - I, optionally
/// picking up vertices of I. Any cycle containing V - I works: its
/// complement is a subset of I, hence independent.
pub fn find_dominating_cycle(g: &Graph, ctx: &mut SearchCtx) -> Result<Option<CycleSeq>> {
    if g.n() == 0 {
        return Ok(None);
    }
    let mut maximal: Vec<VertexSet> = Vec::new();
    bron_kerbosch(g, VertexSet::EMPTY, g.vertices(), VertexSet::EMPTY, &mut maximal);
    maximal.sort_by_key(|s| (s.len(), s.0));
    for ind in maximal {
        let must = g.vertices().minus(ind);
        if let Some(cyc) = cycle_through(g, must, ctx)? {
            debug_assert!(dominating_witness_ok(g, &cyc));
            return Ok(Some(cyc));
        }
    }
    Ok(None)
}

/// Maximal independent sets of g = maximal cliques of the complement,
/// enumerated Bron-Kerbosch style with pivoting.
fn bron_kerbosch(g: &Graph, r: VertexSet, p: VertexSet, x: VertexSet, out: &mut Vec<VertexSet>) {
    if p.is_empty() && x.is_empty() {
        out.push(r);
        return;
    }
    // Non-neighbors in the complement sense: co_adj(v) = V - N(v) - {v}.
    let co_adj = |v: usize| {
        g.vertices()
            .minus(g.neighbors(v))
            .minus(VertexSet::singleton(v))
    };
    let pivot = p.union(x).iter().max_by_key(|&v| co_adj(v).intersect(p).len()).unwrap();
    let mut candidates = p.minus(co_adj(pivot));
    let mut p = p;
    let mut x = x;
    while let Some(v) = candidates.smallest() {
        candidates.remove(v);
        let cv = co_adj(v);
        bron_kerbosch(
            g,
            r.union(VertexSet::singleton(v)),
            p.intersect(cv),
            x.intersect(cv),
            out,
        );
        p.remove(v);
        x.insert(v);
    }
}

/// Any cycle (degenerate allowed) through every vertex of `must`, possibly
/// using other vertices too. Returns the first one the deterministic search
/// encounters.
pub fn cycle_through(g: &Graph, must: VertexSet, ctx: &mut SearchCtx) -> Result<Option<CycleSeq>> {
    match must.len() {
        0 => {
            // Only reachable when the graph is edgeless (the complement of a
            // maximal independent set is empty only then); any single vertex
            // is a degenerate dominating cycle.
            return Ok(g
                .vertices()
                .smallest()
                .map(|v| CycleSeq::new(g, vec![v])));
        }
        1 => {
            let v = must.smallest().unwrap();
            return Ok(Some(CycleSeq::new(g, vec![v])));
        }
        2 => {
            let vs = must.to_vec();
            if g.has_edge(vs[0], vs[1]) {
                return Ok(Some(CycleSeq::new(g, vs)));
            }
            // fall through to a proper cycle through both
        }
        _ => {}
    }
    let anchor = must.smallest().unwrap();
    let avail = g.vertices().minus(VertexSet::singleton(anchor));
    let mut path = vec![anchor];
    if let Some(found) =
        cycle_through_dfs(g, anchor, must.minus(VertexSet::singleton(anchor)), avail, &mut path, ctx)?
    {
        let mut cyc = CycleSeq::new(g, found);
        cyc.canonicalize();
        return Ok(Some(cyc));
    }
    Ok(None)
}

fn cycle_through_dfs(
    g: &Graph,
    anchor: usize,
    must_left: VertexSet,
    avail: VertexSet,
    path: &mut Vec<usize>,
    ctx: &mut SearchCtx,
) -> Result<Option<Vec<usize>>> {
    ctx.tick()?;
    let cur = *path.last().unwrap();
    if must_left.is_empty() && path.len() >= 3 && g.has_edge(cur, anchor) {
        return Ok(Some(path.clone()));
    }
    // All outstanding required vertices must stay reachable, and the walk
    // must be able to return to the anchor.
    let live = avail.union(VertexSet::singleton(cur));
    let reach = g.reachable_within(cur, live);
    if !must_left.is_subset_of(reach) {
        return Ok(None);
    }
    if !reach.union(VertexSet::singleton(cur)).iter().any(|v| g.has_edge(v, anchor)) {
        return Ok(None);
    }
    for v in g.neighbors(cur).intersect(avail).iter() {
        path.push(v);
        if let Some(found) = cycle_through_dfs(
            g,
            anchor,
            must_left.minus(VertexSet::singleton(v)),
            avail.minus(VertexSet::singleton(v)),
            path,
            ctx,
        )? {
            return Ok(Some(found));
        }
        path.pop();
    }
    Ok(None)
}

/// Re-validate a dominating-cycle witness independently of the search path.
pub fn dominating_witness_ok(g: &Graph, cycle: &CycleSeq) -> bool {
    let on = cycle.vertex_set();
    let off = g.vertices().minus(on);
    if !g.is_independent(off) {
        return false;
    }
    let k = cycle.vertices().len();
    if k == 2 && !g.has_edge(cycle.vertices()[0], cycle.vertices()[1]) {
        return false;
    }
    if k >= 3 {
        for i in 0..k {
            if !g.has_edge(cycle.vertices()[i], cycle.vertices()[(i + 1) % k]) {
                return false;
            }
        }
    }
    true
}

/// Maximum edge-length over simple u-v paths; errors when u and v are not
/// connected.
pub fn longest_path_between(g: &Graph, u: usize, v: usize, ctx: &mut SearchCtx) -> Result<usize> {
    assert_ne!(u, v);
    if u >= g.n() {
        return Err(Error::VertexOutOfRange { v: u, n: g.n() });
    }
    if v >= g.n() {
        return Err(Error::VertexOutOfRange { v, n: g.n() });
    }
    if !g.reachable_within(u, g.vertices()).contains(v) {
        return Err(Error::NoPath { u, v });
    }
    let mut best = 0usize;
    let avail = g.vertices().minus(VertexSet::singleton(u));
    longest_path_dfs(g, v, avail, u, 0, &mut best, ctx)?;
    Ok(best)
}

fn longest_path_dfs(
    g: &Graph,
    target: usize,
    avail: VertexSet,
    cur: usize,
    len: usize,
    best: &mut usize,
    ctx: &mut SearchCtx,
) -> Result<()> {
    ctx.tick()?;
    if cur == target {
        *best = (*best).max(len);
        return Ok(());
    }
    let reach = g.reachable_within(cur, avail.union(VertexSet::singleton(cur)));
    if !reach.contains(target) || len + reach.minus(VertexSet::singleton(cur)).len() <= *best {
        return Ok(());
    }
    for w in g.neighbors(cur).intersect(avail).iter() {
        longest_path_dfs(g, target, avail.minus(VertexSet::singleton(w)), w, len + 1, best, ctx)?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{construct_h, m_ka_plus_kb};

    fn ctx() -> SearchCtx {
        SearchCtx::unlimited()
    }

    #[test]
    fn circumference_cases() {
        assert_eq!(circumference(&Graph::cycle(6).unwrap(), &mut ctx()).unwrap().0, 6);
        let g = m_ka_plus_kb(4, 2, 3).unwrap();
        assert_eq!(oracle_circumference(&g), 9);
        assert_eq!(circumference(&g, &mut ctx()).unwrap().0, 9);
        let g = m_ka_plus_kb(5, 2, 4).unwrap();
        assert_eq!(circumference(&g, &mut ctx()).unwrap().0, 12);
        assert_eq!(circumference(&Graph::path(5).unwrap(), &mut ctx()).unwrap(), (0, None));
        assert_eq!(circumference(&Graph::empty(4).unwrap(), &mut ctx()).unwrap(), (0, None));
    }

    #[test]
    fn circumference_witness_is_valid_cycle() {
        let g = Graph::petersen();
        let (c, w) = circumference(&g, &mut ctx()).unwrap();
        assert_eq!(c, 9);
        let w = w.unwrap();
        assert_eq!(w.length(), 9);
        assert!(!w.is_degenerate());
    }

    #[test]
    fn circumference_matches_oracle_on_randoms() {
        let mut state = 0x5deece66du64;
        for trial in 0..250u64 {
            let n = 3 + (trial % 6) as usize;
            let mut edges = Vec::new();
            for i in 0..n {
                for j in (i + 1)..n {
                    state = state.wrapping_mul(6364136223846793005).wrapping_add(11);
                    if state >> 62 & 1 == 1 {
                        edges.push((i, j));
                    }
                }
            }
            let g = Graph::from_edges(n, &edges).unwrap();
            assert_eq!(
                circumference(&g, &mut ctx()).unwrap().0,
                oracle_circumference(&g),
                "mismatch on {g:?}"
            );
        }
    }

    #[test]
    fn circumference_monotone_under_edge_addition() {
        let mut state = 0xabcdefu64;
        for trial in 0..60u64 {
            let n = 5 + (trial % 3) as usize;
            let mut edges = Vec::new();
            for i in 0..n {
                for j in (i + 1)..n {
                    state = state.wrapping_mul(6364136223846793005).wrapping_add(11);
                    if state >> 62 & 1 == 1 {
                        edges.push((i, j));
                    }
                }
            }
            let g = Graph::from_edges(n, &edges).unwrap();
            let before = circumference(&g, &mut ctx()).unwrap().0;
            'outer: for u in 0..n {
                for v in (u + 1)..n {
                    if !g.has_edge(u, v) {
                        let after = circumference(&g.with_edge(u, v), &mut ctx()).unwrap().0;
                        assert!(after >= before);
                        break 'outer;
                    }
                }
            }
        }
    }

    #[test]
    fn hamilton_cases() {
        assert!(has_hamilton_cycle(&Graph::complete_bipartite(3, 3).unwrap(), &mut ctx())
            .unwrap()
            .0);
        assert!(!has_hamilton_cycle(&Graph::petersen(), &mut ctx()).unwrap().0);
        assert!(!has_hamilton_cycle(&construct_h(1, 3, 5, 4).unwrap(), &mut ctx()).unwrap().0);
        assert!(!has_hamilton_cycle(&Graph::complete(2).unwrap(), &mut ctx()).unwrap().0);
        let (yes, w) = has_hamilton_cycle(&Graph::complete(5).unwrap(), &mut ctx()).unwrap();
        assert!(yes);
        assert_eq!(w.unwrap().length(), 5);
    }

    #[test]
    fn dominating_cases() {
        // Petersen: no Hamilton cycle, but dropping any vertex leaves a
        // hamiltonian 9-vertex subgraph and a singleton complement.
        let p = Graph::petersen();
        let dom = find_dominating_cycle(&p, &mut ctx()).unwrap().unwrap();
        assert_eq!(dom.length(), 9);
        assert!(dominating_witness_ok(&p, &dom));

        let g = m_ka_plus_kb(4, 2, 3).unwrap();
        assert!(find_dominating_cycle(&g, &mut ctx()).unwrap().is_none());

        // Two isolated vertices: a degenerate 1-cycle dominates.
        let g = Graph::empty(2).unwrap();
        let dom = find_dominating_cycle(&g, &mut ctx()).unwrap().unwrap();
        assert!(dom.is_degenerate());
        assert_eq!(dom.length(), 1);
        assert!(dominating_witness_ok(&g, &dom));
    }

    #[test]
    fn hamilton_implies_dominating_witness() {
        for g in [
            Graph::cycle(6).unwrap(),
            Graph::complete(5).unwrap(),
            Graph::complete_bipartite(3, 3).unwrap(),
        ] {
            let (yes, _) = has_hamilton_cycle(&g, &mut ctx()).unwrap();
            assert!(yes);
            let dom = find_dominating_cycle(&g, &mut ctx()).unwrap().unwrap();
            assert!(dominating_witness_ok(&g, &dom));
        }
    }

    #[test]
    fn dominating_matches_naive_on_randoms() {
        // Naive reference: enumerate every independent complement and test
        // its induced subgraph for a spanning cycle (or degenerate form).
        fn naive(g: &Graph) -> bool {
            fn ind_sets(g: &Graph, from: usize, cur: VertexSet, out: &mut Vec<VertexSet>) {
                out.push(cur);
                for v in from..g.n() {
                    if g.neighbors(v).intersect(cur).is_empty() {
                        ind_sets(g, v + 1, cur.union(VertexSet::singleton(v)), out);
                    }
                }
            }
            let mut sets = Vec::new();
            ind_sets(g, 0, VertexSet::EMPTY, &mut sets);
            for comp in sets {
                let w = g.vertices().minus(comp);
                let ok = match w.len() {
                    0 => false,
                    1 => true,
                    2 => {
                        let vs = w.to_vec();
                        g.has_edge(vs[0], vs[1])
                    }
                    _ => {
                        let (sub, _) = g.induced_subgraph(w).unwrap();
                        has_hamilton_cycle(&sub, &mut SearchCtx::unlimited()).unwrap().0
                    }
                };
                if ok {
                    return true;
                }
            }
            false
        }
        let mut state = 0x77aa55cc11u64;
        for trial in 0..200u64 {
            let n = 1 + (trial % 8) as usize;
            let mut edges = Vec::new();
            for i in 0..n {
                for j in (i + 1)..n {
                    state = state.wrapping_mul(6364136223846793005).wrapping_add(13);
                    if state >> 62 & 1 == 1 {
                        edges.push((i, j));
                    }
                }
            }
            let g = Graph::from_edges(n, &edges).unwrap();
            let got = find_dominating_cycle(&g, &mut ctx()).unwrap();
            assert_eq!(got.is_some(), naive(&g), "mismatch on {g:?}");
            if let Some(c) = got {
                assert!(dominating_witness_ok(&g, &c));
            }
        }
    }

    #[test]
    fn longest_path_cases() {
        assert_eq!(longest_path_between(&Graph::path(4).unwrap(), 0, 3, &mut ctx()).unwrap(), 3);
        assert_eq!(longest_path_between(&Graph::cycle(6).unwrap(), 0, 1, &mut ctx()).unwrap(), 5);
        assert_eq!(longest_path_between(&Graph::complete(4).unwrap(), 0, 2, &mut ctx()).unwrap(), 3);
        assert_eq!(
            longest_path_between(&Graph::empty(3).unwrap(), 0, 2, &mut ctx()),
            Err(Error::NoPath { u: 0, v: 2 })
        );
    }

    #[test]
    fn budget_exhaustion_reported() {
        let g = Graph::complete(12).unwrap();
        let mut tight = SearchCtx::with_budget(50);
        assert_eq!(circumference(&g, &mut tight), Err(Error::BudgetExhausted));
    }

    #[test]
    fn cancellation_token_stops_search() {
        let g = Graph::complete(14).unwrap();
        let token = crate::budget::CancelToken::new();
        token.cancel();
        let mut cancelled = SearchCtx::unlimited().with_cancel(token);
        assert_eq!(circumference(&g, &mut cancelled), Err(Error::Cancelled));
    }

    #[test]
    fn arc_len_and_canonical_forms() {
        let g = Graph::cycle(8).unwrap();
        let q = CycleSeq::new(&g, vec![0, 1, 2, 3, 4, 5, 6, 7]);
        assert_eq!(q.arc_len(0, 4), Some(4));
        assert_eq!(q.arc_len(4, 0), Some(4));
        assert_eq!(q.arc_len(2, 1), Some(7));
        assert_eq!(q.arc_len(3, 3), Some(0));

        let mut r = CycleSeq::new(&g, vec![3, 2, 1, 0, 7, 6, 5, 4]);
        r.canonicalize();
        assert_eq!(r.vertices(), &[0, 1, 2, 3, 4, 5, 6, 7]);

        let p = PathSeq::new(&g, vec![3, 2, 1]);
        assert_eq!(p.first(), 3);
        assert_eq!(p.last(), 1);
        assert_eq!(p.length(), 2);
        assert_eq!(p.canonical(), vec![1, 2, 3]);
    }
}
