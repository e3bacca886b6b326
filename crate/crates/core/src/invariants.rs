//! Exact graph invariants: minimum degree, vertex connectivity (max-flow
//! over the vertex-split network), independence number (branch and bound
//! with a greedy clique-cover bound), and enumeration of every minimum
//! cut-set, which fragment analysis needs in full.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use serde::{Deserialize, Serialize};

/// The invariant bundle reported per graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantRecord {
    pub n: usize,
    pub delta: usize,
    pub kappa: usize,
    pub alpha: usize,
    pub edge_count: usize,
}

pub fn invariant_record(g: &Graph) -> Result<InvariantRecord> {
    Ok(InvariantRecord {
        n: g.n(),
        delta: min_degree(g)?,
        kappa: connectivity(g)?,
        alpha: independence_number(g)?.0,
        edge_count: g.edge_count(),
    })
}

pub fn min_degree(g: &Graph) -> Result<usize> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    Ok((0..g.n()).map(|v| g.degree(v)).min().unwrap())
}

/// Vertex connectivity. Conventions: kappa(K_n) = n-1 (so kappa(K_1) = 0)
/// and kappa of a disconnected graph is 0.
pub fn connectivity(g: &Graph) -> Result<usize> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    if g.is_complete() {
        return Ok(g.n() - 1);
    }
    if !g.is_connected() {
        return Ok(0);
    }
    // Menger: kappa = min over non-adjacent pairs of the number of internally
    // vertex-disjoint paths. Each flow computation stops once it matches the
    // best cut found so far.
    let mut best = min_degree(g)?;
    for s in 0..g.n() {
        for t in (s + 1)..g.n() {
            if !g.has_edge(s, t) && best > 0 {
                best = best.min(local_connectivity_capped(g, s, t, best));
            }
        }
    }
    Ok(best)
}

/// Unit-capacity max flow on the vertex-split network: node v becomes
/// v_in = 2v, v_out = 2v+1 with a capacity-1 through arc (s and t unlimited),
/// and each graph edge becomes two high-capacity arcs u_out -> v_in and
/// v_out -> u_in. Augments one unit at a time, giving up once `cap` units
/// are placed.
fn local_connectivity_capped(g: &Graph, s: usize, t: usize, cap: usize) -> usize {
    let mut net = FlowNet::new(2 * g.n());
    let big = g.n() as u32 + 1;
    for v in 0..g.n() {
        let c = if v == s || v == t { big } else { 1 };
        net.arc(2 * v, 2 * v + 1, c);
    }
    for (u, v) in g.edges() {
        net.arc(2 * u + 1, 2 * v, big);
        net.arc(2 * v + 1, 2 * u, big);
    }
    net.max_flow(2 * s + 1, 2 * t, cap as u32) as usize
}

/// Minimal residual-graph max flow. Arc i and its reverse i^1 are adjacent
/// in `head`/`residual`; the tail of arc i is `head[i ^ 1]`.
struct FlowNet {
    out: Vec<Vec<usize>>,
    head: Vec<usize>,
    residual: Vec<u32>,
}

impl FlowNet {
    fn new(nodes: usize) -> Self {
        FlowNet { out: vec![Vec::new(); nodes], head: Vec::new(), residual: Vec::new() }
    }

    fn arc(&mut self, from: usize, to: usize, cap: u32) {
        let i = self.residual.len();
        self.out[from].push(i);
        self.out[to].push(i + 1);
        self.head.push(to);
        self.head.push(from);
        self.residual.push(cap);
        self.residual.push(0);
    }

    fn max_flow(&mut self, source: usize, sink: usize, limit: u32) -> u32 {
        let mut flow = 0;
        while flow < limit {
            let mut pred: Vec<Option<usize>> = vec![None; self.out.len()];
            let mut queue = std::collections::VecDeque::new();
            queue.push_back(source);
            'bfs: while let Some(v) = queue.pop_front() {
                for &arc in &self.out[v] {
                    let to = self.head[arc];
                    if self.residual[arc] > 0 && pred[to].is_none() && to != source {
                        pred[to] = Some(arc);
                        if to == sink {
                            break 'bfs;
                        }
                        queue.push_back(to);
                    }
                }
            }
            if pred[sink].is_none() {
                break;
            }
            let mut v = sink;
            while v != source {
                let arc = pred[v].unwrap();
                self.residual[arc] -= 1;
                self.residual[arc ^ 1] += 1;
                v = self.head[arc ^ 1];
            }
            flow += 1;
        }
        flow
    }
}

/// Exhaustive reference connectivity: the smallest k such that some k-subset
/// disconnects the graph, with the complete-graph convention n-1. Exponential;
/// for cross-checking on small graphs only.
pub fn oracle_connectivity(g: &Graph) -> Result<usize> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    if !g.is_connected() {
        return Ok(0);
    }
    let n = g.n();
    for k in 1..n.saturating_sub(1) {
        for s in subsets_of_size(n, k) {
            let rest = g.vertices().minus(s);
            if !rest.is_empty() && !g.is_connected_within(rest) {
                return Ok(k);
            }
        }
    }
    Ok(n - 1)
}

/// All subsets of {0..n} of size k, ascending as bit patterns (Gosper's hack).
pub fn subsets_of_size(n: usize, k: usize) -> impl Iterator<Item = VertexSet> {
    assert!(n <= 63, "subset enumeration needs headroom in u64");
    let limit = 1u64 << n;
    let mut cur = if k > n { limit } else if k == 0 { 0 } else { (1u64 << k) - 1 };
    let mut emitted_empty = false;
    std::iter::from_fn(move || {
        if k == 0 {
            if emitted_empty {
                return None;
            }
            emitted_empty = true;
            return Some(VertexSet(0));
        }
        if cur >= limit {
            return None;
        }
        let out = cur;
        let c = cur & cur.wrapping_neg();
        let r = cur + c;
        cur = (((r ^ cur) >> 2) / c) | r;
        Some(VertexSet(out))
    })
}

/// Maximum independent set: size plus one witness.
pub fn independence_number(g: &Graph) -> Result<(usize, VertexSet)> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut best = VertexSet::EMPTY;
    let mut best_size = 0;
    let mut chosen = VertexSet::EMPTY;
    mis_search(g, g.vertices(), &mut chosen, &mut best, &mut best_size);
    Ok((best_size, best))
}

fn mis_search(
    g: &Graph,
    candidates: VertexSet,
    chosen: &mut VertexSet,
    best: &mut VertexSet,
    best_size: &mut usize,
) {
    if chosen.len() > *best_size {
        *best_size = chosen.len();
        *best = *chosen;
    }
    if candidates.is_empty() {
        return;
    }
    if chosen.len() + clique_cover_bound(g, candidates) <= *best_size {
        return;
    }
    let v = candidates
        .iter()
        .max_by_key(|&v| g.neighbors(v).intersect(candidates).len())
        .unwrap();
    let mut with_v = candidates.minus(g.neighbors(v));
    with_v.remove(v);
    chosen.insert(v);
    mis_search(g, with_v, chosen, best, best_size);
    chosen.remove(v);
    let mut without = candidates;
    without.remove(v);
    mis_search(g, without, chosen, best, best_size);
}

/// Greedy clique cover of `set`; the number of cliques bounds alpha(set).
fn clique_cover_bound(g: &Graph, set: VertexSet) -> usize {
    let mut rest = set;
    let mut cliques = 0;
    while let Some(v) = rest.smallest() {
        let mut common = g.neighbors(v).intersect(rest);
        let mut clique = VertexSet::singleton(v);
        while let Some(u) = common.smallest() {
            clique.insert(u);
            common = common.intersect(g.neighbors(u));
        }
        rest = rest.minus(clique);
        cliques += 1;
    }
    cliques
}

/// Exhaustive reference for the independence number (subset enumeration).
pub fn oracle_independence_number(g: &Graph) -> Result<usize> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    assert!(g.n() <= 24, "oracle independence number limited to n <= 24");
    let mut best = 0;
    for mask in 0..1u64 << g.n() {
        let s = VertexSet(mask);
        if s.len() > best && g.is_independent(s) {
            best = s.len();
        }
    }
    Ok(best)
}

/// Every vertex set of size kappa whose removal disconnects the graph, in
/// ascending bitset order. Requires a connected, non-complete graph.
pub fn minimum_cutsets(g: &Graph) -> Result<Vec<VertexSet>> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    if g.is_complete() {
        return Err(Error::CompleteGraph);
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let kappa = connectivity(g)?;
    let mut out = Vec::new();
    for s in subsets_of_size(g.n(), kappa) {
        let rest = g.vertices().minus(s);
        if !rest.is_empty() && !g.is_connected_within(rest) {
            out.push(s);
        }
    }
    out.sort();
    Ok(out)
}

/// N(X) together with hat(X) = V - (X u N(X)).
pub fn neighborhood_and_hat(g: &Graph, x: VertexSet) -> Result<(VertexSet, VertexSet)> {
    if !x.is_subset_of(g.vertices()) {
        let v = x.minus(g.vertices()).smallest().unwrap();
        return Err(Error::VertexOutOfRange { v, n: g.n() });
    }
    let nb = g.neighborhood_of_set(x);
    let hat = g.vertices().minus(x.union(nb));
    Ok((nb, hat))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::m_ka_plus_kb;

    fn random_graph(n: usize, state: &mut u64, density_shift: u32) -> Graph {
        let mut edges = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                *state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                if *state >> density_shift & 1 == 1 {
                    edges.push((i, j));
                }
            }
        }
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn min_degree_cases() {
        assert_eq!(min_degree(&Graph::complete(1).unwrap()).unwrap(), 0);
        assert_eq!(min_degree(&m_ka_plus_kb(4, 2, 3).unwrap()).unwrap(), 4);
        // Degree-scan oracle for the Petersen graph.
        let p = Graph::petersen();
        let scan = (0..p.n()).map(|v| p.degree(v)).min().unwrap();
        assert_eq!(scan, 3);
        assert_eq!(min_degree(&p).unwrap(), 3);
        assert_eq!(min_degree(&Graph::empty(0).unwrap()), Err(Error::EmptyGraph));
    }

    #[test]
    fn connectivity_conventions() {
        assert_eq!(connectivity(&Graph::complete(5).unwrap()).unwrap(), 4);
        assert_eq!(connectivity(&Graph::complete(1).unwrap()).unwrap(), 0);
        assert_eq!(connectivity(&Graph::cycle(6).unwrap()).unwrap(), 2);
        assert_eq!(connectivity(&Graph::empty(3).unwrap()).unwrap(), 0);
        assert_eq!(connectivity(&m_ka_plus_kb(4, 2, 3).unwrap()).unwrap(), 3);
        assert_eq!(connectivity(&Graph::petersen()).unwrap(), 3);
        assert_eq!(connectivity(&Graph::complete_bipartite(3, 3).unwrap()).unwrap(), 3);
    }

    #[test]
    fn connectivity_matches_oracle_on_randoms() {
        let mut state = 0x9e3779b97f4a7c15u64;
        for trial in 0..600u64 {
            let n = 2 + (trial % 7) as usize;
            let g = random_graph(n, &mut state, 62);
            assert_eq!(
                connectivity(&g).unwrap(),
                oracle_connectivity(&g).unwrap(),
                "mismatch on {g:?}"
            );
        }
    }

    #[test]
    fn connectivity_matches_oracle_on_full_census() {
        // Every graph on up to 8 vertices, up to isomorphism: the max-flow
        // computation agrees with exhaustive subset-removal, and every
        // reported minimum cut-set has size kappa while nothing smaller
        // disconnects.
        use rayon::prelude::*;
        for n in 1..=8 {
            crate::census::all_graphs(n).par_iter().for_each(|g| {
                let kappa = connectivity(g).unwrap();
                assert_eq!(kappa, oracle_connectivity(g).unwrap(), "{g:?}");
                if g.is_connected() && !g.is_complete() {
                    let cuts = minimum_cutsets(g).unwrap();
                    assert!(!cuts.is_empty());
                    for s in &cuts {
                        assert_eq!(s.len(), kappa);
                        assert!(!g.is_connected_within(g.vertices().minus(*s)));
                    }
                }
            });
        }
    }

    #[test]
    fn kappa_at_most_delta_on_connected() {
        for g in [
            Graph::petersen(),
            Graph::cycle(6).unwrap(),
            m_ka_plus_kb(4, 2, 3).unwrap(),
            m_ka_plus_kb(5, 2, 4).unwrap(),
            crate::graph::construct_h(1, 3, 5, 4).unwrap(),
        ] {
            assert!(connectivity(&g).unwrap() <= min_degree(&g).unwrap());
        }
    }

    #[test]
    fn independence_cases() {
        assert_eq!(independence_number(&Graph::cycle(5).unwrap()).unwrap().0, 2);
        assert_eq!(independence_number(&Graph::complete_bipartite(3, 3).unwrap()).unwrap().0, 3);
        let g = m_ka_plus_kb(4, 2, 3).unwrap();
        assert_eq!(independence_number(&g).unwrap().0, 4);
        assert_eq!(oracle_independence_number(&g).unwrap(), 4);
        let (a, witness) = independence_number(&Graph::petersen()).unwrap();
        assert_eq!(a, 4);
        assert_eq!(witness.len(), 4);
        assert!(Graph::petersen().is_independent(witness));
    }

    #[test]
    fn independence_matches_oracle_on_randoms() {
        let mut state = 0xdeadbeefcafef00du64;
        for trial in 0..300u64 {
            let n = 1 + (trial % 9) as usize;
            let g = random_graph(n, &mut state, 62);
            assert_eq!(
                independence_number(&g).unwrap().0,
                oracle_independence_number(&g).unwrap()
            );
        }
    }

    #[test]
    fn minimum_cutsets_cases() {
        let c4 = Graph::cycle(4).unwrap();
        assert_eq!(
            minimum_cutsets(&c4).unwrap(),
            vec![VertexSet::from_iter([0, 2]), VertexSet::from_iter([1, 3])]
        );

        let g = m_ka_plus_kb(4, 2, 3).unwrap();
        assert_eq!(minimum_cutsets(&g).unwrap(), vec![VertexSet::from_iter([8, 9, 10])]);

        assert_eq!(minimum_cutsets(&Graph::complete(4).unwrap()), Err(Error::CompleteGraph));
        assert_eq!(minimum_cutsets(&Graph::empty(3).unwrap()), Err(Error::Disconnected));
    }

    #[test]
    fn cutset_members_have_size_kappa_and_disconnect() {
        for g in [Graph::petersen(), Graph::cycle(6).unwrap(), m_ka_plus_kb(4, 2, 3).unwrap()] {
            let kappa = connectivity(&g).unwrap();
            for s in minimum_cutsets(&g).unwrap() {
                assert_eq!(s.len(), kappa);
                assert!(!g.is_connected_within(g.vertices().minus(s)));
            }
        }
    }

    #[test]
    fn no_smaller_cut_exists_small_graphs() {
        let mut state = 7u64;
        for trial in 0..120u64 {
            let n = 3 + (trial % 6) as usize;
            let g = random_graph(n, &mut state, 61);
            if !g.is_connected() || g.is_complete() {
                continue;
            }
            let kappa = connectivity(&g).unwrap();
            for k in 0..kappa {
                for s in subsets_of_size(g.n(), k) {
                    let rest = g.vertices().minus(s);
                    assert!(
                        rest.is_empty() || g.is_connected_within(rest),
                        "cut smaller than kappa found"
                    );
                }
            }
        }
    }

    #[test]
    fn neighborhood_and_hat_cases() {
        let c6 = Graph::cycle(6).unwrap();
        let (nb, hat) = neighborhood_and_hat(&c6, VertexSet::from_iter([2, 3])).unwrap();
        assert_eq!(nb, VertexSet::from_iter([1, 4]));
        assert_eq!(hat, VertexSet::from_iter([0, 5]));

        let (nb, hat) = neighborhood_and_hat(&c6, c6.vertices()).unwrap();
        assert!(nb.is_empty());
        assert!(hat.is_empty());

        let g = m_ka_plus_kb(4, 2, 3).unwrap();
        let pair = VertexSet::from_iter([0, 1]);
        let (nb, hat) = neighborhood_and_hat(&g, pair).unwrap();
        assert_eq!(nb, VertexSet::from_iter([8, 9, 10]));
        assert_eq!(hat, VertexSet::from_iter([2, 3, 4, 5, 6, 7]));
    }

    #[test]
    fn subsets_of_size_enumerates_all() {
        assert_eq!(subsets_of_size(5, 2).count(), 10);
        assert_eq!(subsets_of_size(6, 0).collect::<Vec<_>>(), vec![VertexSet::EMPTY]);
        assert_eq!(subsets_of_size(4, 4).collect::<Vec<_>>(), vec![VertexSet::full(4)]);
        assert_eq!(subsets_of_size(3, 4).count(), 0);
    }
}
