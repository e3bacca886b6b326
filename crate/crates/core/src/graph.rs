//! Immutable simple undirected graphs on at most 64 vertices, stored as one
//! adjacency bitset per vertex, plus the combinators used to build the
//! extremal families (join, disjoint copies, the H(a,b,t,kappa) family).

use crate::error::{Error, Result};

/// Hard cap on vertex count: adjacency rows are single `u64` words.
pub const VERTEX_CAP: usize = 64;

/// A set of vertices of some graph, as a bitset over 0..n-1.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn full(n: usize) -> Self {
        debug_assert!(n <= VERTEX_CAP);
        if n == 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersect(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub fn minus(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    #[inline]
    pub fn is_subset_of(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn smallest(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut bits = 0u64;
        for v in iter {
            debug_assert!(v < VERTEX_CAP);
            bits |= 1u64 << v;
        }
        VertexSet(bits)
    }
}

impl std::fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

// Reports list vertex sets as ascending vertex arrays, not raw bitmasks.
impl serde::Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.collect_seq(self.iter())
    }
}

impl<'de> serde::Deserialize<'de> for VertexSet {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let items = Vec::<usize>::deserialize(de)?;
        for &v in &items {
            if v >= VERTEX_CAP {
                return Err(serde::de::Error::custom(format!("vertex {v} out of range")));
            }
        }
        Ok(VertexSet::from_iter(items))
    }
}

/// Immutable simple undirected graph. Vertices are `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
    edge_count: usize,
}

impl Graph {
    /// Empty graph (no edges) on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > VERTEX_CAP {
            return Err(Error::OverCap { n, cap: VERTEX_CAP });
        }
        Ok(Graph { n, adj: vec![0; n], edge_count: 0 })
    }

    /// Build from an explicit edge list. Duplicate edges collapse; self-loops
    /// are rejected by debug assertion.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge_mut(u, v)?;
        }
        Ok(g)
    }

    fn add_edge_mut(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n {
            return Err(Error::VertexOutOfRange { v: u, n: self.n });
        }
        if v >= self.n {
            return Err(Error::VertexOutOfRange { v, n: self.n });
        }
        debug_assert_ne!(u, v, "self-loop");
        if !self.has_edge(u, v) {
            self.adj[u] |= 1u64 << v;
            self.adj[v] |= 1u64 << u;
            self.edge_count += 1;
        }
        Ok(())
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        let full = VertexSet::full(n).0;
        for v in 0..n {
            g.adj[v] = full & !(1u64 << v);
        }
        g.edge_count = n * n.saturating_sub(1) / 2;
        Ok(g)
    }

    /// Cycle C_n (requires n >= 3).
    pub fn cycle(n: usize) -> Result<Self> {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges)
    }

    /// Path P_n on n vertices.
    pub fn path(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges)
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Result<Self> {
        let mut edges = Vec::with_capacity(a * b);
        for u in 0..a {
            for v in 0..b {
                edges.push((u, a + v));
            }
        }
        Graph::from_edges(a + b, &edges)
    }

    /// The Petersen graph: outer 5-cycle 0..4, inner pentagram 5..9, spokes.
    pub fn petersen() -> Self {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
            edges.push((i, 5 + i));
        }
        Graph::from_edges(10, &edges).unwrap()
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    /// Neighbors of `v` as a bitset.
    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for u in 0..self.n {
            let mut bits = self.adj[u] & !((1u64 << u) | ((1u64 << u) - 1));
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                out.push((u, v));
            }
        }
        out
    }

    /// Vertices of `within` reachable from `start` staying inside `within`.
    pub fn reachable_within(&self, start: usize, within: VertexSet) -> VertexSet {
        debug_assert!(within.contains(start));
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            let mut bits = frontier;
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                next |= self.adj[v];
            }
            next &= within.0 & !seen;
            seen |= next;
            frontier = next;
        }
        VertexSet(seen)
    }

    /// Is the induced subgraph on `within` connected? Empty sets count as
    /// connected.
    pub fn is_connected_within(&self, within: VertexSet) -> bool {
        match within.smallest() {
            None => true,
            Some(s) => self.reachable_within(s, within) == within,
        }
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.is_connected_within(self.vertices())
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count == self.n * self.n.saturating_sub(1) / 2
    }

    /// Connected components of the induced subgraph on `within`.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut rest = within;
        let mut out = Vec::new();
        while let Some(s) = rest.smallest() {
            let comp = self.reachable_within(s, rest);
            out.push(comp);
            rest = rest.minus(comp);
        }
        out
    }

    /// Is `set` independent (no edge inside)?
    pub fn is_independent(&self, set: VertexSet) -> bool {
        for v in set.iter() {
            if self.adj[v] & set.0 & !((1u64 << v) | ((1u64 << v) - 1)) != 0 {
                return false;
            }
        }
        true
    }

    /// N(X): vertices outside `x` with a neighbor in `x`.
    pub fn neighborhood_of_set(&self, x: VertexSet) -> VertexSet {
        let mut nbrs = 0u64;
        for v in x.iter() {
            nbrs |= self.adj[v];
        }
        VertexSet(nbrs & !x.0)
    }

    /// Disjoint union of `self` and `other`; `other`'s vertices are shifted
    /// past `self`'s.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        if n > VERTEX_CAP {
            return Err(Error::OverCap { n, cap: VERTEX_CAP });
        }
        let mut adj = Vec::with_capacity(n);
        adj.extend_from_slice(&self.adj);
        for v in 0..other.n {
            adj.push(other.adj[v] << self.n);
        }
        Ok(Graph { n, adj, edge_count: self.edge_count + other.edge_count })
    }

    /// Join G + H: disjoint union plus every cross edge.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        let mut g = self.disjoint_union(other)?;
        let left = VertexSet::full(self.n).0;
        let right = VertexSet::full(g.n).0 & !left;
        for v in 0..self.n {
            g.adj[v] |= right;
        }
        for v in self.n..g.n {
            g.adj[v] |= left;
        }
        g.edge_count += self.n * other.n;
        Ok(g)
    }

    /// k vertex-disjoint copies of `g`, blocks laid out consecutively.
    pub fn disjoint_copies(k: usize, g: &Graph) -> Result<Graph> {
        if k == 0 {
            return Err(Error::ZeroCopies);
        }
        let mut out = g.clone();
        for _ in 1..k {
            out = out.disjoint_union(g)?;
        }
        Ok(out)
    }

    /// The induced subgraph on `s`, relabelled to `0..|s|`, plus the map
    /// sending new labels back to the original vertices (ascending order).
    pub fn induced_subgraph(&self, s: VertexSet) -> Result<(Graph, Vec<usize>)> {
        if !s.is_subset_of(self.vertices()) {
            let v = s.minus(self.vertices()).smallest().unwrap();
            return Err(Error::VertexOutOfRange { v, n: self.n });
        }
        let map = s.to_vec();
        let mut g = Graph::empty(map.len())?;
        for (i, &u) in map.iter().enumerate() {
            for (j, &v) in map.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.adj[i] |= 1u64 << j;
                    g.adj[j] |= 1u64 << i;
                    g.edge_count += 1;
                }
            }
        }
        Ok((g, map))
    }

    /// Copy of the graph with one extra edge. Panics if the edge exists.
    pub fn with_edge(&self, u: usize, v: usize) -> Graph {
        assert!(!self.has_edge(u, v));
        let mut g = self.clone();
        g.add_edge_mut(u, v).unwrap();
        g
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Builds `m` disjoint copies of K_a joined to K_b: the `mK_a + K_b` family.
/// Block layout: the m cliques of size a first, then the K_b.
pub fn m_ka_plus_kb(m: usize, a: usize, b: usize) -> Result<Graph> {
    let blocks = Graph::disjoint_copies(m, &Graph::complete(a)?)?;
    blocks.join(&Graph::complete(b)?)
}

/// The H(a,b,t,kappa) family: start from `t K_a + complement(K_t)` (a join),
/// add a disjoint clique K_b, and join the lexicographically first `kappa`
/// vertices of the independent block to every K_b vertex.
///
/// Vertex layout: the t blocks of K_a occupy `0..t*a`, the independent block
/// occupies `t*a..t*a+t`, and K_b occupies the final `b` positions. The
/// attachment vertices are `t*a..t*a+kappa`.
pub fn construct_h(a: usize, b: usize, t: usize, kappa: usize) -> Result<Graph> {
    if kappa > t {
        return Err(Error::HKappaTooLarge { kappa, t });
    }
    let base = Graph::disjoint_copies(t, &Graph::complete(a)?)?.join(&Graph::empty(t)?)?;
    let mut g = base.disjoint_union(&Graph::complete(b)?)?;
    let indep_start = t * a;
    let kb_start = t * a + t;
    for i in 0..kappa {
        for j in 0..b {
            g.add_edge_mut(indep_start + i, kb_start + j)?;
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn join_is_complete_bipartite_on_empty_parts() {
        let g = Graph::empty(3).unwrap().join(&Graph::empty(3).unwrap()).unwrap();
        let k33 = Graph::complete_bipartite(3, 3).unwrap();
        assert_eq!(g.n(), 6);
        assert_eq!(g.edge_count(), 9);
        assert_eq!(g, k33);
    }

    #[test]
    fn join_identity_on_empty_operand() {
        let k1 = Graph::complete(1).unwrap();
        let g = Graph::empty(0).unwrap().join(&k1).unwrap();
        assert_eq!(g, k1);
    }

    #[test]
    fn join_4k2_k3_counts() {
        let g = m_ka_plus_kb(4, 2, 3).unwrap();
        assert_eq!(g.n(), 11);
        assert_eq!(g.edge_count(), 4 + 3 + 24);
    }

    #[test]
    fn join_degree_law() {
        let left = Graph::cycle(5).unwrap();
        let right = Graph::path(4).unwrap();
        let joined = left.join(&right).unwrap();
        for v in 0..left.n() {
            assert_eq!(joined.degree(v), left.degree(v) + right.n());
        }
        for v in 0..right.n() {
            assert_eq!(joined.degree(left.n() + v), right.degree(v) + left.n());
        }
    }

    #[test]
    fn disjoint_copies_basic() {
        let g = Graph::disjoint_copies(4, &Graph::complete(2).unwrap()).unwrap();
        assert_eq!(g.n(), 8);
        assert_eq!(g.edge_count(), 4);
        assert_eq!(g.components_within(g.vertices()).len(), 4);

        let h = Graph::cycle(5).unwrap();
        assert_eq!(Graph::disjoint_copies(1, &h).unwrap(), h);

        let k1s = Graph::disjoint_copies(3, &Graph::complete(1).unwrap()).unwrap();
        assert_eq!(k1s, Graph::empty(3).unwrap());
    }

    #[test]
    fn disjoint_copies_rejects_zero() {
        assert_eq!(
            Graph::disjoint_copies(0, &Graph::complete(2).unwrap()),
            Err(Error::ZeroCopies)
        );
    }

    #[test]
    fn construct_h_vertex_counts() {
        let g = construct_h(2, 2, 3, 3).unwrap();
        assert_eq!(g.n(), 6 + 3 + 2);
    }

    #[test]
    fn construct_h_rejects_kappa_over_t() {
        assert_eq!(construct_h(1, 1, 2, 3), Err(Error::HKappaTooLarge { kappa: 3, t: 2 }));
    }

    #[test]
    fn construct_h_contains_ktt() {
        // For a = 1 the first 2t vertices form K_{t,t}.
        let t = 5;
        let g = construct_h(1, 3, t, 4).unwrap();
        for i in 0..t {
            for j in 0..t {
                assert!(g.has_edge(i, t + j), "missing cross edge {i}-{}", t + j);
            }
            for j in 0..t {
                if i != j {
                    assert!(!g.has_edge(i, j));
                    assert!(!g.has_edge(t + i, t + j));
                }
            }
        }
    }

    #[test]
    fn induced_subgraph_cases() {
        let k4 = Graph::complete(4).unwrap();
        let (sub, map) = k4.induced_subgraph(VertexSet::from_iter([0, 1, 2])).unwrap();
        assert_eq!(sub, Graph::complete(3).unwrap());
        assert_eq!(map, vec![0, 1, 2]);

        let g = Graph::cycle(6).unwrap();
        let (whole, _) = g.induced_subgraph(g.vertices()).unwrap();
        assert_eq!(whole, g);

        let (alt, _) = g.induced_subgraph(VertexSet::from_iter([0, 2, 4])).unwrap();
        assert_eq!(alt, Graph::empty(3).unwrap());
    }

    #[test]
    fn neighborhood_of_set_partition() {
        let g = Graph::cycle(6).unwrap();
        let x = VertexSet::from_iter([2, 3]);
        let nb = g.neighborhood_of_set(x);
        assert_eq!(nb, VertexSet::from_iter([1, 4]));
    }

    #[test]
    fn over_cap_rejected() {
        assert!(Graph::empty(65).is_err());
        let g32 = Graph::complete(33).unwrap();
        assert_eq!(
            g32.join(&g32),
            Err(Error::OverCap { n: 66, cap: VERTEX_CAP })
        );
    }
}
