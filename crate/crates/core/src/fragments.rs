//! Fragment and endfragment enumeration. A fragment is a vertex set X whose
//! neighborhood N(X) is a minimum cut-set and whose co-set
//! hat(X) = V - (X u N(X)) is nonempty; an endfragment is an
//! inclusion-minimal fragment.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::invariants::{connectivity, minimum_cutsets};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fragment {
    /// The fragment X itself.
    pub x: VertexSet,
    /// Its separator N(X), always a minimum cut-set.
    pub separator: VertexSet,
    /// hat(X) = V - (X u N(X)), itself a fragment.
    pub hat: VertexSet,
    /// Inclusion-minimal among all fragments of the graph.
    pub is_end: bool,
}

impl Fragment {
    /// The larger of X and hat(X); ties go to the lexicographically smaller
    /// bitset so verdicts are reproducible.
    pub fn a_up(&self) -> VertexSet {
        match self.x.len().cmp(&self.hat.len()) {
            std::cmp::Ordering::Greater => self.x,
            std::cmp::Ordering::Less => self.hat,
            std::cmp::Ordering::Equal => {
                if self.x.0 <= self.hat.0 {
                    self.x
                } else {
                    self.hat
                }
            }
        }
    }

    /// The smaller side under the same convention.
    pub fn a_down(&self) -> VertexSet {
        if self.a_up() == self.x {
            self.hat
        } else {
            self.x
        }
    }
}

/// All fragments, canonically ordered by (|X|, bitset). For each minimum
/// cut-set S the fragments with N(X) = S are exactly the unions of a
/// nonempty proper subset of the components of G - S (the N(X) = S equality
/// is re-checked explicitly).
pub fn fragments_of(g: &Graph) -> Result<Vec<Fragment>> {
    let cutsets = minimum_cutsets(g)?;
    let kappa = connectivity(g)?;
    let mut frags: Vec<(VertexSet, VertexSet, VertexSet)> = Vec::new();
    for s in &cutsets {
        let comps = g.components_within(g.vertices().minus(*s));
        debug_assert!(comps.len() >= 2);
        // Every nonempty proper subset of the components.
        let m = comps.len();
        for mask in 1..(1u64 << m) - 1 {
            let mut x = VertexSet::EMPTY;
            for (i, comp) in comps.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    x = x.union(*comp);
                }
            }
            let nb = g.neighborhood_of_set(x);
            if nb != *s {
                continue;
            }
            let hat = g.vertices().minus(x.union(nb));
            debug_assert!(!hat.is_empty());
            debug_assert_eq!(nb.len(), kappa);
            frags.push((x, nb, hat));
        }
    }
    frags.sort_by_key(|(x, _, _)| (x.len(), x.0));
    frags.dedup();

    // Endfragment = minimal among ALL fragments, not merely those sharing a
    // separator.
    let sets: Vec<VertexSet> = frags.iter().map(|(x, _, _)| *x).collect();
    let out = frags
        .into_iter()
        .map(|(x, separator, hat)| {
            let is_end = !sets.iter().any(|&y| y != x && y.is_subset_of(x));
            Fragment { x, separator, hat, is_end }
        })
        .collect();
    Ok(out)
}

/// The inclusion-minimal fragments only.
pub fn endfragments_of(g: &Graph) -> Result<Vec<Fragment>> {
    Ok(fragments_of(g)?.into_iter().filter(|f| f.is_end).collect())
}

/// Check the fragment axioms plus duality for one graph; returns a violation
/// description when some property fails. Used by the duality sweeps.
pub fn check_fragment_duality(g: &Graph) -> Result<Option<String>> {
    let frags = fragments_of(g)?;
    let index: std::collections::BTreeMap<u64, &Fragment> =
        frags.iter().map(|f| (f.x.0, f)).collect();
    for f in &frags {
        if f.x.is_empty() || f.hat.is_empty() {
            return Ok(Some(format!("empty side in fragment {:?}", f.x)));
        }
        let whole = f.x.union(f.separator).union(f.hat);
        if whole != g.vertices()
            || !f.x.intersect(f.separator).is_empty()
            || !f.x.intersect(f.hat).is_empty()
            || !f.separator.intersect(f.hat).is_empty()
        {
            return Ok(Some(format!("fragment {:?} does not partition V", f.x)));
        }
        // hat(X) must itself be a fragment with the same separator, and
        // hat(hat(X)) = X.
        match index.get(&f.hat.0) {
            None => return Ok(Some(format!("hat of {:?} is not a fragment", f.x))),
            Some(h) => {
                if h.separator != f.separator {
                    return Ok(Some(format!("N(hat(X)) != N(X) for X = {:?}", f.x)));
                }
                if h.hat != f.x {
                    return Ok(Some(format!("hat(hat(X)) != X for X = {:?}", f.x)));
                }
            }
        }
    }
    // No fragment may be a proper subset of an endfragment.
    for e in frags.iter().filter(|f| f.is_end) {
        for f in &frags {
            if f.x != e.x && f.x.is_subset_of(e.x) {
                return Ok(Some(format!(
                    "endfragment {:?} contains fragment {:?}",
                    e.x, f.x
                )));
            }
        }
    }
    Ok(None)
}

/// Exhaustive fragment enumeration by definition: every subset X of V with
/// |N(X)| = kappa, hat(X) nonempty, and N(X) disconnecting. Exponential;
/// reference for `fragments_of` on small graphs.
pub fn oracle_fragments(g: &Graph) -> Result<Vec<VertexSet>> {
    if g.is_complete() {
        return Err(Error::CompleteGraph);
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    assert!(g.n() <= 20);
    let kappa = connectivity(g)?;
    let mut out = Vec::new();
    for mask in 1..1u64 << g.n() {
        let x = VertexSet(mask);
        let nb = g.neighborhood_of_set(x);
        let hat = g.vertices().minus(x.union(nb));
        if hat.is_empty() || nb.len() != kappa {
            continue;
        }
        // N(X) must disconnect the graph: it does, separating X from hat.
        debug_assert!(!g.is_connected_within(g.vertices().minus(nb)));
        out.push(x);
    }
    out.sort_by_key(|x| (x.len(), x.0));
    Ok(out)
}
