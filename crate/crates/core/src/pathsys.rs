//! Extremal path systems over a fragment pair: up-systems (vertex-disjoint
//! paths through the larger side with terminals in the separator, total
//! order maximized), down-system completions that close the up paths into a
//! single simple cycle under one of two extremality rules, the special
//! three-separator-vertex down path, and the combined cycle maximized over
//! all extremal up-systems. Every search here is exhaustive; optimality is
//! certified by enumeration, cross-checked against an independent memoized
//! reference.

use crate::budget::SearchCtx;
use crate::cycle::{CycleSeq, PathSeq};
use crate::error::{Error, Result};
use crate::fragments::Fragment;
use crate::graph::{Graph, VertexSet};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;

/// Vertex cap for the exponential path-system searches.
pub const PATHSYS_CAP: usize = 14;

/// The fragment pair a path system is built over: the up side (larger, by
/// the size convention), the down side, and the separator between them.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FragFrame {
    pub a_up: VertexSet,
    pub a_down: VertexSet,
    pub sep: VertexSet,
}

impl FragFrame {
    pub fn from_fragment(f: &Fragment) -> Self {
        FragFrame { a_up: f.a_up(), a_down: f.a_down(), sep: f.separator }
    }

    pub fn up_domain(&self) -> VertexSet {
        self.a_up.union(self.sep)
    }

    pub fn down_domain(&self) -> VertexSet {
        self.a_down.union(self.sep)
    }
}

/// An up-system: vertex-disjoint paths in the up domain, terminals in the
/// separator, each path on at least two vertices, total vertex count
/// maximal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UpSystem {
    pub paths: Vec<PathSeq>,
    pub vset: VertexSet,
    pub total_order: usize,
    /// False for the degenerate all-inside-the-separator optimum.
    pub uses_fragment: bool,
}

impl UpSystem {
    pub fn m(&self) -> usize {
        self.paths.len()
    }
}

/// Which extremality rule produced a down-system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum DownMode {
    /// Maximize the total down order (the large-down-side rule).
    SumExtremal,
    /// Maximize |V-down intersect S| first, then total order.
    SeparatorFirst,
}

/// The rule selected by the size threshold: the two ranges
/// |A-down| >= 2(delta-kappa+1) and |A-down| <= 2(delta-kappa)+1 are
/// complementary over the integers.
pub fn down_mode(delta: usize, kappa: usize, a_down_size: usize) -> DownMode {
    let threshold = 2 * (delta as i64 - kappa as i64 + 1);
    if (a_down_size as i64) >= threshold {
        DownMode::SumExtremal
    } else {
        DownMode::SeparatorFirst
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DownSystem {
    pub paths: Vec<PathSeq>,
    pub vset: VertexSet,
    /// f = |V-down intersect S|.
    pub f: usize,
    pub mode: DownMode,
    /// The single simple cycle the combination forms.
    pub cycle: CycleSeq,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CombinedCycle {
    pub cycle: CycleSeq,
    pub up: UpSystem,
    pub down: DownSystem,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CombinedOutcome {
    pub best: Option<CombinedCycle>,
    /// Number of extremal up-systems iterated.
    pub optima_count: usize,
    /// True when the optimum enumeration hit its cap.
    pub truncated: bool,
}

fn check_cap(domain: VertexSet) -> Result<()> {
    if domain.len() > PATHSYS_CAP {
        return Err(Error::PathSysOverCap { n: domain.len(), cap: PATHSYS_CAP });
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Up-systems
// ---------------------------------------------------------------------------

struct UpSearch<'a> {
    g: &'a Graph,
    sep: VertexSet,
    best_total: usize,
    /// When set: collect every collection matching `target` until `limit`.
    target: Option<usize>,
    found: Vec<Vec<Vec<usize>>>,
    limit: usize,
    truncated: bool,
}

impl<'a> UpSearch<'a> {
    fn new(g: &'a Graph, sep: VertexSet) -> Self {
        UpSearch { g, sep, best_total: 0, target: None, found: Vec::new(), limit: usize::MAX, truncated: false }
    }

    fn run(&mut self, domain: VertexSet, ctx: &mut SearchCtx) -> Result<()> {
        let mut paths: Vec<Vec<usize>> = Vec::new();
        self.rec_collection(domain, &mut paths, 0, ctx)
    }

    fn cutoff(&self) -> usize {
        match self.target {
            Some(t) => t, // keep anything reaching t
            None => self.best_total + 1,
        }
    }

    fn rec_collection(
        &mut self,
        avail: VertexSet,
        paths: &mut Vec<Vec<usize>>,
        total: usize,
        ctx: &mut SearchCtx,
    ) -> Result<()> {
        if self.truncated {
            return Ok(());
        }
        if !paths.is_empty() {
            if total > self.best_total {
                self.best_total = total;
            }
            if self.target == Some(total) {
                if self.found.len() >= self.limit {
                    self.truncated = true;
                    return Ok(());
                }
                self.found.push(paths.clone());
            }
        }
        if total + avail.len() < self.cutoff() {
            return Ok(());
        }
        // Next path must start strictly above the previous path's first
        // vertex; collections are thereby enumerated once, sorted.
        let min_start = paths.last().map_or(0, |p| p[0] + 1);
        for s in self.sep.intersect(avail).iter() {
            if s < min_start {
                continue;
            }
            let mut seq = vec![s];
            self.rec_path(avail.minus(VertexSet::singleton(s)), &mut seq, paths, total, ctx)?;
        }
        Ok(())
    }

    fn rec_path(
        &mut self,
        avail: VertexSet,
        seq: &mut Vec<usize>,
        paths: &mut Vec<Vec<usize>>,
        total: usize,
        ctx: &mut SearchCtx,
    ) -> Result<()> {
        ctx.tick()?;
        if self.truncated {
            return Ok(());
        }
        let cur = *seq.last().unwrap();
        // A completed path: at least two vertices, endpoint in the
        // separator, oriented from its smaller terminal.
        if seq.len() >= 2 && self.sep.contains(cur) && seq[0] < cur {
            paths.push(seq.clone());
            self.rec_collection(avail, paths, total + seq.len(), ctx)?;
            paths.pop();
        }
        if total + seq.len() + avail.len() < self.cutoff() {
            return Ok(());
        }
        for w in self.g.neighbors(cur).intersect(avail).iter() {
            seq.push(w);
            self.rec_path(avail.minus(VertexSet::singleton(w)), seq, paths, total, ctx)?;
            seq.pop();
        }
        Ok(())
    }
}

fn build_up_system(g: &Graph, frame: &FragFrame, paths: Vec<Vec<usize>>) -> UpSystem {
    let paths: Vec<PathSeq> = paths.into_iter().map(|p| PathSeq::new(g, p)).collect();
    let mut vset = VertexSet::EMPTY;
    let mut total = 0;
    for p in &paths {
        vset = vset.union(p.vertex_set());
        total += p.order();
    }
    UpSystem {
        uses_fragment: !vset.intersect(frame.a_up).is_empty(),
        vset,
        total_order: total,
        paths,
    }
}

/// One maximum up-system (the lexicographically first optimum).
pub fn max_up_system(g: &Graph, frame: &FragFrame, ctx: &mut SearchCtx) -> Result<UpSystem> {
    let (mut all, _) = all_max_up_systems(g, frame, 1, ctx)?;
    Ok(all.remove(0))
}

/// Every maximum up-system, up to `limit` of them (the flag reports
/// truncation). Needed by the universal lemma checks, which quantify over
/// all optima.
pub fn all_max_up_systems(
    g: &Graph,
    frame: &FragFrame,
    limit: usize,
    ctx: &mut SearchCtx,
) -> Result<(Vec<UpSystem>, bool)> {
    let domain = frame.up_domain();
    check_cap(domain)?;
    let mut search = UpSearch::new(g, frame.sep);
    search.run(domain, ctx)?;
    if search.best_total == 0 {
        return Err(Error::NoUpSystem);
    }
    let best = search.best_total;
    let mut collect = UpSearch::new(g, frame.sep);
    collect.target = Some(best);
    collect.best_total = best;
    collect.limit = limit;
    collect.run(domain, ctx)?;
    let truncated = collect.truncated;
    let systems = collect
        .found
        .into_iter()
        .map(|paths| build_up_system(g, frame, paths))
        .collect();
    Ok((systems, truncated))
}

/// Independent reference for the maximum up-system total: dynamic program
/// over available-vertex masks, memoized, structurally unrelated to the
/// collection enumeration above.
pub fn oracle_max_up_total(g: &Graph, frame: &FragFrame) -> usize {
    fn paths_from(
        g: &Graph,
        sep: VertexSet,
        avail: VertexSet,
        seq: &mut Vec<usize>,
        out: &mut Vec<(VertexSet, usize)>,
    ) {
        let cur = *seq.last().unwrap();
        if seq.len() >= 2 && sep.contains(cur) {
            out.push((VertexSet::from_iter(seq.iter().copied()), seq.len()));
        }
        for w in g.neighbors(cur).intersect(avail).iter() {
            seq.push(w);
            paths_from(g, sep, avail.minus(VertexSet::singleton(w)), seq, out);
            seq.pop();
        }
    }
    fn best(g: &Graph, sep: VertexSet, avail: VertexSet, memo: &mut HashMap<u64, usize>) -> usize {
        if let Some(&v) = memo.get(&avail.0) {
            return v;
        }
        let mut out = 0;
        for s in sep.intersect(avail).iter() {
            let mut cand = Vec::new();
            paths_from(
                g,
                sep,
                avail.minus(VertexSet::singleton(s)),
                &mut vec![s],
                &mut cand,
            );
            for (used, order) in cand {
                out = out.max(order + best(g, sep, avail.minus(used), memo));
            }
        }
        memo.insert(avail.0, out);
        out
    }
    let mut memo = HashMap::new();
    best(g, frame.sep, frame.up_domain(), &mut memo)
}

// ---------------------------------------------------------------------------
// Down-systems
// ---------------------------------------------------------------------------

#[derive(Clone)]
struct DownCandidate {
    paths: Vec<Vec<usize>>,
    order: usize,
    f: usize,
}

struct DownSearch {
    sep: VertexSet,
    mode: DownMode,
    best: Option<(DownCandidate, CycleSeq)>,
}

impl DownSearch {
    fn key(&self, cand: &DownCandidate) -> (usize, usize) {
        match self.mode {
            DownMode::SumExtremal => (cand.order, 0),
            DownMode::SeparatorFirst => (cand.f, cand.order),
        }
    }

    fn offer(&mut self, cand: DownCandidate, cycle: CycleSeq) {
        let better = match &self.best {
            None => true,
            Some((incumbent, inc_cycle)) => {
                let (a, b) = (self.key(&cand), self.key(incumbent));
                a > b || (a == b && cycle.vertices() < inc_cycle.vertices())
            }
        };
        if better {
            self.best = Some((cand, cycle));
        }
    }
}

/// All cyclic arrangements of the up paths: fixed first path and
/// orientation, every order and orientation of the rest. Each arrangement
/// yields the terminal pairs the down paths must connect.
fn arrangements(up: &UpSystem) -> Vec<Vec<(usize, bool)>> {
    let m = up.m();
    let mut rest: Vec<usize> = (1..m).collect();
    let mut out = Vec::new();
    fn permute(rest: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
        if k == rest.len() {
            out.push(rest.clone());
            return;
        }
        for i in k..rest.len() {
            rest.swap(k, i);
            permute(rest, k + 1, out);
            rest.swap(k, i);
        }
    }
    let mut perms = Vec::new();
    permute(&mut rest, 0, &mut perms);
    for perm in perms {
        for flips in 0u32..1 << perm.len() {
            let mut arr = vec![(0usize, false)];
            for (i, &p) in perm.iter().enumerate() {
                arr.push((p, flips >> i & 1 == 1));
            }
            out.push(arr);
        }
    }
    out
}

fn assemble_cycle(
    g: &Graph,
    up: &UpSystem,
    arrangement: &[(usize, bool)],
    down_paths: &[Vec<usize>],
) -> CycleSeq {
    let mut seq = Vec::new();
    for (i, &(pi, flip)) in arrangement.iter().enumerate() {
        let verts = up.paths[pi].vertices();
        if flip {
            seq.extend(verts.iter().rev().copied());
        } else {
            seq.extend(verts.iter().copied());
        }
        // Interior of the connecting down path (its endpoints are the up
        // terminals already on the sequence).
        let d = &down_paths[i];
        seq.extend(d[1..d.len() - 1].iter().copied());
    }
    let mut cycle = CycleSeq::new(g, seq);
    cycle.canonicalize();
    cycle
}

/// Complete an up-system into a single simple cycle with down paths through
/// the down domain, under the mode picked by the size threshold. Returns
/// None when no completion exists.
pub fn complete_down_system(
    g: &Graph,
    frame: &FragFrame,
    up: &UpSystem,
    ctx: &mut SearchCtx,
) -> Result<Option<DownSystem>> {
    check_cap(frame.down_domain())?;
    let delta = crate::invariants::min_degree(g)?;
    let mode = down_mode(delta, frame.sep.len(), frame.a_down.len());
    complete_down_system_mode(g, frame, up, mode, ctx)
}

/// Same search with the extremality rule forced (the lemma suites sometimes
/// need to inspect a specific mode).
pub fn complete_down_system_mode(
    g: &Graph,
    frame: &FragFrame,
    up: &UpSystem,
    mode: DownMode,
    ctx: &mut SearchCtx,
) -> Result<Option<DownSystem>> {
    check_cap(frame.down_domain())?;
    // Down interiors live in the down domain minus everything the up-system
    // holds; endpoints are the up terminals.
    let interior = frame.down_domain().minus(up.vset);
    let mut search = DownSearch { sep: frame.sep, mode, best: None };
    for arr in arrangements(up) {
        let m = arr.len();
        let mut pairs = Vec::with_capacity(m);
        for i in 0..m {
            let (pi, flip) = arr[i];
            let (pj, flip_j) = arr[(i + 1) % m];
            let exit = if flip { up.paths[pi].first() } else { up.paths[pi].last() };
            let entry = if flip_j { up.paths[pj].last() } else { up.paths[pj].first() };
            pairs.push((exit, entry));
        }
        let mut acc: Vec<Vec<usize>> = Vec::new();
        route_pairs(g, &pairs, 0, interior, &mut acc, &mut search, up, &arr, ctx)?;
    }
    Ok(search.best.map(|(cand, cycle)| {
        let paths: Vec<PathSeq> = cand.paths.iter().map(|p| PathSeq::new(g, p.clone())).collect();
        let mut vset = VertexSet::EMPTY;
        for p in &paths {
            vset = vset.union(p.vertex_set());
        }
        DownSystem { paths, vset, f: cand.f, mode, cycle }
    }))
}

#[allow(clippy::too_many_arguments)]
fn route_pairs(
    g: &Graph,
    pairs: &[(usize, usize)],
    idx: usize,
    avail: VertexSet,
    acc: &mut Vec<Vec<usize>>,
    search: &mut DownSearch,
    up: &UpSystem,
    arrangement: &[(usize, bool)],
    ctx: &mut SearchCtx,
) -> Result<()> {
    if idx == pairs.len() {
        let order: usize = acc.iter().map(|p| p.len()).sum();
        let f = acc
            .iter()
            .map(|p| p.iter().filter(|&&v| search.sep.contains(v)).count())
            .sum();
        let cand = DownCandidate { paths: acc.clone(), order, f };
        let cycle = assemble_cycle(g, up, arrangement, acc);
        search.offer(cand, cycle);
        return Ok(());
    }
    let (exit, entry) = pairs[idx];
    let mut seq = vec![exit];
    route_one(g, entry, avail, &mut seq, pairs, idx, acc, search, up, arrangement, ctx)
}

#[allow(clippy::too_many_arguments)]
fn route_one(
    g: &Graph,
    entry: usize,
    avail: VertexSet,
    seq: &mut Vec<usize>,
    pairs: &[(usize, usize)],
    idx: usize,
    acc: &mut Vec<Vec<usize>>,
    search: &mut DownSearch,
    up: &UpSystem,
    arrangement: &[(usize, bool)],
    ctx: &mut SearchCtx,
) -> Result<()> {
    ctx.tick()?;
    let cur = *seq.last().unwrap();
    if g.has_edge(cur, entry) && (seq.len() >= 2 || cur != entry) {
        let mut done = seq.clone();
        done.push(entry);
        acc.push(done);
        route_pairs(g, pairs, idx + 1, avail, acc, search, up, arrangement, ctx)?;
        acc.pop();
    }
    for w in g.neighbors(cur).intersect(avail).iter() {
        seq.push(w);
        route_one(
            g,
            entry,
            avail.minus(VertexSet::singleton(w)),
            seq,
            pairs,
            idx,
            acc,
            search,
            up,
            arrangement,
            ctx,
        )?;
        seq.pop();
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// The special down path
// ---------------------------------------------------------------------------

/// The longest path closing the first up path into a simple cycle while
/// meeting the separator in at least three vertices. Only defined in the
/// f = 2, separator-not-swallowed case; calling it elsewhere is an error.
pub fn special_down_path(
    g: &Graph,
    frame: &FragFrame,
    up: &UpSystem,
    ctx: &mut SearchCtx,
) -> Result<Option<PathSeq>> {
    let down = complete_down_system(g, frame, up, ctx)?;
    let down = match down {
        Some(d) => d,
        None => return Err(Error::SpecialCaseNotApplicable),
    };
    special_down_path_given(g, frame, up, &down, ctx)
}

/// As above with the down-system already computed.
pub fn special_down_path_given(
    g: &Graph,
    frame: &FragFrame,
    up: &UpSystem,
    down: &DownSystem,
    ctx: &mut SearchCtx,
) -> Result<Option<PathSeq>> {
    if down.f != 2 || frame.sep.is_subset_of(up.vset) {
        return Err(Error::SpecialCaseNotApplicable);
    }
    debug_assert_eq!(up.m(), 1);
    let exit = up.paths[0].last();
    let entry = up.paths[0].first();
    let interior = frame.down_domain().minus(up.vset);
    let mut best: Option<Vec<usize>> = None;
    let mut seq = vec![exit];
    special_dfs(g, entry, interior, &mut seq, frame.sep, &mut best, ctx)?;
    Ok(best.map(|p| PathSeq::new(g, p)))
}

fn special_dfs(
    g: &Graph,
    entry: usize,
    avail: VertexSet,
    seq: &mut Vec<usize>,
    sep: VertexSet,
    best: &mut Option<Vec<usize>>,
    ctx: &mut SearchCtx,
) -> Result<()> {
    ctx.tick()?;
    let cur = *seq.last().unwrap();
    if g.has_edge(cur, entry) {
        let in_sep = 1 + seq.iter().filter(|&&v| sep.contains(v)).count();
        if in_sep >= 3 {
            let mut done = seq.clone();
            done.push(entry);
            let better = match best {
                None => true,
                Some(b) => done.len() > b.len() || (done.len() == b.len() && done < *b),
            };
            if better {
                *best = Some(done);
            }
        }
    }
    for w in g.neighbors(cur).intersect(avail).iter() {
        seq.push(w);
        special_dfs(g, entry, avail.minus(VertexSet::singleton(w)), seq, sep, best, ctx)?;
        seq.pop();
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// The combined cycle
// ---------------------------------------------------------------------------

/// Cap on how many extremal up-systems the combined-cycle search iterates.
pub const UP_OPTIMA_LIMIT: usize = 20_000;

/// Iterate every maximum up-system, complete each, and keep the longest
/// resulting cycle (ties by canonical sequence).
pub fn combined_cycle(g: &Graph, frame: &FragFrame, ctx: &mut SearchCtx) -> Result<CombinedOutcome> {
    let (optima, truncated) = all_max_up_systems(g, frame, UP_OPTIMA_LIMIT, ctx)?;
    let optima_count = optima.len();
    let mut best: Option<CombinedCycle> = None;
    for up in optima {
        if let Some(down) = complete_down_system(g, frame, &up, ctx)? {
            let better = match &best {
                None => true,
                Some(inc) => {
                    down.cycle.length() > inc.cycle.length()
                        || (down.cycle.length() == inc.cycle.length()
                            && down.cycle.vertices() < inc.cycle.vertices())
                }
            };
            if better {
                best = Some(CombinedCycle { cycle: down.cycle.clone(), up, down });
            }
        }
    }
    Ok(CombinedOutcome { best, optima_count, truncated })
}
