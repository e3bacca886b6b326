//! Statement-level verification of the path-system lemmas on concrete
//! graphs: for every fragment pair (and every maximum up-system, with the
//! mode-selected down completion) the implications about independence of
//! leftovers and lower bounds on V-up / V-down are evaluated literally.
//! Violations are collected, never repaired.

use crate::budget::SearchCtx;
use crate::cycle::longest_path_between;
use crate::error::{Error, Result};
use crate::fragments::{fragments_of, Fragment};
use crate::graph::{Graph, VertexSet};
use crate::invariants::{connectivity, min_degree};
use crate::pathsys::{
    all_max_up_systems, complete_down_system, special_down_path_given, DownSystem, FragFrame,
    UpSystem, PATHSYS_CAP,
};
use serde::{Deserialize, Serialize};

/// The clauses the fixture corpus must exercise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum LemmaClause {
    L5,
    L6,
    L7,
    L8d1,
    L8d2,
    L8d3,
    L9e1,
    L9e2,
    L9e3,
    L10f1,
    L10f2,
    L10f3,
    LD,
    LE,
    LF,
}

pub const ALL_LEMMA_CLAUSES: [LemmaClause; 15] = [
    LemmaClause::L5,
    LemmaClause::L6,
    LemmaClause::L7,
    LemmaClause::L8d1,
    LemmaClause::L8d2,
    LemmaClause::L8d3,
    LemmaClause::L9e1,
    LemmaClause::L9e2,
    LemmaClause::L9e3,
    LemmaClause::L10f1,
    LemmaClause::L10f2,
    LemmaClause::L10f3,
    LemmaClause::LD,
    LemmaClause::LE,
    LemmaClause::LF,
];

impl LemmaClause {
    pub fn name(self) -> &'static str {
        match self {
            LemmaClause::L5 => "L5",
            LemmaClause::L6 => "L6",
            LemmaClause::L7 => "L7",
            LemmaClause::L8d1 => "L8-d1",
            LemmaClause::L8d2 => "L8-d2",
            LemmaClause::L8d3 => "L8-d3",
            LemmaClause::L9e1 => "L9-e1",
            LemmaClause::L9e2 => "L9-e2",
            LemmaClause::L9e3 => "L9-e3",
            LemmaClause::L10f1 => "L10-f1",
            LemmaClause::L10f2 => "L10-f2",
            LemmaClause::L10f3 => "L10-f3",
            LemmaClause::LD => "LD",
            LemmaClause::LE => "LE",
            LemmaClause::LF => "LF",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        ALL_LEMMA_CLAUSES.iter().copied().find(|c| c.name() == name)
    }
}

/// Outcome of running every clause over one graph.
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct LemmaReport {
    /// Clause -> number of instances whose hypothesis held (and were
    /// therefore checked).
    pub exercised: std::collections::BTreeMap<String, usize>,
    pub violations: Vec<String>,
    /// Up-system optimum enumerations that hit the cap (conclusions then
    /// checked against the enumerated subset only).
    pub truncated_optima: bool,
}

impl LemmaReport {
    fn hit(&mut self, clause: LemmaClause) {
        *self.exercised.entry(clause.name().to_string()).or_insert(0) += 1;
    }

    fn violate(&mut self, clause: LemmaClause, detail: String) {
        self.violations.push(format!("{}: {detail}", clause.name()));
    }

    pub fn count(&self, clause: LemmaClause) -> usize {
        self.exercised.get(clause.name()).copied().unwrap_or(0)
    }

    pub fn merge(&mut self, other: LemmaReport) {
        for (k, v) in other.exercised {
            *self.exercised.entry(k).or_insert(0) += v;
        }
        self.violations.extend(other.violations);
        self.truncated_optima |= other.truncated_optima;
    }
}

/// Cap on enumerated up-optima per fragment frame.
pub const LEMMA_OPTIMA_LIMIT: usize = 4_000;

/// Evaluate every lemma clause on one graph, quantifying over fragment
/// pairs, endfragments, maximum up-systems, and their mode-selected down
/// completions. Skips fragment frames whose search domains exceed the
/// path-system cap.
pub fn check_lemmas_on_graph(g: &Graph, ctx: &mut SearchCtx) -> Result<LemmaReport> {
    let mut report = LemmaReport::default();
    let kappa = connectivity(g)?;
    let delta = min_degree(g)?;
    if kappa < 2 {
        lemma_e_on_graph(g, &mut report, ctx)?;
        return Ok(report);
    }
    let frags = if g.is_complete() { Vec::new() } else { fragments_of(g)? };
    let d = delta as i64;
    let k = kappa as i64;

    for fragment in frags.iter().filter(|f| f.x == f.a_up()) {
        let frame = FragFrame::from_fragment(fragment);
        if frame.up_domain().len() > PATHSYS_CAP || frame.down_domain().len() > PATHSYS_CAP {
            continue;
        }
        // The down side of this pair: is it an endfragment?
        let down_is_end = frags.iter().any(|f| f.x == frame.a_down && f.is_end);
        let a_up = frame.a_up.len() as i64;

        let (optima, truncated) = match all_max_up_systems(g, &frame, LEMMA_OPTIMA_LIMIT, ctx) {
            Ok(x) => x,
            Err(Error::NoUpSystem) => continue,
            Err(e) => return Err(e),
        };
        report.truncated_optima |= truncated;

        for up in &optima {
            let leftover_up = frame.a_up.minus(up.vset);
            let up_indep = g.is_independent(leftover_up);

            // Lemma 5: 3-connected, |A-up| <= 3d - k - 4.
            if kappa >= 3 && a_up <= 3 * d - k - 4 {
                report.hit(LemmaClause::L5);
                if !up_indep {
                    report.violate(
                        LemmaClause::L5,
                        format!("A-up leftover not independent: {g:?} frame {frame:?}"),
                    );
                }
            }
            // Lemma 6: 4-connected, |A-up| >= 3d - k - 3.
            if kappa >= 4 && a_up >= 3 * d - k - 3 {
                report.hit(LemmaClause::L6);
                if !up_indep && (up.vset.len() as i64) < 3 * d - 5 {
                    report.violate(
                        LemmaClause::L6,
                        format!("neither disjunct: {g:?} frame {frame:?}"),
                    );
                }
            }
            // Lemma 10 (f1): A-up leftover independent and nonempty.
            if up_indep && !leftover_up.is_empty() {
                report.hit(LemmaClause::L10f1);
                if (up.vset.len() as i64) < 2 * d + up.m() as i64 - 2 {
                    report.violate(
                        LemmaClause::L10f1,
                        format!("|V-up| = {} too small: {g:?} frame {frame:?}", up.vset.len()),
                    );
                }
            }

            let down = complete_down_system(g, &frame, up, ctx)?;
            let down = match down {
                Some(x) => x,
                None => continue,
            };
            check_down_clauses(
                g, &frame, up, &down, down_is_end, delta, kappa, &mut report, ctx,
            )?;
        }

        // Lemma D needs an endfragment on the down side.
        if down_is_end && 2 * d > 3 * k - 2 {
            lemma_d_on_frame(g, &frame, &mut report, ctx)?;
        }
    }

    lemma_e_on_graph(g, &mut report, ctx)?;
    Ok(report)
}

#[allow(clippy::too_many_arguments)]
fn check_down_clauses(
    g: &Graph,
    frame: &FragFrame,
    up: &UpSystem,
    down: &DownSystem,
    down_is_end: bool,
    delta: usize,
    kappa: usize,
    report: &mut LemmaReport,
    ctx: &mut SearchCtx,
) -> Result<()> {
    let d = delta as i64;
    let k = kappa as i64;
    let a_down = frame.a_down.len() as i64;
    let v_down = down.vset.len() as i64;
    let f = down.f as i64;
    let leftover_down = frame.a_down.minus(down.vset);
    let down_indep = g.is_independent(leftover_down);
    let sep_swallowed = frame.sep.is_subset_of(up.vset);

    let special = if down.f == 2 && !sep_swallowed {
        special_down_path_given(g, frame, up, down, ctx)?
    } else {
        None
    };

    // Lemma 7: endfragment, |A-down| <= 2d - 2k + 1, system exists.
    if down_is_end && kappa >= 2 && a_down <= 2 * d - 2 * k + 1 {
        report.hit(LemmaClause::L7);
        if !leftover_down.is_empty() {
            report.violate(
                LemmaClause::L7,
                format!("A-down not covered: {g:?} frame {frame:?}"),
            );
        }
        if let Some(sp) = &special {
            if !frame.a_down.minus(sp.vertex_set()).is_empty() {
                report.violate(
                    LemmaClause::L7,
                    format!("A-down not covered by the special path: {g:?} frame {frame:?}"),
                );
            }
        }
    }

    // Lemmas 8 and 9: endfragment, 3-connected, d >= 2k - 2.
    if down_is_end && kappa >= 3 && d >= 2 * k - 2 {
        let small = a_down <= 3 * d - 3 * k + 1;
        let large = a_down >= 3 * d - 3 * k + 2;
        if down.f >= 3 {
            if small {
                report.hit(LemmaClause::L8d1);
                if !down_indep {
                    report.violate(
                        LemmaClause::L8d1,
                        format!("A-down leftover not independent: {g:?} frame {frame:?}"),
                    );
                }
            }
            if large {
                report.hit(LemmaClause::L9e1);
                if !down_indep && v_down < 3 * d - 3 * k + f {
                    report.violate(
                        LemmaClause::L9e1,
                        format!("neither disjunct: {g:?} frame {frame:?}"),
                    );
                }
            }
        } else if down.f == 2 && !sep_swallowed {
            let special_indep = special
                .as_ref()
                .map(|sp| g.is_independent(frame.a_down.minus(sp.vertex_set())));
            if small {
                report.hit(LemmaClause::L8d2);
                if special_indep != Some(true) {
                    report.violate(
                        LemmaClause::L8d2,
                        format!(
                            "special path {} on {g:?} frame {frame:?}",
                            if special.is_none() { "missing" } else { "leaves a non-independent set" }
                        ),
                    );
                }
            }
            if large {
                report.hit(LemmaClause::L9e2);
                if special_indep != Some(true) && v_down < 3 * d - 3 * k + 3 {
                    report.violate(
                        LemmaClause::L9e2,
                        format!("neither disjunct: {g:?} frame {frame:?}"),
                    );
                }
            }
        } else if down.f == 2 && sep_swallowed {
            if small {
                report.hit(LemmaClause::L8d3);
                if !leftover_down.is_empty() && v_down < 2 * d - 2 * k + 3 {
                    report.violate(
                        LemmaClause::L8d3,
                        format!("neither disjunct: {g:?} frame {frame:?}"),
                    );
                }
            }
            if large {
                report.hit(LemmaClause::L9e3);
                if v_down < 2 * d - 2 * k + 3 {
                    report.violate(
                        LemmaClause::L9e3,
                        format!("|V-down| = {v_down} too small: {g:?} frame {frame:?}"),
                    );
                }
            }
        }
    }

    // Lemma 10 (f2): A-down leftover independent and nonempty.
    if down_indep && !leftover_down.is_empty() {
        report.hit(LemmaClause::L10f2);
        if v_down < 2 * d - 2 * k + 2 * f - up.m() as i64 {
            report.violate(
                LemmaClause::L10f2,
                format!("|V-down| = {v_down} too small: {g:?} frame {frame:?}"),
            );
        }
    }
    // Lemma 10 (f3): special-path leftover independent and nonempty.
    if let Some(sp) = &special {
        let leftover = frame.a_down.minus(sp.vertex_set());
        if g.is_independent(leftover) && !leftover.is_empty() {
            report.hit(LemmaClause::L10f3);
            if v_down < 2 * d - 2 * k + 5 {
                report.violate(
                    LemmaClause::L10f3,
                    format!("|V-down| = {v_down} too small: {g:?} frame {frame:?}"),
                );
            }
        }
    }

    // Lemma F: any fragment (not just endfragments), |A-down| <= 3d - 3k.
    if kappa >= 3 && d >= 2 * k - 2 && a_down <= 3 * d - 3 * k {
        report.hit(LemmaClause::LF);
        if !down_indep {
            report.violate(
                LemmaClause::LF,
                format!("A-down leftover not independent: {g:?} frame {frame:?}"),
            );
        }
    }
    Ok(())
}

/// Lemma D: for every nonempty matching L inside the separator, the induced
/// subgraph on A-down plus V(L) has a cycle through all edges of L.
fn lemma_d_on_frame(
    g: &Graph,
    frame: &FragFrame,
    report: &mut LemmaReport,
    ctx: &mut SearchCtx,
) -> Result<()> {
    let sep_edges: Vec<(usize, usize)> = frame
        .sep
        .iter()
        .flat_map(|u| {
            g.neighbors(u)
                .intersect(frame.sep)
                .iter()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
        .collect();
    let mut matchings: Vec<Vec<(usize, usize)>> = Vec::new();
    fn grow(
        edges: &[(usize, usize)],
        from: usize,
        used: VertexSet,
        cur: &mut Vec<(usize, usize)>,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        for (i, &(u, v)) in edges.iter().enumerate().skip(from) {
            if !used.contains(u) && !used.contains(v) {
                cur.push((u, v));
                out.push(cur.clone());
                let mut used2 = used;
                used2.insert(u);
                used2.insert(v);
                grow(edges, i + 1, used2, cur, out);
                cur.pop();
            }
        }
    }
    grow(&sep_edges, 0, VertexSet::EMPTY, &mut Vec::new(), &mut matchings);
    for matching in matchings {
        report.hit(LemmaClause::LD);
        if !has_cycle_through_edges(g, frame.a_down, &matching, ctx)? {
            report.violate(
                LemmaClause::LD,
                format!("no cycle through {matching:?}: {g:?} frame {frame:?}"),
            );
        }
    }
    Ok(())
}

/// Is there a proper cycle inside A-down union V(L) using every edge of the
/// matching L?
fn has_cycle_through_edges(
    g: &Graph,
    a_down: VertexSet,
    matching: &[(usize, usize)],
    ctx: &mut SearchCtx,
) -> Result<bool> {
    let mut lv = VertexSet::EMPTY;
    for &(u, v) in matching {
        lv.insert(u);
        lv.insert(v);
    }
    let domain = a_down.union(lv);
    // Walk from the first matching edge; required edges are consumed when
    // traversed; other matching vertices may only be entered via their own
    // matching edge.
    let (start, mate) = matching[0];
    let mut path = vec![start, mate];
    let mut need: Vec<(usize, usize)> = matching[1..].to_vec();
    let found = cycle_edges_dfs(
        g,
        start,
        domain.minus(VertexSet::from_iter([start, mate])),
        &mut path,
        &mut need,
        matching,
        ctx,
    )?;
    Ok(found)
}

fn cycle_edges_dfs(
    g: &Graph,
    anchor: usize,
    avail: VertexSet,
    path: &mut Vec<usize>,
    need: &mut Vec<(usize, usize)>,
    matching: &[(usize, usize)],
    ctx: &mut SearchCtx,
) -> Result<bool> {
    ctx.tick()?;
    let cur = *path.last().unwrap();
    if need.is_empty() && path.len() >= 3 && g.has_edge(cur, anchor) {
        return Ok(true);
    }
    for w in g.neighbors(cur).intersect(avail).iter() {
        // Entering a vertex of an outstanding matching edge forces
        // traversing that edge immediately.
        if let Some(pos) = need.iter().position(|&(a, b)| a == w || b == w) {
            let (a, b) = need[pos];
            let other = if a == w { b } else { a };
            if !avail.contains(other) {
                continue;
            }
            need.remove(pos);
            path.push(w);
            path.push(other);
            let found = cycle_edges_dfs(
                g,
                anchor,
                avail.minus(VertexSet::from_iter([w, other])),
                path,
                need,
                matching,
                ctx,
            )?;
            path.pop();
            path.pop();
            need.insert(pos, (a, b));
            if found {
                return Ok(true);
            }
        } else if !matching.iter().any(|&(a, b)| a == w || b == w) {
            path.push(w);
            let found = cycle_edges_dfs(
                g,
                anchor,
                avail.minus(VertexSet::singleton(w)),
                path,
                need,
                matching,
                ctx,
            )?;
            path.pop();
            if found {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// Lemma E: on a hamiltonian graph where at least r vertices have degree at
/// least r (taking the largest such r), every vertex pair is joined by a
/// path of length at least r.
fn lemma_e_on_graph(g: &Graph, report: &mut LemmaReport, ctx: &mut SearchCtx) -> Result<()> {
    if g.n() < 3 {
        return Ok(());
    }
    let mut degrees: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    degrees.sort_unstable_by(|a, b| b.cmp(a));
    let mut r = 0;
    for (i, &deg) in degrees.iter().enumerate() {
        if deg > i {
            r = i + 1;
        }
    }
    if r < 2 {
        return Ok(());
    }
    let (ham, _) = crate::cycle::has_hamilton_cycle(g, ctx)?;
    if !ham {
        return Ok(());
    }
    report.hit(LemmaClause::LE);
    for u in 0..g.n() {
        for v in (u + 1)..g.n() {
            let len = longest_path_between(g, u, v, ctx)?;
            if len < r {
                report.violate(
                    LemmaClause::LE,
                    format!("pair ({u},{v}) only joined by length {len} < {r}: {g:?}"),
                );
            }
        }
    }
    Ok(())
}

/// A named fixture: graph plus the clauses its hypothesis is known to
/// exercise.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FixtureAnnotation {
    pub name: String,
    /// 1-based line number in the sidecar graph6 file.
    pub line: usize,
    pub expect_clauses: Vec<String>,
}

/// Run the lemma suite over an annotated corpus: returns the merged report
/// and per-fixture errors for expectations that did not materialize.
pub fn run_fixture_corpus(
    graphs: &[(String, Graph)],
    annotations: &[FixtureAnnotation],
    ctx: &mut SearchCtx,
) -> Result<(LemmaReport, Vec<String>)> {
    let mut merged = LemmaReport::default();
    let mut errors = Vec::new();
    for ann in annotations {
        let Some((name, g)) = graphs.get(ann.line - 1) else {
            errors.push(format!("fixture {}: line {} out of range", ann.name, ann.line));
            continue;
        };
        debug_assert_eq!(name, &ann.name);
        let report = check_lemmas_on_graph(g, ctx)?;
        for clause in &ann.expect_clauses {
            let c = LemmaClause::from_name(clause)
                .ok_or_else(|| Error::UnknownStatement(clause.clone()))?;
            if report.count(c) == 0 {
                errors.push(format!(
                    "fixture {}: clause {} hypothesis never held",
                    ann.name, clause
                ));
            }
        }
        merged.merge(report);
    }
    Ok((merged, errors))
}

/// Exhaustive Lemma E check over every graph on up to `max_n` vertices (up
/// to isomorphism). Returns (instances checked, violations).
pub fn lemma_e_exhaustive(max_n: usize, ctx: &mut SearchCtx) -> Result<(usize, Vec<String>)> {
    let mut checked = 0;
    let mut violations = Vec::new();
    for n in 3..=max_n {
        for g in crate::census::all_graphs(n) {
            let mut report = LemmaReport::default();
            lemma_e_on_graph(&g, &mut report, ctx)?;
            checked += report.count(LemmaClause::LE);
            violations.extend(report.violations);
        }
    }
    Ok((checked, violations))
}

/// Fragment/endfragment handle used by hunt tooling.
pub fn fragment_pairs(g: &Graph) -> Result<Vec<Fragment>> {
    Ok(fragments_of(g)?.into_iter().filter(|f| f.x == f.a_up()).collect())
}

/// The Lemma D inner search, exposed for direct use in tests.
pub fn cycle_through_matching_exists(
    g: &Graph,
    a_down: VertexSet,
    matching: &[(usize, usize)],
    ctx: &mut SearchCtx,
) -> Result<bool> {
    has_cycle_through_edges(g, a_down, matching, ctx)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::m_ka_plus_kb;

    fn ctx() -> SearchCtx {
        SearchCtx::unlimited()
    }

    #[test]
    fn lemma_d_on_join_4k2_k3() {
        let g = m_ka_plus_kb(4, 2, 3).unwrap();
        let report = check_lemmas_on_graph(&g, &mut ctx()).unwrap();
        assert!(report.violations.is_empty(), "{:?}", report.violations);
        // The separator triangle has three single-edge matchings per
        // endfragment-bearing pair.
        assert!(report.count(LemmaClause::LD) > 0);
        // delta = 4 = 2*kappa - 2 and |A-down| = 2 <= 3(delta-kappa): F fires.
        assert!(report.count(LemmaClause::LF) > 0);
        // |A-down| = 2 <= 2delta-2kappa+1 = 3: Lemma 7 fires.
        assert!(report.count(LemmaClause::L7) > 0);
    }

    #[test]
    fn lemma5_on_join_4k2_k3_pair_split() {
        // The 2-2 block split has |A-up| = 4 <= 3*4-3-4 = 5.
        let g = m_ka_plus_kb(4, 2, 3).unwrap();
        let report = check_lemmas_on_graph(&g, &mut ctx()).unwrap();
        assert!(report.count(LemmaClause::L5) > 0);
        assert!(report.violations.is_empty());
    }

    #[test]
    fn lemma6_on_join_5k2_k4() {
        let g = m_ka_plus_kb(5, 2, 4).unwrap();
        let report = check_lemmas_on_graph(&g, &mut ctx()).unwrap();
        assert!(report.count(LemmaClause::L6) > 0, "{:?}", report.exercised);
        assert!(report.violations.is_empty(), "{:?}", report.violations);
    }

    #[test]
    fn lemma_e_small_exhaustive() {
        let (checked, violations) = lemma_e_exhaustive(5, &mut ctx()).unwrap();
        assert!(checked > 0);
        assert!(violations.is_empty(), "{violations:?}");
    }

    #[test]
    fn lemma_f1_on_mixed_blocks() {
        // (2K2 u 2K1) + K3: the optimum up-path spans two K2 blocks and all
        // separator vertices, leaving an isolated singleton: f1's hypothesis.
        let blocks = Graph::disjoint_copies(2, &Graph::complete(2).unwrap())
            .unwrap()
            .disjoint_union(&Graph::empty(2).unwrap())
            .unwrap();
        let g = blocks.join(&Graph::complete(3).unwrap()).unwrap();
        let report = check_lemmas_on_graph(&g, &mut ctx()).unwrap();
        assert!(report.count(LemmaClause::L10f1) > 0, "{:?}", report.exercised);
        assert!(report.violations.is_empty(), "{:?}", report.violations);
    }

    #[test]
    fn cycle_through_matching_basic() {
        let g = m_ka_plus_kb(4, 2, 3).unwrap();
        // A-down = pair {0,1}; matching = one separator edge (8,9).
        assert!(cycle_through_matching_exists(
            &g,
            VertexSet::from_iter([0, 1]),
            &[(8, 9)],
            &mut ctx()
        )
        .unwrap());
        // Two disjoint separator edges do not exist inside a triangle, but a
        // fabricated non-edgepair via vertices 8,9,10 cannot be requested;
        // instead check an impossible case: matching edge with isolated
        // down side.
        let h = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!cycle_through_matching_exists(
            &h,
            VertexSet::from_iter([2, 3]),
            &[(0, 1)],
            &mut ctx()
        )
        .unwrap());
    }
}
