//! The (Q,r)-scheme formalism: a family (Z_1,...,Z_p) of vertex sets on an
//! oriented cycle where same-set pairs sit at least 2 apart along the
//! orientation and cross-set pairs at least r apart. A scheme is nontrivial
//! when the family has a system of distinct representatives. Nontrivial
//! schemes obey a family of closed-form lower bounds on |Q|; this module
//! evaluates every bound clause and machine-checks the whole family by a
//! symmetry-reduced exhaustive sweep over small cycles.

use crate::cycle::CycleSeq;
use crate::error::{Error, Result};
use crate::graph::VertexSet;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

/// A cycle with a fixed orientation, p subset family (2 <= p <= 4, sets may
/// overlap or repeat), and the gap parameter r >= 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Scheme {
    pub cycle: CycleSeq,
    pub zsets: Vec<VertexSet>,
    pub r: usize,
}

impl Scheme {
    pub fn p(&self) -> usize {
        self.zsets.len()
    }
}

/// Segment conditions, quantified over ordered distinct pairs along the
/// fixed orientation: within one Z_i every arc is a 2-segment, across
/// different Z_i, Z_j every arc is an r-segment.
pub fn validate_scheme(s: &Scheme) -> Result<bool> {
    assert!(s.p() >= 2, "schemes need p >= 2");
    assert!(s.r >= 2, "gap parameter must be at least 2");
    let on_cycle = s.cycle.vertex_set();
    for z in &s.zsets {
        if let Some(v) = z.minus(on_cycle).smallest() {
            return Err(Error::SchemeVertexOffCycle { v });
        }
    }
    for (i, zi) in s.zsets.iter().enumerate() {
        for x in zi.iter() {
            for y in zi.iter() {
                if x != y && s.cycle.arc_len(x, y).unwrap() < 2 {
                    return Ok(false);
                }
            }
        }
        for (j, zj) in s.zsets.iter().enumerate() {
            if i == j {
                continue;
            }
            for x in zi.iter() {
                for y in zj.iter() {
                    if x != y && s.cycle.arc_len(x, y).unwrap() < s.r {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

/// Does the family admit a system of distinct representatives?
pub fn is_nontrivial(zsets: &[VertexSet]) -> bool {
    assert!(zsets.len() >= 2);
    fn assign(zsets: &[VertexSet], i: usize, used: u64) -> bool {
        if i == zsets.len() {
            return true;
        }
        for v in zsets[i].iter() {
            if used >> v & 1 == 0 && assign(zsets, i + 1, used | 1 << v) {
                return true;
            }
        }
        false
    }
    assign(zsets, 0, 0)
}

/// The bound clauses. The two-set clauses apply to (Z_1, Z_2) of any scheme
/// with p >= 2 (restricting a nontrivial scheme to its first two sets keeps
/// it a nontrivial scheme); three- and four-set clauses need p >= 3 / p >= 4.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BoundKind {
    /// |Q| >= |Z1| + |Z2| + |Z1 u Z2|, for r >= 3.
    L1Base,
    /// r = 4: |Q| >= 2(|Z1| + |Z2|).
    A1,
    /// r >= 5: |Q| >= 2(|Z1| + |Z2|) + r - 3.
    A2,
    /// |Z2| = 1: |Q| >= 2|Z1| + 2r - 4.
    A3,
    /// |Z1| = |Z2| = 1: |Q| >= 2r.
    A4,
    /// |Z1| + |Z2| >= 4 and r >= 4: |Q| >= 2(|Z1| + |Z2|) + 2r - 8.
    A5,
    /// min{ 2(|Z1|+|Z2|) + 2r - 6, r(|Z1|+|Z2|)/2 }.
    LemA,
    /// r >= 4, |Z1|+|Z2| >= 6, |Z3| = 1: |Q| >= 2(|Z1|+|Z2|) + 3r - 12.
    B1,
    /// |Z2| = |Z3| = 1: |Q| >= 2|Z1| + 3r - 6.
    B2,
    /// |Z1| = |Z2| = |Z3| = 1: |Q| >= 3r.
    B3,
    /// |Z3| = 1: min{ 2(|Z1|+|Z2|) + 3r - 10, r(|Z1|+|Z2|)/2 }.
    LemB,
    /// r >= 4, |Z1|+|Z2| >= 8, |Z3| = |Z4| = 1: |Q| >= 2(|Z1|+|Z2|) + 4r - 16.
    C1,
    /// |Z2| = |Z3| = |Z4| = 1: |Q| >= 2|Z1| + 4r - 8.
    C2,
    /// all singletons: |Q| >= 4r.
    C3,
    /// |Z3| = |Z4| = 1: min{ 2(|Z1|+|Z2|) + 4r - 14, r(|Z1|+|Z2|)/2 }.
    LemC,
}

pub const ALL_BOUND_KINDS: [BoundKind; 15] = [
    BoundKind::L1Base,
    BoundKind::A1,
    BoundKind::A2,
    BoundKind::A3,
    BoundKind::A4,
    BoundKind::A5,
    BoundKind::LemA,
    BoundKind::B1,
    BoundKind::B2,
    BoundKind::B3,
    BoundKind::LemB,
    BoundKind::C1,
    BoundKind::C2,
    BoundKind::C3,
    BoundKind::LemC,
];

impl BoundKind {
    pub fn name(self) -> &'static str {
        match self {
            BoundKind::L1Base => "L1-base",
            BoundKind::A1 => "a1",
            BoundKind::A2 => "a2",
            BoundKind::A3 => "a3",
            BoundKind::A4 => "a4",
            BoundKind::A5 => "a5",
            BoundKind::LemA => "LA",
            BoundKind::B1 => "b1",
            BoundKind::B2 => "b2",
            BoundKind::B3 => "b3",
            BoundKind::LemB => "LB",
            BoundKind::C1 => "c1",
            BoundKind::C2 => "c2",
            BoundKind::C3 => "c3",
            BoundKind::LemC => "LC",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        ALL_BOUND_KINDS.iter().copied().find(|k| k.name() == name)
    }

    /// The min-form clauses whose small-r behaviour is only logged for
    /// review, never asserted, at r in {2, 3}.
    pub fn review_only_at_small_r(self) -> bool {
        matches!(self, BoundKind::LemB | BoundKind::LemC)
    }
}

/// Size data a clause consumes: |Z_1|..|Z_p| (positional), |Z_1 u Z_2|, r.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SchemeSizes {
    pub z: [usize; 4],
    pub p: usize,
    pub union12: usize,
    pub r: usize,
}

impl SchemeSizes {
    pub fn of_scheme(s: &Scheme) -> Self {
        let mut z = [0usize; 4];
        for (i, zs) in s.zsets.iter().enumerate().take(4) {
            z[i] = zs.len();
        }
        SchemeSizes {
            z,
            p: s.p().min(4),
            union12: s.zsets[0].union(s.zsets[1]).len(),
            r: s.r,
        }
    }

    fn z12(&self) -> usize {
        self.z[0] + self.z[1]
    }
}

/// Does the clause's guard hold for these sizes?
pub fn clause_guard(kind: BoundKind, s: &SchemeSizes) -> std::result::Result<(), String> {
    let need = |ok: bool, why: &str| if ok { Ok(()) } else { Err(why.to_string()) };
    match kind {
        BoundKind::L1Base => need(s.r >= 3, "needs r >= 3"),
        BoundKind::A1 => need(s.r == 4, "needs r = 4"),
        BoundKind::A2 => need(s.r >= 5, "needs r >= 5"),
        BoundKind::A3 => need(s.z[1] == 1, "needs |Z2| = 1"),
        BoundKind::A4 => need(s.z[0] == 1 && s.z[1] == 1, "needs |Z1| = |Z2| = 1"),
        BoundKind::A5 => need(s.z12() >= 4 && s.r >= 4, "needs |Z1|+|Z2| >= 4 and r >= 4"),
        BoundKind::LemA => Ok(()),
        BoundKind::B1 => need(
            s.p >= 3 && s.r >= 4 && s.z12() >= 6 && s.z[2] == 1,
            "needs p >= 3, r >= 4, |Z1|+|Z2| >= 6, |Z3| = 1",
        ),
        BoundKind::B2 => need(s.p >= 3 && s.z[1] == 1 && s.z[2] == 1, "needs p >= 3, |Z2| = |Z3| = 1"),
        BoundKind::B3 => need(
            s.p >= 3 && s.z[0] == 1 && s.z[1] == 1 && s.z[2] == 1,
            "needs p >= 3 and singleton Z1, Z2, Z3",
        ),
        BoundKind::LemB => need(s.p >= 3 && s.z[2] == 1, "needs p >= 3 and |Z3| = 1"),
        BoundKind::C1 => need(
            s.p >= 4 && s.r >= 4 && s.z12() >= 8 && s.z[2] == 1 && s.z[3] == 1,
            "needs p >= 4, r >= 4, |Z1|+|Z2| >= 8, |Z3| = |Z4| = 1",
        ),
        BoundKind::C2 => need(
            s.p >= 4 && s.z[1] == 1 && s.z[2] == 1 && s.z[3] == 1,
            "needs p >= 4, |Z2| = |Z3| = |Z4| = 1",
        ),
        BoundKind::C3 => need(
            s.p >= 4 && s.z.iter().take(4).all(|&x| x == 1),
            "needs p >= 4 and four singletons",
        ),
        BoundKind::LemC => need(
            s.p >= 4 && s.z[2] == 1 && s.z[3] == 1,
            "needs p >= 4 and |Z3| = |Z4| = 1",
        ),
    }
}

/// Clause value doubled (so the half-integer min-forms stay exact).
fn clause_value_x2(kind: BoundKind, s: &SchemeSizes) -> i64 {
    let z1 = s.z[0] as i64;
    let z12 = s.z12() as i64;
    let r = s.r as i64;
    match kind {
        BoundKind::L1Base => 2 * (z12 + s.union12 as i64),
        BoundKind::A1 => 2 * (2 * z12),
        BoundKind::A2 => 2 * (2 * z12 + r - 3),
        BoundKind::A3 => 2 * (2 * z1 + 2 * r - 4),
        BoundKind::A4 => 2 * (2 * r),
        BoundKind::A5 => 2 * (2 * z12 + 2 * r - 8),
        BoundKind::LemA => (2 * (2 * z12 + 2 * r - 6)).min(r * z12),
        BoundKind::B1 => 2 * (2 * z12 + 3 * r - 12),
        BoundKind::B2 => 2 * (2 * z1 + 3 * r - 6),
        BoundKind::B3 => 2 * (3 * r),
        BoundKind::LemB => (2 * (2 * z12 + 3 * r - 10)).min(r * z12),
        BoundKind::C1 => 2 * (2 * z12 + 4 * r - 16),
        BoundKind::C2 => 2 * (2 * z1 + 4 * r - 8),
        BoundKind::C3 => 2 * (4 * r),
        BoundKind::LemC => (2 * (2 * z12 + 4 * r - 14)).min(r * z12),
    }
}

/// The clause's closed-form lower bound on |Q| (rounded up where the
/// min-form lands on a half), after checking the clause guard.
pub fn scheme_lower_bound(kind: BoundKind, sizes: &SchemeSizes) -> Result<usize> {
    if let Err(reason) = clause_guard(kind, sizes) {
        return Err(Error::ClauseGuard { clause: kind.name(), reason });
    }
    let x2 = clause_value_x2(kind, sizes);
    Ok(if x2 <= 0 { 0 } else { ((x2 + 1) / 2) as usize })
}

/// One clause outcome within an audit.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClauseOutcome {
    pub clause: String,
    pub bound: usize,
    pub q_len: usize,
    pub pass: bool,
    /// True for LB/LC misses at r in {2, 3}: logged for review, not failed.
    pub flagged: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchemeAudit {
    pub q_len: usize,
    pub r: usize,
    pub sizes: Vec<usize>,
    pub outcomes: Vec<ClauseOutcome>,
}

impl SchemeAudit {
    pub fn all_pass(&self) -> bool {
        self.outcomes.iter().all(|o| o.pass || o.flagged)
    }
}

/// Evaluate every clause whose guard the scheme satisfies and compare each
/// bound against |Q|. Refuses invalid or trivial schemes.
pub fn audit_scheme_lemmas(s: &Scheme) -> Result<SchemeAudit> {
    if !validate_scheme(s)? {
        return Err(Error::AuditRefused { reason: "invalid" });
    }
    if !is_nontrivial(&s.zsets) {
        return Err(Error::AuditRefused { reason: "trivial" });
    }
    let sizes = SchemeSizes::of_scheme(s);
    let q_len = s.cycle.length();
    let mut outcomes = Vec::new();
    for kind in ALL_BOUND_KINDS {
        if clause_guard(kind, &sizes).is_err() {
            continue;
        }
        let bound = scheme_lower_bound(kind, &sizes)?;
        let pass = bound <= q_len;
        let flagged = !pass && kind.review_only_at_small_r() && sizes.r <= 3;
        outcomes.push(ClauseOutcome {
            clause: kind.name().to_string(),
            bound,
            q_len,
            pass,
            flagged,
        });
    }
    Ok(SchemeAudit { q_len, r: s.r, sizes: s.zsets.iter().map(|z| z.len()).collect(), outcomes })
}

/// Configuration for the exhaustive soundness sweep.
#[derive(Debug, Clone, Copy)]
pub struct SweepConfig {
    /// Largest cycle length to cover (inclusive); cycles start at |Q| = 3.
    pub max_q: usize,
    /// Largest per-set size (the sweep space fixes 3).
    pub max_set_size: usize,
    /// Negative-control hook: inflate every bound by one to prove the sweep
    /// detects violations.
    pub corrupt_bounds: bool,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig { max_q: 14, max_set_size: 3, corrupt_bounds: false }
    }
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct SweepReport {
    pub schemes_checked: u64,
    /// Hard violations: applicable clause whose bound exceeds |Q|.
    pub violations: Vec<String>,
    /// LB/LC misses at r in {2, 3}, logged for human review.
    pub review_log: Vec<String>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    fn merge(mut self, other: SweepReport) -> SweepReport {
        self.schemes_checked += other.schemes_checked;
        self.violations.extend(other.violations);
        self.review_log.extend(other.review_log);
        self
    }
}

/// Machine-check every bound clause over all cycles 3 <= |Q| <= max_q, all
/// r <= |Q|/2, and every Z-family with p in {2,3,4} and |Z_i| <= 3, reduced
/// by the cycle's rotations and reflections and by set-index permutation
/// (families are enumerated size-descending).
pub fn soundness_sweep(cfg: &SweepConfig) -> SweepReport {
    let mut jobs = Vec::new();
    for q in 3..=cfg.max_q {
        for r in 2..=(q / 2).max(2) {
            if r >= 2 && r <= q / 2 {
                jobs.push((q, r));
            }
        }
    }
    jobs.par_iter()
        .map(|&(q, r)| sweep_one(q, r, cfg))
        .reduce(SweepReport::default, SweepReport::merge)
}

fn sweep_one(q: usize, r: usize, cfg: &SweepConfig) -> SweepReport {
    let mut report = SweepReport::default();
    for u in canonical_spread_subsets(q) {
        sweep_families(q, r, &u, cfg, &mut report);
    }
    report
}

/// Subsets of the cycle Z_q with pairwise circular distance >= 2 (every
/// scheme's union set is such a subset), canonical under rotation and
/// reflection.
fn canonical_spread_subsets(q: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = Vec::new();
    fn rec(q: usize, next: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if !cur.is_empty() && is_canonical_under_dihedral(q, cur) {
            out.push(cur.clone());
        }
        for v in next..q {
            // circular spacing >= 2 against the previous pick and the wrap.
            if let Some(&last) = cur.last() {
                if v - last < 2 {
                    continue;
                }
            }
            if !cur.is_empty() && q + cur[0] - v < 2 {
                continue;
            }
            cur.push(v);
            rec(q, v + 2, cur, out);
            cur.pop();
        }
    }
    rec(q, 0, &mut cur, &mut out);
    out
}

fn is_canonical_under_dihedral(q: usize, set: &[usize]) -> bool {
    let mask = |vs: &[usize]| -> u64 { vs.iter().fold(0u64, |m, &v| m | 1 << v) };
    let base = mask(set);
    for rot in 0..q {
        for refl in [false, true] {
            let mapped: Vec<usize> = set
                .iter()
                .map(|&v| {
                    let w = if refl { (q - v) % q } else { v };
                    (w + rot) % q
                })
                .collect();
            if mask(&mapped) < base {
                return false;
            }
        }
    }
    true
}

fn sweep_families(q: usize, r: usize, u: &[usize], cfg: &SweepConfig, report: &mut SweepReport) {
    let k = u.len();
    if k > 12 {
        return;
    }
    // Candidate Z-sets as masks over the positions of `u`.
    let mut candidates: Vec<u16> = (1u16..1 << k)
        .filter(|m| (m.count_ones() as usize) <= cfg.max_set_size)
        .collect();
    // Canonical family order: size descending, mask ascending.
    candidates.sort_by_key(|m| (std::cmp::Reverse(m.count_ones()), *m));

    // far[i][j]: may positions i and j appear in different sets?
    let mut far = [[false; 12]; 12];
    for i in 0..k {
        for j in 0..k {
            if i != j {
                let d = (u[j] + q - u[i]) % q;
                far[i][j] = d.min(q - d) >= r;
            }
        }
    }
    let cross_ok = |a: u16, b: u16| -> bool {
        for i in 0..k {
            if a >> i & 1 == 0 {
                continue;
            }
            for j in 0..k {
                if b >> j & 1 == 1 && i != j && !far[i][j] {
                    return false;
                }
            }
        }
        true
    };

    let full: u16 = (1 << k) - 1;
    let mut chosen: Vec<u16> = Vec::new();
    sweep_rec(q, r, u, &candidates, 0, full, &mut chosen, &cross_ok, cfg, report);
}

#[allow(clippy::too_many_arguments)]
fn sweep_rec(
    q: usize,
    r: usize,
    u: &[usize],
    candidates: &[u16],
    from: usize,
    full: u16,
    chosen: &mut Vec<u16>,
    cross_ok: &dyn Fn(u16, u16) -> bool,
    cfg: &SweepConfig,
    report: &mut SweepReport,
) {
    if chosen.len() >= 2 {
        let union: u16 = chosen.iter().fold(0, |a, &b| a | b);
        // Only the exact-union families belong to this `u`; smaller unions
        // are enumerated under their own canonical subset.
        if union == full && sdr_exists(chosen, u.len()) {
            report.schemes_checked += 1;
            audit_masks(q, r, u, chosen, cfg, report);
        }
    }
    if chosen.len() == 4 {
        return;
    }
    for idx in from..candidates.len() {
        let cand = candidates[idx];
        if chosen.iter().all(|&prev| cross_ok(prev, cand)) {
            chosen.push(cand);
            sweep_rec(q, r, u, candidates, idx, full, chosen, cross_ok, cfg, report);
            chosen.pop();
        }
    }
}

fn sdr_exists(sets: &[u16], k: usize) -> bool {
    fn rec(sets: &[u16], i: usize, used: u16, k: usize) -> bool {
        if i == sets.len() {
            return true;
        }
        for v in 0..k {
            if sets[i] >> v & 1 == 1 && used >> v & 1 == 0 && rec(sets, i + 1, used | 1 << v, k) {
                return true;
            }
        }
        false
    }
    rec(sets, 0, 0, k)
}

fn audit_masks(
    q: usize,
    r: usize,
    u: &[usize],
    masks: &[u16],
    cfg: &SweepConfig,
    report: &mut SweepReport,
) {
    let mut z = [0usize; 4];
    for (i, m) in masks.iter().enumerate() {
        z[i] = m.count_ones() as usize;
    }
    let sizes = SchemeSizes {
        z,
        p: masks.len(),
        union12: (masks[0] | masks[1]).count_ones() as usize,
        r,
    };
    for kind in ALL_BOUND_KINDS {
        if clause_guard(kind, &sizes).is_err() {
            continue;
        }
        let mut x2 = clause_value_x2(kind, &sizes);
        if cfg.corrupt_bounds {
            x2 += 2;
        }
        if x2 > 2 * q as i64 {
            let describe = || {
                let sets: Vec<Vec<usize>> = masks
                    .iter()
                    .map(|m| (0..u.len()).filter(|i| m >> i & 1 == 1).map(|i| u[i]).collect())
                    .collect();
                format!(
                    "{}: |Q|={q} r={r} sets={sets:?} bound_x2={x2}",
                    kind.name()
                )
            };
            if kind.review_only_at_small_r() && r <= 3 {
                report.review_log.push(describe());
            } else {
                report.violations.push(describe());
            }
        }
    }
}
