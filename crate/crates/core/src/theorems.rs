//! Statement predicates: the main 4-connected circumference/dominating-cycle
//! dichotomy (T1), its four endfragment-conditioned refinements (T2-T5), the
//! prior lettered results kept as regression oracles (A-M), the small
//! auxiliary dichotomy (Lemma4), two open conjectures (hunt-only), plus
//! tightness certification of the three limit examples.

use crate::budget::SearchCtx;
use crate::cycle::{circumference, dominating_witness_ok, find_dominating_cycle, has_hamilton_cycle, CycleSeq};
use crate::error::{Error, Result};
use crate::fragments::endfragments_of;
use crate::graph::{construct_h, m_ka_plus_kb, Graph, VertexSet};
use crate::invariants::{connectivity, independence_number, min_degree};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum StatementId {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
    H,
    I,
    J,
    K,
    L,
    M,
    Lemma4,
    T1,
    /// T1 with the cycle bound tightened by one; a deliberately false
    /// variant kept for demonstrating counterexample detection.
    T1Strict,
    T2,
    T3,
    T4,
    T5,
    Conjecture1,
    Conjecture2,
}

impl StatementId {
    pub fn name(self) -> &'static str {
        use StatementId::*;
        match self {
            A => "A",
            B => "B",
            C => "C",
            D => "D",
            E => "E",
            F => "F",
            G => "G",
            H => "H",
            I => "I",
            J => "J",
            K => "K",
            L => "L",
            M => "M",
            Lemma4 => "Lemma4",
            T1 => "T1",
            T1Strict => "T1-strict",
            T2 => "T2",
            T3 => "T3",
            T4 => "T4",
            T5 => "T5",
            Conjecture1 => "Conj1",
            Conjecture2 => "Conj2",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        ALL_STATEMENTS
            .iter()
            .copied()
            .find(|id| id.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownStatement(s.to_string()))
    }

    /// Conjectures are evaluated in hunt mode only, never asserted by the
    /// test suites.
    pub fn is_conjecture(self) -> bool {
        matches!(self, StatementId::Conjecture1 | StatementId::Conjecture2)
    }

    fn needs_alpha(self) -> bool {
        use StatementId::*;
        matches!(self, C | D | E | H | I | Conjecture1)
    }
}

pub const ALL_STATEMENTS: [StatementId; 22] = [
    StatementId::A,
    StatementId::B,
    StatementId::C,
    StatementId::D,
    StatementId::E,
    StatementId::F,
    StatementId::G,
    StatementId::H,
    StatementId::I,
    StatementId::J,
    StatementId::K,
    StatementId::L,
    StatementId::M,
    StatementId::Lemma4,
    StatementId::T1,
    StatementId::T1Strict,
    StatementId::T2,
    StatementId::T3,
    StatementId::T4,
    StatementId::T5,
    StatementId::Conjecture1,
    StatementId::Conjecture2,
];

/// What a true conclusion was witnessed by.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Witness {
    HamiltonCycle(CycleSeq),
    LongCycle(CycleSeq),
    DominatingCycle(CycleSeq),
    /// The conclusion holds vacuously (a non-positive bound).
    TrivialBound,
}

/// Invariants gathered while evaluating one statement; alpha and the
/// circumference are only computed when the statement needs them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize, Default)]
pub struct StatementStats {
    pub n: usize,
    pub delta: usize,
    pub kappa: usize,
    pub alpha: Option<usize>,
    pub circumference: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub statement: String,
    pub applicable: bool,
    /// Meaningful only when applicable.
    pub holds: bool,
    pub witness: Option<Witness>,
    pub invariants_used: StatementStats,
}

impl Verdict {
    pub fn is_counterexample(&self) -> bool {
        self.applicable && !self.holds
    }
}

/// The shared conclusion of T1/T2-T5/Lemma4 style statements: a cycle of
/// length at least `bound`, or a dominating cycle.
fn cycle_or_dominating(
    g: &Graph,
    bound: i64,
    stats: &mut StatementStats,
    ctx: &mut SearchCtx,
) -> Result<(bool, Option<Witness>)> {
    if bound <= 0 {
        return Ok((true, Some(Witness::TrivialBound)));
    }
    let (c, cyc) = circumference(g, ctx)?;
    stats.circumference = Some(c);
    if c as i64 >= bound {
        return Ok((true, cyc.map(Witness::LongCycle)));
    }
    if let Some(dom) = find_dominating_cycle(g, ctx)? {
        return Ok((true, Some(Witness::DominatingCycle(dom))));
    }
    Ok((false, None))
}

fn min_n_bound(n: usize, alt: i64) -> i64 {
    (n as i64).min(alt)
}

fn circumference_at_least(
    g: &Graph,
    bound: i64,
    stats: &mut StatementStats,
    ctx: &mut SearchCtx,
) -> Result<(bool, Option<Witness>)> {
    if bound <= 0 {
        return Ok((true, Some(Witness::TrivialBound)));
    }
    let (c, cyc) = circumference(g, ctx)?;
    stats.circumference = Some(c);
    if c as i64 >= bound {
        Ok((true, cyc.map(Witness::LongCycle)))
    } else {
        Ok((false, None))
    }
}

fn hamiltonian(g: &Graph, ctx: &mut SearchCtx) -> Result<(bool, Option<Witness>)> {
    let (yes, cyc) = has_hamilton_cycle(g, ctx)?;
    Ok((yes, cyc.map(Witness::HamiltonCycle)))
}

/// Evaluate one statement on one graph. T2-T5 route through the
/// endfragment machinery; everything else is direct.
pub fn check_statement(g: &Graph, id: StatementId, ctx: &mut SearchCtx) -> Result<Verdict> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    if matches!(id, StatementId::T2 | StatementId::T3 | StatementId::T4 | StatementId::T5) {
        return check_theorem_2_to_5_statement(g, id, ctx);
    }
    let n = g.n();
    let delta = min_degree(g)?;
    let kappa = connectivity(g)?;
    let mut stats = StatementStats { n, delta, kappa, alpha: None, circumference: None };
    if id.needs_alpha() {
        stats.alpha = Some(independence_number(g)?.0);
    }
    let d = delta as i64;
    let k = kappa as i64;
    let nn = n as i64;
    let alpha_ok = |stats: &StatementStats| delta >= stats.alpha.unwrap();

    use StatementId::*;
    let (applicable, outcome) = match id {
        A => (2 * d >= nn, hamiltonian(g, ctx)?),
        B => (kappa >= 2 && 3 * d >= nn + k, hamiltonian(g, ctx)?),
        C => (kappa >= 2 && 3 * d >= nn + 2 && alpha_ok(&stats), hamiltonian(g, ctx)?),
        D => (kappa >= 3 && 4 * d >= nn + 2 * k && alpha_ok(&stats), hamiltonian(g, ctx)?),
        E => (kappa >= 3 && 4 * d >= nn + k + 3 && alpha_ok(&stats), hamiltonian(g, ctx)?),
        F => (kappa >= 2, circumference_at_least(g, min_n_bound(n, 2 * d), &mut stats, ctx)?),
        G => (kappa >= 3, circumference_at_least(g, min_n_bound(n, 3 * d - k), &mut stats, ctx)?),
        H => (
            kappa >= 3 && alpha_ok(&stats),
            circumference_at_least(g, min_n_bound(n, 3 * d - 3), &mut stats, ctx)?,
        ),
        I => (
            kappa >= 4 && alpha_ok(&stats),
            circumference_at_least(g, min_n_bound(n, 4 * d - 2 * k), &mut stats, ctx)?,
        ),
        J => {
            let concl = find_dominating_cycle(g, ctx)?;
            (
                kappa >= 2 && 3 * d >= nn + 2,
                (concl.is_some(), concl.map(Witness::DominatingCycle)),
            )
        }
        K => {
            let concl = find_dominating_cycle(g, ctx)?;
            (
                kappa >= 3 && 4 * d >= nn + 2 * k,
                (concl.is_some(), concl.map(Witness::DominatingCycle)),
            )
        }
        L => {
            let concl = find_dominating_cycle(g, ctx)?;
            (
                kappa >= 3 && 4 * d >= nn + k + 3,
                (concl.is_some(), concl.map(Witness::DominatingCycle)),
            )
        }
        M => (kappa >= 3, cycle_or_dominating(g, 3 * d - 3, &mut stats, ctx)?),
        Lemma4 => (
            kappa >= 3 && d <= 2 * k - 3,
            cycle_or_dominating(g, 4 * d - 2 * k, &mut stats, ctx)?,
        ),
        T1 => (kappa >= 4, cycle_or_dominating(g, 4 * d - 2 * k, &mut stats, ctx)?),
        T1Strict => (kappa >= 4, cycle_or_dominating(g, 4 * d - 2 * k + 1, &mut stats, ctx)?),
        Conjecture1 => (
            kappa >= 4 && alpha_ok(&stats),
            circumference_at_least(g, min_n_bound(n, 4 * d - k - 4), &mut stats, ctx)?,
        ),
        Conjecture2 => (kappa >= 4, cycle_or_dominating(g, 4 * d - k - 4, &mut stats, ctx)?),
        T2 | T3 | T4 | T5 => unreachable!(),
    };
    let (holds, witness) = outcome;
    Ok(Verdict {
        statement: id.name().to_string(),
        applicable,
        holds,
        witness,
        invariants_used: stats,
    })
}

pub fn check_theorem1(g: &Graph, ctx: &mut SearchCtx) -> Result<Verdict> {
    check_statement(g, StatementId::T1, ctx)
}

/// Size-regime classification of one endfragment: the up side against
/// 3*delta - kappa - 4 and the down side against 3*delta - 3*kappa + 1
/// (each pair of ranges is complementary).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SizeRegime {
    /// up small, down small: the 3-connected statement (T2).
    BothSmall,
    /// up small, down large (T3).
    UpSmallDownLarge,
    /// up large, down small (T4).
    UpLargeDownSmall,
    /// both large (T5).
    BothLarge,
}

impl SizeRegime {
    pub fn theorem(self) -> StatementId {
        match self {
            SizeRegime::BothSmall => StatementId::T2,
            SizeRegime::UpSmallDownLarge => StatementId::T3,
            SizeRegime::UpLargeDownSmall => StatementId::T4,
            SizeRegime::BothLarge => StatementId::T5,
        }
    }

    pub fn classify(delta: usize, kappa: usize, a_up: usize, a_down: usize) -> Self {
        let up_small = (a_up as i64) <= 3 * delta as i64 - kappa as i64 - 4;
        let down_small = (a_down as i64) <= 3 * delta as i64 - 3 * kappa as i64 + 1;
        match (up_small, down_small) {
            (true, true) => SizeRegime::BothSmall,
            (true, false) => SizeRegime::UpSmallDownLarge,
            (false, true) => SizeRegime::UpLargeDownSmall,
            (false, false) => SizeRegime::BothLarge,
        }
    }
}

/// Per-endfragment record produced by the T2-T5 classifier.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EndfragmentVerdict {
    pub endfragment: VertexSet,
    pub a_up_size: usize,
    pub a_down_size: usize,
    pub regime: SizeRegime,
    /// The theorem this endfragment falls under.
    pub theorem: String,
    /// Whether that theorem's connectivity hypothesis holds here.
    pub applicable: bool,
    /// The |A-up| >= |A-down| convention holds with the endfragment on the
    /// down side (always true when the endfragment is the smaller side).
    pub convention_ok: bool,
    /// No statement covers a 3-connected graph outside the T2 size regime.
    pub uncovered: bool,
    /// The shared conclusion; evaluated once per graph.
    pub holds: bool,
}

/// Classify every endfragment and evaluate the shared conclusion. Exactly
/// one regime applies per endfragment; T2 needs 3-connectivity, T3-T5 need
/// 4-connectivity.
pub fn check_theorems_2_to_5(g: &Graph, ctx: &mut SearchCtx) -> Result<Vec<EndfragmentVerdict>> {
    let delta = min_degree(g)?;
    let kappa = connectivity(g)?;
    let mut stats = StatementStats { n: g.n(), delta, kappa, alpha: None, circumference: None };
    let (holds, _) = cycle_or_dominating(g, 4 * delta as i64 - 2 * kappa as i64, &mut stats, ctx)?;
    let mut out = Vec::new();
    for e in endfragments_of(g)? {
        let a_down = e.x;
        let a_up = e.hat;
        let convention_ok = a_up.len() >= a_down.len();
        let regime = SizeRegime::classify(delta, kappa, a_up.len(), a_down.len());
        let needs = match regime.theorem() {
            StatementId::T2 => 3,
            _ => 4,
        };
        let applicable = kappa >= needs && convention_ok;
        out.push(EndfragmentVerdict {
            endfragment: a_down,
            a_up_size: a_up.len(),
            a_down_size: a_down.len(),
            regime,
            theorem: regime.theorem().name().to_string(),
            applicable,
            convention_ok,
            uncovered: !applicable,
            holds,
        });
    }
    Ok(out)
}

/// Statement-level verdict for one of T2-T5: applicable iff some
/// endfragment falls in that theorem's regime with the connectivity
/// hypothesis; the conclusion is shared.
fn check_theorem_2_to_5_statement(
    g: &Graph,
    id: StatementId,
    ctx: &mut SearchCtx,
) -> Result<Verdict> {
    let delta = min_degree(g)?;
    let kappa = connectivity(g)?;
    let mut stats = StatementStats { n: g.n(), delta, kappa, alpha: None, circumference: None };
    let records = check_theorems_2_to_5(g, ctx)?;
    let applicable = records
        .iter()
        .any(|r| r.applicable && r.theorem == id.name());
    let (holds, witness) =
        cycle_or_dominating(g, 4 * delta as i64 - 2 * kappa as i64, &mut stats, ctx)?;
    Ok(Verdict {
        statement: id.name().to_string(),
        applicable,
        holds,
        witness,
        invariants_used: stats,
    })
}

/// Re-validate a verdict's witness independently of the search that found
/// it: cycles are re-walked edge by edge and dominating complements
/// re-checked for independence.
pub fn witness_revalidates(g: &Graph, v: &Verdict) -> bool {
    match &v.witness {
        None => true,
        Some(Witness::TrivialBound) => true,
        Some(Witness::HamiltonCycle(c)) => {
            c.vertex_set() == g.vertices() && dominating_witness_ok(g, c)
        }
        Some(Witness::LongCycle(c)) => {
            // Structural validity: distinct vertices, consecutive adjacency.
            let k = c.vertices().len();
            k >= 3
                && c.vertex_set().len() == k
                && (0..k).all(|i| g.has_edge(c.vertices()[i], c.vertices()[(i + 1) % k]))
        }
        Some(Witness::DominatingCycle(c)) => dominating_witness_ok(g, c),
    }
}

/// One certified claim about a limit example.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertifiedClaim {
    pub example: String,
    pub claim: String,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificationReport {
    pub claims: Vec<CertifiedClaim>,
}

impl CertificationReport {
    pub fn passed(&self) -> bool {
        self.claims.iter().all(|c| c.pass)
    }
}

/// Certify the three tightness examples at their stated parameters; every
/// value is recomputed by the exact searches.
pub fn certify_limit_examples(ctx: &mut SearchCtx) -> Result<CertificationReport> {
    let mut claims = Vec::new();
    let mut claim = |example: &str, what: &str, pass: bool| {
        claims.push(CertifiedClaim { example: example.to_string(), claim: what.to_string(), pass });
    };

    // 4K2 + K3: 3-connected, fails the whole conclusion.
    let g = m_ka_plus_kb(4, 2, 3)?;
    let inv = crate::invariants::invariant_record(&g)?;
    let (c, _) = circumference(&g, ctx)?;
    let dom = find_dominating_cycle(&g, ctx)?;
    claim("4K2+K3", "n = 11", inv.n == 11);
    claim("4K2+K3", "delta = 4", inv.delta == 4);
    claim("4K2+K3", "kappa = 3", inv.kappa == 3);
    claim("4K2+K3", "alpha = 4", inv.alpha == 4);
    claim("4K2+K3", "c = 9", c == 9);
    claim("4K2+K3", "no dominating cycle", dom.is_none());
    claim("4K2+K3", "c < 4*delta - 2*kappa", (c as i64) < 4 * inv.delta as i64 - 2 * inv.kappa as i64);
    let t1 = check_theorem1(&g, ctx)?;
    claim("4K2+K3", "T1 not applicable at kappa = 3", !t1.applicable);
    claim("4K2+K3", "T1 conclusion fails", !t1.holds);

    // 5K2 + K4: conclusion tight, bound not improvable.
    let g = m_ka_plus_kb(5, 2, 4)?;
    let delta = min_degree(&g)?;
    let kappa = connectivity(&g)?;
    let (c, _) = circumference(&g, ctx)?;
    let dom = find_dominating_cycle(&g, ctx)?;
    claim("5K2+K4", "n = 14", g.n() == 14);
    claim("5K2+K4", "delta = 5", delta == 5);
    claim("5K2+K4", "kappa = 4", kappa == 4);
    claim("5K2+K4", "c = 12", c == 12);
    claim("5K2+K4", "c = 4*delta - 2*kappa exactly", c as i64 == 4 * delta as i64 - 2 * kappa as i64);
    claim("5K2+K4", "no dominating cycle", dom.is_none());
    let t1 = check_theorem1(&g, ctx)?;
    claim("5K2+K4", "T1 applicable and holds with equality", t1.applicable && t1.holds);
    let strict = check_statement(&g, StatementId::T1Strict, ctx)?;
    claim("5K2+K4", "bound + 1 variant fails", strict.is_counterexample());

    // H(1,3,5,4): dominating cycle exists, Hamilton cycle does not.
    let g = construct_h(1, 3, 5, 4)?;
    let delta = min_degree(&g)?;
    let kappa = connectivity(&g)?;
    let dom = find_dominating_cycle(&g, ctx)?;
    let (ham, _) = has_hamilton_cycle(&g, ctx)?;
    claim("H(1,3,5,4)", "n = 13", g.n() == 13);
    claim("H(1,3,5,4)", "delta = 5", delta == 5);
    claim("H(1,3,5,4)", "kappa = 4", kappa == 4);
    claim(
        "H(1,3,5,4)",
        "dominating cycle exists",
        dom.as_ref().is_some_and(|c| dominating_witness_ok(&g, c)),
    );
    claim("H(1,3,5,4)", "no Hamilton cycle", !ham);

    Ok(CertificationReport { claims })
}
