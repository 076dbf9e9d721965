//! Bounded classification of comb-shaped resolution graphs that fit a
//! degenerate-fiber template.
//!
//! The template describes how the resolution divisor of a unicuspidal
//! rational curve with `(C')^2 = -2` can sit inside a fibered surface:
//! two section curves `S1`, `S2` cross a degenerate fiber that carries two
//! `(-1)` curves `E21`, `E22` not belonging to the divisor, and the cusp
//! data may spill into a second degenerate fiber. Removing the `(-1)`
//! curves must leave a valid comb, and contracting them (together with the
//! chains they absorb) must land the whole picture on a fixed list of
//! self-intersections. Both conditions are implemented twice:
//!
//! * arithmetically, as adjoint identities between the chains next to the
//!   `(-1)` curves ([`check_tail_section_fiber`]), and
//! * geometrically, by actually contracting the template with the
//!   intersection engine ([`contract_template`]).
//!
//! [`bounded_search`] enumerates one free side of the fiber inside user
//! bounds, derives the other side by adjoint inversion, completes every
//! candidate to a comb, and keeps what survives both routes plus the final
//! rationality gate. Two of the four template shapes never produce
//! candidates at all; [`refute_pendant_section`] and [`refute_chain_cut`]
//! return machine-checked certificates of that, one structural fact each.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::chain::LinearChain;
use crate::contract::{CompId, CompKind, ContractError, IntersectionConfig};
use crate::orevkov::{OrevkovCurve, Variant};
use crate::resolution::{CuspProfile, PhaseCounts, ResolutionGraph};

/// Where the first section sits on the degenerate fiber.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SectionLayout {
    /// `S1` at the free end of the chain through `E21`, `S2` on the loop
    /// closed by the direct `S2`-`F2` edge.
    TailSection,
    /// `S1` pendant on `F2`; the chain through `E21` starts and ends on
    /// `S2`, closing the loop through the section itself.
    PendantSection,
}

/// Whether a second degenerate fiber carries part of the cusp data, and
/// where its own `(-1)` curve sits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SecondFiber {
    Absent,
    /// The `(-1)` curve interrupts the chain between `F1` and the fiber
    /// tail, stranding `T12`, `F11`, `F12` from the rest of the divisor.
    ChainCut,
    /// The `(-1)` curve sits past the fiber tail and runs into `S2`.
    TailCut,
}

/// Concrete chain data filling the template. Bracket convention: entries
/// are negated self-intersections, so `s1 = 3` means `S1^2 = -3`.
///
/// The parts of a second fiber that stay in the divisor (`F1`, `F11`,
/// `F12`) are pinned to `-2`: the tail `F12` is pushed exactly once before
/// it must itself contract, which fixes all three.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TemplateData {
    pub layout: SectionLayout,
    pub second: SecondFiber,
    pub s1: i64,
    pub t21: LinearChain,
    pub t22: LinearChain,
    pub f2: i64,
    pub t23: LinearChain,
    pub t24: LinearChain,
    pub s2: i64,
    pub t11: LinearChain,
    pub t12: LinearChain,
}

impl TemplateData {
    /// Data with the given shape and every variable part trivial; useful
    /// as a base to mutate in tests and refutations.
    pub fn bare(layout: SectionLayout, second: SecondFiber) -> Self {
        TemplateData {
            layout,
            second,
            s1: 2,
            t21: LinearChain::empty(),
            t22: LinearChain::empty(),
            f2: 2,
            t23: LinearChain::empty(),
            t24: LinearChain::empty(),
            s2: 3,
            t11: LinearChain::empty(),
            t12: LinearChain::empty(),
        }
    }
}

fn chain_ids(prefix: &str, c: &LinearChain) -> Vec<CompId> {
    (1..=c.len()).map(|j| format!("{prefix}.{j}")).collect()
}

fn add_chain(
    cfg: &mut IntersectionConfig,
    prefix: &str,
    c: &LinearChain,
) -> Result<Vec<CompId>, ContractError> {
    let ids = chain_ids(prefix, c);
    for (id, &e) in ids.iter().zip(c.entries()) {
        cfg.add_component(id, -e, CompKind::Divisor)?;
    }
    for w in ids.windows(2) {
        cfg.add_pair(&w[0], &w[1], 1)?;
    }
    Ok(ids)
}

fn link(
    cfg: &mut IntersectionConfig,
    left: &str,
    ids: &[CompId],
    right: &str,
) -> Result<(), ContractError> {
    match ids {
        [] => cfg.add_pair(left, right, 1),
        [only] => {
            cfg.add_pair(left, only, 1)?;
            cfg.add_pair(only, right, 1)
        }
        many => {
            cfg.add_pair(left, &many[0], 1)?;
            cfg.add_pair(&many[many.len() - 1], right, 1)
        }
    }
}

/// Build the full template configuration (divisor parts and the `(-1)`
/// curves) together with its contraction zones in the order they must be
/// contracted: first the far side of the fiber through `E22`, then the
/// near side through `E21`, then the second fiber if present, then the
/// curve-side pair `D0`, `C`.
pub fn template_config(
    d: &TemplateData,
) -> Result<(IntersectionConfig, Vec<BTreeSet<CompId>>), ContractError> {
    let mut cfg = IntersectionConfig::new();
    let div = CompKind::Divisor;
    cfg.add_component("C", -2, div)?;
    cfg.add_component("D0", -1, div)?;
    cfg.add_component("F0", -2, div)?;
    cfg.add_component("S1", -d.s1, div)?;
    cfg.add_component("S2", -d.s2, div)?;
    cfg.add_component("F2", -d.f2, div)?;
    cfg.add_component("E21", -1, div)?;
    cfg.add_component("E22", -1, div)?;
    let t21 = add_chain(&mut cfg, "T21", &d.t21)?;
    let t22 = add_chain(&mut cfg, "T22", &d.t22)?;
    let t23 = add_chain(&mut cfg, "T23", &d.t23)?;
    let t24 = add_chain(&mut cfg, "T24", &d.t24)?;

    match d.layout {
        SectionLayout::TailSection => {
            link(&mut cfg, "S1", &t21, "E21")?;
            // the direct edge that closes the fiber loop through S2
            cfg.add_pair("S2", "F2", 1)?;
        }
        SectionLayout::PendantSection => {
            link(&mut cfg, "S2", &t21, "E21")?;
            cfg.add_pair("S1", "F2", 1)?;
        }
    }
    link(&mut cfg, "E21", &t22, "F2")?;
    link(&mut cfg, "F2", &t23, "E22")?;
    link(&mut cfg, "E22", &t24, "S2")?;

    cfg.add_pair("C", "D0", 1)?;
    cfg.add_pair("D0", "F0", 1)?;
    cfg.add_pair("D0", "S2", 1)?;
    cfg.add_pair("F0", "S1", 1)?;

    let mut zones: Vec<BTreeSet<CompId>> = Vec::new();
    let far: BTreeSet<CompId> = t23
        .iter()
        .chain(t24.iter())
        .cloned()
        .chain(["E22".to_string()])
        .collect();
    let near: BTreeSet<CompId> = t21
        .iter()
        .chain(t22.iter())
        .cloned()
        .chain(["E21".to_string()])
        .collect();
    zones.push(far);
    zones.push(near);

    if d.second != SecondFiber::Absent {
        cfg.add_component("F1", -2, div)?;
        cfg.add_component("F11", -2, div)?;
        cfg.add_component("F12", -2, div)?;
        cfg.add_pair("S1", "F1", 1)?;
        let t11 = add_chain(&mut cfg, "T11", &d.t11)?;
        let t12 = add_chain(&mut cfg, "T12", &d.t12)?;
        let mut zone: BTreeSet<CompId> = t11.iter().chain(t12.iter()).cloned().collect();
        zone.extend(["F11".to_string(), "F12".to_string()]);
        match d.second {
            SecondFiber::TailCut => {
                cfg.add_component("E11", -1, div)?;
                cfg.add_pair("F1", "F11", 1)?;
                cfg.add_pair("F11", "F12", 1)?;
                link(&mut cfg, "F11", &t11, "E11")?;
                link(&mut cfg, "E11", &t12, "S2")?;
                zone.insert("E11".to_string());
            }
            SecondFiber::ChainCut => {
                cfg.add_component("E1", -1, div)?;
                link(&mut cfg, "F1", &t11, "E1")?;
                link(&mut cfg, "E1", &t12, "F11")?;
                cfg.add_pair("F11", "F12", 1)?;
                cfg.add_pair("S2", "E1", 1)?;
                zone.insert("E1".to_string());
            }
            SecondFiber::Absent => unreachable!(),
        }
        zones.push(zone);
    }

    zones.push(["D0".to_string(), "C".to_string()].into_iter().collect());
    Ok((cfg, zones))
}

/// What is left after contracting every template zone.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TemplateCollapse {
    pub s1: i64,
    pub s2: i64,
    /// Final self-intersections of the fiber parts that stay: `F0`, `F2`
    /// and, when a second fiber is present, `F1`.
    pub fiber_rests: Vec<(CompId, i64)>,
    pub steps: usize,
}

impl TemplateCollapse {
    /// The degeneration invariants: the first section lands on `-1`, the
    /// second on `+4`, and every surviving fiber part on `0`.
    pub fn invariants_hold(&self) -> bool {
        self.s1 == -1 && self.s2 == 4 && self.fiber_rests.iter().all(|(_, s)| *s == 0)
    }
}

/// Contract the template zones in order. Errors with `Stuck` when a zone
/// cannot be exhausted, which already disqualifies the data.
pub fn contract_template(d: &TemplateData) -> Result<TemplateCollapse, ContractError> {
    let (mut cfg, zones) = template_config(d)?;
    let mut steps = 0;
    for zone in &zones {
        steps += cfg.contract_set(zone)?.len();
    }
    let mut fiber_rests = vec![
        ("F0".to_string(), cfg.self_int("F0")?),
        ("F2".to_string(), cfg.self_int("F2")?),
    ];
    if d.second != SecondFiber::Absent {
        fiber_rests.push(("F1".to_string(), cfg.self_int("F1")?));
    }
    Ok(TemplateCollapse {
        s1: cfg.self_int("S1")?,
        s2: cfg.self_int("S2")?,
        fiber_rests,
        steps,
    })
}

/// Contact multiplicities read off by the arithmetic fiber conditions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FiberMatch {
    pub k12: i64,
    pub k34: i64,
}

fn split_last(c: &LinearChain) -> Option<(LinearChain, i64)> {
    let (&last, head) = c.entries().split_last()?;
    Some((LinearChain::new(head.to_vec()), last))
}

/// The arithmetic conditions for a tail-section fiber:
///
/// * `adj([s1, T21])` extends `T22` by a single entry `k12 + 1`,
/// * `adj([f2, T23])` reads `T24`, then `k34 + 1`, then `k12 - 1` twos,
/// * `s2 = k34 - 2` with no second fiber, `s2 = k34 + 1` with a tail-cut
///   one, whose own chains must satisfy `adj([2, T11]) = [T12, l + 1]`
///   with `l = s2 - k34`.
///
/// Returns the multiplicities when everything fits, `None` otherwise.
pub fn check_tail_section_fiber(d: &TemplateData) -> Option<FiberMatch> {
    if d.layout != SectionLayout::TailSection || d.t23.is_empty() {
        return None;
    }
    let side1 = LinearChain::single(d.s1).concat(&d.t21);
    if !side1.is_admissible() {
        return None;
    }
    let (head1, last1) = split_last(&side1.adjoint())?;
    if head1 != d.t22 {
        return None;
    }
    let k12 = last1 - 1;

    let side2 = LinearChain::single(d.f2).concat(&d.t23);
    if !side2.is_admissible() {
        return None;
    }
    let adj2 = side2.adjoint();
    let e = adj2.entries();
    let twos = (k12 - 1) as usize;
    if e.len() != d.t24.len() + 1 + twos {
        return None;
    }
    if !e[e.len() - twos..].iter().all(|&x| x == 2) {
        return None;
    }
    if e[..d.t24.len()] != *d.t24.entries() {
        return None;
    }
    let k34 = e[d.t24.len()] - 1;
    if k34 < 1 {
        return None;
    }

    match d.second {
        SecondFiber::Absent => {
            if d.s2 != k34 - 2 {
                return None;
            }
        }
        SecondFiber::TailCut => {
            if d.s2 != k34 + 1 {
                return None;
            }
            let tail = LinearChain::single(2).concat(&d.t11);
            let (head_t, last_t) = split_last(&tail.adjoint())?;
            if head_t != d.t12 || last_t - 1 != d.s2 - k34 {
                return None;
            }
        }
        SecondFiber::ChainCut => return None,
    }
    Some(FiberMatch { k12, k34 })
}

/// Certificate that the pendant-section layout is empty: no contraction
/// zone ever touches a neighbor of `S1`, a component's row of the
/// intersection form only changes when one of its neighbors is contracted,
/// and new neighbors only arise the same way. So `S1` keeps
/// self-intersection `-s1 <= -2` forever while the degeneration invariants
/// require it to reach `-1`.
#[derive(Debug, Clone, Serialize)]
pub struct PendantRefutation {
    pub second: SecondFiber,
    pub s1_neighbors: Vec<CompId>,
    /// How many of those neighbors lie in any contraction zone: always 0.
    pub neighbors_in_zones: usize,
    /// Engine runs over sample data: `(s1, final self-intersection of S1)`.
    pub sampled_finals: Vec<(i64, i64)>,
}

pub fn refute_pendant_section(second: SecondFiber) -> Result<PendantRefutation, ContractError> {
    let base = TemplateData::bare(SectionLayout::PendantSection, second);

    // the structural fact, also on fillings with nonempty chains
    let mut fillings = vec![base.clone()];
    let mut filled = base.clone();
    filled.t21 = LinearChain::new(vec![2]);
    filled.t23 = LinearChain::new(vec![3, 2]);
    filled.t11 = LinearChain::new(vec![2]);
    fillings.push(filled);
    let mut s1_neighbors = Vec::new();
    let mut neighbors_in_zones = 0;
    for d in &fillings {
        let (cfg, zones) = template_config(d)?;
        let nbs: Vec<CompId> = cfg.neighbors("S1").into_iter().map(|(id, _)| id).collect();
        neighbors_in_zones += nbs
            .iter()
            .filter(|n| zones.iter().any(|z| z.contains(*n)))
            .count();
        s1_neighbors = nbs;
    }
    assert_eq!(
        neighbors_in_zones, 0,
        "pendant layout keeps S1 clear of every contraction zone"
    );

    // engine runs on data whose zones do contract, showing S1 untouched
    let mut sampled_finals = Vec::new();
    for s1 in [2, 3, 5] {
        let mut d = base.clone();
        d.s1 = s1;
        let collapse = contract_template(&d)?;
        assert_eq!(collapse.s1, -s1, "S1 self-intersection must not move");
        sampled_finals.push((s1, collapse.s1));
    }
    Ok(PendantRefutation {
        second,
        s1_neighbors,
        neighbors_in_zones,
        sampled_finals,
    })
}

/// Certificate that a chain-cut second fiber is empty: its `(-1)` curve is
/// the only link between the `T12`-`F11`-`F12` side and the rest, so the
/// divisor part falls into two connected pieces, and a resolution dual
/// graph is connected.
#[derive(Debug, Clone, Serialize)]
pub struct ChainCutRefutation {
    pub layout: SectionLayout,
    pub divisor_components: usize,
    /// Connected pieces of the divisor part: always 2.
    pub connected_parts: usize,
    /// The piece not containing the curve.
    pub stranded: Vec<CompId>,
}

fn divisor_pieces(cfg: &IntersectionConfig, skip: &BTreeSet<CompId>) -> Vec<BTreeSet<CompId>> {
    let mut todo: BTreeSet<CompId> = cfg.ids().filter(|id| !skip.contains(*id)).cloned().collect();
    let mut pieces = Vec::new();
    while let Some(seed) = todo.iter().next().cloned() {
        let mut piece = BTreeSet::new();
        let mut stack = vec![seed];
        while let Some(id) = stack.pop() {
            if !todo.remove(&id) {
                continue;
            }
            for (n, _) in cfg.neighbors(&id) {
                if todo.contains(&n) {
                    stack.push(n);
                }
            }
            piece.insert(id);
        }
        pieces.push(piece);
    }
    pieces
}

pub fn refute_chain_cut(layout: SectionLayout) -> Result<ChainCutRefutation, ContractError> {
    let mut certificate = None;
    for (t11, t12) in [
        (LinearChain::empty(), LinearChain::empty()),
        (LinearChain::new(vec![2]), LinearChain::new(vec![3])),
    ] {
        let mut d = TemplateData::bare(layout, SecondFiber::ChainCut);
        d.t11 = t11;
        d.t12 = t12.clone();
        let (cfg, _) = template_config(&d)?;
        let skip: BTreeSet<CompId> = ["E21", "E22", "E1"].map(String::from).into_iter().collect();
        let pieces = divisor_pieces(&cfg, &skip);
        assert_eq!(pieces.len(), 2, "divisor part must fall apart");
        let stranded = pieces
            .iter()
            .find(|p| !p.contains("C"))
            .expect("one piece is curve-free")
            .clone();
        assert!(stranded.contains("F11") && stranded.contains("F12"));
        assert_eq!(stranded.len(), 2 + t12.len());
        certificate = Some(ChainCutRefutation {
            layout,
            divisor_components: cfg.len() - skip.len(),
            connected_parts: pieces.len(),
            stranded: stranded.into_iter().collect(),
        });
    }
    Ok(certificate.expect("loop ran"))
}

/// Bounds for [`bounded_search`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchBounds {
    /// Longest enumerated or solved-for chain (`T21`, `T22`, `T24`). The
    /// chain `T23` is derived by adjoint inversion and only weight-checked;
    /// its length grows with the number of comb levels. Zero disables the
    /// search entirely.
    pub max_chain_len: usize,
    /// Largest entry allowed in any chain of a candidate graph.
    pub max_weight: i64,
    /// Longest allowed `T24`, which caps how many levels the surviving
    /// family members can stack.
    pub max_k: usize,
}

impl Default for SearchBounds {
    fn default() -> Self {
        SearchBounds {
            max_chain_len: 6,
            max_weight: 9,
            max_k: 3,
        }
    }
}

/// A candidate that survived every gate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Survivor {
    pub graph: ResolutionGraph,
    pub o: Vec<i64>,
    pub profile: CuspProfile,
    pub phase_counts: Vec<PhaseCounts>,
    /// Whether the candidate came from the template with a second fiber.
    pub second_fiber: bool,
    /// The family member this graph is, when it is one.
    pub family_match: Option<(u32, Variant)>,
}

/// Why candidates were rejected, counted per gate.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct RejectionTally {
    /// Adjoint inversion of the enumerated side produced no usable fiber.
    pub derivation: u64,
    /// A derived chain or entry violated the bounds.
    pub bounds: u64,
    /// The derived outer chain did not parse as `[2, s1, T21...]`.
    pub parse: u64,
    /// The arithmetic fiber conditions failed on the completed data.
    pub fiber: u64,
    /// The comb level laws failed.
    pub level_laws: u64,
    /// The assembled divisor did not decompose back into a comb.
    pub decompose: u64,
    /// The geometric route disagreed: a zone stuck or an invariant missed.
    /// Candidates passing all arithmetic gates should never end up here.
    pub engine: u64,
    /// The cusp profile was not that of a rational plane curve.
    pub profile: u64,
}

impl RejectionTally {
    fn absorb(&mut self, other: &RejectionTally) {
        self.derivation += other.derivation;
        self.bounds += other.bounds;
        self.parse += other.parse;
        self.fiber += other.fiber;
        self.level_laws += other.level_laws;
        self.decompose += other.decompose;
        self.engine += other.engine;
        self.profile += other.profile;
    }

    pub fn total(&self) -> u64 {
        self.derivation
            + self.bounds
            + self.parse
            + self.fiber
            + self.level_laws
            + self.decompose
            + self.engine
            + self.profile
    }
}

/// Result of a bounded search.
#[derive(Debug, Clone, Serialize)]
pub struct SearchOutcome {
    pub bounds: SearchBounds,
    pub survivors: Vec<Survivor>,
    /// Enumerated generator tuples `(k12, k34, T24)`.
    pub generators: usize,
    /// Completed candidates that entered the gate pipeline.
    pub candidates: usize,
    pub rejected: RejectionTally,
    /// Whether the survivors are exactly the expected family members
    /// within the bounds.
    pub family_complete: bool,
}

/// All admissible chains up to the given length (including the empty one)
/// with entries between 2 and `max_weight`, in a fixed order.
pub fn admissible_chains(max_len: usize, max_weight: i64) -> Vec<LinearChain> {
    let mut out = vec![LinearChain::empty()];
    let mut frontier: Vec<Vec<i64>> = vec![vec![]];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for stem in &frontier {
            for e in 2..=max_weight {
                let mut v = stem.clone();
                v.push(e);
                next.push(v);
            }
        }
        out.extend(next.iter().cloned().map(LinearChain::new));
        frontier = next;
    }
    out
}

/// The family members a search within `bounds` is expected to find: member
/// `m` needs `T24 = [7; m-1]`, so `m - 1 <= max_k`, and every entry within
/// the weight bound. A zero `max_chain_len` disables the search, so
/// nothing is expected.
pub fn expected_family(bounds: &SearchBounds) -> Vec<OrevkovCurve> {
    let mut out = Vec::new();
    if bounds.max_chain_len == 0 {
        return out;
    }
    for m in 1..=(bounds.max_k as u32 + 1) {
        for variant in [Variant::Plain, Variant::Star] {
            let Ok(curve) = OrevkovCurve::new(m, variant) else {
                continue;
            };
            let max_entry = curve
                .graph
                .a_chains
                .iter()
                .chain(&curve.graph.b_chains)
                .flat_map(|c| c.entries())
                .copied()
                .max()
                .unwrap_or(2);
            if max_entry <= bounds.max_weight {
                out.push(curve);
            }
        }
    }
    out
}

struct Generator {
    k12: i64,
    k34: i64,
    t24: LinearChain,
}

fn all_generators(bounds: &SearchBounds) -> Vec<Generator> {
    let t24s = admissible_chains(bounds.max_chain_len.min(bounds.max_k), bounds.max_weight);
    let mut gens = Vec::new();
    for k12 in 1..=(bounds.max_weight - 1).max(1) {
        for k34 in 2..=(bounds.max_weight + 2) {
            for t24 in &t24s {
                gens.push(Generator {
                    k12,
                    k34,
                    t24: t24.clone(),
                });
            }
        }
    }
    gens
}

/// Parse the outermost B chain as `[2, s1, T21...]`; with a second fiber
/// it must be exactly `[2, s1, 2, 2, 2]` (the three trailing twos are
/// `F1`, `F11`, `F12` and `T21` has nowhere to attach).
fn parse_outer(b: &LinearChain, second: SecondFiber) -> Option<(i64, LinearChain)> {
    let e = b.entries();
    match second {
        SecondFiber::Absent => {
            if e.len() < 2 || e[0] != 2 {
                return None;
            }
            Some((e[1], LinearChain::new(e[2..].to_vec())))
        }
        SecondFiber::TailCut => {
            if e.len() != 5 || e[0] != 2 || e[2..] != [2, 2, 2] {
                return None;
            }
            Some((e[1], LinearChain::empty()))
        }
        SecondFiber::ChainCut => None,
    }
}

struct Candidate {
    data: TemplateData,
    graph: ResolutionGraph,
}

fn eq1_holds(s1: i64, t21: &LinearChain, t22: &LinearChain, k12: i64) -> bool {
    let lhs = LinearChain::single(s1).concat(t21);
    lhs.is_admissible() && lhs.adjoint() == t22.appended(k12 + 1)
}

fn push_candidate(
    found: &mut Vec<Candidate>,
    second: SecondFiber,
    s1: i64,
    t21: LinearChain,
    t22: LinearChain,
    f2: i64,
    t23: &LinearChain,
    t24: &LinearChain,
    s2: i64,
    a: Vec<LinearChain>,
    b: Vec<LinearChain>,
) {
    let Ok(graph) = ResolutionGraph::new(a, b, -2) else {
        return;
    };
    found.push(Candidate {
        data: TemplateData {
            layout: SectionLayout::TailSection,
            second,
            s1,
            t21,
            t22,
            f2,
            t23: t23.clone(),
            t24: t24.clone(),
            s2,
            t11: LinearChain::empty(),
            t12: LinearChain::empty(),
        },
        graph,
    });
}

/// Complete one generator tuple to candidate combs. The enumerated side
/// fixes `T24`, `k34`, `k12`; the other fiber side is derived by adjoint
/// inversion, after which the comb closes up in at most four ways
/// depending on which of `T22`, `T24` are empty.
fn complete(
    gen: &Generator,
    second: SecondFiber,
    bounds: &SearchBounds,
    tally: &mut RejectionTally,
) -> Vec<Candidate> {
    let mut found = Vec::new();
    let s2 = match second {
        SecondFiber::Absent => gen.k34 - 2,
        SecondFiber::TailCut => gen.k34 + 1,
        SecondFiber::ChainCut => return found,
    };
    if s2 < 3 || s2 > bounds.max_weight {
        tally.derivation += 1;
        return found;
    }

    // derive the F2 side of the fiber: [f2, T23] is the adjoint of
    // [T24, k34 + 1, k12 - 1 twos]
    let z = gen
        .t24
        .appended(gen.k34 + 1)
        .concat(&LinearChain::twos((gen.k12 - 1) as usize));
    let za = z.adjoint();
    if za.len() < 2 {
        tally.derivation += 1;
        return found;
    }
    let f2 = za.entries()[0];
    let t23 = za.drop_first();
    if f2 > bounds.max_weight || t23.entries().iter().any(|&e| e > bounds.max_weight) {
        tally.bounds += 1;
        return found;
    }

    if gen.t24.is_empty() {
        // single level: A1 = [rev T23, f2, s2], B1 from the level law
        let a1 = t23.transposed().appended(f2).appended(s2);
        let b1 = a1.adjoint().drop_last();
        match parse_outer(&b1, second) {
            Some((s1, t21)) => {
                if !eq1_holds(s1, &t21, &LinearChain::empty(), gen.k12) {
                    tally.fiber += 1;
                } else {
                    push_candidate(
                        &mut found,
                        second,
                        s1,
                        t21,
                        LinearChain::empty(),
                        f2,
                        &t23,
                        &gen.t24,
                        s2,
                        vec![a1.clone()],
                        vec![b1],
                    );
                }
            }
            None => tally.parse += 1,
        }

        // two levels with the junction on F2: A2 = [f2, s2], T22 nonempty
        let a2 = LinearChain::new(vec![f2, s2]);
        let b2 = a2.adjoint().drop_last();
        match parse_outer(&b2, second) {
            Some((s1, t21)) => {
                // the two ways the chains at F2 take the A and B roles
                let a1 = t23.transposed();
                let b1 = a1.adjoint().drop_last();
                let t22 = b1.transposed();
                if !t22.is_empty() && t22.len() <= bounds.max_chain_len {
                    if eq1_holds(s1, &t21, &t22, gen.k12) {
                        push_candidate(
                            &mut found,
                            second,
                            s1,
                            t21.clone(),
                            t22,
                            f2,
                            &t23,
                            &gen.t24,
                            s2,
                            vec![a1, a2.clone()],
                            vec![b1, b2.clone()],
                        );
                    } else {
                        tally.fiber += 1;
                    }
                }
                // solved orientation: A1 = T22 with adj(T22) = [T23, o1+1]
                let mut o1 = 1i64;
                loop {
                    let t22 = t23.appended(o1 + 1).adjoint();
                    if t22.len() > bounds.max_chain_len {
                        break;
                    }
                    if t22.entries().iter().all(|&e| e <= bounds.max_weight) {
                        if eq1_holds(s1, &t21, &t22, gen.k12) {
                            push_candidate(
                                &mut found,
                                second,
                                s1,
                                t21.clone(),
                                t22.clone(),
                                f2,
                                &t23,
                                &gen.t24,
                                s2,
                                vec![t22.clone(), a2.clone()],
                                vec![t23.clone(), b2.clone()],
                            );
                        } else {
                            tally.fiber += 1;
                        }
                    }
                    o1 += 1;
                }
            }
            None => tally.parse += 1,
        }
    } else {
        // the branch at S2 exists: A_g = [s2], B_g = twos(s2 - 2)
        let a_top = LinearChain::single(s2);
        let b_top = LinearChain::twos((s2 - 2) as usize);
        let Some((s1, t21)) = parse_outer(&b_top, second) else {
            tally.parse += 1;
            return found;
        };
        if t21.len() > bounds.max_chain_len {
            tally.bounds += 1;
            return found;
        }

        // two levels: junction on S2 only, T22 empty
        {
            // F2 continues into level 1: A1 = [rev T23, f2], B1 = rev T24
            let a1 = t23.transposed().appended(f2);
            let b1 = gen.t24.transposed();
            let adj = a1.adjoint();
            let law = adj.len() == b1.len() + 1
                && adj.entries()[..b1.len()] == *b1.entries();
            if law && eq1_holds(s1, &t21, &LinearChain::empty(), gen.k12) {
                push_candidate(
                    &mut found,
                    second,
                    s1,
                    t21.clone(),
                    LinearChain::empty(),
                    f2,
                    &t23,
                    &gen.t24,
                    s2,
                    vec![a1, a_top.clone()],
                    vec![b1, b_top.clone()],
                );
            }
            // swapped roles: A1 = T24, B1 = [f2, T23]
            let a1 = gen.t24.clone();
            let b1 = t23.prepended(f2);
            let adj = a1.adjoint();
            let law = adj.len() == b1.len() + 1
                && adj.entries()[..b1.len()] == *b1.entries();
            if law && eq1_holds(s1, &t21, &LinearChain::empty(), gen.k12) {
                push_candidate(
                    &mut found,
                    second,
                    s1,
                    t21.clone(),
                    LinearChain::empty(),
                    f2,
                    &t23,
                    &gen.t24,
                    s2,
                    vec![a1, a_top.clone()],
                    vec![b1, b_top.clone()],
                );
            }
        }

        // three levels: junctions on both F2 and S2. The middle level is
        // A2 = [f2] alone, whose law forces rev T24 = twos(f2 - 2).
        if gen.t24.transposed() == LinearChain::twos((f2 - 2).max(0) as usize) {
            let a_mid = LinearChain::single(f2);
            let b_mid = gen.t24.transposed();
            let a1 = t23.transposed();
            let b1 = a1.adjoint().drop_last();
            let t22 = b1.transposed();
            if !t22.is_empty() && t22.len() <= bounds.max_chain_len {
                if eq1_holds(s1, &t21, &t22, gen.k12) {
                    push_candidate(
                        &mut found,
                        second,
                        s1,
                        t21.clone(),
                        t22,
                        f2,
                        &t23,
                        &gen.t24,
                        s2,
                        vec![a1, a_mid.clone(), a_top.clone()],
                        vec![b1, b_mid.clone(), b_top.clone()],
                    );
                } else {
                    tally.fiber += 1;
                }
            }
            let mut o1 = 1i64;
            loop {
                let t22 = t23.appended(o1 + 1).adjoint();
                if t22.len() > bounds.max_chain_len {
                    break;
                }
                if t22.entries().iter().all(|&e| e <= bounds.max_weight)
                    && eq1_holds(s1, &t21, &t22, gen.k12)
                {
                    push_candidate(
                        &mut found,
                        second,
                        s1,
                        t21.clone(),
                        t22.clone(),
                        f2,
                        &t23,
                        &gen.t24,
                        s2,
                        vec![t22.clone(), a_mid.clone(), a_top.clone()],
                        vec![t23.clone(), b_mid.clone(), b_top.clone()],
                    );
                }
                o1 += 1;
            }
        }
    }
    found
}

fn graph_entries_bounded(graph: &ResolutionGraph, max_weight: i64) -> bool {
    graph
        .a_chains
        .iter()
        .chain(&graph.b_chains)
        .flat_map(|c| c.entries())
        .all(|&e| e <= max_weight)
}

/// Run one candidate through the gates: arithmetic fiber conditions, comb
/// level laws, canonical decomposition of the assembled divisor, the
/// geometric template collapse, and the rationality of the cusp profile.
fn vet(cand: Candidate, bounds: &SearchBounds, tally: &mut RejectionTally) -> Option<Survivor> {
    let Candidate { data, graph } = cand;
    if !graph_entries_bounded(&graph, bounds.max_weight) || data.t21.len() > bounds.max_chain_len
    {
        tally.bounds += 1;
        return None;
    }
    if check_tail_section_fiber(&data).is_none() {
        tally.fiber += 1;
        return None;
    }
    if graph.validate().is_err() {
        tally.level_laws += 1;
        return None;
    }
    let Ok((config, _)) = graph.assemble() else {
        tally.level_laws += 1;
        return None;
    };
    let Ok(canon) = ResolutionGraph::decompose(&config) else {
        tally.decompose += 1;
        return None;
    };
    let Ok(o) = canon.validate() else {
        tally.decompose += 1;
        return None;
    };
    match contract_template(&data) {
        Ok(c) if c.invariants_hold() => {}
        _ => {
            tally.engine += 1;
            return None;
        }
    }
    let Ok(profile) = canon.cusp_profile() else {
        tally.profile += 1;
        return None;
    };
    if profile.genus_defect != 0 {
        tally.profile += 1;
        return None;
    }
    let Ok(phase_counts) = canon.sprouting_counts() else {
        tally.profile += 1;
        return None;
    };
    Some(Survivor {
        graph: canon,
        o,
        profile,
        phase_counts,
        second_fiber: data.second == SecondFiber::TailCut,
        family_match: None,
    })
}

/// Enumerate every tail-section template within the bounds, with and
/// without the second fiber, and vet all completions. The work is split
/// over `workers` threads by generator index; the outcome is independent
/// of the worker count.
pub fn bounded_search(bounds: &SearchBounds, workers: usize) -> SearchOutcome {
    let mut outcome = SearchOutcome {
        bounds: bounds.clone(),
        survivors: Vec::new(),
        generators: 0,
        candidates: 0,
        rejected: RejectionTally::default(),
        family_complete: false,
    };
    let expected = expected_family(bounds);
    if bounds.max_chain_len == 0 {
        outcome.family_complete = expected.is_empty();
        return outcome;
    }
    let gens = all_generators(bounds);
    outcome.generators = gens.len();
    let workers = workers.max(1);

    type Share = (BTreeMap<ResolutionGraph, Survivor>, RejectionTally, usize);
    let shares: Vec<Share> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                let gens = &gens;
                scope.spawn(move || {
                    let mut tally = RejectionTally::default();
                    let mut candidates = 0usize;
                    let mut found: BTreeMap<ResolutionGraph, Survivor> = BTreeMap::new();
                    for gen in gens.iter().skip(w).step_by(workers) {
                        for second in [SecondFiber::Absent, SecondFiber::TailCut] {
                            for cand in complete(gen, second, bounds, &mut tally) {
                                candidates += 1;
                                if let Some(s) = vet(cand, bounds, &mut tally) {
                                    found.insert(s.graph.clone(), s);
                                }
                            }
                        }
                    }
                    (found, tally, candidates)
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("search worker panicked"))
            .collect()
    });

    let mut merged: BTreeMap<ResolutionGraph, Survivor> = BTreeMap::new();
    for (found, tally, candidates) in shares {
        outcome.rejected.absorb(&tally);
        outcome.candidates += candidates;
        merged.extend(found);
    }
    for survivor in merged.values_mut() {
        survivor.family_match = expected
            .iter()
            .find(|c| c.graph == survivor.graph)
            .map(|c| (c.m, c.variant));
    }
    outcome.family_complete = merged.len() == expected.len()
        && merged.values().all(|s| s.family_match.is_some());
    outcome.survivors = merged.into_values().collect();
    outcome
}
