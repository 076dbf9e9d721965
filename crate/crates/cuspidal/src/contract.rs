//! A small contraction engine for intersection configurations.
//!
//! An [`IntersectionConfig`] is a finite set of components, each with an
//! integer self-intersection number and a kind (ordinary divisor component
//! or the marked curve), plus a symmetric pairing table. Blowing down a
//! (-1)-divisor `E` pushes the configuration forward by the universal rule
//!
//! ```text
//! F.F += (F.E)^2        for every other component F
//! F.G += (F.E)(G.E)     for every other pair F, G
//! ```
//!
//! and removes `E`. The public [`blow_down`](IntersectionConfig::blow_down)
//! additionally insists the divisor part stays simple normal crossing;
//! [`contract_free`](IntersectionConfig::contract_free) applies the same
//! formula without those guards, which is what partial fiber collapses need
//! (they intentionally create tangencies and triple points). Every step is
//! recorded so it can be undone exactly.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num::bigint::BigInt;
use num::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::chain::LinearChain;

pub type CompId = String;

/// What a component is in the ambient surface.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CompKind {
    /// Part of the divisor being contracted.
    Divisor,
    /// The marked curve whose images we track but never contract through
    /// the SNC-checked entry point.
    MarkedCurve,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub self_int: i64,
    pub kind: CompKind,
}

/// How a blowdown step sits relative to the rest of the divisor:
/// by the number of divisor branches through the contracted point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StepKind {
    /// No divisor neighbor at all: the very first blowup of a sequence.
    Initial,
    /// One divisor neighbor.
    Sprouting,
    /// Two divisor neighbors.
    Subdivisional,
    /// Three or more (only reachable through free contraction).
    Branching,
}

/// A recorded blowdown, sufficient to undo the step exactly.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlowdownStep {
    pub contracted: CompId,
    /// Nonzero pairings of the contracted component at contraction time.
    pub pairings: Vec<(CompId, i64)>,
    pub kind: StepKind,
    /// Pairing with the marked curve at contraction time (0 if none).
    pub curve_multiplicity: i64,
    /// Whether the contracted component was the only (-1)-divisor present.
    pub unique_minus_one: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ContractError {
    #[error("unknown component {0:?}")]
    UnknownComponent(CompId),
    #[error("duplicate component {0:?}")]
    DuplicateComponent(CompId),
    #[error("components of a pairing must be distinct")]
    SelfPairing,
    #[error("pairing multiplicity must be positive")]
    NonPositivePairing,
    #[error("{0:?} is not a (-1)-divisor")]
    NotContractible(CompId),
    #[error("contracting {0:?} would leave the divisor non simple normal crossing")]
    BreaksSnc(CompId),
    #[error("no (-1)-divisor to contract among {0} remaining")]
    Stuck(usize),
    #[error("expected a unique (-1)-divisor, found {0:?}")]
    Ambiguous(Vec<CompId>),
    #[error("undo would drive a pairing or the configuration negative at {0:?}")]
    BadUndo(CompId),
    #[error("chain contraction stuck at {0}")]
    ChainStuck(LinearChain),
}

fn pair_key(a: &str, b: &str) -> (CompId, CompId) {
    if a <= b {
        (a.to_string(), b.to_string())
    } else {
        (b.to_string(), a.to_string())
    }
}

/// Components with self-intersections plus a symmetric pairing table.
///
/// Serializes as `{"components": [{"id", "self", "kind"}, ...],
/// "pairs": [[id, id, multiplicity], ...]}` with both lists sorted by id,
/// so equal configurations always print identically.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "ConfigRepr", try_from = "ConfigRepr")]
pub struct IntersectionConfig {
    comps: BTreeMap<CompId, Component>,
    pairs: BTreeMap<(CompId, CompId), i64>,
}

#[derive(Serialize, Deserialize, Clone)]
struct CompRepr {
    id: CompId,
    #[serde(rename = "self")]
    self_int: i64,
    kind: CompKind,
}

#[derive(Serialize, Deserialize, Clone)]
struct ConfigRepr {
    components: Vec<CompRepr>,
    pairs: Vec<(CompId, CompId, i64)>,
}

impl From<IntersectionConfig> for ConfigRepr {
    fn from(c: IntersectionConfig) -> Self {
        ConfigRepr {
            components: c
                .comps
                .into_iter()
                .map(|(id, comp)| CompRepr {
                    id,
                    self_int: comp.self_int,
                    kind: comp.kind,
                })
                .collect(),
            pairs: c.pairs.into_iter().map(|((a, b), m)| (a, b, m)).collect(),
        }
    }
}

impl TryFrom<ConfigRepr> for IntersectionConfig {
    type Error = ContractError;

    fn try_from(r: ConfigRepr) -> Result<Self, Self::Error> {
        let mut c = IntersectionConfig::new();
        for comp in r.components {
            c.add_component(&comp.id, comp.self_int, comp.kind)?;
        }
        for (a, b, m) in r.pairs {
            c.add_pair(&a, &b, m)?;
        }
        Ok(c)
    }
}

impl IntersectionConfig {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_component(
        &mut self,
        id: &str,
        self_int: i64,
        kind: CompKind,
    ) -> Result<(), ContractError> {
        if self.comps.contains_key(id) {
            return Err(ContractError::DuplicateComponent(id.to_string()));
        }
        self.comps
            .insert(id.to_string(), Component { self_int, kind });
        Ok(())
    }

    /// Record that two distinct components meet with the given multiplicity,
    /// adding to any multiplicity already present.
    pub fn add_pair(&mut self, a: &str, b: &str, mult: i64) -> Result<(), ContractError> {
        if a == b {
            return Err(ContractError::SelfPairing);
        }
        if mult <= 0 {
            return Err(ContractError::NonPositivePairing);
        }
        for id in [a, b] {
            if !self.comps.contains_key(id) {
                return Err(ContractError::UnknownComponent(id.to_string()));
            }
        }
        *self.pairs.entry(pair_key(a, b)).or_insert(0) += mult;
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.comps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.comps.is_empty()
    }

    pub fn contains(&self, id: &str) -> bool {
        self.comps.contains_key(id)
    }

    pub fn self_int(&self, id: &str) -> Result<i64, ContractError> {
        self.comps
            .get(id)
            .map(|c| c.self_int)
            .ok_or_else(|| ContractError::UnknownComponent(id.to_string()))
    }

    pub fn kind(&self, id: &str) -> Result<CompKind, ContractError> {
        self.comps
            .get(id)
            .map(|c| c.kind)
            .ok_or_else(|| ContractError::UnknownComponent(id.to_string()))
    }

    /// Pairing multiplicity of two components, 0 when they do not meet.
    pub fn pairing(&self, a: &str, b: &str) -> i64 {
        if a == b {
            return 0;
        }
        self.pairs.get(&pair_key(a, b)).copied().unwrap_or(0)
    }

    /// Ids in sorted order.
    pub fn ids(&self) -> impl Iterator<Item = &CompId> {
        self.comps.keys()
    }

    /// Nonzero pairings of `id` with other components, sorted by partner id.
    pub fn neighbors(&self, id: &str) -> Vec<(CompId, i64)> {
        let mut out = Vec::new();
        for ((a, b), &m) in &self.pairs {
            if a == id {
                out.push((b.clone(), m));
            } else if b == id {
                out.push((a.clone(), m));
            }
        }
        out
    }

    /// Total intersection of `id` with divisor components,
    /// counted with multiplicity.
    pub fn divisor_degree(&self, id: &str) -> i64 {
        self.neighbors(id)
            .iter()
            .filter(|(n, _)| self.comps[n].kind == CompKind::Divisor)
            .map(|(_, m)| m)
            .sum()
    }

    /// All (-1)-divisors, sorted by id.
    pub fn minus_one_divisors(&self) -> Vec<CompId> {
        self.comps
            .iter()
            .filter(|(_, c)| c.kind == CompKind::Divisor && c.self_int == -1)
            .map(|(id, _)| id.clone())
            .collect()
    }

    fn step_kind(&self, id: &str) -> StepKind {
        match self.divisor_degree(id) {
            0 => StepKind::Initial,
            1 => StepKind::Sprouting,
            2 => StepKind::Subdivisional,
            _ => StepKind::Branching,
        }
    }

    fn push_forward(&mut self, id: &str) -> BlowdownStep {
        let minus_ones = self.minus_one_divisors();
        let unique = minus_ones.len() == 1 && minus_ones[0] == id;
        let kind = self.step_kind(id);
        let touching = self.neighbors(id);
        let curve_multiplicity = touching
            .iter()
            .filter(|(n, _)| self.comps[n].kind == CompKind::MarkedCurve)
            .map(|(_, m)| m)
            .sum();
        for (f, p) in &touching {
            self.comps.get_mut(f).expect("neighbor exists").self_int += p * p;
        }
        for (i, (f, p)) in touching.iter().enumerate() {
            for (g, q) in &touching[i + 1..] {
                *self.pairs.entry(pair_key(f, g)).or_insert(0) += p * q;
            }
        }
        self.comps.remove(id);
        self.pairs.retain(|(a, b), _| a != id && b != id);
        BlowdownStep {
            contracted: id.to_string(),
            pairings: touching,
            kind,
            curve_multiplicity,
            unique_minus_one: unique,
        }
    }

    fn check_contractible(&self, id: &str) -> Result<(), ContractError> {
        let comp = self
            .comps
            .get(id)
            .ok_or_else(|| ContractError::UnknownComponent(id.to_string()))?;
        if comp.kind != CompKind::Divisor || comp.self_int != -1 {
            return Err(ContractError::NotContractible(id.to_string()));
        }
        Ok(())
    }

    /// Blow down a (-1)-divisor, requiring the divisor part to stay simple
    /// normal crossing: at most two divisor branches through the contracted
    /// component, each transversal, and two branches must not already meet
    /// (otherwise the image acquires a tacnode or a node on the divisor).
    pub fn blow_down(&mut self, id: &str) -> Result<BlowdownStep, ContractError> {
        self.check_contractible(id)?;
        let divisor_touching: Vec<(CompId, i64)> = self
            .neighbors(id)
            .into_iter()
            .filter(|(n, _)| self.comps[n].kind == CompKind::Divisor)
            .collect();
        let degree: i64 = divisor_touching.iter().map(|(_, m)| m).sum();
        if degree > 2 {
            return Err(ContractError::BreaksSnc(id.to_string()));
        }
        if degree == 2 {
            match divisor_touching.as_slice() {
                // one divisor met twice: tangency, never SNC after contraction
                [(_, 2)] => return Err(ContractError::BreaksSnc(id.to_string())),
                [(f, 1), (g, 1)] => {
                    if self.pairing(f, g) > 0 {
                        return Err(ContractError::BreaksSnc(id.to_string()));
                    }
                }
                _ => unreachable!("degree 2 splits as 2 or 1+1"),
            }
        }
        Ok(self.push_forward(id))
    }

    /// Blow down a (-1)-divisor with no normal crossing guards.
    /// The push-forward formula is the same as in [`blow_down`].
    pub fn contract_free(&mut self, id: &str) -> Result<BlowdownStep, ContractError> {
        self.check_contractible(id)?;
        Ok(self.push_forward(id))
    }

    /// Re-insert the component removed by `step` and subtract the
    /// push-forward contributions again.
    pub fn undo_step(&mut self, step: &BlowdownStep) -> Result<(), ContractError> {
        if self.comps.contains_key(&step.contracted) {
            return Err(ContractError::DuplicateComponent(step.contracted.clone()));
        }
        for (f, _) in &step.pairings {
            if !self.comps.contains_key(f) {
                return Err(ContractError::UnknownComponent(f.clone()));
            }
        }
        for (f, p) in &step.pairings {
            self.comps.get_mut(f).expect("checked").self_int -= p * p;
        }
        for (i, (f, p)) in step.pairings.iter().enumerate() {
            for (g, q) in &step.pairings[i + 1..] {
                let key = pair_key(f, g);
                let entry = self.pairs.get_mut(&key).map(|m| {
                    *m -= p * q;
                    *m
                });
                match entry {
                    Some(0) => {
                        self.pairs.remove(&key);
                    }
                    Some(m) if m < 0 => return Err(ContractError::BadUndo(f.clone())),
                    Some(_) => {}
                    None => return Err(ContractError::BadUndo(f.clone())),
                }
            }
        }
        self.comps.insert(
            step.contracted.clone(),
            Component {
                self_int: -1,
                kind: CompKind::Divisor,
            },
        );
        for (f, p) in &step.pairings {
            self.pairs.insert(pair_key(&step.contracted, f), *p);
        }
        Ok(())
    }

    /// Blow up a point of the configuration, inserting a fresh (-1)-divisor
    /// named `new_id`.
    pub fn blow_up(&mut self, site: BlowupSite, new_id: &str) -> Result<(), ContractError> {
        if self.comps.contains_key(new_id) {
            return Err(ContractError::DuplicateComponent(new_id.to_string()));
        }
        match &site {
            BlowupSite::Component(f) => {
                if !self.comps.contains_key(f) {
                    return Err(ContractError::UnknownComponent(f.clone()));
                }
                self.comps.get_mut(f).expect("checked").self_int -= 1;
                self.comps.insert(
                    new_id.to_string(),
                    Component {
                        self_int: -1,
                        kind: CompKind::Divisor,
                    },
                );
                self.pairs.insert(pair_key(f, new_id), 1);
            }
            BlowupSite::Edge(f, g) => {
                if self.pairing(f, g) < 1 {
                    return Err(ContractError::UnknownComponent(format!("{f}*{g}")));
                }
                for id in [f, g] {
                    self.comps.get_mut(id).expect("paired").self_int -= 1;
                }
                let key = pair_key(f, g);
                let m = self.pairs.get_mut(&key).expect("paired");
                *m -= 1;
                if *m == 0 {
                    self.pairs.remove(&key);
                }
                self.comps.insert(
                    new_id.to_string(),
                    Component {
                        self_int: -1,
                        kind: CompKind::Divisor,
                    },
                );
                self.pairs.insert(pair_key(f, new_id), 1);
                self.pairs.insert(pair_key(g, new_id), 1);
            }
        }
        Ok(())
    }

    /// Contract (-1)-divisors one at a time until none is left.
    ///
    /// With `require_unique` the configuration must offer exactly one
    /// (-1)-divisor at every step, which is the defining property of the
    /// blowdown sequence of a unicuspidal resolution. Without it ties are
    /// broken by smallest id.
    pub fn contract_all(&mut self, require_unique: bool) -> Result<Vec<BlowdownStep>, ContractError> {
        let mut steps = Vec::new();
        loop {
            let minus_ones = self.minus_one_divisors();
            match minus_ones.as_slice() {
                [] => return Ok(steps),
                [only] => steps.push(self.blow_down(&only.clone())?),
                many if require_unique => {
                    return Err(ContractError::Ambiguous(many.to_vec()));
                }
                many => steps.push(self.blow_down(&many[0].clone())?),
            }
        }
    }

    /// Contract exactly the components in `ids`, in free mode, always taking
    /// the smallest-id member of `ids` that is currently a (-1)-divisor.
    /// Reports how far it got if the set cannot be exhausted.
    pub fn contract_set(
        &mut self,
        ids: &BTreeSet<CompId>,
    ) -> Result<Vec<BlowdownStep>, ContractError> {
        let mut remaining: BTreeSet<CompId> = ids.clone();
        for id in &remaining {
            if !self.comps.contains_key(id) {
                return Err(ContractError::UnknownComponent(id.clone()));
            }
        }
        let mut steps = Vec::new();
        while !remaining.is_empty() {
            let next = remaining
                .iter()
                .find(|id| {
                    let c = &self.comps[*id];
                    c.kind == CompKind::Divisor && c.self_int == -1
                })
                .cloned();
            match next {
                Some(id) => {
                    steps.push(self.contract_free(&id)?);
                    remaining.remove(&id);
                }
                None => return Err(ContractError::Stuck(remaining.len())),
            }
        }
        Ok(steps)
    }

    /// Independent cycles of the divisor part: edges minus vertices plus
    /// connected components, a pairing of multiplicity m counting as m
    /// parallel edges. Zero exactly when the divisor graph is a forest.
    pub fn divisor_cycle_rank(&self) -> usize {
        let verts: Vec<&CompId> = self
            .comps
            .iter()
            .filter(|(_, c)| c.kind == CompKind::Divisor)
            .map(|(id, _)| id)
            .collect();
        let index: BTreeMap<&CompId, usize> =
            verts.iter().enumerate().map(|(i, id)| (*id, i)).collect();
        let mut parent: Vec<usize> = (0..verts.len()).collect();
        fn root(parent: &mut Vec<usize>, mut i: usize) -> usize {
            while parent[i] != i {
                parent[i] = parent[parent[i]];
                i = parent[i];
            }
            i
        }
        let mut edges = 0usize;
        for ((a, b), &m) in &self.pairs {
            let (Some(&ia), Some(&ib)) = (index.get(a), index.get(b)) else {
                continue;
            };
            edges += m as usize;
            let (ra, rb) = (root(&mut parent, ia), root(&mut parent, ib));
            parent[ra] = rb;
        }
        let components = (0..verts.len())
            .filter(|&i| root(&mut parent, i) == i)
            .count();
        edges + components - verts.len()
    }

    /// The full intersection matrix (self-intersections on the diagonal),
    /// rows and columns ordered by component id.
    pub fn intersection_matrix(&self) -> (Vec<CompId>, Vec<Vec<i64>>) {
        let ids: Vec<CompId> = self.comps.keys().cloned().collect();
        let n = ids.len();
        let mut m = vec![vec![0i64; n]; n];
        for (i, a) in ids.iter().enumerate() {
            m[i][i] = self.comps[a].self_int;
            for (j, b) in ids.iter().enumerate().skip(i + 1) {
                let p = self.pairing(a, b);
                m[i][j] = p;
                m[j][i] = p;
            }
        }
        (ids, m)
    }

    /// Determinant of the full intersection matrix, by fraction-free
    /// Gaussian elimination in exact integers. Blowing down a (-1)-divisor
    /// negates this value, which makes it a useful conservation check.
    pub fn form_determinant(&self) -> BigInt {
        let (_, m) = self.intersection_matrix();
        det_bareiss(m)
    }
}

/// Site of a blowup: a general point of one component, or a point where two
/// components meet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BlowupSite {
    Component(CompId),
    Edge(CompId, CompId),
}

/// Exact integer determinant by the Bareiss fraction-free algorithm.
pub fn det_bareiss(m: Vec<Vec<i64>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = m
        .into_iter()
        .map(|row| row.into_iter().map(BigInt::from).collect())
        .collect();
    let mut sign = BigInt::one();
    let mut denom = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = num / &denom;
            }
            a[i][k] = BigInt::zero();
        }
        denom = a[k][k].clone();
    }
    sign * a[n - 1][n - 1].clone()
}

/// Outcome of shrinking a chain by iterated blowdowns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainShrink {
    pub steps: Vec<BlowdownStep>,
    /// Chains passed through, starting with the input and ending with the
    /// target, all read in the orientation of the input.
    pub intermediate: Vec<LinearChain>,
}

/// Contract 1-entries of `chain` (components of self-intersection -1) until
/// it equals `target`, reading the surviving components in their original
/// order.
///
/// Each step must offer a unique (-1)-component, with one exception: when
/// exactly two components remain, both with self-intersection -1, and the
/// target is `[0]`, the first of the two is contracted and the step is
/// recorded as non-unique. That is the familiar final step of collapsing
/// `[A,1,B]` with `B` the adjoint of `A` down to a single 0-curve.
pub fn shrink_chain(chain: &LinearChain, target: &LinearChain) -> Result<ChainShrink, ContractError> {
    let width = chain.len().max(1).ilog10() as usize + 1;
    let name = |i: usize| format!("c{i:0width$}");
    let mut config = IntersectionConfig::new();
    let mut order: Vec<CompId> = Vec::new();
    for (i, &a) in chain.entries().iter().enumerate() {
        let id = name(i);
        config.add_component(&id, -a, CompKind::Divisor)?;
        order.push(id);
    }
    for w in order.windows(2) {
        config.add_pair(&w[0], &w[1], 1)?;
    }

    let read = |cfg: &IntersectionConfig, order: &[CompId]| {
        LinearChain::new(
            order
                .iter()
                .filter(|id| cfg.contains(id))
                .map(|id| -cfg.self_int(id).expect("present"))
                .collect(),
        )
    };

    let mut steps = Vec::new();
    let mut intermediate = vec![read(&config, &order)];
    loop {
        let current = intermediate.last().expect("non-empty");
        if current == target {
            return Ok(ChainShrink { steps, intermediate });
        }
        let minus_ones = config.minus_one_divisors();
        let chosen = match minus_ones.as_slice() {
            [] => return Err(ContractError::ChainStuck(current.clone())),
            [only] => only.clone(),
            [_, _]
                if config.len() == 2
                    && *target == LinearChain::single(0)
                    && config.ids().all(|id| config.self_int(id) == Ok(-1)) =>
            {
                // both remaining components are (-1)-curves; collapse onto
                // the second by contracting the first
                order
                    .iter()
                    .find(|id| config.contains(id))
                    .expect("two components remain")
                    .clone()
            }
            many => return Err(ContractError::Ambiguous(many.to_vec())),
        };
        steps.push(config.blow_down(&chosen)?);
        intermediate.push(read(&config, &order));
    }
}

impl fmt::Display for IntersectionConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (id, comp) in &self.comps {
            let tag = match comp.kind {
                CompKind::Divisor => "",
                CompKind::MarkedCurve => " curve",
            };
            writeln!(f, "{id} ({}){tag}", comp.self_int)?;
        }
        for ((a, b), m) in &self.pairs {
            if *m == 1 {
                writeln!(f, "{a} - {b}")?;
            } else {
                writeln!(f, "{a} - {b} x{m}")?;
            }
        }
        Ok(())
    }
}
