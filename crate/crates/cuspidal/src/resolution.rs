//! Resolution graphs of unicuspidal rational plane curves.
//!
//! The dual graph of the minimal embedded resolution of a rational curve
//! with one cusp has a rigid comb shape: levels `1..=g` of chain pairs
//! `(A_i, B_i)`, a central (-1)-curve `D0`, and the strict transform `C` of
//! the curve meeting only `D0`, once. Within level `i` the chain `A_i` runs
//! toward the junction, `B_i` hangs off the junction, and the junction is
//! the first component of `A_{i+1}` (or `D0` at the top level).
//!
//! [`ResolutionGraph::validate`] checks the defining relation between the
//! two chains of a level: the adjoint of `A_i` must be `B_i` with one extra
//! entry `o_i + 1` on the end. Everything else here is derived by actually
//! collapsing the configuration with the contraction engine: multiplicity
//! sequence, degree, genus defect, and the per-level counts of sprouting
//! and subdivisional blowups.

use std::collections::{BTreeMap, BTreeSet};

use num::integer::Roots;
use serde::{Deserialize, Serialize};

use crate::chain::LinearChain;
use crate::contract::{BlowdownStep, CompId, CompKind, ContractError, IntersectionConfig, StepKind};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ResolutionError {
    #[error("need the same positive number of A and B chains")]
    MismatchedLevels,
    #[error("level {0}: A chain must be non-empty with entries >= 2")]
    NotAdmissible(usize),
    #[error("level {index}: adjoint of the A chain is {got}, not the B chain plus one entry")]
    AdjointMismatch { index: usize, got: LinearChain },
    #[error(transparent)]
    Contract(#[from] ContractError),
    #[error("collapse finished on self-intersection {0}, not a perfect square")]
    NotSquare(i64),
    #[error("collapse left {0} extra components besides the curve")]
    LeftOver(usize),
    #[error("curve support spread over {0} mutually non-adjacent components")]
    CurveSupport(usize),
    #[error("blowdown step {0} breaks the phase order")]
    PhaseOrder(usize),
    #[error("level {index}: {got} sprouting blowups but the chain relation demands {expected}")]
    SproutMismatch {
        index: usize,
        got: usize,
        expected: usize,
    },
    #[error("numeric overflow computing the profile")]
    Overflow,
    #[error("cannot decompose configuration: {0}")]
    Decompose(String),
}

/// The comb-shaped dual graph, as pure chain data.
///
/// Serializes as `{"g": 2, "A": [...], "B": [...], "c_prime_self": -2}`
/// where `A` and `B` list the chains level by level in bracket notation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "GraphRepr", try_from = "GraphRepr")]
pub struct ResolutionGraph {
    pub a_chains: Vec<LinearChain>,
    pub b_chains: Vec<LinearChain>,
    pub c_prime_self: i64,
}

#[derive(Serialize, Deserialize, Clone)]
struct GraphRepr {
    g: usize,
    #[serde(rename = "A")]
    a: Vec<LinearChain>,
    #[serde(rename = "B")]
    b: Vec<LinearChain>,
    c_prime_self: i64,
}

impl From<ResolutionGraph> for GraphRepr {
    fn from(r: ResolutionGraph) -> Self {
        GraphRepr {
            g: r.a_chains.len(),
            a: r.a_chains,
            b: r.b_chains,
            c_prime_self: r.c_prime_self,
        }
    }
}

impl TryFrom<GraphRepr> for ResolutionGraph {
    type Error = String;

    fn try_from(r: GraphRepr) -> Result<Self, Self::Error> {
        if r.a.len() != r.g || r.b.len() != r.g {
            return Err(format!(
                "g = {} but {} A chains and {} B chains",
                r.g,
                r.a.len(),
                r.b.len()
            ));
        }
        ResolutionGraph::new(r.a, r.b, r.c_prime_self).map_err(|e| e.to_string())
    }
}

/// Component ids used by [`ResolutionGraph::assemble`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssembledIds {
    /// `a[i][j]` is the id of the j-th component of `A_{i+1}`.
    pub a: Vec<Vec<CompId>>,
    pub b: Vec<Vec<CompId>>,
    pub d0: CompId,
    pub curve: CompId,
}

/// Multiplicity data of the cusp recovered by collapsing the graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CuspProfile {
    /// Multiplicities of the curve at the successive centers, in blowup
    /// order (so the first entry is the multiplicity of the cusp itself).
    pub multiplicities: Vec<i64>,
    /// Degree of the plane curve the configuration collapses to.
    pub degree: i64,
    /// Genus of a degree-d curve minus the genus the multiplicities eat;
    /// zero exactly when the data fits a rational plane curve.
    pub genus_defect: i64,
}

/// Sprouting and subdivisional blowup counts of one level.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PhaseCounts {
    pub sprouting: usize,
    pub subdivisional: usize,
}

impl ResolutionGraph {
    pub fn new(
        a_chains: Vec<LinearChain>,
        b_chains: Vec<LinearChain>,
        c_prime_self: i64,
    ) -> Result<Self, ResolutionError> {
        if a_chains.is_empty() || a_chains.len() != b_chains.len() {
            return Err(ResolutionError::MismatchedLevels);
        }
        Ok(ResolutionGraph {
            a_chains,
            b_chains,
            c_prime_self,
        })
    }

    pub fn g(&self) -> usize {
        self.a_chains.len()
    }

    /// Check the level relations `adj(A_i) = [B_i, o_i + 1]` and return the
    /// multiplicities `o_i >= 1` of the sprouting phases.
    pub fn validate(&self) -> Result<Vec<i64>, ResolutionError> {
        if self.a_chains.is_empty() || self.a_chains.len() != self.b_chains.len() {
            return Err(ResolutionError::MismatchedLevels);
        }
        let mut o = Vec::with_capacity(self.g());
        for (i, (a, b)) in self.a_chains.iter().zip(&self.b_chains).enumerate() {
            if !a.is_admissible() {
                return Err(ResolutionError::NotAdmissible(i + 1));
            }
            let adj = a.adjoint();
            let matches = adj.len() == b.len() + 1
                && adj.entries()[..b.len()] == *b.entries();
            if !matches {
                return Err(ResolutionError::AdjointMismatch {
                    index: i + 1,
                    got: adj,
                });
            }
            o.push(adj.entries()[b.len()] - 1);
        }
        Ok(o)
    }

    /// Build the intersection configuration of the graph. Chain entries are
    /// negated here, the single place bracket notation meets honest
    /// self-intersection numbers.
    pub fn assemble(&self) -> Result<(IntersectionConfig, AssembledIds), ResolutionError> {
        if self.a_chains.is_empty() || self.a_chains.len() != self.b_chains.len() {
            return Err(ResolutionError::MismatchedLevels);
        }
        for (i, a) in self.a_chains.iter().enumerate() {
            if a.is_empty() {
                return Err(ResolutionError::NotAdmissible(i + 1));
            }
        }
        let g = self.g();
        let width = self
            .a_chains
            .iter()
            .chain(&self.b_chains)
            .map(|c| c.len())
            .max()
            .unwrap_or(1)
            .to_string()
            .len();

        let mut config = IntersectionConfig::new();
        let name = |tag: &str, level: usize, j: usize| format!("{tag}{level}.{:0width$}", j + 1);
        let mut ids = AssembledIds {
            a: Vec::new(),
            b: Vec::new(),
            d0: "D0".to_string(),
            curve: "C".to_string(),
        };
        for (i, (a, b)) in self.a_chains.iter().zip(&self.b_chains).enumerate() {
            let mut a_ids = Vec::new();
            for (j, &entry) in a.entries().iter().enumerate() {
                let id = name("A", i + 1, j);
                config.add_component(&id, -entry, CompKind::Divisor)?;
                a_ids.push(id);
            }
            let mut b_ids = Vec::new();
            for (j, &entry) in b.entries().iter().enumerate() {
                let id = name("B", i + 1, j);
                config.add_component(&id, -entry, CompKind::Divisor)?;
                b_ids.push(id);
            }
            for w in a_ids.windows(2) {
                config.add_pair(&w[0], &w[1], 1)?;
            }
            for w in b_ids.windows(2) {
                config.add_pair(&w[0], &w[1], 1)?;
            }
            ids.a.push(a_ids);
            ids.b.push(b_ids);
        }
        config.add_component(&ids.d0, -1, CompKind::Divisor)?;
        config.add_component(&ids.curve, self.c_prime_self, CompKind::MarkedCurve)?;
        config.add_pair(&ids.d0, &ids.curve, 1)?;
        for i in 0..g {
            let junction = if i + 1 < g {
                ids.a[i + 1][0].clone()
            } else {
                ids.d0.clone()
            };
            config.add_pair(ids.a[i].last().expect("non-empty"), &junction, 1)?;
            if let Some(first_b) = ids.b[i].first() {
                config.add_pair(first_b, &junction, 1)?;
            }
        }
        Ok((config, ids))
    }

    /// Collapse the configuration to the plane: blow down the unique
    /// (-1)-divisor until none is left. Checks at every step that the curve
    /// image still passes through a single point of the remaining divisor
    /// (its support is one component, or two adjacent ones).
    pub fn collapse(
        &self,
    ) -> Result<(Vec<BlowdownStep>, IntersectionConfig, AssembledIds), ResolutionError> {
        let (mut config, ids) = self.assemble()?;
        let mut steps = Vec::new();
        loop {
            let minus_ones = config.minus_one_divisors();
            match minus_ones.as_slice() {
                [] => break,
                [only] => {
                    steps.push(config.blow_down(&only.clone())?);
                    let support: Vec<CompId> = config
                        .neighbors(&ids.curve)
                        .into_iter()
                        .map(|(id, _)| id)
                        .filter(|id| config.kind(id) == Ok(CompKind::Divisor))
                        .collect();
                    let concentrated = match support.as_slice() {
                        [] | [_] => true,
                        [u, v] => config.pairing(u, v) > 0,
                        _ => false,
                    };
                    if !concentrated {
                        return Err(ResolutionError::CurveSupport(support.len()));
                    }
                }
                many => {
                    return Err(ContractError::Ambiguous(many.to_vec()).into());
                }
            }
        }
        if config.len() != 1 {
            return Err(ResolutionError::LeftOver(config.len() - 1));
        }
        Ok((steps, config, ids))
    }

    /// Multiplicity sequence, degree and genus defect of the cusp.
    pub fn cusp_profile(&self) -> Result<CuspProfile, ResolutionError> {
        let (steps, config, ids) = self.collapse()?;
        let final_self = config.self_int(&ids.curve)?;
        if final_self < 0 {
            return Err(ResolutionError::NotSquare(final_self));
        }
        let degree = final_self.sqrt();
        if degree * degree != final_self {
            return Err(ResolutionError::NotSquare(final_self));
        }
        let multiplicities: Vec<i64> =
            steps.iter().rev().map(|s| s.curve_multiplicity).collect();
        let d = degree as i128;
        let mut defect = (d - 1) * (d - 2) / 2;
        for &m in &multiplicities {
            defect -= (m as i128) * (m as i128 - 1) / 2;
        }
        Ok(CuspProfile {
            multiplicities,
            degree,
            genus_defect: i64::try_from(defect).map_err(|_| ResolutionError::Overflow)?,
        })
    }

    /// Count sprouting and subdivisional blowdowns per level and check the
    /// order structure of the collapse: levels are contracted from `g` down
    /// to `1`, within a level all subdivisional steps come before all
    /// sprouting steps, the last step is the initial blowup at the first
    /// component of `A_1`, and the sprouting count of level `i` equals the
    /// `o_i` from [`validate`](Self::validate).
    pub fn sprouting_counts(&self) -> Result<Vec<PhaseCounts>, ResolutionError> {
        let o = self.validate()?;
        let (steps, _, ids) = self.collapse()?;
        let g = self.g();

        // level of each component in the collapse order: B_i and the tail
        // of A_i belong to level i, the junction head of A_{i+1} is
        // contracted along level i, D0 along level g, and the head of A_1
        // is the initial blowup (level 0 here).
        let mut level: BTreeMap<CompId, usize> = BTreeMap::new();
        level.insert(ids.d0.clone(), g);
        for i in 0..g {
            for id in &ids.b[i] {
                level.insert(id.clone(), i + 1);
            }
            for (j, id) in ids.a[i].iter().enumerate() {
                let lv = if j == 0 { i } else { i + 1 };
                level.insert(id.clone(), lv);
            }
        }

        let mut counts = vec![
            PhaseCounts {
                sprouting: 0,
                subdivisional: 0,
            };
            g
        ];
        let mut current = g;
        let mut sprouting_seen = false;
        for (idx, step) in steps.iter().enumerate() {
            let lv = *level
                .get(&step.contracted)
                .ok_or(ResolutionError::PhaseOrder(idx))?;
            let last = idx == steps.len() - 1;
            if last {
                if lv != 0 || step.kind != StepKind::Initial || current != 1 {
                    return Err(ResolutionError::PhaseOrder(idx));
                }
                break;
            }
            if lv == current - 1 && lv >= 1 {
                current = lv;
                sprouting_seen = false;
            } else if lv != current {
                return Err(ResolutionError::PhaseOrder(idx));
            }
            match step.kind {
                StepKind::Sprouting => {
                    sprouting_seen = true;
                    counts[current - 1].sprouting += 1;
                }
                StepKind::Subdivisional => {
                    if sprouting_seen {
                        return Err(ResolutionError::PhaseOrder(idx));
                    }
                    counts[current - 1].subdivisional += 1;
                }
                _ => return Err(ResolutionError::PhaseOrder(idx)),
            }
        }
        for (i, (&oi, c)) in o.iter().zip(&counts).enumerate() {
            if c.sprouting as i64 != oi {
                return Err(ResolutionError::SproutMismatch {
                    index: i + 1,
                    got: c.sprouting,
                    expected: oi as usize,
                });
            }
        }
        Ok(counts)
    }

    /// Read a comb-shaped graph back off an intersection configuration.
    ///
    /// The marked curve determines `D0` (the one divisor it meets). From
    /// there the graph is walked outward: one side of every junction must
    /// be an unbranched chain (a `B`), the other continues through `A`
    /// chains and further junctions. Both role assignments are tried at
    /// every junction and [`validate`](Self::validate) decides which
    /// survive; the smallest valid graph in chain order is returned.
    pub fn decompose(config: &IntersectionConfig) -> Result<ResolutionGraph, ResolutionError> {
        let fail = |msg: &str| ResolutionError::Decompose(msg.to_string());
        let curves: Vec<CompId> = config
            .ids()
            .filter(|id| config.kind(id) == Ok(CompKind::MarkedCurve))
            .cloned()
            .collect();
        let [curve] = curves.as_slice() else {
            return Err(fail("need exactly one marked curve"));
        };
        let curve_touch = config.neighbors(curve);
        let [(d0, 1)] = curve_touch.as_slice() else {
            return Err(fail("curve must meet exactly one divisor, once"));
        };
        if config.self_int(d0)? != -1 {
            return Err(fail("the component met by the curve must be a (-1)-divisor"));
        }
        let mut walker = GraphWalker {
            config,
            c_prime_self: config.self_int(curve)?,
            divisor_total: config.len() - 1,
            found: BTreeSet::new(),
        };
        let top = walker.onward(d0, None)?;
        let [u, v] = top.as_slice() else {
            return Err(fail("the central component must meet exactly two divisor chains"));
        };
        let mut visited = BTreeSet::new();
        visited.insert(d0.clone());
        walker.descend(d0, (&u.clone(), &v.clone()), &mut Vec::new(), &visited)?;
        walker
            .found
            .into_iter()
            .next()
            .ok_or_else(|| fail("no role assignment yields a valid graph"))
    }
}

enum PathEnd {
    Leaf,
    Junction(CompId, CompId),
}

/// Depth-first reconstruction of a comb graph from a configuration.
/// Levels are discovered top (`g`) first; wrong role choices die either in
/// the walk itself or in the final validation.
struct GraphWalker<'a> {
    config: &'a IntersectionConfig,
    c_prime_self: i64,
    divisor_total: usize,
    found: BTreeSet<ResolutionGraph>,
}

impl GraphWalker<'_> {
    /// Divisor neighbors of `id` other than `back`, all transversal.
    fn onward(
        &self,
        id: &CompId,
        back: Option<&CompId>,
    ) -> Result<Vec<CompId>, ResolutionError> {
        let mut out = Vec::new();
        for (n, m) in self.config.neighbors(id) {
            if self.config.kind(&n)? != CompKind::Divisor || Some(&n) == back {
                continue;
            }
            if m != 1 {
                return Err(ResolutionError::Decompose(
                    "divisor components must meet transversally".to_string(),
                ));
            }
            out.push(n);
        }
        Ok(out)
    }

    /// Walk a chain away from `from`, starting at `start`, collecting
    /// components until a leaf or a branch component (which is included).
    /// `None` means the walk hit a cycle or a vertex of degree above 3.
    fn walk_path(
        &self,
        from: &CompId,
        start: &CompId,
        visited: &mut BTreeSet<CompId>,
    ) -> Result<Option<(Vec<CompId>, PathEnd)>, ResolutionError> {
        let mut prev = from.clone();
        let mut cur = start.clone();
        let mut comps = Vec::new();
        loop {
            if !visited.insert(cur.clone()) {
                return Ok(None);
            }
            comps.push(cur.clone());
            let next = self.onward(&cur, Some(&prev))?;
            match next.as_slice() {
                [] => return Ok(Some((comps, PathEnd::Leaf))),
                [n] => prev = std::mem::replace(&mut cur, n.clone()),
                [n1, n2] => return Ok(Some((comps, PathEnd::Junction(n1.clone(), n2.clone())))),
                _ => return Ok(None),
            }
        }
    }

    fn chain_of(&self, comps: &[CompId]) -> LinearChain {
        LinearChain::new(
            comps
                .iter()
                .map(|id| -self.config.self_int(id).expect("walked"))
                .collect(),
        )
    }

    fn descend(
        &mut self,
        junction: &CompId,
        branches: (&CompId, &CompId),
        levels: &mut Vec<(LinearChain, LinearChain)>,
        visited: &BTreeSet<CompId>,
    ) -> Result<(), ResolutionError> {
        let (u, v) = branches;
        for (a_start, b_start) in [(u, v), (v, u)] {
            let mut vis = visited.clone();
            let Some((b_comps, PathEnd::Leaf)) = self.walk_path(junction, b_start, &mut vis)?
            else {
                continue;
            };
            let Some((a_comps, a_end)) = self.walk_path(junction, a_start, &mut vis)? else {
                continue;
            };
            // the walk runs from the junction outward, so the A chain is
            // collected last component first
            levels.push((self.chain_of(&a_comps).transposed(), self.chain_of(&b_comps)));
            match a_end {
                PathEnd::Leaf => {
                    if vis.len() == self.divisor_total {
                        let graph = ResolutionGraph {
                            a_chains: levels.iter().rev().map(|(a, _)| a.clone()).collect(),
                            b_chains: levels.iter().rev().map(|(_, b)| b.clone()).collect(),
                            c_prime_self: self.c_prime_self,
                        };
                        if graph.validate().is_ok() {
                            self.found.insert(graph);
                        }
                    }
                }
                PathEnd::Junction(n1, n2) => {
                    let new_junction = a_comps.last().expect("non-empty path").clone();
                    self.descend(&new_junction, (&n1, &n2), levels, &vis)?;
                }
            }
            levels.pop();
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(a: &[&str], b: &[&str], c_self: i64) -> ResolutionGraph {
        ResolutionGraph::new(
            a.iter().map(|s| s.parse().unwrap()).collect(),
            b.iter().map(|s| s.parse().unwrap()).collect(),
            c_self,
        )
        .unwrap()
    }

    fn plain_m1() -> ResolutionGraph {
        graph(&["[2,2,2,2,2,2,4]"], &["[2,2]"], -2)
    }

    fn star_m1() -> ResolutionGraph {
        graph(&["[2,2,2,2,2,2,7]"], &["[2,2,2,2,2]"], -2)
    }

    fn plain_m2() -> ResolutionGraph {
        let a1 = LinearChain::twos(6).star_power(2);
        ResolutionGraph::new(
            vec![a1, LinearChain::single(4)],
            vec!["[7]".parse().unwrap(), "[2,2]".parse().unwrap()],
            -2,
        )
        .unwrap()
    }

    #[test]
    fn validate_recovers_sprouting_multiplicities() {
        assert_eq!(plain_m1().validate().unwrap(), vec![7]);
        assert_eq!(star_m1().validate().unwrap(), vec![7]);
        assert_eq!(plain_m2().validate().unwrap(), vec![6, 1]);
        assert_eq!(graph(&["[3]"], &["[2]"], -2).validate().unwrap(), vec![1]);
    }

    #[test]
    fn validate_rejects_mismatched_chains() {
        let err = graph(&["[2,2,2]"], &["[2,2]"], -2).validate();
        assert!(matches!(err, Err(ResolutionError::AdjointMismatch { index: 1, .. })));
        // adjoint of [3,2] is [3,2]; prefix [3] is not the B chain [2]
        let err = graph(&["[3,2]"], &["[2]"], -2).validate();
        assert!(matches!(err, Err(ResolutionError::AdjointMismatch { .. })));
        let err = graph(&["[2,1]"], &["[2]"], -2).validate();
        assert!(matches!(err, Err(ResolutionError::NotAdmissible(1))));
    }

    #[test]
    fn first_family_member_collapse_trace() {
        let (config, ids) = plain_m1().assemble().unwrap();
        assert_eq!(config.len(), 11);
        // the curve self-intersection climbs from -2 to 64 step by step
        let mut config = config;
        let mut selfs = vec![config.self_int(&ids.curve).unwrap()];
        let mut dets = vec![config.form_determinant()];
        let mut order = Vec::new();
        while let [only] = config.minus_one_divisors().as_slice() {
            let step = config.blow_down(&only.clone()).unwrap();
            order.push(step.contracted.clone());
            selfs.push(config.self_int(&ids.curve).unwrap());
            dets.push(config.form_determinant());
        }
        assert_eq!(selfs, vec![-2, -1, 0, 1, 10, 19, 28, 37, 46, 55, 64]);
        for w in dets.windows(2) {
            assert_eq!(w[1], -w[0].clone());
        }
        assert_eq!(
            order,
            vec![
                "D0", "B1.1", "B1.2", "A1.7", "A1.6", "A1.5", "A1.4", "A1.3", "A1.2", "A1.1"
            ]
        );
        assert_eq!(config.len(), 1);
    }

    #[test]
    fn first_family_member_profile() {
        let p = plain_m1().cusp_profile().unwrap();
        assert_eq!(p.degree, 8);
        assert_eq!(p.multiplicities, vec![3, 3, 3, 3, 3, 3, 3, 1, 1, 1]);
        assert_eq!(p.genus_defect, 0);
        let counts = plain_m1().sprouting_counts().unwrap();
        assert_eq!(
            counts,
            vec![PhaseCounts {
                sprouting: 7,
                subdivisional: 2
            }]
        );
    }

    #[test]
    fn star_partner_profile() {
        let p = star_m1().cusp_profile().unwrap();
        assert_eq!(p.degree, 16);
        let mut expect = vec![6; 7];
        expect.extend([1; 6]);
        assert_eq!(p.multiplicities, expect);
        assert_eq!(p.genus_defect, 0);
        assert_eq!(
            star_m1().sprouting_counts().unwrap(),
            vec![PhaseCounts {
                sprouting: 7,
                subdivisional: 5
            }]
        );
    }

    #[test]
    fn two_level_profile() {
        let g = plain_m2();
        let (config, _) = g.assemble().unwrap();
        assert_eq!(config.len(), 17); // 16 divisor components plus the curve
        let p = g.cusp_profile().unwrap();
        assert_eq!(p.degree, 55);
        let mut expect = vec![21; 6];
        expect.push(18);
        expect.extend([3; 6]);
        expect.extend([1; 3]);
        assert_eq!(p.multiplicities, expect);
        assert_eq!(p.genus_defect, 0);
        assert_eq!(
            g.sprouting_counts().unwrap(),
            vec![
                PhaseCounts {
                    sprouting: 6,
                    subdivisional: 6
                },
                PhaseCounts {
                    sprouting: 1,
                    subdivisional: 2
                }
            ]
        );
    }

    #[test]
    fn degenerate_single_level_graph() {
        let g = graph(&["[3]"], &["[2]"], -2);
        let p = g.cusp_profile().unwrap();
        assert_eq!(p.degree, 2);
        assert_eq!(p.multiplicities, vec![2, 1, 1]);
        // a smooth conic has genus 0 but the formula charges it -1: this
        // multiplicity data does not belong to a plane curve
        assert_eq!(p.genus_defect, -1);
    }

    #[test]
    fn decompose_inverts_assemble() {
        for g in [plain_m1(), star_m1(), plain_m2(), graph(&["[3]"], &["[2]"], -2)] {
            let (config, _) = g.assemble().unwrap();
            let back = ResolutionGraph::decompose(&config).unwrap();
            assert_eq!(back, g);
        }
    }

    #[test]
    fn decompose_rejects_shapeless_configurations() {
        let mut c = IntersectionConfig::new();
        c.add_component("C", -2, CompKind::MarkedCurve).unwrap();
        c.add_component("D0", -1, CompKind::Divisor).unwrap();
        c.add_pair("C", "D0", 1).unwrap();
        assert!(matches!(
            ResolutionGraph::decompose(&c),
            Err(ResolutionError::Decompose(_))
        ));
    }

    #[test]
    fn serde_schema() {
        let g = plain_m1();
        let json = serde_json::to_string(&g).unwrap();
        assert_eq!(
            json,
            "{\"g\":1,\"A\":[[2,2,2,2,2,2,4]],\"B\":[[2,2]],\"c_prime_self\":-2}"
        );
        let back: ResolutionGraph = serde_json::from_str(&json).unwrap();
        assert_eq!(back, g);
        let bad = "{\"g\":2,\"A\":[[3]],\"B\":[[2]],\"c_prime_self\":-2}";
        assert!(serde_json::from_str::<ResolutionGraph>(bad).is_err());
    }
}
