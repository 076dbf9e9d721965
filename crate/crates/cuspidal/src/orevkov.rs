//! The two infinite families of unicuspidal rational plane curves whose
//! complement has log Kodaira dimension two and logarithmic deficiency one.
//!
//! Both families are indexed by `m >= 1` and share their `A_1` chain; the
//! plain and the star variant differ in the side chains. The strict
//! transform has self-intersection -2 throughout, and a distinguished
//! extra (-1)-curve closes exactly one loop against the divisor tree.

use serde::{Deserialize, Serialize};

use crate::chain::LinearChain;
use crate::contract::{CompId, CompKind, IntersectionConfig};
use crate::resolution::{CuspProfile, PhaseCounts, ResolutionError, ResolutionGraph};

/// Which of the two families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Variant {
    Plain,
    Star,
}

impl std::fmt::Display for Variant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Variant::Plain => "plain",
            Variant::Star => "star",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OrevkovError {
    #[error("family index m must be at least 1")]
    IndexOutOfRange,
    #[error(transparent)]
    Resolution(#[from] ResolutionError),
    #[error("the extra curve must close exactly one loop, found cycle rank {0}")]
    BadLoop(usize),
}

/// A member of one of the two families: the index, the variant, and its
/// resolution graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrevkovCurve {
    pub m: u32,
    pub variant: Variant,
    pub graph: ResolutionGraph,
}

/// Everything the library can derive about one family member.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrevkovSummary {
    pub m: u32,
    pub variant: Variant,
    pub graph: ResolutionGraph,
    /// Sprouting multiplicities per level from the chain relation.
    pub o: Vec<i64>,
    pub profile: CuspProfile,
    pub phase_counts: Vec<PhaseCounts>,
    /// Components the extra (-1)-curve is attached to.
    pub e0_attachments: (CompId, CompId),
    /// Cycle rank of the divisor graph once that curve is added; always 1.
    pub cycle_rank_with_e0: usize,
}

impl OrevkovCurve {
    /// Build the m-th member of the chosen family.
    ///
    /// The first member has a single level; from the second member on a
    /// second level appears and the `A_1` chain grows by one star factor
    /// per step.
    pub fn new(m: u32, variant: Variant) -> Result<Self, OrevkovError> {
        if m == 0 {
            return Err(OrevkovError::IndexOutOfRange);
        }
        let tw6 = LinearChain::twos(6);
        let graph = if m == 1 {
            let (a1, b1) = match variant {
                Variant::Plain => ("[2,2,2,2,2,2,4]", "[2,2]"),
                Variant::Star => ("[2,2,2,2,2,2,7]", "[2,2,2,2,2]"),
            };
            ResolutionGraph::new(
                vec![a1.parse().expect("literal")],
                vec![b1.parse().expect("literal")],
                -2,
            )
        } else {
            let a1 = tw6.star_power(m as usize);
            let b1 = LinearChain::run(7, m as usize - 1);
            let (a2, b2) = match variant {
                Variant::Plain => ("[4]", "[2,2]"),
                Variant::Star => ("[7]", "[2,2,2,2,2]"),
            };
            ResolutionGraph::new(
                vec![a1, a2.parse().expect("literal")],
                vec![b1, b2.parse().expect("literal")],
                -2,
            )
        }
        .expect("matching level counts");
        Ok(OrevkovCurve { m, variant, graph })
    }

    /// Assembled component ids the extra (-1)-curve attaches to: both ends
    /// of `A_1` for the first member, and the head of `A_1` together with
    /// the far end of `B_1` afterwards.
    pub fn e0_attachments(&self) -> Result<(CompId, CompId), OrevkovError> {
        let (_, ids) = self.graph.assemble()?;
        let a1 = &ids.a[0];
        let att = if self.m == 1 {
            (a1[0].clone(), a1.last().expect("non-empty").clone())
        } else {
            (
                a1[0].clone(),
                ids.b[0].last().expect("non-empty").clone(),
            )
        };
        Ok(att)
    }

    /// The assembled configuration with the extra (-1)-curve `E0` added at
    /// its two attachment points.
    pub fn config_with_extra_curve(&self) -> Result<(IntersectionConfig, CompId), OrevkovError> {
        let (mut config, _) = self.graph.assemble()?;
        let (u, v) = self.e0_attachments()?;
        let e0: CompId = "E0".to_string();
        config
            .add_component(&e0, -1, CompKind::Divisor)
            .expect("fresh id");
        config.add_pair(&e0, &u, 1).map_err(ResolutionError::from)?;
        config.add_pair(&e0, &v, 1).map_err(ResolutionError::from)?;
        Ok((config, e0))
    }

    /// Validate the graph, collapse it, and check the loop condition.
    pub fn verify(&self) -> Result<OrevkovSummary, OrevkovError> {
        let o = self.graph.validate()?;
        let profile = self.graph.cusp_profile()?;
        let phase_counts = self.graph.sprouting_counts()?;
        let e0_attachments = self.e0_attachments()?;
        let (plain, _) = self.graph.assemble()?;
        if plain.divisor_cycle_rank() != 0 {
            return Err(OrevkovError::BadLoop(plain.divisor_cycle_rank()));
        }
        let (with_e0, _) = self.config_with_extra_curve()?;
        let rank = with_e0.divisor_cycle_rank();
        if rank != 1 {
            return Err(OrevkovError::BadLoop(rank));
        }
        Ok(OrevkovSummary {
            m: self.m,
            variant: self.variant,
            graph: self.graph.clone(),
            o,
            profile,
            phase_counts,
            e0_attachments,
            cycle_rank_with_e0: rank,
        })
    }
}
