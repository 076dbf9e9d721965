//! Exact combinatorics for weighted linear chains and cusp resolution graphs.
//!
//! The crate has three layers:
//!
//! * [`chain`]: the calculus of weighted linear chains in bracket notation,
//!   with discriminants, inductances, adjoints and the star join, all in
//!   exact integer / rational arithmetic.
//! * [`contract`] and [`resolution`]: a small simple-normal-crossing
//!   contraction engine for intersection configurations, and on top of it
//!   the resolution graphs of unicuspidal rational plane curves, from which
//!   multiplicity sequences, degrees and sprouting counts are recovered.
//! * [`orevkov`], [`classify`], [`cubic`]: the two infinite families of
//!   rational cuspidal curves with an open complement of log Kodaira
//!   dimension two, a bounded search showing they are the only candidates
//!   of their fiber shape, and the exact geometry of the nodal cubic with
//!   its sextactic points that underlies the construction.
//!
//! Everything is deterministic: no floating point, no hash-order iteration.

pub mod chain;
pub mod classify;
pub mod cli;
pub mod contract;
pub mod cubic;
pub mod dot;
pub mod orevkov;
pub mod resolution;

pub use chain::{ChainError, LinearChain};
pub use classify::{
    SearchBounds, SearchOutcome, SectionLayout, SecondFiber, Survivor, TemplateData,
};
pub use contract::{BlowdownStep, BlowupSite, CompKind, ContractError, IntersectionConfig, StepKind};
pub use cubic::{Conic, CubicError, CycRational, GroupLawReport, ProjPoint, SextacticConic};
pub use orevkov::{OrevkovCurve, OrevkovError, OrevkovSummary, Variant};
pub use resolution::{CuspProfile, PhaseCounts, ResolutionError, ResolutionGraph};
