//! Deciding whether one tree automaton covers another.
//!
//! Recognition runs in two waves over the target tree. The bottom-up wave
//! computes, for every target node, the set of cover states whose whole
//! sub-automaton embeds at that node ([`AvailabilityMap`]). The top-down wave
//! starts from the root playing the cover's initial state and propagates the
//! roles each node actually plays ([`PrunedMap`]), adding a fresh occurrence
//! wherever the initial state is available. The run fails as soon as a node
//! plays no role, a final node plays no final role, or (in
//! [`CoverMode::EdgeCoverage`]) a transition is not traversed by any
//! occurrence.
//!
//! Both waves exist in a serial engine (one topological sweep each) and a
//! level-synchronous engine that handles one depth per round. They produce
//! identical maps, witnesses and failures.

mod parallel;
mod roles;
mod serial;
mod witness;

use std::fmt;

use crate::alphabet::Symbol;
use crate::dta::{Dta, StateId};
use crate::error::AlphabetError;

pub use roles::{AvailabilityMap, PrunedMap, RoleSet};
pub use witness::{expand_occurrence, verify_witness, OccurrenceSet, WitnessDefect};

/// Which parts of the target every occurrence family has to reach.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum CoverMode {
    /// Every target state lies in some occurrence and every final target
    /// state is the image of a final cover state.
    NodeCoverage,
    /// Additionally every target transition lies in some occurrence. On
    /// path automata this is exactly string covering.
    #[default]
    EdgeCoverage,
}

impl CoverMode {
    pub fn name(self) -> &'static str {
        match self {
            CoverMode::NodeCoverage => "node",
            CoverMode::EdgeCoverage => "edge",
        }
    }
}

/// Which recognition engine to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Engine {
    #[default]
    Serial,
    /// Level-synchronous: one round per tree depth in each wave.
    Parallel,
}

/// Why recognition rejected an instance. Node ids are target states.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CoverFailure {
    /// The cover does not embed at the target root.
    RootCannotPlayQ0,
    /// `node` is reached by no occurrence.
    EmptyRoleSet { node: StateId },
    /// `node` is final but plays no final cover state.
    FinalMismatch { node: StateId },
    /// No occurrence traverses the transition `from --symbol--> to`.
    UncoveredEdge { from: StateId, symbol: char, to: StateId },
}

impl fmt::Display for CoverFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            CoverFailure::RootCannotPlayQ0 => write!(f, "RootCannotPlayQ0"),
            CoverFailure::EmptyRoleSet { node } => write!(f, "EmptyRoleSet node={node}"),
            CoverFailure::FinalMismatch { node } => write!(f, "FinalMismatch node={node}"),
            CoverFailure::UncoveredEdge { from, symbol, to } => {
                write!(f, "UncoveredEdge edge={from}-{symbol}->{to}")
            }
        }
    }
}

/// Work counters collected during recognition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Stats {
    /// Elementary operations: one per (node, cover state) role test and one
    /// per transition lookup.
    pub basic_steps: u64,
    /// Barrier-separated rounds (level-synchronous engine only).
    pub parallel_rounds: u64,
    /// Role sets sent between neighbouring target nodes.
    pub messages: u64,
    /// Sum over rounds of the largest per-node work in that round; equal to
    /// `basic_steps` for the serial engine.
    pub critical_path: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Covered(OccurrenceSet),
    NotCovered(CoverFailure),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverOutcome {
    pub verdict: Verdict,
    pub stats: Stats,
}

impl CoverOutcome {
    pub fn covered(&self) -> bool {
        matches!(self.verdict, Verdict::Covered(_))
    }

    pub fn witness(&self) -> Option<&OccurrenceSet> {
        match &self.verdict {
            Verdict::Covered(w) => Some(w),
            Verdict::NotCovered(_) => None,
        }
    }

    pub fn failure(&self) -> Option<CoverFailure> {
        match self.verdict {
            Verdict::Covered(_) => None,
            Verdict::NotCovered(f) => Some(f),
        }
    }
}

/// Everything one recognition run computes. `pruned` is absent when the
/// top-down wave stopped on a failure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Recognition {
    pub availability: AvailabilityMap,
    pub pruned: Option<PrunedMap>,
    pub outcome: CoverOutcome,
}

fn check_alphabets(cover: &Dta, target: &Dta) -> Result<(), AlphabetError> {
    if cover.alphabet() == target.alphabet() {
        Ok(())
    } else {
        Err(AlphabetError::Mismatch)
    }
}

/// Bottom-up wave: `q` is available at `v` iff for each transition
/// `q --s--> q'` the node `v` has an `s`-child where `q'` is available.
/// Childless cover states are available everywhere.
pub fn availability_pass(cover: &Dta, target: &Dta) -> Result<AvailabilityMap, AlphabetError> {
    check_alphabets(cover, target)?;
    let levels = target.levels();
    let mut stats = Stats::default();
    Ok(serial::availability(cover, target, &levels, &mut stats))
}

/// Top-down wave over a precomputed availability map.
pub fn pruning_pass(
    cover: &Dta,
    target: &Dta,
    availability: &AvailabilityMap,
    mode: CoverMode,
) -> Result<PrunedMap, CoverFailure> {
    let levels = target.levels();
    let mut stats = Stats::default();
    serial::pruning(cover, target, &levels, availability, mode, &mut stats)
}

/// Anchors of a successful run: every target node that plays the initial
/// cover state.
pub fn extract_occurrences(cover: &Dta, target: &Dta, pruned: &PrunedMap) -> OccurrenceSet {
    let q0 = cover.root();
    OccurrenceSet::new((0..target.num_states()).filter(|&v| pruned.contains(v, q0)).collect())
}

/// Runs both waves with the chosen engine and keeps the intermediate maps.
pub fn recognize(cover: &Dta, target: &Dta, mode: CoverMode, engine: Engine) -> Result<Recognition, AlphabetError> {
    check_alphabets(cover, target)?;
    Ok(match engine {
        Engine::Serial => serial::run(cover, target, mode),
        Engine::Parallel => parallel::run(cover, target, mode),
    })
}

/// Decides `cover ⊴ target` with the serial engine.
pub fn covers(cover: &Dta, target: &Dta, mode: CoverMode) -> Result<CoverOutcome, AlphabetError> {
    recognize(cover, target, mode, Engine::Serial).map(|r| r.outcome)
}

/// Decides `cover ⊴ target` with the level-synchronous engine.
pub fn covers_parallel(cover: &Dta, target: &Dta, mode: CoverMode) -> Result<CoverOutcome, AlphabetError> {
    recognize(cover, target, mode, Engine::Parallel).map(|r| r.outcome)
}

// Per-node kernels shared by both engines. Each reads only finished rows of
// neighbouring nodes and returns the node's own row.

fn available_row(cover: &Dta, target: &Dta, v: StateId, availability: &RoleSet, steps: &mut u64) -> Vec<u64> {
    let mut row = availability.empty_row();
    for q in 0..cover.num_states() {
        *steps += 1;
        let fits = cover.children(q).iter().all(|&(s, next)| {
            *steps += 1;
            target.child(v, s).is_some_and(|c| availability.contains(c, next))
        });
        if fits {
            RoleSet::set_in(&mut row, q);
        }
    }
    row
}

#[allow(clippy::too_many_arguments)]
fn pruned_row(
    cover: &Dta,
    target: &Dta,
    node: StateId,
    incoming: Option<(StateId, Symbol)>,
    availability: &AvailabilityMap,
    pruned: &RoleSet,
    mode: CoverMode,
    steps: &mut u64,
) -> Result<Vec<u64>, CoverFailure> {
    let q0 = cover.root();
    let mut row = pruned.empty_row();
    match incoming {
        None => {
            *steps += 1;
            if !availability.contains(node, q0) {
                return Err(CoverFailure::RootCannotPlayQ0);
            }
            RoleSet::set_in(&mut row, q0);
        }
        Some((parent, s)) => {
            let mut continued = false;
            for p in pruned.iter(parent) {
                *steps += 1;
                if let Some(next) = cover.child(p, s) {
                    RoleSet::set_in(&mut row, next);
                    continued = true;
                }
            }
            *steps += 1;
            if availability.contains(node, q0) {
                RoleSet::set_in(&mut row, q0);
            }
            if row.iter().all(|&w| w == 0) {
                return Err(CoverFailure::EmptyRoleSet { node });
            }
            if mode == CoverMode::EdgeCoverage && !continued {
                let symbol = target.alphabet().resolve(s).unwrap_or('?');
                return Err(CoverFailure::UncoveredEdge { from: parent, symbol, to: node });
            }
        }
    }
    if target.is_final(node) {
        let plays_final = RoleSet::iter_row(&row).any(|q| {
            *steps += 1;
            cover.is_final(q)
        });
        if !plays_final {
            return Err(CoverFailure::FinalMismatch { node });
        }
    }
    Ok(row)
}

#[cfg(test)]
mod tests;
