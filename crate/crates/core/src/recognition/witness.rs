use std::fmt;

use super::CoverMode;
use crate::dta::{Dta, StateId};
use crate::error::{AlphabetError, EmbedError};

/// A cover witness: the target nodes playing the cover's initial state.
///
/// Both automata are deterministic trees, so an anchor fixes its whole
/// occurrence; [`expand_occurrence`] recovers it on demand.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct OccurrenceSet {
    anchors: Vec<StateId>,
}

impl OccurrenceSet {
    /// Sorts and deduplicates `anchors`.
    pub fn new(mut anchors: Vec<StateId>) -> Self {
        anchors.sort_unstable();
        anchors.dedup();
        OccurrenceSet { anchors }
    }

    pub fn anchors(&self) -> &[StateId] {
        &self.anchors
    }

    pub fn len(&self) -> usize {
        self.anchors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.anchors.is_empty()
    }
}

/// The embedding of `cover` into `target` sending the cover root to `anchor`,
/// as a map indexed by cover state.
pub fn expand_occurrence(cover: &Dta, target: &Dta, anchor: StateId) -> Result<Vec<StateId>, EmbedError> {
    if cover.alphabet() != target.alphabet() {
        return Err(AlphabetError::Mismatch.into());
    }
    if anchor >= target.num_states() {
        return Err(EmbedError::BadAnchor(anchor));
    }
    let mut image = vec![usize::MAX; cover.num_states()];
    image[cover.root()] = anchor;
    let mut stack = vec![cover.root()];
    while let Some(q) = stack.pop() {
        let at = image[q];
        for &(s, next) in cover.children(q) {
            let to = target.child(at, s).ok_or_else(|| EmbedError::MissingTransition {
                at,
                symbol: target.alphabet().resolve(s).unwrap_or('?'),
            })?;
            image[next] = to;
            stack.push(next);
        }
    }
    Ok(image)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WitnessDefect {
    AlphabetMismatch,
    NoEmbedding { anchor: StateId, reason: EmbedError },
    UncoveredState { node: StateId },
    UncoveredFinal { node: StateId },
    UntraversedEdge { from: StateId, to: StateId },
}

impl fmt::Display for WitnessDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WitnessDefect::AlphabetMismatch => write!(f, "automata use different alphabets"),
            WitnessDefect::NoEmbedding { anchor, reason } => write!(f, "anchor {anchor}: {reason}"),
            WitnessDefect::UncoveredState { node } => write!(f, "state {node} lies in no occurrence"),
            WitnessDefect::UncoveredFinal { node } => {
                write!(f, "final state {node} is not the image of a final cover state")
            }
            WitnessDefect::UntraversedEdge { from, to } => {
                write!(f, "transition {from}->{to} lies in no occurrence")
            }
        }
    }
}

/// Re-checks a witness from scratch by expanding every anchor.
///
/// This shares nothing with the two recognition waves; it is the reference
/// the tests hold recognition to.
pub fn verify_witness(
    cover: &Dta,
    target: &Dta,
    witness: &OccurrenceSet,
    mode: CoverMode,
) -> Result<(), Vec<WitnessDefect>> {
    if cover.alphabet() != target.alphabet() {
        return Err(vec![WitnessDefect::AlphabetMismatch]);
    }
    let n = target.num_states();
    let mut node_hit = vec![false; n];
    let mut final_hit = vec![false; n];
    // a non-root target node has one incoming edge, so edges are keyed by child
    let mut edge_hit = vec![false; n];
    let mut defects = Vec::new();

    for &anchor in witness.anchors() {
        let image = match expand_occurrence(cover, target, anchor) {
            Ok(image) => image,
            Err(reason) => {
                defects.push(WitnessDefect::NoEmbedding { anchor, reason });
                continue;
            }
        };
        for (q, &v) in image.iter().enumerate() {
            node_hit[v] = true;
            if cover.is_final(q) {
                final_hit[v] = true;
            }
            for &(_, next) in cover.children(q) {
                edge_hit[image[next]] = true;
            }
        }
    }

    for v in 0..n {
        if !node_hit[v] {
            defects.push(WitnessDefect::UncoveredState { node: v });
        }
        if target.is_final(v) && !final_hit[v] {
            defects.push(WitnessDefect::UncoveredFinal { node: v });
        }
    }
    if mode == CoverMode::EdgeCoverage {
        for from in 0..n {
            for &(_, to) in target.children(from) {
                if !edge_hit[to] {
                    defects.push(WitnessDefect::UntraversedEdge { from, to });
                }
            }
        }
    }

    if defects.is_empty() {
        Ok(())
    } else {
        Err(defects)
    }
}
