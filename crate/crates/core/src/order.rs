//! Reflexivity and transitivity of the cover relation, at the witness level.

use thiserror::Error;

use crate::dta::Dta;
use crate::recognition::{expand_occurrence, verify_witness, CoverMode, OccurrenceSet, WitnessDefect};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComposeError {
    #[error("first witness is invalid: {}", join(.0))]
    FirstInvalid(Vec<WitnessDefect>),
    #[error("second witness is invalid: {}", join(.0))]
    SecondInvalid(Vec<WitnessDefect>),
}

fn join(defects: &[WitnessDefect]) -> String {
    defects.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ")
}

/// Every automaton covers itself through the identity embedding.
pub fn identity_witness(dta: &Dta) -> OccurrenceSet {
    OccurrenceSet::new(vec![dta.root()])
}

/// Composes a witness of `a1 ⊴ a2` with one of `a2 ⊴ a3`.
///
/// Each anchor `u` of `w23` fixes an embedding `ψ` of `a2` into `a3`; each
/// anchor `v` of `w12` is a state of `a2`, and `ψ(v)` anchors the composed
/// embedding of `a1` into `a3`. Equal compositions collapse into one anchor.
/// Both inputs are verified in `mode` first.
pub fn compose_witnesses(
    a1: &Dta,
    a2: &Dta,
    a3: &Dta,
    w12: &OccurrenceSet,
    w23: &OccurrenceSet,
    mode: CoverMode,
) -> Result<OccurrenceSet, ComposeError> {
    verify_witness(a1, a2, w12, mode).map_err(ComposeError::FirstInvalid)?;
    verify_witness(a2, a3, w23, mode).map_err(ComposeError::SecondInvalid)?;
    let mut anchors = Vec::with_capacity(w12.len() * w23.len());
    for &u in w23.anchors() {
        let psi = expand_occurrence(a2, a3, u).expect("verified above");
        anchors.extend(w12.anchors().iter().map(|&v| psi[v]));
    }
    Ok(OccurrenceSet::new(anchors))
}
