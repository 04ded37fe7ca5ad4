//! Level-synchronous engine.
//!
//! Each round handles every node of one depth; rounds are separated by a
//! barrier (the end of a rayon collect). A node reads only rows written in
//! earlier rounds and writes only its own row, so the result does not depend
//! on how nodes are scheduled inside a round.

use rayon::prelude::*;

use super::{
    available_row, extract_occurrences, pruned_row, AvailabilityMap, CoverFailure, CoverMode, CoverOutcome, PrunedMap,
    Recognition, RoleSet, Stats, Verdict,
};
use crate::dta::{Dta, StateId};

/// Levels smaller than this are processed inline; spawning tasks for them
/// costs more than the work.
const SPLIT_THRESHOLD: usize = 256;

fn map_level<T, F>(level: &[StateId], f: F) -> Vec<T>
where
    T: Send,
    F: Fn(StateId) -> T + Sync + Send,
{
    if level.len() >= SPLIT_THRESHOLD {
        level.par_iter().map(|&v| f(v)).collect()
    } else {
        level.iter().map(|&v| f(v)).collect()
    }
}

pub(super) fn run(cover: &Dta, target: &Dta, mode: CoverMode) -> Recognition {
    let levels = target.levels();
    let mut stats = Stats::default();

    let mut avail = RoleSet::new(target.num_states(), cover.num_states());
    for d in (0..levels.num_levels()).rev() {
        let level = levels.level(d);
        let rows = map_level(level, |v| {
            let mut steps = 0;
            let row = available_row(cover, target, v, &avail, &mut steps);
            (row, steps)
        });
        stats.parallel_rounds += 1;
        let mut widest = 0;
        for (&v, (row, steps)) in level.iter().zip(rows) {
            avail.store(v, &row);
            stats.basic_steps += steps;
            widest = widest.max(steps);
            if v != target.root() {
                stats.messages += 1;
            }
        }
        stats.critical_path += widest;
    }
    let availability = AvailabilityMap(avail);

    let mut pruned = RoleSet::new(target.num_states(), cover.num_states());
    let mut failure: Option<CoverFailure> = None;
    for d in 0..levels.num_levels() {
        let level = levels.level(d);
        let rows = map_level(level, |v| {
            let mut steps = 0;
            let row = pruned_row(cover, target, v, levels.parent(v), &availability, &pruned, mode, &mut steps);
            (row, steps)
        });
        stats.parallel_rounds += 1;
        let mut widest = 0;
        for (&v, (row, steps)) in level.iter().zip(rows) {
            stats.basic_steps += steps;
            widest = widest.max(steps);
            match row {
                Ok(row) => pruned.store(v, &row),
                // levels are in breadth-first order, so the first failure
                // here is the one the serial sweep would stop at
                Err(f) if failure.is_none() => failure = Some(f),
                Err(_) => {}
            }
            if v != target.root() {
                stats.messages += 1;
            }
        }
        stats.critical_path += widest;
        if failure.is_some() {
            break;
        }
    }

    match failure {
        None => {
            let pruned = PrunedMap(pruned);
            let witness = extract_occurrences(cover, target, &pruned);
            Recognition {
                availability,
                pruned: Some(pruned),
                outcome: CoverOutcome { verdict: Verdict::Covered(witness), stats },
            }
        }
        Some(f) => {
            Recognition { availability, pruned: None, outcome: CoverOutcome { verdict: Verdict::NotCovered(f), stats } }
        }
    }
}
