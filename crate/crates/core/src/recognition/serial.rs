use super::{
    available_row, extract_occurrences, pruned_row, AvailabilityMap, CoverFailure, CoverMode, CoverOutcome, PrunedMap,
    Recognition, RoleSet, Stats, Verdict,
};
use crate::dta::{Dta, Levels};

pub(super) fn availability(cover: &Dta, target: &Dta, levels: &Levels, stats: &mut Stats) -> AvailabilityMap {
    let mut sets = RoleSet::new(target.num_states(), cover.num_states());
    for &v in levels.order().iter().rev() {
        let row = available_row(cover, target, v, &sets, &mut stats.basic_steps);
        sets.store(v, &row);
        if v != target.root() {
            stats.messages += 1;
        }
    }
    AvailabilityMap(sets)
}

pub(super) fn pruning(
    cover: &Dta,
    target: &Dta,
    levels: &Levels,
    availability: &AvailabilityMap,
    mode: CoverMode,
    stats: &mut Stats,
) -> Result<PrunedMap, CoverFailure> {
    let mut sets = RoleSet::new(target.num_states(), cover.num_states());
    for &v in levels.order() {
        let incoming = levels.parent(v);
        let row = pruned_row(cover, target, v, incoming, availability, &sets, mode, &mut stats.basic_steps)?;
        sets.store(v, &row);
        if incoming.is_some() {
            stats.messages += 1;
        }
    }
    Ok(PrunedMap(sets))
}

pub(super) fn run(cover: &Dta, target: &Dta, mode: CoverMode) -> Recognition {
    let levels = target.levels();
    let mut stats = Stats::default();
    let availability = availability(cover, target, &levels, &mut stats);
    let pruned = pruning(cover, target, &levels, &availability, mode, &mut stats);
    stats.critical_path = stats.basic_steps;
    match pruned {
        Ok(pruned) => {
            let witness = extract_occurrences(cover, target, &pruned);
            Recognition {
                availability,
                pruned: Some(pruned),
                outcome: CoverOutcome { verdict: Verdict::Covered(witness), stats },
            }
        }
        Err(failure) => Recognition {
            availability,
            pruned: None,
            outcome: CoverOutcome { verdict: Verdict::NotCovered(failure), stats },
        },
    }
}
