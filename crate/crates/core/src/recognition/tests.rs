use super::*;
use crate::alphabet::Alphabet;

/// Builds cover and target over one shared alphabet.
fn pair(cover: &[&str], target: &[&str]) -> (Dta, Dta) {
    let alphabet = Alphabet::from_words(&[cover, target].concat());
    let build = |ws: &[&str]| {
        let words: Vec<_> = ws.iter().map(|w| alphabet.word(w).unwrap()).collect();
        Dta::trie(&words, &alphabet).unwrap()
    };
    (build(cover), build(target))
}

/// Whether the cover sub-automaton rooted at `q` embeds at `v`, by plain
/// recursion.
fn embeds(cover: &Dta, target: &Dta, q: StateId, v: StateId) -> bool {
    cover.children(q).iter().all(|&(s, next)| match target.child(v, s) {
        Some(c) => embeds(cover, target, next, c),
        None => false,
    })
}

fn brute_availability(cover: &Dta, target: &Dta, v: StateId) -> Vec<StateId> {
    (0..cover.num_states()).filter(|&q| embeds(cover, target, q, v)).collect()
}

#[test]
fn availability_on_abab() {
    let (cover, target) = pair(&["aba"], &["abab"]);
    let avail = availability_pass(&cover, &target).unwrap();
    // path states are numbered along the word
    assert_eq!(avail.roles(4), vec![3]);
    assert_eq!(avail.roles(3), vec![3]);
    assert_eq!(avail.roles(2), vec![2, 3]);
    assert_eq!(avail.roles(1), vec![1, 3]);
    // the root also plays q2: it has an a-child, and q2's only transition is a
    assert_eq!(avail.roles(0), vec![0, 2, 3]);
    for v in 0..target.num_states() {
        assert_eq!(avail.roles(v), brute_availability(&cover, &target, v));
    }
}

#[test]
fn availability_contains_identity_roles() {
    let (cover, target) = pair(&["aba"], &["aba"]);
    let avail = availability_pass(&cover, &target).unwrap();
    for i in 0..4 {
        assert!(avail.contains(i, i));
    }
}

#[test]
fn availability_on_single_root() {
    let (cover, target) = pair(&["ab", "b"], &[""]);
    let avail = availability_pass(&cover, &target).unwrap();
    let leaves: Vec<_> = (0..cover.num_states()).filter(|&q| cover.is_leaf(q)).collect();
    assert_eq!(avail.roles(0), leaves);
}

#[test]
fn pruning_fails_on_abab() {
    let (cover, target) = pair(&["aba"], &["abab"]);
    let avail = availability_pass(&cover, &target).unwrap();
    for mode in [CoverMode::NodeCoverage, CoverMode::EdgeCoverage] {
        let err = pruning_pass(&cover, &target, &avail, mode).unwrap_err();
        assert_eq!(err, CoverFailure::EmptyRoleSet { node: 4 });
    }
}

#[test]
fn pruning_on_ababa() {
    let (cover, target) = pair(&["aba"], &["ababa"]);
    let avail = availability_pass(&cover, &target).unwrap();
    let pruned = pruning_pass(&cover, &target, &avail, CoverMode::EdgeCoverage).unwrap();
    let roles: Vec<Vec<StateId>> = (0..6).map(|v| pruned.roles(v)).collect();
    assert_eq!(roles, vec![vec![0], vec![1], vec![0, 2], vec![1, 3], vec![2], vec![3]]);
    assert!(pruned.is_subset_of(&avail));
    assert_eq!(extract_occurrences(&cover, &target, &pruned).anchors(), &[0, 2]);
}

#[test]
fn modes_split_on_abaaaba() {
    let (cover, target) = pair(&["aba"], &["abaaaba"]);
    let node = covers(&cover, &target, CoverMode::NodeCoverage).unwrap();
    assert!(node.covered());
    assert_eq!(node.witness().unwrap().anchors(), &[0, 4]);

    let edge = covers(&cover, &target, CoverMode::EdgeCoverage).unwrap();
    assert_eq!(edge.failure(), Some(CoverFailure::UncoveredEdge { from: 3, symbol: 'a', to: 4 }));

    let witness = node.witness().unwrap();
    assert!(verify_witness(&cover, &target, witness, CoverMode::NodeCoverage).is_ok());
    let defects = verify_witness(&cover, &target, witness, CoverMode::EdgeCoverage).unwrap_err();
    assert_eq!(defects, vec![WitnessDefect::UntraversedEdge { from: 3, to: 4 }]);
}

#[test]
fn reflexive_with_root_anchor() {
    let t = Dta::trie_of_strs(&["aba", "ababa", "b", "bba"]).unwrap();
    for mode in [CoverMode::NodeCoverage, CoverMode::EdgeCoverage] {
        let out = covers(&t, &t, mode).unwrap();
        assert_eq!(out.witness().unwrap().anchors(), &[t.root()]);
    }
}

#[test]
fn aba_covers_trie_of_covered_words() {
    let (cover, target) = pair(&["aba"], &["aba", "ababa", "abaaba"]);
    let out = covers(&cover, &target, CoverMode::EdgeCoverage).unwrap();
    let witness = out.witness().expect("covered");
    assert!(verify_witness(&cover, &target, witness, CoverMode::EdgeCoverage).is_ok());
    // anchors: root, depth 2 on the "ababa" branch, depth 3 on the "abaaba" branch
    let a = target.alphabet();
    let walk = |prefix: &str| a.word(prefix).unwrap().iter().fold(target.root(), |q, &s| target.child(q, s).unwrap());
    let mut expected = vec![walk(""), walk("ab"), walk("aba")];
    expected.sort();
    assert_eq!(witness.anchors(), expected.as_slice());
    // "ab" and "aba" nodes: positions 3 of ababa and 4 of abaaba
    assert!(target.children(walk("aba")).len() == 2);
}

#[test]
fn ab_does_not_cover_aba() {
    let (cover, target) = pair(&["ab"], &["aba"]);
    // no occurrence reaches the leaf at all, which is reported before the
    // missing edge or the missing final role
    for mode in [CoverMode::NodeCoverage, CoverMode::EdgeCoverage] {
        let out = covers(&cover, &target, mode).unwrap();
        assert_eq!(out.failure(), Some(CoverFailure::EmptyRoleSet { node: 3 }));
    }
}

#[test]
fn final_mismatch_when_cover_ends_early() {
    // "ab" final inside an occurrence of "abb": embeds, reaches everything,
    // but the node after "ab" only ever plays a non-final role
    let (cover, target) = pair(&["abb"], &["ab", "abb"]);
    let out = covers(&cover, &target, CoverMode::EdgeCoverage).unwrap();
    assert_eq!(out.failure(), Some(CoverFailure::FinalMismatch { node: 2 }));
}

#[test]
fn root_cannot_play_initial_state() {
    let (cover, target) = pair(&["ba"], &["ab"]);
    let out = covers(&cover, &target, CoverMode::EdgeCoverage).unwrap();
    assert_eq!(out.failure(), Some(CoverFailure::RootCannotPlayQ0));
}

#[test]
fn alphabet_mismatch_is_an_error() {
    let cover = Dta::path_of_str("ab");
    let target = Dta::path_of_str("abc");
    assert_eq!(covers(&cover, &target, CoverMode::EdgeCoverage), Err(AlphabetError::Mismatch));
    assert!(availability_pass(&cover, &target).is_err());
}

#[test]
fn parallel_matches_serial() {
    let cases: &[(&[&str], &[&str])] = &[
        (&["aba"], &["aba", "abaaba"]),
        (&["aba"], &["abaaaba"]),
        (&["ab"], &["ab", "aab"]),
        (&["a", "b"], &["ab", "ba", "bb"]),
        (&["aba"], &[""]),
        (&[""], &[""]),
    ];
    for (c, t) in cases {
        let (cover, target) = pair(c, t);
        for mode in [CoverMode::NodeCoverage, CoverMode::EdgeCoverage] {
            let s = recognize(&cover, &target, mode, Engine::Serial).unwrap();
            let p = recognize(&cover, &target, mode, Engine::Parallel).unwrap();
            assert_eq!(s.availability, p.availability);
            assert_eq!(s.pruned, p.pruned);
            assert_eq!(s.outcome.verdict, p.outcome.verdict);
            assert!(p.outcome.stats.parallel_rounds <= 2 * target.depth() as u64 + 2);
        }
    }
}

#[test]
fn parallel_round_counts() {
    let (cover, target) = pair(&["aba"], &["aba", "abaaba"]);
    let out = covers_parallel(&cover, &target, CoverMode::EdgeCoverage).unwrap();
    assert!(out.covered());
    assert!(out.stats.parallel_rounds <= 14);

    let (cover, target) = pair(&["a"], &[""]);
    let out = covers_parallel(&cover, &target, CoverMode::EdgeCoverage).unwrap();
    assert!(out.stats.parallel_rounds <= 4);
}

#[test]
fn expand_examples() {
    let (cover, target) = pair(&["aba"], &["ababa"]);
    assert_eq!(expand_occurrence(&cover, &target, 2).unwrap(), vec![2, 3, 4, 5]);
    let id = expand_occurrence(&cover, &cover, 0).unwrap();
    assert_eq!(id, (0..cover.num_states()).collect::<Vec<_>>());

    let (cover, target) = pair(&["aba"], &["ab"]);
    assert!(matches!(expand_occurrence(&cover, &target, 0), Err(EmbedError::MissingTransition { at: 2, symbol: 'a' })));
    assert_eq!(expand_occurrence(&cover, &target, 9), Err(EmbedError::BadAnchor(9)));
}

#[test]
fn empty_witness_is_rejected() {
    let (cover, target) = pair(&["aba"], &["ababa"]);
    assert!(verify_witness(&cover, &target, &OccurrenceSet::default(), CoverMode::NodeCoverage).is_err());
    let (cover, target) = pair(&[""], &[""]);
    assert!(verify_witness(&cover, &target, &OccurrenceSet::default(), CoverMode::NodeCoverage).is_err());
}

#[test]
fn step_counter_budget() {
    let (cover, target) = pair(&["aba"], &["aba", "ababa", "abaaba"]);
    let out = covers(&cover, &target, CoverMode::EdgeCoverage).unwrap();
    let budget = 8 * cover.num_states() as u64 * target.num_states() as u64;
    assert!(out.stats.basic_steps <= budget);
    assert_eq!(out.stats.messages, 2 * (target.num_states() as u64 - 1));
}

use crate::error::{AlphabetError, EmbedError};
