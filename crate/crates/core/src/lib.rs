//! Covers of finite languages by deterministic tree automata.
//!
//! A finite language is represented by its trie, a trimmed deterministic
//! automaton whose transition graph is a tree ([`Dta`]). One such automaton
//! *covers* another when a family of embeddings of the first into the second
//! reaches every state (and, in the default [`CoverMode::EdgeCoverage`],
//! every transition) of the second, with final states landing on final
//! states. For path automata this is exactly the classical notion of a string
//! cover: `aba` covers `ababa` and `abaaba` but not `abaaaba`.
//!
//! The crate provides trie construction and canonical text forms
//! ([`dta`], [`text`]), a two-wave recognition algorithm with serial and
//! level-synchronous engines ([`recognition`]), witness composition
//! ([`order`]), objective minimization including shortest common covers
//! ([`minimize`]), and brute-force references used by the tests ([`oracle`]).
//!
//! ```
//! use covdta::{covers, CoverMode, Dta};
//!
//! let target = Dta::trie_of_strs(&["aba", "ababa", "abaaba"]).unwrap();
//! let cover = Dta::path(&target.alphabet().word("aba").unwrap(), target.alphabet()).unwrap();
//! let outcome = covers(&cover, &target, CoverMode::EdgeCoverage).unwrap();
//! assert!(outcome.covered());
//! ```

pub mod alphabet;
pub mod dot;
pub mod dta;
pub mod error;
pub mod gen;
pub mod minimize;
pub mod oracle;
pub mod order;
pub mod recognition;
pub mod text;

pub use alphabet::{Alphabet, Symbol, Word};
pub use dta::{Dta, Levels, StateId};
pub use error::{AlphabetError, BuildError, EmbedError, ParseError, Violation, WordListError};
pub use minimize::{
    minimize_over, path_candidates, randomized_minimize, shortest_common_cover, shortest_cover, solve_scc,
    CandidateGenerator, MinimizationResult, MinimizeOptions, Objective, SccOptions, SccReport,
};
pub use order::{compose_witnesses, identity_witness};
pub use recognition::{
    availability_pass, covers, covers_parallel, expand_occurrence, extract_occurrences, pruning_pass, recognize,
    verify_witness, CoverFailure, CoverMode, CoverOutcome, Engine, OccurrenceSet, Recognition, Stats, Verdict,
};
pub use text::{parse_automaton, to_canonical_text};

/// Brings `a` and `b` onto the sorted union of their alphabets so they can be
/// compared by recognition.
pub fn align(a: &Dta, b: &Dta) -> (Dta, Dta) {
    let joint = Alphabet::from_chars(a.alphabet().chars().iter().chain(b.alphabet().chars()).copied());
    (
        a.with_alphabet(&joint).expect("joint alphabet contains all characters"),
        b.with_alphabet(&joint).expect("joint alphabet contains all characters"),
    )
}
