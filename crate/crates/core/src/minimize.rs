//! Minimizing an objective over automata that cover a target.
//!
//! [`minimize_over`] checks an explicit candidate collection,
//! [`randomized_minimize`] draws candidates until one is good enough, and
//! [`solve_scc`] specializes the first to path automata to find shortest
//! common covers of word sets.

use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;
use thiserror::Error;

use crate::alphabet::{Alphabet, Word};
use crate::dta::Dta;
use crate::error::{AlphabetError, BuildError};
use crate::recognition::{recognize, CoverMode, Engine, OccurrenceSet};
use crate::text::to_canonical_text;

type Measure = dyn Fn(&Dta) -> Option<f64> + Send + Sync;

/// A named measure over automata. A measure may decline a candidate by
/// returning `None`; declined candidates are never selected.
#[derive(Clone)]
pub struct Objective {
    name: String,
    measure: Arc<Measure>,
}

impl Objective {
    pub fn custom<F>(name: impl Into<String>, measure: F) -> Self
    where
        F: Fn(&Dta) -> Option<f64> + Send + Sync + 'static,
    {
        Objective { name: name.into(), measure: Arc::new(measure) }
    }

    /// Length of the longest accepted word; word length for paths.
    pub fn depth() -> Self {
        Self::custom("depth", |d| Some(d.depth() as f64))
    }

    pub fn state_count() -> Self {
        Self::custom("state_count", |d| Some(d.num_states() as f64))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn evaluate(&self, dta: &Dta) -> Option<f64> {
        (self.measure)(dta)
    }
}

impl fmt::Debug for Objective {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Objective").field("name", &self.name).finish_non_exhaustive()
    }
}

/// Why a candidate was passed over without being selected.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SkipReason {
    AlphabetMismatch,
    /// More states than the target: no single embedding can exist.
    LargerThanTarget,
    /// Covers the target, but the objective declined it.
    Declined,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Skipped {
    pub index: usize,
    pub reason: SkipReason,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MinimizeOptions {
    /// Skip candidates with more states than the target.
    pub size_filter: bool,
    /// Check candidates concurrently.
    pub concurrent: bool,
    pub engine: Engine,
}

impl Default for MinimizeOptions {
    fn default() -> Self {
        MinimizeOptions { size_filter: true, concurrent: false, engine: Engine::Serial }
    }
}

/// Aggregate recognition work over all checked candidates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SearchCost {
    /// Recognition runs performed.
    pub checked: usize,
    pub basic_steps: u64,
    /// Largest critical path of a single run, i.e. the span when every
    /// candidate is checked at once.
    pub max_critical_path: u64,
}

#[derive(Debug, Clone)]
pub struct MinimizationResult {
    pub best: Dta,
    /// Position of `best` in the candidate list (or draw number, 1-based,
    /// for [`randomized_minimize`]).
    pub index: usize,
    pub value: f64,
    pub witness: OccurrenceSet,
    pub cost: SearchCost,
    pub skipped: Vec<Skipped>,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum MinimizeError {
    #[error("no candidates given")]
    NoCandidates,
    #[error("none of {} checked candidates covers the target", .cost.checked)]
    NoCover { cost: SearchCost, skipped: Vec<Skipped> },
}

enum Checked {
    Skip(SkipReason),
    Miss,
    Hit { value: f64, witness: OccurrenceSet },
}

fn check_one(
    candidate: &Dta,
    objective: &Objective,
    target: &Dta,
    mode: CoverMode,
    options: &MinimizeOptions,
) -> (Checked, Option<(u64, u64)>) {
    if candidate.alphabet() != target.alphabet() {
        return (Checked::Skip(SkipReason::AlphabetMismatch), None);
    }
    if options.size_filter && candidate.num_states() > target.num_states() {
        return (Checked::Skip(SkipReason::LargerThanTarget), None);
    }
    let run = recognize(candidate, target, mode, options.engine).expect("alphabets checked");
    let stats = run.outcome.stats;
    let cost = Some((stats.basic_steps, stats.critical_path));
    let Some(witness) = run.outcome.witness().cloned() else {
        return (Checked::Miss, cost);
    };
    match objective.evaluate(candidate) {
        Some(value) => (Checked::Hit { value, witness }, cost),
        None => (Checked::Skip(SkipReason::Declined), cost),
    }
}

/// The covering candidate with the smallest objective value. Ties go to the
/// candidate whose canonical text sorts first, then to the earlier one.
pub fn minimize_over(
    candidates: &[Dta],
    objective: &Objective,
    target: &Dta,
    mode: CoverMode,
    options: &MinimizeOptions,
) -> Result<MinimizationResult, MinimizeError> {
    if candidates.is_empty() {
        return Err(MinimizeError::NoCandidates);
    }
    let check = |c: &Dta| check_one(c, objective, target, mode, options);
    let results: Vec<_> = if options.concurrent {
        candidates.par_iter().map(check).collect()
    } else {
        candidates.iter().map(check).collect()
    };

    let mut cost = SearchCost::default();
    let mut skipped = Vec::new();
    let mut hits = Vec::new();
    for (index, (checked, run_cost)) in results.into_iter().enumerate() {
        if let Some((steps, span)) = run_cost {
            cost.checked += 1;
            cost.basic_steps += steps;
            cost.max_critical_path = cost.max_critical_path.max(span);
        }
        match checked {
            Checked::Skip(reason) => skipped.push(Skipped { index, reason }),
            Checked::Miss => {}
            Checked::Hit { value, witness } => hits.push((index, value, witness)),
        }
    }

    let best = hits.into_iter().min_by(|a, b| {
        a.1.total_cmp(&b.1)
            .then_with(|| to_canonical_text(&candidates[a.0]).cmp(&to_canonical_text(&candidates[b.0])))
            .then(a.0.cmp(&b.0))
    });
    match best {
        Some((index, value, witness)) => {
            Ok(MinimizationResult { best: candidates[index].clone(), index, value, witness, cost, skipped })
        }
        None => Err(MinimizeError::NoCover { cost, skipped }),
    }
}

/// Source of random candidates with a stopping rule.
pub struct CandidateGenerator<'a> {
    draw: Box<dyn FnMut() -> Result<Dta, String> + 'a>,
    pub max_iterations: usize,
    /// Accept the first covering candidate whose objective is at most this.
    pub threshold: f64,
}

impl<'a> CandidateGenerator<'a> {
    pub fn new<F>(draw: F, max_iterations: usize, threshold: f64) -> Self
    where
        F: FnMut() -> Result<Dta, String> + 'a,
    {
        CandidateGenerator { draw: Box::new(draw), max_iterations, threshold }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
#[error("gave up after {draws} draws{}", .diagnostic.as_ref().map(|d| format!(": {d}")).unwrap_or_default())]
pub struct Exhausted {
    pub draws: usize,
    pub diagnostic: Option<String>,
}

/// Draws candidates until one with objective value at most the threshold
/// covers `target`, or the draw budget runs out.
pub fn randomized_minimize(
    generator: &mut CandidateGenerator<'_>,
    objective: &Objective,
    target: &Dta,
    mode: CoverMode,
) -> Result<MinimizationResult, Exhausted> {
    let mut cost = SearchCost::default();
    let mut skipped = Vec::new();
    for draw in 1..=generator.max_iterations {
        let candidate = (generator.draw)().map_err(|e| Exhausted { draws: draw, diagnostic: Some(e) })?;
        if candidate.alphabet() != target.alphabet() {
            skipped.push(Skipped { index: draw, reason: SkipReason::AlphabetMismatch });
            continue;
        }
        let Some(value) = objective.evaluate(&candidate) else {
            skipped.push(Skipped { index: draw, reason: SkipReason::Declined });
            continue;
        };
        if value > generator.threshold {
            continue;
        }
        let run = recognize(&candidate, target, mode, Engine::Serial).expect("alphabets checked");
        cost.checked += 1;
        cost.basic_steps += run.outcome.stats.basic_steps;
        cost.max_critical_path = cost.max_critical_path.max(run.outcome.stats.critical_path);
        if let Some(witness) = run.outcome.witness() {
            return Ok(MinimizationResult {
                best: candidate,
                index: draw,
                value,
                witness: witness.clone(),
                cost,
                skipped,
            });
        }
    }
    Err(Exhausted { draws: generator.max_iterations, diagnostic: None })
}

/// The shortest accepted word, smallest in symbol order among equals.
pub fn shortest_word(target: &Dta) -> Word {
    target.language().into_iter().next().expect("a trimmed automaton accepts something")
}

/// Path automata for every non-empty prefix of the shortest accepted word,
/// shortest first. Every path that covers `target` with edge coverage is
/// among them: the root edges are only reachable by the occurrence anchored
/// at the root, so a cover is a prefix of every accepted word.
pub fn path_candidates(target: &Dta) -> Vec<Dta> {
    let w = shortest_word(target);
    (1..=w.len()).map(|k| Dta::path(&w[..k], target.alphabet()).expect("prefix of an accepted word")).collect()
}

/// Lengths of all borders of `w` (including `w` itself), ascending, from the
/// failure function.
pub fn border_lengths<T: PartialEq>(w: &[T]) -> Vec<usize> {
    let n = w.len();
    if n == 0 {
        return Vec::new();
    }
    let mut fail = vec![0usize; n];
    let mut k = 0;
    for i in 1..n {
        while k > 0 && w[i] != w[k] {
            k = fail[k - 1];
        }
        if w[i] == w[k] {
            k += 1;
        }
        fail[i] = k;
    }
    let mut out = vec![n];
    let mut b = fail[n - 1];
    while b > 0 {
        out.push(b);
        b = fail[b - 1];
    }
    out.reverse();
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SccOptions {
    pub mode: CoverMode,
    /// Skip prefixes that are not borders of the shortest word. Never
    /// changes the answer, only the number of recognition runs.
    pub border_filter: bool,
    pub minimize: MinimizeOptions,
}

impl Default for SccOptions {
    fn default() -> Self {
        SccOptions { mode: CoverMode::EdgeCoverage, border_filter: true, minimize: MinimizeOptions::default() }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SccReport {
    pub cover: Option<Word>,
    /// Prefix candidates generated (the length of the shortest word).
    pub candidates: usize,
    /// Candidates left after the border filter.
    pub considered: usize,
    pub trie_states: usize,
    pub cost: SearchCost,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SccError {
    #[error("no words given")]
    NoWords,
    #[error("word {0} is empty")]
    EmptyWord(usize),
    #[error(transparent)]
    Alphabet(#[from] AlphabetError),
}

impl From<BuildError> for SccError {
    fn from(e: BuildError) -> Self {
        match e {
            BuildError::EmptyLanguage => SccError::NoWords,
            BuildError::Alphabet(a) => SccError::Alphabet(a),
        }
    }
}

/// Shortest common cover of `words`: minimizes depth over the prefix
/// candidates of the shortest word against the trie of `words`.
///
/// Covering the trie is necessary but not sufficient for covering every
/// word: an occurrence may start on one word's branch and finish on a
/// sibling's (`ab` covers the trie of `{ab, aab}`). The objective therefore
/// declines any candidate that does not also cover each word's own path
/// automaton, which keeps the answer equal to the string-level one.
pub fn solve_scc(words: &[Word], alphabet: &Alphabet, options: &SccOptions) -> Result<SccReport, SccError> {
    if words.is_empty() {
        return Err(SccError::NoWords);
    }
    if let Some(i) = words.iter().position(|w| w.is_empty()) {
        return Err(SccError::EmptyWord(i));
    }
    let trie = Dta::trie(words, alphabet)?;
    let paths: Vec<Dta> = words.iter().map(|w| Dta::path(w, alphabet)).collect::<Result<_, _>>()?;

    let shortest = shortest_word(&trie);
    let mut candidates = path_candidates(&trie);
    let generated = candidates.len();
    if options.border_filter {
        let borders = border_lengths(&shortest);
        candidates.retain(|c| borders.binary_search(&(c.num_states() - 1)).is_ok());
    }

    let mode = options.mode;
    let engine = options.minimize.engine;
    let objective = Objective::custom("depth", move |c: &Dta| {
        let every_word = paths.iter().all(|p| recognize(c, p, mode, engine).expect("same alphabet").outcome.covered());
        every_word.then(|| c.depth() as f64)
    });

    let considered = candidates.len();
    let (cover, cost) = match minimize_over(&candidates, &objective, &trie, mode, &options.minimize) {
        Ok(found) => (Some(Word(shortest[..found.best.depth()].to_vec())), found.cost),
        Err(MinimizeError::NoCover { cost, .. }) => (None, cost),
        Err(MinimizeError::NoCandidates) => (None, SearchCost::default()),
    };
    Ok(SccReport { cover, candidates: generated, considered, trie_states: trie.num_states(), cost })
}

/// [`solve_scc`] with default options, returning only the cover.
pub fn shortest_common_cover(words: &[Word], alphabet: &Alphabet) -> Result<Option<Word>, SccError> {
    solve_scc(words, alphabet, &SccOptions::default()).map(|r| r.cover)
}

/// Shortest cover of a single non-empty word. Always exists: a word covers
/// itself.
pub fn shortest_cover(word: &Word, alphabet: &Alphabet) -> Result<Word, SccError> {
    let report = solve_scc(std::slice::from_ref(word), alphabet, &SccOptions::default())?;
    Ok(report.cover.expect("a word covers itself"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alpha() -> Alphabet {
        Alphabet::from_chars("abcd".chars())
    }

    fn ws(a: &Alphabet, xs: &[&str]) -> Vec<Word> {
        xs.iter().map(|x| a.word(x).unwrap()).collect()
    }

    fn path(a: &Alphabet, w: &str) -> Dta {
        Dta::path(&a.word(w).unwrap(), a).unwrap()
    }

    fn scc(xs: &[&str]) -> Option<String> {
        let a = alpha();
        shortest_common_cover(&ws(&a, xs), &a).unwrap().map(|w| a.spell(&w))
    }

    #[test]
    fn minimize_picks_shortest_covering_path() {
        let a = alpha();
        let cands = vec![path(&a, "a"), path(&a, "ab"), path(&a, "aba")];
        let target = path(&a, "ababa");
        let r =
            minimize_over(&cands, &Objective::depth(), &target, CoverMode::EdgeCoverage, &Default::default()).unwrap();
        assert_eq!(r.index, 2);
        assert_eq!(r.value, 3.0);
        assert_eq!(r.cost.checked, 3);
    }

    #[test]
    fn minimize_self_and_oversized() {
        let a = alpha();
        let target = path(&a, "abc");
        let r = minimize_over(
            std::slice::from_ref(&target),
            &Objective::state_count(),
            &target,
            CoverMode::EdgeCoverage,
            &Default::default(),
        )
        .unwrap();
        assert_eq!(r.best, target);

        let big = vec![path(&a, "abcabc"), path(&a, "abcd")];
        let err = minimize_over(&big, &Objective::depth(), &target, CoverMode::EdgeCoverage, &Default::default())
            .unwrap_err();
        match err {
            MinimizeError::NoCover { cost, skipped } => {
                assert_eq!(cost.checked, 0);
                assert!(skipped.iter().all(|s| s.reason == SkipReason::LargerThanTarget));
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(
            minimize_over(&[], &Objective::depth(), &target, CoverMode::EdgeCoverage, &Default::default()).unwrap_err(),
            MinimizeError::NoCandidates
        );
    }

    #[test]
    fn minimize_skips_foreign_alphabets() {
        let a = alpha();
        let target = path(&a, "abab");
        let cands = vec![Dta::path_of_str("ab"), path(&a, "ab")];
        let r =
            minimize_over(&cands, &Objective::depth(), &target, CoverMode::EdgeCoverage, &Default::default()).unwrap();
        assert_eq!(r.index, 1);
        assert_eq!(r.skipped, vec![Skipped { index: 0, reason: SkipReason::AlphabetMismatch }]);
    }

    #[test]
    fn ties_break_on_canonical_text() {
        let a = alpha();
        let target = Dta::trie(&ws(&a, &["ab", "b"]), &a).unwrap();
        let twin = target.clone().insert(&a.word("ab").unwrap()).unwrap();
        let cands = vec![twin, target.clone()];
        let r = minimize_over(&cands, &Objective::state_count(), &target, CoverMode::EdgeCoverage, &Default::default())
            .unwrap();
        // identical texts: the earlier candidate wins
        assert_eq!(r.index, 0);
    }

    #[test]
    fn declining_objective() {
        let a = alpha();
        let cands = vec![path(&a, "aba"), path(&a, "ababa")];
        let target = path(&a, "ababa");
        let picky = Objective::custom("no-threes", |d| (d.depth() != 3).then(|| d.depth() as f64));
        let r = minimize_over(&cands, &picky, &target, CoverMode::EdgeCoverage, &Default::default()).unwrap();
        assert_eq!(r.index, 1);
        assert_eq!(r.skipped, vec![Skipped { index: 0, reason: SkipReason::Declined }]);
    }

    #[test]
    fn randomized_constant_generator() {
        let a = alpha();
        let target = path(&a, "ababa");
        let mut g = CandidateGenerator::new(|| Ok(path(&a, "aba")), 10, 3.0);
        let r = randomized_minimize(&mut g, &Objective::depth(), &target, CoverMode::EdgeCoverage).unwrap();
        assert_eq!(r.index, 1);
        assert_eq!(r.cost.checked, 1);

        let mut g = CandidateGenerator::new(|| Ok(path(&a, "aba")), 10, 2.0);
        let err = randomized_minimize(&mut g, &Objective::depth(), &target, CoverMode::EdgeCoverage).unwrap_err();
        assert_eq!(err, Exhausted { draws: 10, diagnostic: None });

        let mut g = CandidateGenerator::new(|| Err("broken".to_string()), 10, 9.0);
        let err = randomized_minimize(&mut g, &Objective::depth(), &target, CoverMode::EdgeCoverage).unwrap_err();
        assert_eq!(err.draws, 1);
        assert_eq!(err.diagnostic.as_deref(), Some("broken"));
    }

    #[test]
    fn candidates_are_prefixes_of_shortest_word() {
        let a = alpha();
        let spell = |ds: Vec<Dta>| -> Vec<String> { ds.iter().map(|d| d.language_strings().pop().unwrap()).collect() };
        assert_eq!(spell(path_candidates(&path(&a, "ababa"))), vec!["a", "ab", "aba", "abab", "ababa"]);
        let t = Dta::trie(&ws(&a, &["ababa", "abaaba"]), &a).unwrap();
        assert_eq!(spell(path_candidates(&t)), vec!["a", "ab", "aba", "abab", "ababa"]);
        assert!(path_candidates(&Dta::trie(&ws(&a, &[""]), &a).unwrap()).is_empty());
    }

    #[test]
    fn borders_from_failure_function() {
        assert_eq!(border_lengths(b"ababa"), vec![1, 3, 5]);
        assert_eq!(border_lengths(b"abc"), vec![3]);
        assert_eq!(border_lengths(b"aaaa"), vec![1, 2, 3, 4]);
        assert!(border_lengths::<u8>(b"").is_empty());
    }

    #[test]
    fn scc_examples() {
        assert_eq!(scc(&["ababa", "abaaba"]).as_deref(), Some("aba"));
        assert_eq!(scc(&["ab"]).as_deref(), Some("ab"));
        assert_eq!(scc(&["abc", "abd"]), None);
    }

    #[test]
    fn scc_rejects_branching_only_covers() {
        // "ab" covers the trie of {ab, aab} but not the word "aab"
        let a = alpha();
        let words = ws(&a, &["ab", "aab"]);
        let trie = Dta::trie(&words, &a).unwrap();
        let ab = path(&a, "ab");
        assert!(crate::recognition::covers(&ab, &trie, CoverMode::EdgeCoverage).unwrap().covered());
        assert_eq!(shortest_common_cover(&words, &a).unwrap(), None);
    }

    #[test]
    fn scc_errors() {
        let a = alpha();
        assert_eq!(shortest_common_cover(&[], &a), Err(SccError::NoWords));
        assert_eq!(shortest_common_cover(&ws(&a, &["ab", ""]), &a), Err(SccError::EmptyWord(1)));
        assert!(shortest_cover(&Word::empty(), &a).is_err());
    }

    #[test]
    fn shortest_cover_examples() {
        let a = alpha();
        let sc = |w: &str| a.spell(&shortest_cover(&a.word(w).unwrap(), &a).unwrap());
        assert_eq!(sc("ababa"), "aba");
        assert_eq!(sc("abaabaaba"), "aba");
        assert_eq!(sc("abc"), "abc");
    }

    #[test]
    fn border_filter_is_neutral() {
        let a = alpha();
        for xs in [&["ababa", "abaaba"][..], &["aabaabaa"], &["abcabcab", "abcab"], &["ab", "aab"]] {
            let words = ws(&a, xs);
            let on = solve_scc(&words, &a, &SccOptions::default()).unwrap();
            let off = solve_scc(&words, &a, &SccOptions { border_filter: false, ..Default::default() }).unwrap();
            assert_eq!(on.cover, off.cover);
            assert!(on.considered <= off.considered);
        }
    }
}
