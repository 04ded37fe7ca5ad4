//! Helpers shared by the integration tests, including a brute-force
//! embedding search that knows nothing about role sets.

#![allow(dead_code)]

use covdta::{Alphabet, CoverMode, Dta, StateId};

pub fn chars(s: &str) -> Vec<char> {
    s.chars().collect()
}

pub fn path_over(alphabet: &Alphabet, word: &str) -> Dta {
    Dta::path(&alphabet.word(word).unwrap(), alphabet).unwrap()
}

pub fn trie_over<S: AsRef<str>>(alphabet: &Alphabet, words: &[S]) -> Dta {
    let words: Vec<_> = words.iter().map(|w| alphabet.word(w.as_ref()).unwrap()).collect();
    Dta::trie(&words, alphabet).unwrap()
}

/// Tries to place the cover root on `anchor` by walking both automata in
/// lockstep, matching transitions by character.
pub fn embed_at(cover: &Dta, target: &Dta, anchor: StateId) -> Option<Vec<StateId>> {
    let mut image = vec![None; cover.num_states()];
    let mut todo = vec![(cover.root(), anchor)];
    while let Some((q, v)) = todo.pop() {
        image[q] = Some(v);
        for &(s, q2) in cover.children(q) {
            let c = cover.alphabet().resolve(s)?;
            let (_, v2) = *target.children(v).iter().find(|(t, _)| target.alphabet().resolve(*t) == Some(c))?;
            todo.push((q2, v2));
        }
    }
    image.into_iter().collect()
}

/// Every embedding of `cover` into `target`, keyed by anchor.
pub fn all_embeddings(cover: &Dta, target: &Dta) -> Vec<(StateId, Vec<StateId>)> {
    (0..target.num_states()).filter_map(|v| embed_at(cover, target, v).map(|img| (v, img))).collect()
}

/// Decides the cover relation by taking the union of all embeddings: more
/// occurrences can only reach more, so the union is the best witness.
pub fn brute_covers(cover: &Dta, target: &Dta, mode: CoverMode) -> bool {
    let n = target.num_states();
    let mut node = vec![false; n];
    let mut fin = vec![false; n];
    let mut edge = vec![false; n];
    for (_, img) in all_embeddings(cover, target) {
        for q in 0..cover.num_states() {
            node[img[q]] = true;
            if cover.is_final(q) {
                fin[img[q]] = true;
            }
            for &(_, q2) in cover.children(q) {
                edge[img[q2]] = true;
            }
        }
    }
    let edges_ok = match mode {
        CoverMode::NodeCoverage => true,
        CoverMode::EdgeCoverage => (0..n).filter(|&v| v != target.root()).all(|v| edge[v]),
    };
    node.iter().all(|&b| b) && (0..n).all(|v| !target.is_final(v) || fin[v]) && edges_ok
}

/// The anchors an exact recognizer must report: all embeddings.
pub fn brute_anchors(cover: &Dta, target: &Dta) -> Vec<StateId> {
    all_embeddings(cover, target).into_iter().map(|(v, _)| v).collect()
}
