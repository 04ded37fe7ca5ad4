//! Brute-force string-cover references.
//!
//! Everything here works on plain slices by direct comparison and shares no
//! code with the automaton modules. The functions are quadratic or worse on
//! purpose: they are meant to be obviously right, not fast.

use std::collections::BTreeSet;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("covered language exceeds {limit} words")]
pub struct GuardExceeded {
    pub limit: usize,
}

/// Start positions (0-based) of every occurrence of `s` in `w`.
pub fn occurrences<T: PartialEq>(s: &[T], w: &[T]) -> Vec<usize> {
    if s.is_empty() || s.len() > w.len() {
        return Vec::new();
    }
    (0..=w.len() - s.len()).filter(|&p| w[p..p + s.len()] == *s).collect()
}

/// Whether every position of `w` lies inside some occurrence of `s`.
pub fn naive_covers<T: PartialEq>(s: &[T], w: &[T]) -> bool {
    if s.is_empty() || w.is_empty() {
        return false;
    }
    let mut hit = vec![false; w.len()];
    for p in occurrences(s, w) {
        for h in &mut hit[p..p + s.len()] {
            *h = true;
        }
    }
    hit.into_iter().all(|h| h)
}

/// Every prefix of `w` that is also a suffix, including `w`, shortest first.
pub fn naive_borders<T: PartialEq + Clone>(w: &[T]) -> Vec<Vec<T>> {
    (1..=w.len()).filter(|&k| w[..k] == w[w.len() - k..]).map(|k| w[..k].to_vec()).collect()
}

/// Shortest prefix of `w` that covers `w`.
pub fn naive_shortest_cover<T: PartialEq + Clone>(w: &[T]) -> Vec<T> {
    (1..=w.len()).map(|k| &w[..k]).find(|p| naive_covers(p, w)).unwrap_or(w).to_vec()
}

/// Shortest prefix of the shortest word that covers every word, if any.
/// Among several shortest words the lexicographically smallest is used; any
/// common cover is a prefix of all of them anyway.
pub fn naive_shortest_common_cover<T: Ord + Clone>(words: &[Vec<T>]) -> Option<Vec<T>> {
    let shortest = words.iter().min_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)))?;
    (1..=shortest.len()).map(|k| &shortest[..k]).find(|p| words.iter().all(|w| naive_covers(p, w))).map(<[T]>::to_vec)
}

fn by_length_then_lex<T: Ord>(a: &Vec<T>, b: &Vec<T>) -> std::cmp::Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

/// All words of length at most `max_len` covered by `s`.
///
/// Words are grown by chaining occurrences: each next copy of `s` starts at
/// most `|s|` positions after the previous one and must agree with what is
/// already written. Each result is re-certified with [`naive_covers`].
pub fn enumerate_covered_language<T: Ord + Clone>(
    s: &[T],
    max_len: usize,
    limit: usize,
) -> Result<Vec<Vec<T>>, GuardExceeded> {
    let mut found: BTreeSet<Vec<T>> = BTreeSet::new();
    if s.is_empty() || s.len() > max_len {
        return Ok(Vec::new());
    }
    let mut frontier = vec![s.to_vec()];
    while let Some(w) = frontier.pop() {
        if !found.insert(w.clone()) {
            continue;
        }
        if found.len() > limit {
            return Err(GuardExceeded { limit });
        }
        for shift in 1..=s.len() {
            let start = w.len() - s.len() + shift;
            if start + s.len() > max_len {
                break;
            }
            let overlap = w.len() - start;
            if w[start..] == s[..overlap] {
                let mut next = w.clone();
                next.extend_from_slice(&s[overlap..]);
                frontier.push(next);
            }
        }
    }
    let mut out: Vec<Vec<T>> = found.into_iter().collect();
    debug_assert!(out.iter().all(|w| naive_covers(s, w)));
    out.retain(|w| naive_covers(s, w));
    out.sort_by(by_length_then_lex);
    Ok(out)
}

/// Ground truth for [`enumerate_covered_language`] on tiny inputs: filters
/// all of `alphabet^{<= max_len}` through [`naive_covers`].
pub fn exhaustive_covered_language<T: Ord + Clone>(s: &[T], alphabet: &[T], max_len: usize) -> Vec<Vec<T>> {
    let mut out = Vec::new();
    let mut layer: Vec<Vec<T>> = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::with_capacity(layer.len() * alphabet.len());
        for w in &layer {
            for a in alphabet {
                let mut v = w.clone();
                v.push(a.clone());
                if naive_covers(s, &v) {
                    out.push(v.clone());
                }
                next.push(v);
            }
        }
        layer = next;
    }
    out.sort_by(by_length_then_lex);
    out
}
