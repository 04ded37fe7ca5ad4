//! Random instances for tests and benchmarks.
//!
//! Covered words are grown by chaining overlapping copies of the cover and
//! then certified with the brute-force oracle, so every generated instance is
//! a true string-cover instance by construction and by check.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::oracle::naive_covers;

/// The first `size` lowercase letters.
pub fn letters(size: usize) -> Vec<char> {
    ('a'..='z').take(size).collect()
}

pub fn random_word<R: Rng + ?Sized>(rng: &mut R, alphabet: &[char], len: usize) -> String {
    (0..len).map(|_| *alphabet.choose(rng).expect("non-empty alphabet")).collect()
}

/// A random word of length at most `max_len` covered by `s`. Each step
/// appends another copy of `s` overlapping the previous one by a compatible
/// border; `stop` is the chance to stop after each copy.
pub fn covered_word<R: Rng + ?Sized>(rng: &mut R, s: &str, max_len: usize, stop: f64) -> String {
    let s: Vec<char> = s.chars().collect();
    assert!(!s.is_empty() && s.len() <= max_len, "cover must fit");
    let mut w = s.clone();
    loop {
        let shifts: Vec<usize> = (1..=s.len())
            .filter(|&shift| {
                let overlap = s.len() - shift;
                w.len() + shift <= max_len && w[w.len() - overlap..] == s[..overlap]
            })
            .collect();
        if shifts.is_empty() || rng.gen_bool(stop) {
            break;
        }
        let shift = *shifts.choose(rng).expect("non-empty");
        w.extend_from_slice(&s[s.len() - shift..]);
    }
    assert!(naive_covers(&s, &w), "generator produced an uncovered word");
    w.into_iter().collect()
}

/// `count` covered words (possibly repeating) for the cover `s`.
pub fn covered_family<R: Rng + ?Sized>(rng: &mut R, s: &str, count: usize, max_len: usize) -> Vec<String> {
    (0..count).map(|_| covered_word(rng, s, max_len, 0.25)).collect()
}

/// A random cover word and a family of 1..=`max_words` words it covers.
pub fn covered_instance<R: Rng + ?Sized>(
    rng: &mut R,
    alphabet: &[char],
    max_cover: usize,
    max_words: usize,
    max_len: usize,
) -> (String, Vec<String>) {
    let len = rng.gen_range(1..=max_cover);
    let s = random_word(rng, alphabet, len);
    let count = rng.gen_range(1..=max_words);
    let family = covered_family(rng, &s, count, max_len);
    (s, family)
}

/// Random words of length 0..=`max_len`; at least one word.
pub fn random_language<R: Rng + ?Sized>(
    rng: &mut R,
    alphabet: &[char],
    max_words: usize,
    max_len: usize,
) -> Vec<String> {
    let count = rng.gen_range(1..=max_words);
    (0..count)
        .map(|_| {
            let len = rng.gen_range(0..=max_len);
            random_word(rng, alphabet, len)
        })
        .collect()
}

/// Words sharing a random common prefix and then diverging; they mostly
/// have no common cover.
pub fn adversarial_family<R: Rng + ?Sized>(
    rng: &mut R,
    alphabet: &[char],
    max_words: usize,
    max_len: usize,
) -> Vec<String> {
    let stem_len = rng.gen_range(1..=max_len.clamp(1, 6));
    let stem = random_word(rng, alphabet, stem_len);
    let count = rng.gen_range(2..=max_words.max(2));
    (0..count)
        .map(|_| {
            let tail = rng.gen_range(0..=max_len.saturating_sub(stem_len));
            format!("{stem}{}", random_word(rng, alphabet, tail))
        })
        .collect()
}

/// A chain `s ⊴ w1 ⊴ w2` of string covers: `w1` is built from copies of
/// `s`, `w2` from copies of `w1`.
pub fn cover_chain<R: Rng + ?Sized>(rng: &mut R, alphabet: &[char], max_len: usize) -> (String, String, String) {
    let len = rng.gen_range(1..=3);
    let s = random_word(rng, alphabet, len);
    let w1 = covered_word(rng, &s, max_len / 2, 0.3);
    let w2 = covered_word(rng, &w1, max_len, 0.3);
    (s, w1, w2)
}
