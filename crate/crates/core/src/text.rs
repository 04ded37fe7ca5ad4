//! Line-oriented text formats for automata and word lists.
//!
//! Automaton format (UTF-8, LF):
//!
//! ```text
//! dta <nstates> root 0
//! finals <id> <id> ...
//! t <from> <char> <to>
//! ```
//!
//! States are numbered in depth-first preorder with children taken in
//! ascending character order, so two automata serialize to the same bytes
//! exactly when they are isomorphic.

use std::fmt::Write as _;

use crate::alphabet::{Alphabet, Symbol, Word};
use crate::dta::{Dta, StateId};
use crate::error::{ParseError, Violations, WordListError};

/// Serializes `dta` in canonical form.
pub fn to_canonical_text(dta: &Dta) -> String {
    let canon = dta.canonicalize();
    let alphabet = canon.alphabet();
    let mut out = String::new();
    let _ = writeln!(out, "dta {} root 0", canon.num_states());
    out.push_str("finals");
    for q in canon.finals() {
        let _ = write!(out, " {q}");
    }
    out.push('\n');
    for q in 0..canon.num_states() {
        for &(s, c) in canon.children(q) {
            let ch = alphabet.resolve(s).expect("valid symbol");
            let _ = writeln!(out, "t {q} {ch} {c}");
        }
    }
    out
}

/// Parses the canonical automaton format and validates the result.
///
/// State ids need not be in preorder, but the root must be state 0. The
/// alphabet is the sorted set of characters appearing on transitions.
pub fn parse_automaton(text: &str) -> Result<Dta, ParseError> {
    let mut lines = text.split('\n').enumerate().map(|(i, l)| (i + 1, l));
    let malformed = |line: usize, reason: &str| ParseError::Malformed { line, reason: reason.to_string() };

    let (n, header) = lines.next().ok_or_else(|| malformed(1, "missing header"))?;
    let fields: Vec<&str> = header.split(' ').collect();
    let states = match fields.as_slice() {
        ["dta", count, "root", "0"] => {
            count.parse::<usize>().map_err(|_| malformed(n, "state count is not a number"))?
        }
        _ => return Err(malformed(n, "expected `dta <nstates> root 0`")),
    };
    if states == 0 {
        return Err(malformed(n, "automaton needs at least one state"));
    }
    let check_id = |line: usize, raw: &str| -> Result<StateId, ParseError> {
        let id = raw.parse::<usize>().map_err(|_| malformed(line, &format!("`{raw}` is not a state id")))?;
        if id >= states {
            return Err(ParseError::DanglingState { line, id, states });
        }
        Ok(id)
    };

    let (n, finals_line) = lines.next().ok_or_else(|| malformed(2, "missing finals line"))?;
    let mut parts = finals_line.split(' ');
    if parts.next() != Some("finals") {
        return Err(malformed(n, "expected `finals <ids>`"));
    }
    let mut finals = vec![false; states];
    for raw in parts.filter(|p| !p.is_empty()) {
        finals[check_id(n, raw)?] = true;
    }

    let mut raw_edges: Vec<(StateId, char, StateId)> = Vec::new();
    for (n, line) in lines {
        if line.is_empty() {
            continue;
        }
        let rest = line.strip_prefix("t ").ok_or_else(|| malformed(n, "expected `t <from> <char> <to>`"))?;
        let (from, rest) = rest.split_once(' ').ok_or_else(|| malformed(n, "expected `t <from> <char> <to>`"))?;
        let mut chars = rest.chars();
        let symbol = chars.next().ok_or_else(|| malformed(n, "missing symbol"))?;
        let to = chars.as_str().strip_prefix(' ').ok_or_else(|| malformed(n, "symbol must be a single character"))?;
        raw_edges.push((check_id(n, from)?, symbol, check_id(n, to)?));
    }

    let alphabet = Alphabet::from_chars(raw_edges.iter().map(|&(_, c, _)| c));
    let mut children: Vec<Vec<(Symbol, StateId)>> = vec![Vec::new(); states];
    for (from, c, to) in raw_edges {
        children[from].push((alphabet.lookup(c).expect("collected above"), to));
    }
    Dta::from_parts(alphabet, 0, children, finals).map_err(|v| ParseError::Invalid(Violations(v)))
}

/// Splits a word list into words: one per line, a blank line is the empty
/// word, a trailing newline does not add one. A `\r` before the newline is
/// dropped.
pub fn parse_word_list(bytes: &[u8]) -> Result<Vec<String>, WordListError> {
    if bytes.is_empty() {
        return Err(WordListError::Empty);
    }
    let body = bytes.strip_suffix(b"\n").unwrap_or(bytes);
    body.split(|&b| b == b'\n')
        .enumerate()
        .map(|(i, raw)| {
            let raw = raw.strip_suffix(b"\r").unwrap_or(raw);
            std::str::from_utf8(raw)
                .map(str::to_owned)
                .map_err(|e| WordListError::Malformed { line: i + 1, reason: e.to_string() })
        })
        .collect()
}

/// Alphabet and interned words for a parsed word list.
pub fn intern_words<S: AsRef<str>>(words: &[S]) -> (Alphabet, Vec<Word>) {
    let alphabet = Alphabet::from_words(words);
    let interned = words.iter().map(|w| alphabet.word(w.as_ref()).expect("alphabet covers all words")).collect();
    (alphabet, interned)
}
