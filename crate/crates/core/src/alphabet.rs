//! Interned symbols and words.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Deref;

use crate::error::AlphabetError;

/// Dense symbol id inside one [`Alphabet`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Symbol(pub(crate) u32);

impl Symbol {
    pub fn id(self) -> usize {
        self.0 as usize
    }
}

/// Bidirectional table between display characters and dense [`Symbol`] ids.
///
/// Ids are contiguous `0..len()`. Alphabets built with [`Alphabet::from_chars`]
/// assign ids in ascending character order, so symbol order and character
/// order agree.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Alphabet {
    chars: Vec<char>,
    ids: BTreeMap<char, Symbol>,
}

impl Alphabet {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a sorted, deduplicated alphabet from any character source.
    pub fn from_chars<I: IntoIterator<Item = char>>(chars: I) -> Self {
        let mut sorted: Vec<char> = chars.into_iter().collect();
        sorted.sort_unstable();
        sorted.dedup();
        let mut alphabet = Self::new();
        for c in sorted {
            alphabet.intern(c);
        }
        alphabet
    }

    /// Alphabet of every character occurring in `words`.
    pub fn from_words<S: AsRef<str>>(words: &[S]) -> Self {
        Self::from_chars(words.iter().flat_map(|w| w.as_ref().chars()))
    }

    /// Returns the id for `c`, allocating the next dense id if it is new.
    pub fn intern(&mut self, c: char) -> Symbol {
        if let Some(&s) = self.ids.get(&c) {
            return s;
        }
        let s = Symbol(self.chars.len() as u32);
        self.chars.push(c);
        self.ids.insert(c, s);
        s
    }

    pub fn lookup(&self, c: char) -> Option<Symbol> {
        self.ids.get(&c).copied()
    }

    pub fn resolve(&self, s: Symbol) -> Option<char> {
        self.chars.get(s.id()).copied()
    }

    pub fn len(&self) -> usize {
        self.chars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chars.is_empty()
    }

    pub fn contains(&self, s: Symbol) -> bool {
        s.id() < self.chars.len()
    }

    pub fn symbols(&self) -> impl Iterator<Item = Symbol> + '_ {
        (0..self.chars.len() as u32).map(Symbol)
    }

    pub fn chars(&self) -> &[char] {
        &self.chars
    }

    /// Translates `text` into a [`Word`] without extending the alphabet.
    pub fn word(&self, text: &str) -> Result<Word, AlphabetError> {
        text.chars()
            .map(|c| self.lookup(c).ok_or(AlphabetError::UnknownChar(c)))
            .collect::<Result<Vec<_>, _>>()
            .map(Word)
    }

    /// Translates `text`, interning unseen characters.
    pub fn intern_word(&mut self, text: &str) -> Word {
        Word(text.chars().map(|c| self.intern(c)).collect())
    }

    /// Renders a word back to text. Panics on symbols foreign to this alphabet.
    pub fn spell(&self, word: &[Symbol]) -> String {
        word.iter().map(|&s| self.resolve(s).expect("symbol outside alphabet")).collect()
    }

    /// Checks that every symbol of `word` has an id in this alphabet.
    pub fn check(&self, word: &[Symbol]) -> Result<(), AlphabetError> {
        match word.iter().find(|s| !self.contains(**s)) {
            Some(s) => Err(AlphabetError::UnknownSymbol(s.id())),
            None => Ok(()),
        }
    }
}

/// A finite sequence of symbols.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(pub Vec<Symbol>);

impl Word {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn from_symbols<I: IntoIterator<Item = Symbol>>(symbols: I) -> Self {
        Word(symbols.into_iter().collect())
    }
}

impl Deref for Word {
    type Target = [Symbol];

    fn deref(&self) -> &[Symbol] {
        &self.0
    }
}

impl FromIterator<Symbol> for Word {
    fn from_iter<I: IntoIterator<Item = Symbol>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_dense_and_sorted() {
        let a = Alphabet::from_words(&["cab", "bb"]);
        assert_eq!(a.chars(), &['a', 'b', 'c']);
        assert_eq!(a.lookup('a'), Some(Symbol(0)));
        assert_eq!(a.lookup('c'), Some(Symbol(2)));
        assert_eq!(a.lookup('z'), None);
    }

    #[test]
    fn intern_resolve_round_trip() {
        let mut a = Alphabet::new();
        for c in "héllo wörld".chars() {
            let s = a.intern(c);
            assert_eq!(a.resolve(s), Some(c));
        }
        let w = a.intern_word("wölle");
        assert_eq!(a.spell(&w), "wölle");
    }

    #[test]
    fn unknown_char_is_rejected() {
        let a = Alphabet::from_chars("ab".chars());
        assert_eq!(a.word("abc"), Err(AlphabetError::UnknownChar('c')));
        assert!(a.word("").unwrap().is_empty());
    }
}
