//! Trimmed deterministic tree automata for finite languages.
//!
//! A [`Dta`] is a deterministic automaton whose transition graph is a rooted,
//! edge-labelled tree and whose leaves are all final. Every finite non-empty
//! language has exactly one such automaton up to isomorphism: its trie.

use crate::alphabet::{Alphabet, Symbol, Word};
use crate::error::{AlphabetError, BuildError, Violation};

pub type StateId = usize;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dta {
    alphabet: Alphabet,
    root: StateId,
    /// Outgoing transitions per state, sorted by symbol.
    children: Vec<Vec<(Symbol, StateId)>>,
    finals: Vec<bool>,
}

impl Dta {
    /// Assembles an automaton without checking any invariant.
    ///
    /// Transition lists are sorted by symbol; duplicates are kept so that
    /// [`Dta::validate`] can report them.
    pub fn from_parts_unchecked(
        alphabet: Alphabet,
        root: StateId,
        mut children: Vec<Vec<(Symbol, StateId)>>,
        finals: Vec<bool>,
    ) -> Self {
        for list in &mut children {
            list.sort_by_key(|&(s, _)| s);
        }
        let mut finals = finals;
        finals.resize(children.len(), false);
        Dta { alphabet, root, children, finals }
    }

    /// Like [`Dta::from_parts_unchecked`] followed by [`Dta::validate`].
    pub fn from_parts(
        alphabet: Alphabet,
        root: StateId,
        children: Vec<Vec<(Symbol, StateId)>>,
        finals: Vec<bool>,
    ) -> Result<Self, Vec<Violation>> {
        let dta = Self::from_parts_unchecked(alphabet, root, children, finals);
        dta.validate()?;
        Ok(dta)
    }

    /// The automaton accepting exactly `{word}`: a chain of `|word| + 1`
    /// states whose last state is the only final one.
    pub fn path(word: &[Symbol], alphabet: &Alphabet) -> Result<Self, AlphabetError> {
        alphabet.check(word)?;
        let n = word.len();
        let children = (0..=n)
            .map(|i| match word.get(i) {
                Some(&s) => vec![(s, i + 1)],
                None => Vec::new(),
            })
            .collect();
        let mut finals = vec![false; n + 1];
        finals[n] = true;
        Ok(Dta { alphabet: alphabet.clone(), root: 0, children, finals })
    }

    /// Convenience for `Dta::path` over the sorted alphabet of `text`.
    pub fn path_of_str(text: &str) -> Self {
        let alphabet = Alphabet::from_chars(text.chars());
        let word = alphabet.word(text).expect("alphabet built from the same text");
        Self::path(&word, &alphabet).expect("word is over its own alphabet")
    }

    /// The trie of a non-empty word set. Duplicates are ignored and the
    /// result does not depend on the order of `words` up to isomorphism.
    pub fn trie(words: &[Word], alphabet: &Alphabet) -> Result<Self, BuildError> {
        if words.is_empty() {
            return Err(BuildError::EmptyLanguage);
        }
        let mut dta = Dta { alphabet: alphabet.clone(), root: 0, children: vec![Vec::new()], finals: vec![false] };
        for w in words {
            dta = dta.insert(w)?;
        }
        Ok(dta)
    }

    /// Convenience for `Dta::trie` over the sorted alphabet of `words`.
    pub fn trie_of_strs<S: AsRef<str>>(words: &[S]) -> Result<Self, BuildError> {
        let alphabet = Alphabet::from_words(words);
        let words: Vec<Word> = words.iter().map(|w| alphabet.word(w.as_ref())).collect::<Result<_, _>>()?;
        Self::trie(&words, &alphabet)
    }

    /// Adds `word` to the language: the longest prefix already spelled from
    /// the root is shared, the rest hangs off as a new branch, and the state
    /// reached at the end becomes final.
    pub fn insert(mut self, word: &[Symbol]) -> Result<Self, AlphabetError> {
        self.alphabet.check(word)?;
        let mut state = self.root;
        let mut rest = word;
        while let Some((&s, tail)) = rest.split_first() {
            match self.child(state, s) {
                Some(next) => {
                    state = next;
                    rest = tail;
                }
                None => break,
            }
        }
        for &s in rest {
            let fresh = self.children.len();
            self.children.push(Vec::new());
            self.finals.push(false);
            let list = &mut self.children[state];
            let at = list.partition_point(|&(t, _)| t < s);
            list.insert(at, (s, fresh));
            state = fresh;
        }
        self.finals[state] = true;
        Ok(self)
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn root(&self) -> StateId {
        self.root
    }

    pub fn num_states(&self) -> usize {
        self.children.len()
    }

    pub fn num_transitions(&self) -> usize {
        self.children.iter().map(Vec::len).sum()
    }

    pub fn is_final(&self, q: StateId) -> bool {
        self.finals[q]
    }

    pub fn finals(&self) -> impl Iterator<Item = StateId> + '_ {
        self.finals.iter().enumerate().filter(|(_, &f)| f).map(|(q, _)| q)
    }

    pub fn num_finals(&self) -> usize {
        self.finals.iter().filter(|&&f| f).count()
    }

    pub fn children(&self, q: StateId) -> &[(Symbol, StateId)] {
        &self.children[q]
    }

    pub fn is_leaf(&self, q: StateId) -> bool {
        self.children[q].is_empty()
    }

    pub fn child(&self, q: StateId, s: Symbol) -> Option<StateId> {
        let list = &self.children[q];
        list.binary_search_by_key(&s, |&(t, _)| t).ok().map(|i| list[i].1)
    }

    /// Runs the automaton on `word`. Missing transitions reject.
    pub fn accepts(&self, word: &[Symbol]) -> bool {
        let mut q = self.root;
        for &s in word {
            match self.child(q, s) {
                Some(next) => q = next,
                None => return false,
            }
        }
        self.finals[q]
    }

    /// All accepted words, shortest first, ties in symbol order.
    pub fn language(&self) -> Vec<Word> {
        let mut out = Vec::with_capacity(self.num_finals());
        let mut stack = vec![(self.root, Vec::new())];
        while let Some((q, prefix)) = stack.pop() {
            if self.finals[q] {
                out.push(Word(prefix.clone()));
            }
            for &(s, c) in self.children[q].iter().rev() {
                let mut next = prefix.clone();
                next.push(s);
                stack.push((c, next));
            }
        }
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out
    }

    /// Accepted words spelled as strings, in [`Dta::language`] order.
    pub fn language_strings(&self) -> Vec<String> {
        self.language().iter().map(|w| self.alphabet.spell(w)).collect()
    }

    /// Length of the longest root-to-leaf path, which is also the length of
    /// the longest accepted word.
    pub fn depth(&self) -> usize {
        self.levels().depth()
    }

    /// Breadth-first layering of a valid automaton.
    pub fn levels(&self) -> Levels {
        Levels::new(self)
    }

    /// Renumbers states in depth-first preorder, visiting children in
    /// ascending character order. Isomorphic automata become equal.
    pub fn canonicalize(&self) -> Dta {
        let order = self.preorder();
        let mut rename = vec![0; self.num_states()];
        for (i, &q) in order.iter().enumerate() {
            rename[q] = i;
        }
        let alphabet = Alphabet::from_chars(self.alphabet.chars().iter().copied());
        let relabel = |s: Symbol| {
            let c = self.alphabet.resolve(s).expect("valid symbol");
            alphabet.lookup(c).expect("same characters")
        };
        let children =
            order.iter().map(|&q| self.children[q].iter().map(|&(s, c)| (relabel(s), rename[c])).collect()).collect();
        let finals = order.iter().map(|&q| self.finals[q]).collect();
        Dta::from_parts_unchecked(alphabet, 0, children, finals)
    }

    /// Depth-first preorder from the root, children in ascending character order.
    pub fn preorder(&self) -> Vec<StateId> {
        let mut order = Vec::with_capacity(self.num_states());
        let mut stack = vec![self.root];
        while let Some(q) = stack.pop() {
            order.push(q);
            let mut kids: Vec<(char, StateId)> =
                self.children[q].iter().map(|&(s, c)| (self.alphabet.resolve(s).unwrap_or('\u{FFFD}'), c)).collect();
            kids.sort_by_key(|&(ch, _)| ch);
            stack.extend(kids.into_iter().rev().map(|(_, c)| c));
        }
        order
    }

    /// Re-expresses this automaton over `alphabet`, which must contain every
    /// character used on a transition.
    pub fn with_alphabet(&self, alphabet: &Alphabet) -> Result<Dta, AlphabetError> {
        let mut children = Vec::with_capacity(self.num_states());
        for list in &self.children {
            let mut mapped = Vec::with_capacity(list.len());
            for &(s, c) in list {
                let ch = self.alphabet.resolve(s).ok_or(AlphabetError::UnknownSymbol(s.id()))?;
                let t = alphabet.lookup(ch).ok_or(AlphabetError::UnknownChar(ch))?;
                mapped.push((t, c));
            }
            children.push(mapped);
        }
        Ok(Dta::from_parts_unchecked(alphabet.clone(), self.root, children, self.finals.clone()))
    }

    /// Checks every structural invariant and reports all violations found.
    pub fn validate(&self) -> Result<(), Vec<Violation>> {
        let n = self.num_states();
        let mut found = Vec::new();
        if self.root >= n {
            found.push(Violation::MissingRoot);
            return Err(found);
        }
        let mut indegree = vec![0usize; n];
        for (q, list) in self.children.iter().enumerate() {
            for (i, &(s, c)) in list.iter().enumerate() {
                if !self.alphabet.contains(s) {
                    found.push(Violation::ForeignSymbol { from: q, symbol: s.id() });
                } else if i > 0 && list[i - 1].0 == s {
                    let symbol = self.alphabet.resolve(s).unwrap_or('?');
                    found.push(Violation::Nondeterministic { state: q, symbol });
                }
                if c >= n {
                    found.push(Violation::DanglingTarget { from: q, to: c });
                    continue;
                }
                if c == self.root {
                    found.push(Violation::RootHasParent { from: q });
                }
                indegree[c] += 1;
            }
        }
        for (q, &d) in indegree.iter().enumerate() {
            if q != self.root && d > 1 {
                found.push(Violation::MultipleParents { state: q });
            }
        }

        // Three-colour DFS over the whole graph: back edges close cycles.
        const WHITE: u8 = 0;
        const GREY: u8 = 1;
        const BLACK: u8 = 2;
        let mut colour = vec![WHITE; n];
        let mut on_cycle = vec![false; n];
        let starts = std::iter::once(self.root).chain((0..n).filter(|&q| q != self.root));
        for start in starts {
            if colour[start] != WHITE {
                continue;
            }
            let mut stack = vec![(start, 0usize)];
            colour[start] = GREY;
            while let Some(&mut (q, ref mut next)) = stack.last_mut() {
                if let Some(&(_, c)) = self.children[q].get(*next) {
                    *next += 1;
                    if c >= n {
                        continue;
                    }
                    match colour[c] {
                        WHITE => {
                            colour[c] = GREY;
                            stack.push((c, 0));
                        }
                        GREY => {
                            let from = stack.iter().position(|&(q, _)| q == c).expect("grey states are on the stack");
                            for &(q, _) in &stack[from..] {
                                on_cycle[q] = true;
                            }
                        }
                        _ => {}
                    }
                } else {
                    colour[q] = BLACK;
                    stack.pop();
                }
            }
        }
        found.extend((0..n).filter(|&q| on_cycle[q]).map(|state| Violation::Cycle { state }));

        let mut reached = vec![false; n];
        let mut stack = vec![self.root];
        reached[self.root] = true;
        while let Some(q) = stack.pop() {
            for &(_, c) in &self.children[q] {
                if c < n && !reached[c] {
                    reached[c] = true;
                    stack.push(c);
                }
            }
        }
        found.extend((0..n).filter(|&q| !reached[q] && !on_cycle[q]).map(|state| Violation::Unreachable { state }));

        found.extend(
            (0..n)
                .filter(|&q| self.children[q].is_empty() && !self.finals[q])
                .map(|state| Violation::NonFinalLeaf { state }),
        );

        if found.is_empty() {
            Ok(())
        } else {
            Err(found)
        }
    }
}

/// Breadth-first layering of a tree automaton: states grouped by depth, with
/// each state's parent and incoming symbol.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Levels {
    order: Vec<StateId>,
    starts: Vec<usize>,
    parent: Vec<Option<(StateId, Symbol)>>,
    position: Vec<usize>,
}

impl Levels {
    fn new(dta: &Dta) -> Self {
        let n = dta.num_states();
        let mut order = Vec::with_capacity(n);
        let mut starts = vec![0];
        let mut parent = vec![None; n];
        order.push(dta.root);
        let mut begin = 0;
        while begin < order.len() {
            let end = order.len();
            for i in begin..end {
                let q = order[i];
                for &(s, c) in dta.children(q) {
                    parent[c] = Some((q, s));
                    order.push(c);
                }
            }
            if order.len() > end {
                starts.push(end);
            }
            begin = end;
        }
        starts.push(order.len());
        let mut position = vec![0; n];
        for (i, &q) in order.iter().enumerate() {
            position[q] = i;
        }
        Levels { order, starts, parent, position }
    }

    /// States in breadth-first order.
    pub fn order(&self) -> &[StateId] {
        &self.order
    }

    pub fn num_levels(&self) -> usize {
        self.starts.len() - 1
    }

    pub fn depth(&self) -> usize {
        self.num_levels() - 1
    }

    pub fn level(&self, d: usize) -> &[StateId] {
        &self.order[self.starts[d]..self.starts[d + 1]]
    }

    pub fn parent(&self, q: StateId) -> Option<(StateId, Symbol)> {
        self.parent[q]
    }

    /// Index of `q` in breadth-first order.
    pub fn position(&self, q: StateId) -> usize {
        self.position[q]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn words(a: &Alphabet, ws: &[&str]) -> Vec<Word> {
        ws.iter().map(|w| a.word(w).unwrap()).collect()
    }

    #[test]
    fn path_shape() {
        let p = Dta::path_of_str("aba");
        assert_eq!(p.num_states(), 4);
        assert_eq!(p.num_transitions(), 3);
        assert_eq!(p.finals().collect::<Vec<_>>(), vec![3]);
        assert_eq!(p.depth(), 3);

        let e = Dta::path(&[], &Alphabet::new()).unwrap();
        assert_eq!(e.num_states(), 1);
        assert!(e.is_final(0));
        assert_eq!(e.num_transitions(), 0);
        assert_eq!(e.depth(), 0);
        assert!(e.validate().is_ok());
    }

    #[test]
    fn path_accepts_only_its_word() {
        let p = Dta::path_of_str("ab");
        let a = p.alphabet().clone();
        assert_eq!(p.num_states(), 3);
        assert!(p.accepts(&a.word("ab").unwrap()));
        assert!(!p.accepts(&a.word("a").unwrap()));
        assert!(!p.accepts(&a.word("aba").unwrap()));
        assert!(!p.accepts(&a.word("").unwrap()));
    }

    #[test]
    fn path_rejects_foreign_symbol() {
        let a = Alphabet::from_chars("ab".chars());
        let err = Dta::path(&[Symbol(5)], &a).unwrap_err();
        assert_eq!(err, AlphabetError::UnknownSymbol(5));
    }

    #[test]
    fn insert_existing_word_is_idempotent() {
        let p = Dta::path_of_str("aba");
        let w = p.alphabet().word("aba").unwrap();
        assert_eq!(p.clone().insert(&w).unwrap(), p);
    }

    #[test]
    fn insert_extension_and_prefix() {
        let p = Dta::path_of_str("aba");
        let a = p.alphabet().clone();
        let longer = p.clone().insert(&a.word("abaaba").unwrap()).unwrap();
        assert_eq!(longer.num_states(), 7);
        let levels = longer.levels();
        let final_depths: Vec<usize> =
            longer.finals().map(|q| (0..=levels.depth()).find(|&d| levels.level(d).contains(&q)).unwrap()).collect();
        assert_eq!(final_depths, vec![3, 6]);
        assert!(longer.accepts(&a.word("aba").unwrap()));
        assert!(longer.accepts(&a.word("abaaba").unwrap()));

        let prefix = p.clone().insert(&a.word("ab").unwrap()).unwrap();
        assert_eq!(prefix.num_states(), 4);
        assert!(prefix.is_final(2));
        assert!(prefix.is_final(3));
        assert_eq!(prefix.num_finals(), 2);
    }

    #[test]
    fn trie_of_three_covered_words() {
        let t = Dta::trie_of_strs(&["aba", "ababa", "abaaba"]).unwrap();
        assert_eq!(t.num_states(), 9);
        assert_eq!(t.num_finals(), 3);
        assert_eq!(t.depth(), 6);
        assert_eq!(t.language_strings(), vec!["aba", "ababa", "abaaba"]);
        // branch point sits at depth 3
        let l = t.levels();
        let branching: Vec<usize> =
            (0..=l.depth()).filter(|&d| l.level(d).iter().any(|&q| t.children(q).len() > 1)).collect();
        assert_eq!(branching, vec![3]);
        assert!(t.validate().is_ok());
    }

    #[test]
    fn singleton_trie_is_the_path() {
        let t = Dta::trie_of_strs(&["aba"]).unwrap();
        assert_eq!(t, Dta::path_of_str("aba"));
    }

    #[test]
    fn empty_language_rejected() {
        let a = Alphabet::from_chars("ab".chars());
        assert_eq!(Dta::trie(&[], &a), Err(BuildError::EmptyLanguage));
    }

    #[test]
    fn epsilon_trie() {
        let t = Dta::trie_of_strs(&[""]).unwrap();
        assert_eq!(t.num_states(), 1);
        assert!(t.is_final(0));
        assert_eq!(t.depth(), 0);
        assert_eq!(t.language().len(), 1);
    }

    #[test]
    fn accepts_examples() {
        let t = Dta::trie_of_strs(&["aba", "abaaba"]).unwrap();
        let a = t.alphabet().clone();
        assert!(t.accepts(&a.word("aba").unwrap()));
        assert!(!t.accepts(&a.word("abaa").unwrap()));
        assert_eq!(t.depth(), 6);
    }

    #[test]
    fn duplicates_collapse() {
        let a = Alphabet::from_chars("ab".chars());
        let t = Dta::trie(&words(&a, &["ab", "ab", "b"]), &a).unwrap();
        assert_eq!(t.language().len(), 2);
        assert_eq!(t.num_states(), 4);
    }

    #[test]
    fn validate_reports_non_final_leaf() {
        let a = Alphabet::from_chars("a".chars());
        let a0 = a.lookup('a').unwrap();
        let d = Dta::from_parts_unchecked(a, 0, vec![vec![(a0, 1)], vec![]], vec![false, false]);
        assert_eq!(d.validate(), Err(vec![Violation::NonFinalLeaf { state: 1 }]));
    }

    #[test]
    fn validate_reports_two_parents() {
        let a = Alphabet::from_chars("ab".chars());
        let (sa, sb) = (a.lookup('a').unwrap(), a.lookup('b').unwrap());
        let d = Dta::from_parts_unchecked(
            a,
            0,
            vec![vec![(sa, 1), (sb, 2)], vec![(sa, 2)], vec![]],
            vec![false, false, true],
        );
        let errs = d.validate().unwrap_err();
        assert!(errs.contains(&Violation::MultipleParents { state: 2 }));
    }

    #[test]
    fn validate_reports_cycles_and_root_entry() {
        let a = Alphabet::from_chars("a".chars());
        let sa = a.lookup('a').unwrap();
        let d = Dta::from_parts_unchecked(a.clone(), 0, vec![vec![(sa, 1)], vec![(sa, 0)]], vec![true, true]);
        let errs = d.validate().unwrap_err();
        assert!(errs.contains(&Violation::RootHasParent { from: 1 }));
        assert!(errs.iter().any(|v| matches!(v, Violation::Cycle { .. })));

        // a detached two-cycle is a cycle, not merely unreachable
        let d = Dta::from_parts_unchecked(a, 0, vec![vec![], vec![(sa, 2)], vec![(sa, 1)]], vec![true, true, true]);
        let errs = d.validate().unwrap_err();
        assert!(errs.contains(&Violation::Cycle { state: 1 }));
        assert!(!errs.iter().any(|v| matches!(v, Violation::Unreachable { .. })));
    }

    #[test]
    fn validate_reports_nondeterminism_and_dangling() {
        let a = Alphabet::from_chars("a".chars());
        let sa = a.lookup('a').unwrap();
        let d = Dta::from_parts_unchecked(
            a,
            0,
            vec![vec![(sa, 1), (sa, 2), (sa, 9)], vec![], vec![]],
            vec![false, true, true],
        );
        let errs = d.validate().unwrap_err();
        assert!(errs.contains(&Violation::Nondeterministic { state: 0, symbol: 'a' }));
        assert!(errs.contains(&Violation::DanglingTarget { from: 0, to: 9 }));
    }

    #[test]
    fn canonicalize_merges_insertion_orders() {
        let a = Alphabet::from_chars("ab".chars());
        let one = Dta::trie(&words(&a, &["ababa", "abaaba"]), &a).unwrap();
        let two = Dta::trie(&words(&a, &["abaaba", "ababa"]), &a).unwrap();
        assert_ne!(one, two);
        assert_eq!(one.canonicalize(), two.canonicalize());
    }

    #[test]
    fn levels_layering() {
        let t = Dta::trie_of_strs(&["ab", "b"]).unwrap();
        let l = t.levels();
        assert_eq!(l.num_levels(), 3);
        assert_eq!(l.level(0), &[0]);
        assert_eq!(l.level(1).len(), 2);
        assert_eq!(l.level(2).len(), 1);
        assert_eq!(l.position(0), 0);
    }
}
