use std::fmt;

use thiserror::Error;

use crate::dta::StateId;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlphabetError {
    #[error("character {0:?} is not in the alphabet")]
    UnknownChar(char),
    #[error("symbol id {0} is not in the alphabet")]
    UnknownSymbol(usize),
    #[error("automata are defined over different alphabets")]
    Mismatch,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BuildError {
    #[error("the empty language has no trimmed automaton")]
    EmptyLanguage,
    #[error(transparent)]
    Alphabet(#[from] AlphabetError),
}

/// One broken structural invariant of a [`Dta`](crate::Dta).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// The root id does not name a state.
    MissingRoot,
    /// A transition points at a state id that does not exist.
    DanglingTarget { from: StateId, to: StateId },
    /// Two transitions leave `state` on the same symbol.
    Nondeterministic { state: StateId, symbol: char },
    /// A transition enters the root.
    RootHasParent { from: StateId },
    /// More than one transition enters `state`.
    MultipleParents { state: StateId },
    /// `state` lies on a directed cycle.
    Cycle { state: StateId },
    /// `state` is not reachable from the root.
    Unreachable { state: StateId },
    /// `state` has no outgoing transitions and is not final.
    NonFinalLeaf { state: StateId },
    /// A transition carries a symbol outside the alphabet.
    ForeignSymbol { from: StateId, symbol: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::MissingRoot => write!(f, "root state does not exist"),
            Violation::DanglingTarget { from, to } => {
                write!(f, "transition from {from} targets missing state {to}")
            }
            Violation::Nondeterministic { state, symbol } => {
                write!(f, "state {state} has several {symbol:?}-transitions")
            }
            Violation::RootHasParent { from } => {
                write!(f, "tree violation: transition from {from} enters the root")
            }
            Violation::MultipleParents { state } => {
                write!(f, "tree violation: state {state} has more than one parent")
            }
            Violation::Cycle { state } => write!(f, "cycle through state {state}"),
            Violation::Unreachable { state } => write!(f, "state {state} is unreachable"),
            Violation::NonFinalLeaf { state } => {
                write!(f, "trimmed violation: leaf {state} is not final")
            }
            Violation::ForeignSymbol { from, symbol } => {
                write!(f, "transition from {from} uses unknown symbol id {symbol}")
            }
        }
    }
}

/// Joins violations into one readable message.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violations(pub Vec<Violation>);

impl fmt::Display for Violations {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {reason}")]
    Malformed { line: usize, reason: String },
    #[error("line {line}: state {id} out of range (automaton has {states} states)")]
    DanglingState { line: usize, id: usize, states: usize },
    #[error("invalid automaton: {0}")]
    Invalid(Violations),
}

impl ParseError {
    pub fn violations(&self) -> &[Violation] {
        match self {
            ParseError::Invalid(v) => &v.0,
            _ => &[],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EmbedError {
    #[error("anchor {0} is not a state of the target")]
    BadAnchor(StateId),
    #[error("no embedding: target state {at} has no {symbol:?}-transition")]
    MissingTransition { at: StateId, symbol: char },
    #[error(transparent)]
    Alphabet(#[from] AlphabetError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordListError {
    #[error("line {line}: {reason}")]
    Malformed { line: usize, reason: String },
    #[error("word list is empty")]
    Empty,
}
