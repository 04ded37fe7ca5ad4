use std::path::PathBuf;

use covdta::minimize::SccError;
use covdta::{ParseError, WordListError};
use thiserror::Error;

/// Everything that ends a run with exit code 2.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{}: {source}", .path.display())]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{}: {source}", .path.display())]
    Automaton { path: PathBuf, source: ParseError },
    #[error("{}: {source}", .path.display())]
    WordList { path: PathBuf, source: WordListError },
    #[error(transparent)]
    Scc(#[from] SccError),
    #[error("{0}")]
    Usage(String),
}
