//! `covdta` command-line tool.
//!
//! Every command prints a `key<TAB>value` report on stdout. Exit status is
//! 0 for a positive answer, 1 for a negative one and 2 for bad input.

mod bench;
mod error;
mod report;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use covdta::dot::{to_dot, Overlay};
use covdta::minimize::{solve_scc, SccOptions};
use covdta::oracle::{enumerate_covered_language, naive_covers, naive_shortest_common_cover, naive_shortest_cover};
use covdta::text::{intern_words, parse_word_list};
use covdta::{align, parse_automaton, recognize, shortest_cover, to_canonical_text, CoverMode, Dta, Engine, Verdict};

use error::CliError;
use report::{join, Report};

#[derive(Parser, Debug)]
#[command(name = "covdta", version, about = "Covers of finite languages by their tries")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build the trie of a word list and write it in canonical form.
    Build {
        /// Word list: one word per line, a blank line is the empty word.
        words: PathBuf,
        /// Where to write the automaton (stdout if omitted).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decide whether a cover automaton covers a target automaton.
    Check {
        #[command(flatten)]
        cover: CoverSource,
        /// Target automaton file.
        target: PathBuf,
        #[arg(long, value_enum, default_value_t = Mode::Edge)]
        mode: Mode,
        #[arg(long, value_enum, default_value_t = EngineArg::Serial)]
        engine: EngineArg,
    },
    /// Shortest common cover of a word list.
    Scc {
        words: PathBuf,
        #[arg(long, value_enum, default_value_t = Mode::Edge)]
        mode: Mode,
        #[arg(long, value_enum, default_value_t = EngineArg::Serial)]
        engine: EngineArg,
        /// Check every prefix of the shortest word, not just its borders.
        #[arg(long)]
        no_border_filter: bool,
    },
    /// Shortest cover of a single word.
    Shortest { word: String },
    /// Render an automaton as Graphviz DOT, optionally highlighting a cover.
    ExportDot {
        automaton: PathBuf,
        #[command(flatten)]
        cover: OptionalCover,
        #[arg(long, value_enum, default_value_t = Mode::Edge)]
        mode: Mode,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run both engines on random covered instances and report work counters.
    Bench(bench::BenchArgs),
    /// Brute-force reference answers, for generating fixtures.
    #[command(hide = true)]
    Oracle {
        #[command(subcommand)]
        query: OracleQuery,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct CoverSource {
    /// Cover given inline as a single word (its path automaton).
    #[arg(long)]
    cover_word: Option<String>,
    /// Cover automaton file.
    #[arg(long)]
    cover: Option<PathBuf>,
}

#[derive(Args, Debug)]
#[group(required = false, multiple = false)]
struct OptionalCover {
    #[arg(long)]
    cover_word: Option<String>,
    #[arg(long)]
    cover: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum OracleQuery {
    /// Is `w` covered by `s`?
    Covers { s: String, w: String },
    /// Shortest cover of `w`.
    Shortest { w: String },
    /// Shortest common cover of a word list.
    Scc { words: PathBuf },
    /// All words of length at most `max_len` covered by `s`, one per line.
    Language {
        s: String,
        max_len: usize,
        #[arg(long, default_value_t = 1_000_000)]
        limit: usize,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Mode {
    Edge,
    Node,
}

impl From<Mode> for CoverMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Edge => CoverMode::EdgeCoverage,
            Mode::Node => CoverMode::NodeCoverage,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum EngineArg {
    Serial,
    Parallel,
}

impl From<EngineArg> for Engine {
    fn from(e: EngineArg) -> Self {
        match e {
            EngineArg::Serial => Engine::Serial,
            EngineArg::Parallel => Engine::Parallel,
        }
    }
}

fn read(path: &Path) -> Result<Vec<u8>, CliError> {
    fs::read(path).map_err(|source| CliError::Io { path: path.to_owned(), source })
}

fn write(path: &Path, contents: &str) -> Result<(), CliError> {
    fs::write(path, contents).map_err(|source| CliError::Io { path: path.to_owned(), source })
}

fn read_words(path: &Path) -> Result<Vec<String>, CliError> {
    parse_word_list(&read(path)?).map_err(|source| CliError::WordList { path: path.to_owned(), source })
}

fn read_automaton(path: &Path) -> Result<Dta, CliError> {
    let bytes = read(path)?;
    let text =
        std::str::from_utf8(&bytes).map_err(|e| CliError::Usage(format!("{}: not UTF-8: {e}", path.display())))?;
    parse_automaton(text).map_err(|source| CliError::Automaton { path: path.to_owned(), source })
}

fn cover_from(word: Option<&str>, file: Option<&Path>) -> Result<Option<Dta>, CliError> {
    match (word, file) {
        (Some(""), _) => Err(CliError::Usage("cover word must not be empty".into())),
        (Some(w), _) => Ok(Some(Dta::path_of_str(w))),
        (None, Some(p)) => read_automaton(p).map(Some),
        (None, None) => Ok(None),
    }
}

fn ms(start: Instant) -> String {
    format!("{:.3}", start.elapsed().as_secs_f64() * 1e3)
}

/// Runs a command; `Ok(true)` is a positive answer.
fn run(cli: Cli) -> Result<(bool, String), CliError> {
    match cli.command {
        Command::Build { words, out } => {
            let words = read_words(&words)?;
            let trie = Dta::trie_of_strs(&words).map_err(|e| CliError::Usage(e.to_string()))?;
            let text = to_canonical_text(&trie);
            let mut r = Report::new("build");
            r.put("words", words.len())
                .put("states", trie.num_states())
                .put("finals", trie.num_finals())
                .put("transitions", trie.num_transitions())
                .put("depth", trie.depth());
            match out {
                Some(path) => {
                    write(&path, &text)?;
                    r.put("out", path.display());
                    Ok((true, r.render()))
                }
                None => {
                    eprint!("{}", r.render());
                    Ok((true, text))
                }
            }
        }

        Command::Check { cover, target, mode, engine } => {
            let cover = cover_from(cover.cover_word.as_deref(), cover.cover.as_deref())?.expect("group is required");
            let target = read_automaton(&target)?;
            let (cover, target) = align(&cover, &target);
            let start = Instant::now();
            let run = recognize(&cover, &target, mode.into(), engine.into()).expect("aligned alphabets");
            let wall = ms(start);
            let outcome = run.outcome;
            let mut r = Report::new("check");
            r.put("mode", CoverMode::from(mode).name())
                .put("engine", if engine == EngineArg::Serial { "serial" } else { "parallel" });
            match &outcome.verdict {
                Verdict::Covered(w) => {
                    r.put("covered", true).put("anchors", join(w.anchors(), " "));
                }
                Verdict::NotCovered(f) => {
                    r.put("covered", false).put("failure", f);
                }
            }
            let s = outcome.stats;
            r.put("basic_steps", s.basic_steps)
                .put("parallel_rounds", s.parallel_rounds)
                .put("messages", s.messages)
                .put("critical_path", s.critical_path)
                .put("cover_states", cover.num_states())
                .put("target_states", target.num_states())
                .put("target_depth", target.depth())
                .put("wall_ms", wall);
            Ok((outcome.covered(), r.render()))
        }

        Command::Scc { words, mode, engine, no_border_filter } => {
            let raw = read_words(&words)?;
            let (alphabet, interned) = intern_words(&raw);
            let mut options =
                SccOptions { mode: mode.into(), border_filter: !no_border_filter, ..SccOptions::default() };
            options.minimize.engine = engine.into();
            let start = Instant::now();
            let report = solve_scc(&interned, &alphabet, &options)?;
            let mut r = Report::new("scc");
            let cover = report.cover.as_ref().map(|w| alphabet.spell(w));
            r.put("mode", CoverMode::from(mode).name())
                .put("words", raw.len())
                .put("cover", cover.as_deref().unwrap_or("none"))
                .put("candidates", report.candidates)
                .put("considered", report.considered)
                .put("trie_states", report.trie_states)
                .put("checked", report.cost.checked)
                .put("basic_steps", report.cost.basic_steps)
                .put("wall_ms", ms(start));
            Ok((cover.is_some(), r.render()))
        }

        Command::Shortest { word } => {
            let (alphabet, interned) = intern_words(std::slice::from_ref(&word));
            let cover = shortest_cover(&interned[0], &alphabet)?;
            let mut r = Report::new("shortest");
            r.put("word", &word).put("cover", alphabet.spell(&cover)).put("length", cover.len());
            Ok((true, r.render()))
        }

        Command::ExportDot { automaton, cover, mode, out } => {
            let target = read_automaton(&automaton)?;
            let cover = cover_from(cover.cover_word.as_deref(), cover.cover.as_deref())?;
            let (dot, ok) = match cover {
                None => (to_dot(&target, None), true),
                Some(cover) => {
                    let (cover, target) = align(&cover, &target);
                    let run = recognize(&cover, &target, mode.into(), Engine::Serial).expect("aligned alphabets");
                    match run.outcome.verdict {
                        Verdict::Covered(w) => (to_dot(&target, Some(&Overlay::new(&cover, &target, &w))), true),
                        Verdict::NotCovered(f) => {
                            eprintln!("not covered: {f}");
                            (to_dot(&target, None), false)
                        }
                    }
                }
            };
            match out {
                Some(path) => {
                    write(&path, &dot)?;
                    let mut r = Report::new("export-dot");
                    r.put("out", path.display()).put("states", target.num_states());
                    Ok((ok, r.render()))
                }
                None => Ok((ok, dot)),
            }
        }

        Command::Bench(args) => bench::run(&args).map(|text| (true, text)),

        Command::Oracle { query } => oracle(query),
    }
}

fn chars(s: &str) -> Vec<char> {
    s.chars().collect()
}

fn oracle(query: OracleQuery) -> Result<(bool, String), CliError> {
    match query {
        OracleQuery::Covers { s, w } => {
            let yes = naive_covers(&chars(&s), &chars(&w));
            let mut r = Report::new("oracle covers");
            r.put("cover", &s).put("word", &w).put("covered", yes);
            Ok((yes, r.render()))
        }
        OracleQuery::Shortest { w } => {
            let cover: String = naive_shortest_cover(&chars(&w)).into_iter().collect();
            let mut r = Report::new("oracle shortest");
            r.put("word", &w).put("cover", cover);
            Ok((true, r.render()))
        }
        OracleQuery::Scc { words } => {
            let words: Vec<Vec<char>> = read_words(&words)?.iter().map(|w| chars(w)).collect();
            let cover = naive_shortest_common_cover(&words).map(|w| w.into_iter().collect::<String>());
            let mut r = Report::new("oracle scc");
            r.put("cover", cover.as_deref().unwrap_or("none"));
            Ok((cover.is_some(), r.render()))
        }
        OracleQuery::Language { s, max_len, limit } => {
            let words =
                enumerate_covered_language(&chars(&s), max_len, limit).map_err(|e| CliError::Usage(e.to_string()))?;
            let text: String = words.iter().map(|w| w.iter().collect::<String>() + "\n").collect();
            Ok((!words.is_empty(), text))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok((positive, text)) => {
            print!("{text}");
            ExitCode::from(if positive { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
