//! WebAssembly entry points for the browser demo.
//!
//! Each function takes the raw text of a form field and returns an HTML
//! fragment (a short summary plus an SVG drawing) ready for `innerHTML`.
//! Errors come back as a fragment too, so the page never has to catch.

mod svg;

use covdta::dot::Overlay;
use covdta::minimize::solve_scc;
use covdta::text::intern_words;
use covdta::{align, recognize, CoverMode, Dta, Engine, SccOptions, Verdict};
use wasm_bindgen::prelude::*;

pub use svg::{escape, render};

/// Words from a textarea: one per line, surrounding blanks ignored, empty
/// lines skipped.
fn words(text: &str) -> Result<Vec<String>, String> {
    let ws: Vec<String> = text.lines().map(str::trim).filter(|l| !l.is_empty()).map(str::to_owned).collect();
    if ws.is_empty() {
        return Err("enter at least one word".into());
    }
    if let Some(w) = ws.iter().find(|w| w.chars().count() > 64) {
        return Err(format!("word too long for the demo: {}…", w.chars().take(16).collect::<String>()));
    }
    if ws.len() > 200 {
        return Err("at most 200 words in the demo".into());
    }
    Ok(ws)
}

fn error(msg: &str) -> String {
    format!("<p class=\"error\">{}</p>", escape(msg))
}

fn summary(items: &[(&str, String)]) -> String {
    let cells: String = items.iter().map(|(k, v)| format!("<dt>{}</dt><dd>{}</dd>", escape(k), escape(v))).collect();
    format!("<dl class=\"summary\">{cells}</dl>")
}

/// Draws the trie of the given word list.
#[wasm_bindgen]
pub fn draw_trie(word_list: &str) -> String {
    let ws = match words(word_list) {
        Ok(ws) => ws,
        Err(e) => return error(&e),
    };
    let trie = Dta::trie_of_strs(&ws).expect("non-empty list");
    summary(&[
        ("states", trie.num_states().to_string()),
        ("final states", trie.num_finals().to_string()),
        ("depth", trie.depth().to_string()),
    ]) + &render(&trie, None)
}

/// Checks whether the path automaton of `cover` covers the trie of
/// `word_list`; `mode` is `"edge"` or `"node"`.
#[wasm_bindgen]
pub fn check_cover(cover: &str, word_list: &str, mode: &str) -> String {
    let cover = cover.trim();
    if cover.is_empty() {
        return error("enter a cover word");
    }
    let ws = match words(word_list) {
        Ok(ws) => ws,
        Err(e) => return error(&e),
    };
    let mode = match mode {
        "node" => CoverMode::NodeCoverage,
        _ => CoverMode::EdgeCoverage,
    };
    let (c, t) = align(&Dta::path_of_str(cover), &Dta::trie_of_strs(&ws).expect("non-empty list"));
    let run = recognize(&c, &t, mode, Engine::Serial).expect("aligned alphabets");
    let stats = run.outcome.stats;
    let steps = ("basic steps", stats.basic_steps.to_string());
    match run.outcome.verdict {
        Verdict::Covered(w) => {
            let overlay = Overlay::new(&c, &t, &w);
            let anchors = w.anchors().iter().map(|a| a.to_string()).collect::<Vec<_>>().join(" ");
            summary(&[("covered", "yes".into()), ("anchors", anchors), steps]) + &render(&t, Some(&overlay))
        }
        Verdict::NotCovered(f) => {
            summary(&[("covered", "no".into()), ("reason", f.to_string()), steps]) + &render(&t, None)
        }
    }
}

/// Shortest common cover of the word list, drawn over the trie.
#[wasm_bindgen]
pub fn common_cover(word_list: &str) -> String {
    let ws = match words(word_list) {
        Ok(ws) => ws,
        Err(e) => return error(&e),
    };
    let (alphabet, interned) = intern_words(&ws);
    let report = match solve_scc(&interned, &alphabet, &SccOptions::default()) {
        Ok(r) => r,
        Err(e) => return error(&e.to_string()),
    };
    let counts = [("prefix candidates", report.candidates.to_string()), ("checked", report.cost.checked.to_string())];
    match report.cover {
        Some(cw) => {
            let cover = alphabet.spell(&cw);
            check_cover(&cover, word_list, "edge").replacen(
                "<dl class=\"summary\">",
                &format!("<dl class=\"summary\"><dt>shortest common cover</dt><dd>{}</dd>", escape(&cover)),
                1,
            ) + &summary(&counts)
        }
        None => {
            let trie = Dta::trie_of_strs(&ws).expect("non-empty list");
            summary(&[("shortest common cover", "none".into()), counts[0].clone(), counts[1].clone()])
                + &render(&trie, None)
        }
    }
}
