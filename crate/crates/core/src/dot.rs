//! Graphviz export.
//!
//! States are circles, final states double circles, transitions labelled by
//! their symbol. With an occurrence overlay, anchors are shaded and every
//! transition traversed by some occurrence is drawn in red.

use std::fmt::Write as _;

use crate::dta::Dta;
use crate::recognition::{expand_occurrence, OccurrenceSet};

/// Which parts of a target a cover witness reaches.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Overlay {
    pub anchors: Vec<bool>,
    /// Indexed by the child state of each transition.
    pub edges: Vec<bool>,
}

impl Overlay {
    /// Expands every anchor; anchors that do not embed contribute nothing.
    pub fn new(cover: &Dta, target: &Dta, witness: &OccurrenceSet) -> Self {
        let n = target.num_states();
        let mut anchors = vec![false; n];
        let mut edges = vec![false; n];
        for &a in witness.anchors() {
            let Ok(image) = expand_occurrence(cover, target, a) else { continue };
            anchors[a] = true;
            for q in 0..cover.num_states() {
                for &(_, next) in cover.children(q) {
                    edges[image[next]] = true;
                }
            }
        }
        Overlay { anchors, edges }
    }

    pub fn highlighted_edges(&self) -> usize {
        self.edges.iter().filter(|&&e| e).count()
    }
}

fn escape(c: char) -> String {
    match c {
        '"' => "\\\"".to_string(),
        '\\' => "\\\\".to_string(),
        '\n' => "\\n".to_string(),
        c => c.to_string(),
    }
}

pub fn to_dot(dta: &Dta, overlay: Option<&Overlay>) -> String {
    let mut out = String::from("digraph dta {\n  rankdir=LR;\n  node [shape=circle];\n");
    out.push_str("  start [shape=point];\n");
    let _ = writeln!(out, "  start -> q{};", dta.root());
    for q in dta.preorder() {
        let shape = if dta.is_final(q) { "doublecircle" } else { "circle" };
        let fill = match overlay {
            Some(o) if o.anchors[q] => ", style=filled, fillcolor=lightgrey",
            _ => "",
        };
        let _ = writeln!(out, "  q{q} [label=\"{q}\", shape={shape}{fill}];");
    }
    for q in dta.preorder() {
        for &(s, c) in dta.children(q) {
            let label = escape(dta.alphabet().resolve(s).unwrap_or('?'));
            let style = match overlay {
                Some(o) if o.edges[c] => ", color=red, penwidth=2",
                _ => "",
            };
            let _ = writeln!(out, "  q{q} -> q{c} [label=\"{label}\"{style}];");
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Alphabet;
    use crate::recognition::{covers, CoverMode};

    #[test]
    fn path_dot() {
        let dot = to_dot(&Dta::path_of_str("aba"), None);
        assert_eq!(dot.lines().filter(|l| l.starts_with("  q") && l.contains("shape=")).count(), 4);
        assert!(dot.contains("q3 [label=\"3\", shape=doublecircle]"));
        assert_eq!(dot.matches(" -> q").count(), 4);
    }

    #[test]
    fn overlay_marks_all_edges_under_edge_coverage() {
        let a = Alphabet::from_chars("ab".chars());
        let words: Vec<_> = ["aba", "ababa"].iter().map(|w| a.word(w).unwrap()).collect();
        let target = Dta::trie(&words, &a).unwrap();
        let cover = Dta::path(&a.word("aba").unwrap(), &a).unwrap();
        let out = covers(&cover, &target, CoverMode::EdgeCoverage).unwrap();
        let overlay = Overlay::new(&cover, &target, out.witness().unwrap());
        assert_eq!(overlay.highlighted_edges(), target.num_transitions());
        let dot = to_dot(&target, Some(&overlay));
        assert_eq!(dot.matches("color=red").count(), target.num_transitions());
    }

    #[test]
    fn quotes_are_escaped() {
        let dot = to_dot(&Dta::path_of_str("\"\\"), None);
        assert!(dot.contains("label=\"\\\"\""));
        assert!(dot.contains("label=\"\\\\\""));
    }
}
