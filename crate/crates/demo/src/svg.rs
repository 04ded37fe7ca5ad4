//! Left-to-right tree drawing for tries.

use std::fmt::Write as _;

use covdta::dot::Overlay;
use covdta::{Dta, StateId};

const COL: f64 = 64.0;
const ROW: f64 = 44.0;
const R: f64 = 14.0;
const PAD: f64 = 24.0;

pub fn escape(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    for c in text.chars() {
        match c {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            '\'' => out.push_str("&#39;"),
            c => out.push(c),
        }
    }
    out
}

/// Leaves take consecutive rows in preorder; an inner node sits midway
/// between its first and last child.
fn layout(dta: &Dta) -> (Vec<(f64, f64)>, f64, f64) {
    fn place(dta: &Dta, q: StateId, depth: usize, next_row: &mut f64, pos: &mut [(f64, f64)]) -> f64 {
        let kids = dta.children(q);
        let row = if kids.is_empty() {
            let r = *next_row;
            *next_row += 1.0;
            r
        } else {
            let rows: Vec<f64> = kids.iter().map(|&(_, c)| place(dta, c, depth + 1, next_row, pos)).collect();
            (rows[0] + rows[rows.len() - 1]) / 2.0
        };
        pos[q] = (PAD + R + depth as f64 * COL, PAD + R + row * ROW);
        row
    }
    let mut pos = vec![(0.0, 0.0); dta.num_states()];
    let mut rows = 0.0;
    place(dta, dta.root(), 0, &mut rows, &mut pos);
    let width = 2.0 * (PAD + R) + dta.depth() as f64 * COL;
    let height = 2.0 * (PAD + R) + (rows - 1.0).max(0.0) * ROW;
    (pos, width, height)
}

/// SVG drawing: double circles for final states; with an overlay, anchors
/// are shaded and covered transitions drawn in red.
pub fn render(dta: &Dta, overlay: Option<&Overlay>) -> String {
    let (pos, w, h) = layout(dta);
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}" font-family="monospace" font-size="13">"#
    );
    for q in dta.preorder() {
        let (x1, y1) = pos[q];
        for &(s, c) in dta.children(q) {
            let (x2, y2) = pos[c];
            let hit = overlay.is_some_and(|o| o.edges[c]);
            let (stroke, width) = if hit { ("#d22", 2.5) } else { ("#555", 1.2) };
            let label = escape(&dta.alphabet().resolve(s).unwrap_or('?').to_string());
            let _ = writeln!(
                out,
                r#"<line class="edge" x1="{:.1}" y1="{y1:.1}" x2="{:.1}" y2="{y2:.1}" stroke="{stroke}" stroke-width="{width}"/>"#,
                x1 + R,
                x2 - R
            );
            let _ = writeln!(
                out,
                r#"<text x="{:.1}" y="{:.1}" text-anchor="middle" fill="{stroke}">{label}</text>"#,
                (x1 + x2) / 2.0,
                (y1 + y2) / 2.0 - 4.0
            );
        }
    }
    for (q, &(x, y)) in pos.iter().enumerate() {
        let anchor = overlay.is_some_and(|o| o.anchors[q]);
        let fill = if anchor { "#ddd" } else { "#fff" };
        let _ =
            writeln!(out, r##"<circle class="state" cx="{x:.1}" cy="{y:.1}" r="{R}" fill="{fill}" stroke="#222"/>"##);
        if dta.is_final(q) {
            let _ = writeln!(
                out,
                r##"<circle class="final" cx="{x:.1}" cy="{y:.1}" r="{}" fill="none" stroke="#222"/>"##,
                R - 3.5
            );
        }
        let _ = writeln!(out, r#"<text x="{x:.1}" y="{:.1}" text-anchor="middle" font-size="10">{q}</text>"#, y + 3.5);
    }
    out.push_str("</svg>\n");
    out
}
