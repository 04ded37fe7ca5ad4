use covdta_demo::{check_cover, common_cover, draw_trie};

#[test]
fn trie_drawing_has_one_circle_per_state() {
    let html = draw_trie("aba\nabaaba\n");
    assert_eq!(html.matches("class=\"state\"").count(), 7);
    assert_eq!(html.matches("class=\"final\"").count(), 2);
    assert_eq!(html.matches("class=\"edge\"").count(), 6);
}

#[test]
fn covered_edges_are_highlighted() {
    let html = check_cover("aba", "aba\nababa", "edge");
    assert!(html.contains("<dd>yes</dd>"));
    assert_eq!(html.matches("stroke=\"#d22\"").count(), 5);
}

#[test]
fn modes_differ() {
    assert!(check_cover("aba", "abaaaba", "node").contains("<dd>yes</dd>"));
    let edge = check_cover("aba", "abaaaba", "edge");
    assert!(edge.contains("UncoveredEdge edge=3-a-&gt;4"));
}

#[test]
fn common_cover_answers() {
    assert!(common_cover("ababa\nabaaba").contains("<dt>shortest common cover</dt><dd>aba</dd>"));
    assert!(common_cover("abc\nabd").contains("<dd>none</dd>"));
}

#[test]
fn bad_input_is_reported_not_panicked() {
    assert!(draw_trie("  \n\n").contains("class=\"error\""));
    assert!(check_cover("", "ab", "edge").contains("class=\"error\""));
    assert!(draw_trie(&"a".repeat(100)).contains("class=\"error\""));
    let html = draw_trie("<script>");
    assert!(!html.contains("<script>"));
}
