//! Pins the DOT rendering byte-for-byte against a checked-in golden
//! file, so accidental format drift shows up as a diff.

use gaifman::{decompose, io};

#[test]
fn five_module_graph_dot_matches_the_golden_file() {
    let graph = std::fs::read_to_string(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/../../fixtures/five_module.graph"
    ))
    .unwrap();
    let golden = std::fs::read_to_string(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/tests/golden/five_module.dot"
    ))
    .unwrap();
    let s = io::parse_graph_file(&graph).unwrap();
    let dot = io::render_dot(&decompose(&s));
    assert_eq!(dot, golden, "DOT output drifted from the golden file");
}
