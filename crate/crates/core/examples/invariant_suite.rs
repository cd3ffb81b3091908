//! Every invariant check on a tree file, or on the claw by default.

use tiling_semistable::{checks, fixtures, tree::parse_tree};

fn main() {
    let tree = match std::env::args().nth(1) {
        Some(path) => parse_tree(&std::fs::read_to_string(path).unwrap()).unwrap(),
        None => fixtures::claw(),
    };
    let report = checks::run_all(&tree, 1).unwrap();
    for c in &report.checks {
        println!("{} {}: {}", if c.passed { "ok  " } else { "FAIL" }, c.name, c.detail);
    }
}
