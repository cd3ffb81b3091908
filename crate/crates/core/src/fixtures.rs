//! Reference trees shipped with the crate.

use crate::tree::{parse_tree, EmbeddedTree};

pub const A2: &str = include_str!("../fixtures/a2.tree");
pub const STAR3: &str = include_str!("../fixtures/star3.tree");
pub const CLAW: &str = include_str!("../fixtures/claw.tree");
pub const QUAD: &str = include_str!("../fixtures/quad.tree");
pub const PENT: &str = include_str!("../fixtures/pent.tree");
pub const ZIGZAG6: &str = include_str!("../fixtures/zigzag6.tree");
pub const SUBSEG: &str = include_str!("../fixtures/subseg.tree");
pub const MIXED8: &str = include_str!("../fixtures/mixed8.tree");

/// `(name, source)` for every shipped tree, smallest first.
pub const ALL: &[(&str, &str)] = &[
    ("a2", A2),
    ("star3", STAR3),
    ("claw", CLAW),
    ("quad", QUAD),
    ("pent", PENT),
    ("zigzag6", ZIGZAG6),
    ("subseg", SUBSEG),
    ("mixed8", MIXED8),
];

fn load(src: &str) -> EmbeddedTree {
    parse_tree(src).expect("shipped fixture parses")
}

pub fn a2() -> EmbeddedTree {
    load(A2)
}

pub fn claw() -> EmbeddedTree {
    load(CLAW)
}

pub fn quad() -> EmbeddedTree {
    load(QUAD)
}

pub fn pent() -> EmbeddedTree {
    load(PENT)
}

pub fn zigzag6() -> EmbeddedTree {
    load(ZIGZAG6)
}

pub fn subseg() -> EmbeddedTree {
    load(SUBSEG)
}

pub fn mixed8() -> EmbeddedTree {
    load(MIXED8)
}

/// A single interior vertex with `k` leaves.
pub fn star(k: usize) -> EmbeddedTree {
    let leaves: Vec<String> = (0..k).map(|i| format!("s{}", i)).collect();
    load(&format!("vertex c: {}\n", leaves.join(" ")))
}

/// Every shipped tree, parsed.
pub fn all() -> Vec<(&'static str, EmbeddedTree)> {
    ALL.iter().map(|&(name, src)| (name, load(src))).collect()
}
