//! Frozen counts per fixture, each also recomputed by a brute-force oracle.

use std::collections::BTreeSet;

use tiling_semistable::fixtures;
use tiling_semistable::nc_complex::{arcs, crossing, crossing_by_regions, facets_from_arcs, Arc};
use tiling_semistable::string_modules::{algebra_dimension, build_algebra, Algebra};
use tiling_semistable::tree::{EmbeddedTree, Segment};
use tiling_semistable::vectors::{c_set, k_set};

// (name, interior edges, arcs, facets, segments, arrows, relations, algebra dimension)
type Row = (&'static str, usize, usize, usize, usize, usize, usize, usize);

const FROZEN: &[Row] = &[
    ("a2", 2, 10, 5, 3, 1, 0, 3),
    ("star3", 0, 3, 1, 0, 0, 0, 0),
    ("claw", 3, 15, 14, 6, 3, 3, 6),
    ("quad", 3, 15, 12, 5, 2, 1, 5),
    ("pent", 4, 21, 28, 7, 2, 0, 6),
    ("zigzag6", 5, 28, 132, 15, 4, 0, 9),
    ("subseg", 4, 21, 42, 10, 3, 0, 8),
    ("mixed8", 7, 43, 858, 22, 6, 3, 16),
];

fn extreme_at(tree: &EmbeddedTree, prev: usize, v: usize, next: usize) -> bool {
    tree.rotate(v, prev, 1) == next || tree.rotate(v, prev, -1) == next
}

fn brute_arc_count(tree: &EmbeddedTree) -> usize {
    let leaves = tree.leaves();
    let mut n = 0;
    for (i, &a) in leaves.iter().enumerate() {
        for &b in &leaves[i + 1..] {
            let p = tree.path(a, b);
            if p.windows(3).all(|w| extreme_at(tree, w[0], w[1], w[2])) {
                n += 1;
            }
        }
    }
    n
}

fn brute_segment_count(tree: &EmbeddedTree) -> usize {
    let inner = tree.interior_vertices();
    let mut n = 0;
    for (i, &a) in inner.iter().enumerate() {
        for &b in &inner[i + 1..] {
            let p = tree.path(a, b);
            if p.iter().all(|v| inner.contains(v)) && p.windows(3).all(|w| extreme_at(tree, w[0], w[1], w[2])) {
                n += 1;
            }
        }
    }
    n
}

/// Maximal noncrossing sets by subset search, using the region-based
/// crossing test.
fn brute_facet_count(tree: &EmbeddedTree, all: &[Arc]) -> usize {
    let n = all.len();
    let cross: Vec<Vec<bool>> =
        (0..n).map(|i| (0..n).map(|j| i != j && crossing_by_regions(tree, &all[i], &all[j])).collect()).collect();
    let mut count = 0;
    for mask in 0u64..(1 << n) {
        let members: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        if members.iter().any(|&i| members.iter().any(|&j| cross[i][j])) {
            continue;
        }
        let maximal = (0..n).filter(|i| mask >> i & 1 == 0).all(|i| members.iter().any(|&j| cross[i][j]));
        count += usize::from(maximal);
    }
    count
}

/// Nonzero paths by breadth-first extension, including the trivial ones.
fn brute_path_count(alg: &Algebra) -> usize {
    let arrows = &alg.quiver.arrows;
    let mut layer: Vec<Vec<usize>> = (0..arrows.len()).map(|a| vec![a]).collect();
    let mut total = alg.quiver.vertex_count;
    while !layer.is_empty() {
        total += layer.len();
        let mut next = Vec::new();
        for p in &layer {
            let last = *p.last().unwrap();
            for (b, arrow) in arrows.iter().enumerate() {
                if arrow.source == arrows[last].target && !alg.relations.forbids(last, b) {
                    let mut q = p.clone();
                    q.push(b);
                    next.push(q);
                }
            }
        }
        assert!(total < 10_000, "path algebra is not finite dimensional");
        layer = next;
    }
    total
}

#[test]
fn fixture_counts_are_frozen() {
    let all = fixtures::all();
    assert_eq!(all.len(), FROZEN.len());
    for ((name, t), &(fname, dim, n_arcs, n_facets, n_segs, n_arrows, n_rel, alg_dim)) in all.iter().zip(FROZEN) {
        assert_eq!(*name, fname);
        let a = arcs(t);
        let alg = build_algebra(t);
        assert_eq!(t.dim(), dim, "{name}");
        assert_eq!(a.len(), n_arcs, "{name}");
        assert_eq!(facets_from_arcs(t, &a).unwrap().len(), n_facets, "{name}");
        assert_eq!(t.segments().len(), n_segs, "{name}");
        assert_eq!(alg.quiver.arrows.len(), n_arrows, "{name}");
        assert_eq!(alg.relations.forbidden.len(), n_rel, "{name}");
        assert_eq!(algebra_dimension(t).unwrap(), alg_dim, "{name}");
    }
}

#[test]
fn frozen_counts_match_brute_force() {
    for ((name, t), row) in fixtures::all().iter().zip(FROZEN) {
        assert_eq!(brute_arc_count(t), row.2, "{name}");
        assert_eq!(brute_segment_count(t), row.4, "{name}");
        assert_eq!(brute_path_count(&build_algebra(t)), row.7, "{name}");
        let a = arcs(t);
        if a.len() <= 21 {
            assert_eq!(brute_facet_count(t, &a), row.3, "{name}");
        }
    }
}

#[test]
fn crossing_tests_agree() {
    for (name, t) in fixtures::all() {
        let a = arcs(&t);
        for x in &a {
            for y in &a {
                assert_eq!(crossing(x, y), crossing_by_regions(&t, x, y), "{name}");
            }
        }
    }
}

fn named(t: &EmbeddedTree, path: &[&str]) -> Segment {
    let ids: Vec<usize> = path.iter().map(|n| t.vertex_by_name(n).unwrap()).collect();
    t.segment(ids[0], *ids.last().unwrap()).expect("named path is a segment")
}

#[test]
fn right_right_left_segment_has_six_sub_indices() {
    let t = fixtures::subseg();
    let s = named(&t, &["2", "8"]);
    let expected: BTreeSet<Segment> =
        [["2", "8"], ["2", "7"], ["3", "8"], ["3", "7"], ["4", "8"], ["4", "7"]].iter().map(|p| named(&t, p)).collect();
    assert_eq!(c_set(&t, &s), expected);
    let quotients: BTreeSet<Segment> =
        [["2", "8"], ["2", "3"], ["2", "4"], ["7", "8"]].iter().map(|p| named(&t, p)).collect();
    assert_eq!(k_set(&t, &s), quotients);
}
