use std::collections::BTreeSet;

use proptest::prelude::*;
use tiling_semistable::checks::{self, TreeData};
use tiling_semistable::semistable::{semistable_subcat, StabilityCondition, SCALINGS};
use tiling_semistable::tree::{parse_tree, EmbeddedTree, Turn};
use tiling_semistable::vectors::{c_set, k_set, IntVector};

/// Tree text for a random plane tree with `parents.len()` interior vertices.
fn tree_text(parents: &[u8], extra: &[u8], keys: &[u32]) -> String {
    let k = parents.len();
    let mut nbrs: Vec<Vec<String>> = vec![Vec::new(); k];
    for i in 1..k {
        let p = parents[i] as usize % i;
        nbrs[i].push(format!("v{p}"));
        nbrs[p].push(format!("v{i}"));
    }
    for (i, ns) in nbrs.iter_mut().enumerate() {
        let leaves = 3usize.saturating_sub(ns.len()) + extra[i] as usize;
        for j in 0..leaves {
            ns.push(format!("l{i}_{j}"));
        }
    }
    let mut key = keys.iter().cycle();
    let mut out = String::new();
    for (i, ns) in nbrs.iter_mut().enumerate() {
        let mut tagged: Vec<(u32, String)> = ns.drain(..).map(|n| (*key.next().unwrap(), n)).collect();
        tagged.sort();
        let names: Vec<String> = tagged.into_iter().map(|(_, n)| n).collect();
        out.push_str(&format!("vertex v{i}: {}\n", names.join(" ")));
    }
    out
}

fn plane_tree(max_interior: usize) -> impl Strategy<Value = EmbeddedTree> {
    (1..=max_interior)
        .prop_flat_map(|k| {
            (
                prop::collection::vec(any::<u8>(), k),
                prop::collection::vec(0u8..2, k),
                prop::collection::vec(any::<u32>(), 8..32),
            )
        })
        .prop_map(|(p, e, keys)| parse_tree(&tree_text(&p, &e, &keys)).expect("generated tree is valid"))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn display_round_trips(tree in plane_tree(6)) {
        let again = parse_tree(&tree.to_string()).unwrap();
        let lines = |t: &EmbeddedTree| t.to_string().lines().map(str::to_string).collect::<BTreeSet<_>>();
        prop_assert_eq!(lines(&again), lines(&tree));
        let named = |t: &EmbeddedTree| {
            t.segments()
                .iter()
                .map(|s| {
                    let fwd: Vec<&str> = s.vertices().iter().map(|&v| t.name(v)).collect();
                    let rev: Vec<&str> = fwd.iter().rev().copied().collect();
                    fwd.min(rev).join(",")
                })
                .collect::<BTreeSet<_>>()
        };
        prop_assert_eq!(named(&again), named(&tree));
    }

    #[test]
    fn reversal_swaps_turns(tree in plane_tree(6)) {
        for s in tree.segments() {
            let fwd = s.vertices().to_vec();
            let rev: Vec<usize> = fwd.iter().rev().copied().collect();
            for i in 1..fwd.len() - 1 {
                let a: Turn = tree.turn(&fwd, i).unwrap();
                let b = tree.turn(&rev, fwd.len() - 1 - i).unwrap();
                prop_assert_eq!(a, b.opposite());
            }
        }
    }

    #[test]
    fn sub_and_quotient_index_sets_meet_in_the_segment(tree in plane_tree(6)) {
        for s in tree.segments() {
            let both: Vec<_> = c_set(&tree, &s).intersection(&k_set(&tree, &s)).cloned().collect();
            prop_assert_eq!(both, vec![s.clone()]);
        }
    }

    #[test]
    fn combinatorial_invariants(tree in plane_tree(5)) {
        let d = TreeData::new(&tree).unwrap();
        for c in [
            checks::pure_complex(&d),
            checks::dual_bases(&d),
            checks::c_vector_shape(&d),
            checks::biclosed_sets(&d),
            checks::zigzag_counting(&d),
            checks::kreweras_bijection(&d).unwrap(),
            checks::poset_isomorphism(&d),
            checks::kreweras_semistable(&d),
        ] {
            prop_assert!(c.passed, "{}: {}\n{}", c.name, c.detail, tree);
        }
    }

    #[test]
    fn module_invariants(tree in plane_tree(4)) {
        let d = TreeData::new(&tree).unwrap();
        for c in [
            checks::oracle_agreement(&d).unwrap(),
            checks::torsion_pairs(&d),
            checks::rho_wide(&d).unwrap(),
        ] {
            prop_assert!(c.passed, "{}: {}\n{}", c.name, c.detail, tree);
        }
    }

    #[test]
    fn semistable_subcategories_are_wide_and_scale_free(
        tree in plane_tree(4),
        raw in prop::collection::vec(-3i64..=3, 8),
    ) {
        let theta = StabilityCondition::new(IntVector(raw.iter().cycle().take(tree.dim()).copied().collect()));
        let d = TreeData::new(&tree).unwrap();
        let ss: BTreeSet<_> = semistable_subcat(&tree, &theta);
        prop_assert!(d.category.is_wide(&ss).unwrap());
        for c in SCALINGS {
            prop_assert_eq!(&semistable_subcat(&tree, &theta.scale(c)), &ss);
        }
    }

    #[test]
    fn indecomposables_are_bricks_with_small_homs(tree in plane_tree(5)) {
        let d = TreeData::new(&tree).unwrap();
        let n = d.category.segments().len();
        for i in 0..n {
            prop_assert_eq!(d.category.hom_dim(i, i), 1);
            for j in 0..n {
                prop_assert!(d.category.hom_dim(i, j) <= 1);
            }
        }
    }
}
