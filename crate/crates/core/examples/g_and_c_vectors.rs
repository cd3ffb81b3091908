//! g-vectors, c-vectors and their dual pairing on the A2 tree.

use tiling_semistable::fixtures;
use tiling_semistable::nc_complex::facets;
use tiling_semistable::vectors::{c_set, c_vector, dual_pairing, g_vector, k_set, kreweras_theta, segment_of};

fn main() {
    let tree = fixtures::a2();
    for (i, f) in facets(&tree).unwrap().iter().enumerate() {
        println!(
            "facet {}: theta {:?}, pairing {:?}",
            i,
            kreweras_theta(&tree, f).as_slice(),
            dual_pairing(&tree, f).unwrap()
        );
        for fa in f.colored() {
            let s = segment_of(&tree, f, &fa.arc).unwrap();
            println!(
                "  {:<5} g {:?} c {:?} on {} (|C| = {}, |K| = {})",
                fa.kind.as_str(),
                g_vector(&tree, &fa.arc).as_slice(),
                c_vector(&tree, f, &fa.arc).unwrap().as_slice(),
                tree.display_segment(&s),
                c_set(&tree, &s).len(),
                k_set(&tree, &s).len()
            );
        }
    }
}
