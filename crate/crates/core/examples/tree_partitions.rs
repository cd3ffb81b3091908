//! Noncrossing tree partitions, Kreweras complements and red-green trees.

use tiling_semistable::fixtures;
use tiling_semistable::nc_complex::facets;
use tiling_semistable::partitions::{kreweras, kreweras_orbits, ncp_all, redgreen_tree};

fn main() {
    let tree = fixtures::quad();
    let fs = facets(&tree).unwrap();
    let all = ncp_all(&tree, &fs).unwrap();
    for (f, b) in fs.iter().zip(&all) {
        let rg = redgreen_tree(&tree, f).unwrap();
        println!(
            "{} -> Kr {}  ({} red-green edges)",
            b.display(&tree),
            kreweras(&tree, &all, b).unwrap().display(&tree),
            rg.edges().len()
        );
    }
    println!("orbit sizes {:?}", kreweras_orbits(&tree, &all).unwrap());
}
