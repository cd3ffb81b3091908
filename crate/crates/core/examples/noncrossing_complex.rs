//! Enumerate the facets of the noncrossing complex and their colored arcs.

use tiling_semistable::fixtures;
use tiling_semistable::nc_complex::{arcs, facets_from_arcs, flip_neighbors, supporting_arcs};

fn main() {
    let tree = fixtures::claw();
    let all = arcs(&tree);
    let fs = facets_from_arcs(&tree, &all).unwrap();
    println!("{} arcs, {} facets of size {}", all.len(), fs.len(), fs[0].len());
    let f = &fs[0];
    for fa in f.colored() {
        let (mu, nu) = supporting_arcs(&tree, f, &fa.arc).unwrap();
        println!("{} {} supported by {} and {}", fa.kind, fa.arc.display(&tree), mu.display(&tree), nu.display(&tree));
    }
    println!("facet 0 has {} flip neighbors", flip_neighbors(&tree, &all, f).unwrap().len());
}
