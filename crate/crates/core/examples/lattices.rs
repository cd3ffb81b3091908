//! The partition lattice and the semistable lattice, exported as DOT.

use tiling_semistable::fixtures;
use tiling_semistable::nc_complex::facets;
use tiling_semistable::partitions::{ncp_all, ncp_poset};
use tiling_semistable::semistable::ss_poset;

fn main() {
    let tree = fixtures::a2();
    let fs = facets(&tree).unwrap();
    let ncp = ncp_poset(&tree, &ncp_all(&tree, &fs).unwrap());
    let (ss, _, map) = ss_poset(&tree, &fs);
    println!("isomorphic via rho: {}", ncp.isomorphic_via(&ss, &map));
    print!("{}", ncp.to_dot("ncp"));
    print!("{}", ss.to_dot("ss"));
}
