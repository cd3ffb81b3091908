//! Torsion pairs of partitions and canonical decompositions of modules.

use tiling_semistable::fixtures;
use tiling_semistable::nc_complex::facets;
use tiling_semistable::partitions::{ncp_all, torsion_decompose, torsion_pair};
use tiling_semistable::semistable::display_set;
use tiling_semistable::string_modules::ModuleCategory;

fn main() {
    let tree = fixtures::a2();
    let cat = ModuleCategory::new(&tree).unwrap();
    let all = ncp_all(&tree, &facets(&tree).unwrap()).unwrap();
    for b in &all {
        let tp = torsion_pair(&tree, b);
        println!(
            "{}: T {} F {}",
            b.display(&tree),
            display_set(&tree, &tp.torsion),
            display_set(&tree, &tp.torsion_free)
        );
        for s in cat.segments() {
            let (t, f) = torsion_decompose(&cat, &tp, s).unwrap();
            println!("  0 -> {} -> M{} -> {} -> 0", t.display(&tree), tree.display_segment(s), f.display(&tree));
        }
    }
}
