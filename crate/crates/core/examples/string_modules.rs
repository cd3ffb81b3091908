//! The tiling algebra of the claw: quiver, relations, modules, Hom and Ext.

use tiling_semistable::fixtures;
use tiling_semistable::string_modules::{algebra_dimension, all_submodules, ModuleCategory};

fn main() {
    let tree = fixtures::claw();
    let cat = ModuleCategory::new(&tree).unwrap();
    let alg = cat.algebra();
    println!(
        "{} arrows, {} relations, dimension {}",
        alg.quiver.arrows.len(),
        alg.relations.forbidden.len(),
        algebra_dimension(&tree).unwrap()
    );
    let segs = cat.segments();
    for (i, s) in segs.iter().enumerate() {
        let subs: Vec<String> = all_submodules(&tree, s).iter().map(|m| m.display(&tree)).collect();
        println!("M{}: submodules {}", tree.display_segment(s), subs.join(", "));
        for (j, t) in segs.iter().enumerate() {
            if cat.ext1(i, j) > 0 {
                let mids: Vec<String> = cat.middle_terms(j, i).unwrap().iter().map(|m| m.display(&tree)).collect();
                println!(
                    "  Ext^1(M{}, M{}) = {}, middle terms {}",
                    tree.display_segment(s),
                    tree.display_segment(t),
                    cat.ext1(i, j),
                    mids.join(", ")
                );
            }
        }
    }
}
