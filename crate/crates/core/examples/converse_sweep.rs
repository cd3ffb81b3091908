//! Random stability conditions always cut out wide subcategories.

use tiling_semistable::fixtures;
use tiling_semistable::semistable::converse_sweep;
use tiling_semistable::string_modules::ModuleCategory;

fn main() {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(7);
    for (name, tree) in fixtures::all() {
        let cat = ModuleCategory::new(&tree).unwrap();
        let r = converse_sweep(&cat, seed, 200).unwrap();
        println!("{name}: {} distinct subcategories, passed {}", r.distinct_subcategories, r.passed());
    }
}
