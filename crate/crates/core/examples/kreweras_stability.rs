//! Semistable subcategories of the Kreweras stability conditions.

use tiling_semistable::fixtures;
use tiling_semistable::nc_complex::facets;
use tiling_semistable::partitions::ncp_all;
use tiling_semistable::semistable::{display_set, stable_modules, verify_theorem1, StabilityCondition};

fn main() {
    let tree = fixtures::pent();
    let fs = facets(&tree).unwrap();
    let all = ncp_all(&tree, &fs).unwrap();
    let reports = verify_theorem1(&tree, &fs, &all);
    for r in reports.iter().take(6) {
        let stable = stable_modules(&tree, &StabilityCondition::new(r.theta.clone()));
        println!(
            "theta {:?}: semistable {} stable {} ok {}",
            r.theta.as_slice(),
            display_set(&tree, &r.semistable),
            display_set(&tree, &stable),
            r.passed()
        );
    }
    let ok = reports.iter().filter(|r| r.passed()).count();
    println!("{}/{} facets pass", ok, reports.len());
}
