//! Exhaustive linear-algebra enumeration of the subrepresentations of a
//! string module, used to check the combinatorial descriptions.

use std::collections::BTreeSet;

use super::rep;
use super::{ModuleCategory, ModuleSum};
use crate::error::Result;
use crate::linalg::Matrix;
use crate::tree::Segment;

/// A subrepresentation of `M(s)` and its quotient, both decomposed.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Subquotient {
    pub sub: ModuleSum,
    pub quotient: ModuleSum,
}

/// Every subrepresentation of the thin module `M(s)`.
///
/// A subspace of a one-dimensional space is `0` or everything, so the
/// subrepresentations are exactly the arrow-stable coordinate subsets.
pub fn subquotients(cat: &ModuleCategory<'_>, s: &Segment) -> Result<Vec<Subquotient>> {
    let tree = cat.tree();
    let quiver = &cat.algebra().quiver;
    let m = cat.sum_rep(&ModuleSum::single(s.clone()));
    let edges = tree.segment_edges(s);
    let mut out = BTreeSet::new();
    for mask in 0u64..(1u64 << edges.len()) {
        let spaces: Vec<Matrix> = (0..quiver.vertex_count)
            .map(|v| match edges.iter().position(|&e| e == v) {
                Some(k) if mask >> k & 1 == 1 => Matrix::identity(1),
                Some(_) => Matrix::zeros(1, 0),
                None => Matrix::zeros(0, 0),
            })
            .collect();
        let Some(sub) = rep::subrep(quiver, &m, &spaces) else {
            continue;
        };
        let (quot, _) = rep::quotient(quiver, &m, &spaces).expect("stable subspaces have a quotient");
        out.insert(Subquotient { sub: cat.decompose(&sub)?, quotient: cat.decompose(&quot)? });
    }
    Ok(out.into_iter().collect())
}

/// Indecomposable submodules of `M(s)` found by enumeration.
pub fn indecomposable_subs(all: &[Subquotient]) -> BTreeSet<Segment> {
    all.iter().filter(|p| p.sub.len() == 1).map(|p| p.sub.summands()[0].clone()).collect()
}

/// Indecomposable quotients of `M(s)` found by enumeration.
pub fn indecomposable_quotients(all: &[Subquotient]) -> BTreeSet<Segment> {
    all.iter().filter(|p| p.quotient.len() == 1).map(|p| p.quotient.summands()[0].clone()).collect()
}

/// All submodules of `M(s)` up to isomorphism, found by enumeration.
pub fn submodule_classes(all: &[Subquotient]) -> BTreeSet<ModuleSum> {
    all.iter().map(|p| p.sub.clone()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::string_modules::{quot_indecs, quotient_by, sub_indecs};

    #[test]
    fn combinatorics_matches_enumeration_on_small_trees() {
        for (_, t) in fixtures::all().into_iter().take(4) {
            let cat = ModuleCategory::new(&t).unwrap();
            for (i, s) in cat.segments().iter().enumerate() {
                let all = subquotients(&cat, s).unwrap();
                assert_eq!(indecomposable_subs(&all), sub_indecs(&t, s));
                assert_eq!(indecomposable_quotients(&all), quot_indecs(&t, s));
                let listed: BTreeSet<ModuleSum> = cat.submodules(i).iter().cloned().collect();
                assert_eq!(submodule_classes(&all), listed);
                for p in &all {
                    assert_eq!(quotient_by(&t, s, &p.sub).unwrap(), p.quotient);
                }
            }
        }
    }
}
