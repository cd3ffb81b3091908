//! The tiling algebra of an embedded tree and its string modules.
//!
//! Quiver vertices are the interior edges of the tree. Every corner at which
//! two interior edges meet carries one arrow `e -> e'`, where `e'` is
//! immediately counterclockwise from `e` about the common vertex, and any two
//! arrows at consecutive corners of the same vertex compose to zero. The
//! indecomposable modules are the thin string modules `M(s)`, one per
//! segment `s`.

use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::tree::{Corner, EdgeId, EmbeddedTree, Segment};
use crate::vectors::{c_set, k_set, IntVector};

mod category;
pub mod oracle;
pub mod rep;

pub use category::ModuleCategory;
use rep::{Morphism, Rep};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Arrow {
    pub source: EdgeId,
    pub target: EdgeId,
    /// The corner between the two edges.
    pub corner: Corner,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Quiver {
    pub vertex_count: usize,
    pub arrows: Vec<Arrow>,
}

/// The length-two path `first` then `second`, which is zero in the algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Relation {
    pub first: usize,
    pub second: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelationIdeal {
    pub forbidden: Vec<Relation>,
}

impl RelationIdeal {
    pub fn forbids(&self, first: usize, second: usize) -> bool {
        self.forbidden.iter().any(|r| r.first == first && r.second == second)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Algebra {
    pub quiver: Quiver,
    pub relations: RelationIdeal,
}

pub fn build_algebra(tree: &EmbeddedTree) -> Algebra {
    let mut arrows = Vec::new();
    // (vertex, sector) -> arrow index
    let mut at_sector: HashMap<(usize, usize), usize> = HashMap::new();
    for &v in tree.interior_vertices() {
        let rot = tree.rotation(v);
        let d = rot.len();
        for k in 0..d {
            let (a, b) = (rot[k], rot[(k + 1) % d]);
            if let (Some(ea), Some(eb)) = (tree.edge_id(v, a), tree.edge_id(v, b)) {
                at_sector.insert((v, k), arrows.len());
                arrows.push(Arrow {
                    source: ea,
                    target: eb,
                    corner: Corner { vertex: v, face: tree.sector_face(v, a) },
                });
            }
        }
    }
    let mut forbidden = Vec::new();
    for &v in tree.interior_vertices() {
        let d = tree.degree(v);
        for k in 0..d {
            if let (Some(&first), Some(&second)) = (at_sector.get(&(v, k)), at_sector.get(&(v, (k + 1) % d))) {
                forbidden.push(Relation { first, second });
            }
        }
    }
    Algebra { quiver: Quiver { vertex_count: tree.dim(), arrows }, relations: RelationIdeal { forbidden } }
}

/// Number of paths of the bound quiver (trivial paths included) avoiding
/// every forbidden composition: a basis of the algebra.
pub fn algebra_dimension(tree: &EmbeddedTree) -> Result<usize> {
    let alg = build_algebra(tree);
    let arrows = &alg.quiver.arrows;
    // memo[a]: number of allowed paths whose first arrow is `a`.
    let mut memo: Vec<Option<usize>> = vec![None; arrows.len()];
    let mut on_stack = vec![false; arrows.len()];
    fn count(a: usize, alg: &Algebra, memo: &mut Vec<Option<usize>>, on_stack: &mut Vec<bool>) -> Result<usize> {
        if let Some(c) = memo[a] {
            return Ok(c);
        }
        if on_stack[a] {
            return Err(Error::Internal("bound quiver has an infinite path".into()));
        }
        on_stack[a] = true;
        let mut total = 1;
        for (b, next) in alg.quiver.arrows.iter().enumerate() {
            if next.source == alg.quiver.arrows[a].target && !alg.relations.forbids(a, b) {
                total += count(b, alg, memo, on_stack)?;
            }
        }
        on_stack[a] = false;
        memo[a] = Some(total);
        Ok(total)
    }
    let mut total = alg.quiver.vertex_count;
    for a in 0..arrows.len() {
        total += count(a, &alg, &mut memo, &mut on_stack)?;
    }
    Ok(total)
}

/// One letter of a string: an arrow read forwards or backwards.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Letter {
    pub arrow: usize,
    pub inverse: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StringModule {
    pub segment: Segment,
    pub dim_vector: IntVector,
    /// Letters between consecutive edges of the segment, in path order.
    pub word: Vec<Letter>,
}

impl StringModule {
    pub fn new(tree: &EmbeddedTree, algebra: &Algebra, segment: Segment) -> StringModule {
        let edges = tree.segment_edges(&segment);
        let dim_vector = IntVector::indicator(tree.dim(), edges.iter().copied());
        let word = edges
            .windows(2)
            .map(|w| {
                let found = algebra.quiver.arrows.iter().enumerate().find_map(|(a, arrow)| {
                    if (arrow.source, arrow.target) == (w[0], w[1]) {
                        Some(Letter { arrow: a, inverse: false })
                    } else if (arrow.source, arrow.target) == (w[1], w[0]) {
                        Some(Letter { arrow: a, inverse: true })
                    } else {
                        None
                    }
                });
                found.expect("consecutive segment edges share a corner")
            })
            .collect();
        StringModule { segment, dim_vector, word }
    }

    pub fn is_simple(&self) -> bool {
        self.segment.len() == 1
    }
}

/// One string module per segment, in canonical segment order.
pub fn indecomposables(tree: &EmbeddedTree) -> Vec<StringModule> {
    let alg = build_algebra(tree);
    tree.segments().into_iter().map(|s| StringModule::new(tree, &alg, s)).collect()
}

/// The representation `M(s)`.
pub fn string_rep(tree: &EmbeddedTree, algebra: &Algebra, s: &Segment) -> Rep {
    let mut support = vec![false; tree.dim()];
    for e in tree.segment_edges(s) {
        support[e] = true;
    }
    let active: Vec<usize> = algebra
        .quiver
        .arrows
        .iter()
        .enumerate()
        .filter(|(_, a)| support[a.source] && support[a.target])
        .map(|(i, _)| i)
        .collect();
    Rep::thin(&algebra.quiver, &support, &active)
}

/// A direct sum of string modules, kept as a sorted multiset of segments.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ModuleSum {
    summands: Vec<Segment>,
}

impl ModuleSum {
    pub fn new(mut summands: Vec<Segment>) -> ModuleSum {
        summands.sort();
        ModuleSum { summands }
    }

    pub fn zero() -> ModuleSum {
        ModuleSum::default()
    }

    pub fn single(s: Segment) -> ModuleSum {
        ModuleSum { summands: vec![s] }
    }

    pub fn summands(&self) -> &[Segment] {
        &self.summands
    }

    pub fn is_zero(&self) -> bool {
        self.summands.is_empty()
    }

    pub fn len(&self) -> usize {
        self.summands.len()
    }

    pub fn is_empty(&self) -> bool {
        self.summands.is_empty()
    }

    pub fn dim_vector(&self, tree: &EmbeddedTree) -> IntVector {
        let mut d = IntVector::zeros(tree.dim());
        for s in &self.summands {
            for e in tree.segment_edges(s) {
                d.0[e] += 1;
            }
        }
        d
    }

    pub fn rep(&self, tree: &EmbeddedTree, algebra: &Algebra) -> Rep {
        self.summands
            .iter()
            .fold(Rep::zero(&algebra.quiver), |acc, s| acc.direct_sum(&algebra.quiver, &string_rep(tree, algebra, s)))
    }

    pub fn display(&self, tree: &EmbeddedTree) -> String {
        if self.summands.is_empty() {
            return "0".to_string();
        }
        let parts: Vec<String> = self.summands.iter().map(|s| format!("M{}", tree.display_segment(s))).collect();
        parts.join(" + ")
    }
}

/// Indecomposable submodules of `M(s)`, one per element of `C_s`.
pub fn sub_indecs(tree: &EmbeddedTree, s: &Segment) -> BTreeSet<Segment> {
    c_set(tree, s)
}

/// Indecomposable quotients of `M(s)`, one per element of `K_s`.
pub fn quot_indecs(tree: &EmbeddedTree, s: &Segment) -> BTreeSet<Segment> {
    k_set(tree, s)
}

/// The map `⊕ M(t_i) -> M(s)` assembled from the nonzero morphisms of the
/// summands, or `None` if some summand admits no such morphism.
pub(crate) fn assembled_map(
    tree: &EmbeddedTree,
    algebra: &Algebra,
    parts: &[Segment],
    s: &Segment,
) -> Option<Morphism> {
    let q = &algebra.quiver;
    let target = string_rep(tree, algebra, s);
    let mut comps: Vec<Matrix> = target.dims.iter().map(|&d| Matrix::zeros(d, 0)).collect();
    for t in parts {
        let basis = rep::hom_basis(q, &string_rep(tree, algebra, t), &target);
        let f = basis.into_iter().next()?;
        comps = comps.iter().zip(&f.comps).map(|(a, b)| a.hstack(b)).collect();
    }
    Some(Morphism { comps })
}

/// Whether `⊕ parts` embeds in `M(s)` by an explicit linear-algebra check.
pub fn embeds(tree: &EmbeddedTree, algebra: &Algebra, parts: &[Segment], s: &Segment) -> bool {
    let sum = ModuleSum::new(parts.to_vec());
    let Some(f) = assembled_map(tree, algebra, sum.summands(), s) else {
        return false;
    };
    let source = sum.rep(tree, algebra);
    rep::is_morphism(&algebra.quiver, &source, &string_rep(tree, algebra, s), &f) && f.is_injective()
}

/// Every submodule of `M(s)` up to isomorphism: `0`, `M(s)`, and the sums
/// over pairwise edge-disjoint subsets of `C_s ∖ {s}` that embed jointly.
pub fn all_submodules(tree: &EmbeddedTree, s: &Segment) -> Vec<ModuleSum> {
    let algebra = build_algebra(tree);
    all_submodules_with(tree, &algebra, s)
}

pub fn all_submodules_with(tree: &EmbeddedTree, algebra: &Algebra, s: &Segment) -> Vec<ModuleSum> {
    let proper: Vec<Segment> = c_set(tree, s).into_iter().filter(|t| t != s).collect();
    let edge_sets: Vec<BTreeSet<EdgeId>> = proper.iter().map(|t| tree.segment_edges(t).into_iter().collect()).collect();
    let mut out = vec![ModuleSum::zero()];
    let mut chosen: Vec<usize> = Vec::new();
    fn extend(
        start: usize,
        chosen: &mut Vec<usize>,
        edge_sets: &[BTreeSet<EdgeId>],
        proper: &[Segment],
        emit: &mut dyn FnMut(&[usize]),
    ) {
        for i in start..proper.len() {
            if chosen.iter().all(|&j| edge_sets[j].is_disjoint(&edge_sets[i])) {
                chosen.push(i);
                emit(chosen);
                extend(i + 1, chosen, edge_sets, proper, emit);
                chosen.pop();
            }
        }
    }
    let mut candidates: Vec<Vec<Segment>> = Vec::new();
    extend(0, &mut chosen, &edge_sets, &proper, &mut |c| {
        candidates.push(c.iter().map(|&i| proper[i].clone()).collect());
    });
    for parts in candidates {
        if embeds(tree, algebra, &parts, s) {
            out.push(ModuleSum::new(parts));
        }
    }
    out.push(ModuleSum::single(s.clone()));
    out.sort();
    out.dedup();
    out
}

/// `M(s) / sub`, decomposed into string modules: the maximal runs of edges
/// of `s` not covered by `sub`.
pub fn quotient_by(tree: &EmbeddedTree, s: &Segment, sub: &ModuleSum) -> Result<ModuleSum> {
    let algebra = build_algebra(tree);
    if !all_submodules_with(tree, &algebra, s).contains(sub) {
        return Err(Error::NotASubmodule);
    }
    let quot = quotient_runs(tree, s, sub);
    let f = assembled_map(tree, &algebra, sub.summands(), s).ok_or(Error::NotASubmodule)?;
    let coker = rep::cokernel(&algebra.quiver, &string_rep(tree, &algebra, s), &f);
    let expected = quot.dim_vector(tree);
    let found: Vec<i64> = coker.dims.iter().map(|&d| d as i64).collect();
    if found != expected.0 {
        return Err(Error::Internal(format!(
            "cokernel has dimension vector {:?}, combinatorial quotient {}",
            found, expected
        )));
    }
    Ok(quot)
}

pub fn quotient_runs(tree: &EmbeddedTree, s: &Segment, sub: &ModuleSum) -> ModuleSum {
    let covered: BTreeSet<EdgeId> = sub.summands().iter().flat_map(|t| tree.segment_edges(t)).collect();
    let path = s.vertices();
    let mut runs = Vec::new();
    let mut run: Vec<usize> = Vec::new();
    for i in 0..path.len() - 1 {
        let e = tree.edge_id(path[i], path[i + 1]).expect("segment edges are interior");
        if covered.contains(&e) {
            if run.len() > 1 {
                runs.push(Segment::from_path(std::mem::take(&mut run)));
            }
            run.clear();
        } else {
            if run.is_empty() {
                run.push(path[i]);
            }
            run.push(path[i + 1]);
        }
    }
    if run.len() > 1 {
        runs.push(Segment::from_path(run));
    }
    ModuleSum::new(runs)
}

/// `dim Hom(m, n)` for direct sums of string modules.
pub fn hom_dim(tree: &EmbeddedTree, m: &ModuleSum, n: &ModuleSum) -> usize {
    let algebra = build_algebra(tree);
    rep::hom_dim(&algebra.quiver, &m.rep(tree, &algebra), &n.rep(tree, &algebra))
}

/// Whether the additive closure of `set` is a wide subcategory.
///
/// Builds a [`ModuleCategory`] for the call; reuse one when checking many sets.
pub fn is_wide(tree: &EmbeddedTree, set: &BTreeSet<Segment>) -> Result<bool> {
    ModuleCategory::new(tree)?.is_wide(set)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn seg(t: &EmbeddedTree, names: &[&str]) -> Segment {
        Segment::from_path(names.iter().map(|n| t.vertex_by_name(n).unwrap()).collect())
    }

    #[test]
    fn a2_algebra() {
        let t = fixtures::a2();
        let alg = build_algebra(&t);
        assert_eq!(alg.quiver.vertex_count, 2);
        assert_eq!(alg.quiver.arrows.len(), 1);
        assert!(alg.relations.forbidden.is_empty());
        assert_eq!(algebra_dimension(&t).unwrap(), 3);
    }

    #[test]
    fn star_has_zero_algebra() {
        let t = fixtures::star(4);
        assert!(build_algebra(&t).quiver.arrows.is_empty());
        assert_eq!(algebra_dimension(&t).unwrap(), 0);
        assert!(indecomposables(&t).is_empty());
    }

    #[test]
    fn claw_center_gives_a_three_cycle() {
        let t = fixtures::claw();
        let alg = build_algebra(&t);
        let c = t.vertex_by_name("c").unwrap();
        let at_c: Vec<usize> =
            (0..alg.quiver.arrows.len()).filter(|&a| alg.quiver.arrows[a].corner.vertex == c).collect();
        assert_eq!(at_c.len(), 3);
        for &a in &at_c {
            for &b in &at_c {
                if alg.quiver.arrows[a].target == alg.quiver.arrows[b].source {
                    assert!(alg.relations.forbids(a, b));
                }
            }
        }
        assert_eq!(alg.relations.forbidden.len(), 3);
        assert_eq!(algebra_dimension(&t).unwrap(), 6);
    }

    #[test]
    fn a2_indecomposables() {
        let t = fixtures::a2();
        let dims: BTreeSet<Vec<i64>> = indecomposables(&t).into_iter().map(|m| m.dim_vector.0).collect();
        assert_eq!(dims, BTreeSet::from([vec![1, 0], vec![0, 1], vec![1, 1]]));
    }

    #[test]
    fn a2_submodules_and_quotients() {
        let t = fixtures::a2();
        let long = seg(&t, &["v1", "v2", "v3"]);
        let subs = sub_indecs(&t, &long);
        let quots = quot_indecs(&t, &long);
        assert_eq!(subs.len(), 2);
        assert_eq!(quots.len(), 2);
        let sub_simple: Vec<&Segment> = subs.iter().filter(|s| **s != long).collect();
        let quot_simple: Vec<&Segment> = quots.iter().filter(|s| **s != long).collect();
        assert_ne!(sub_simple, quot_simple);
        let all = all_submodules(&t, &long);
        assert_eq!(all.len(), 3);
        let simple_sub = ModuleSum::single(sub_simple[0].clone());
        assert_eq!(quotient_by(&t, &long, &simple_sub).unwrap(), ModuleSum::single(quot_simple[0].clone()));
        assert_eq!(hom_dim(&t, &simple_sub, &ModuleSum::single(quot_simple[0].clone())), 0);
    }

    #[test]
    fn quotient_by_extremes() {
        let t = fixtures::subseg();
        for s in t.segments() {
            assert_eq!(quotient_by(&t, &s, &ModuleSum::zero()).unwrap(), ModuleSum::single(s.clone()));
            assert_eq!(quotient_by(&t, &s, &ModuleSum::single(s.clone())).unwrap(), ModuleSum::zero());
        }
    }

    #[test]
    fn quotient_by_rejects_non_submodules() {
        let t = fixtures::a2();
        let long = seg(&t, &["v1", "v2", "v3"]);
        let not_sub: Segment = quot_indecs(&t, &long).into_iter().find(|s| *s != long).unwrap();
        assert!(matches!(quotient_by(&t, &long, &ModuleSum::single(not_sub)), Err(Error::NotASubmodule)));
    }

    #[test]
    fn string_words_avoid_relations() {
        for (_, t) in fixtures::all() {
            let alg = build_algebra(&t);
            for m in indecomposables(&t) {
                for w in m.word.windows(2) {
                    if w[0].inverse == w[1].inverse {
                        let (x, y) = if w[0].inverse { (w[1].arrow, w[0].arrow) } else { (w[0].arrow, w[1].arrow) };
                        assert!(!alg.relations.forbids(x, y));
                    }
                }
                assert!(string_rep(&t, &alg, &m.segment).satisfies_relations(&alg));
            }
        }
    }

    #[test]
    fn hom_dim_basics() {
        let t = fixtures::claw();
        for s in t.segments() {
            let m = ModuleSum::single(s.clone());
            assert!(hom_dim(&t, &m, &m) >= 1);
            assert_eq!(hom_dim(&t, &m, &ModuleSum::zero()), 0);
        }
    }
}
