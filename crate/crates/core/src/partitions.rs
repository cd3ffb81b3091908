//! Noncrossing tree partitions, the Kreweras complement, biclosed sets of
//! segments and the torsion pairs they define.

use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::nc_complex::{ArcKind, Facet};
use crate::poset::Poset;
use crate::string_modules::{quotient_runs, ModuleCategory, ModuleSum};
use crate::tree::{EmbeddedTree, Segment, VertexId};
use crate::vectors::{c_set, k_set, segment_of};

/// A set partition of the interior vertices together with the red segments
/// joining its blocks and the green segments of its Kreweras complement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreePartition {
    blocks: Vec<Vec<VertexId>>,
    red_segments: Vec<Segment>,
    green_segments: Vec<Segment>,
}

impl TreePartition {
    fn from_segments(tree: &EmbeddedTree, red: Vec<Segment>, green: Vec<Segment>) -> TreePartition {
        TreePartition { blocks: components(tree, &red), red_segments: red, green_segments: green }
    }

    /// Blocks, each sorted, in lexicographic order.
    pub fn blocks(&self) -> &[Vec<VertexId>] {
        &self.blocks
    }

    pub fn red_segments(&self) -> &[Segment] {
        &self.red_segments
    }

    pub fn green_segments(&self) -> &[Segment] {
        &self.green_segments
    }

    pub fn block_of(&self, v: VertexId) -> Option<usize> {
        self.blocks.iter().position(|b| b.contains(&v))
    }

    pub fn display(&self, tree: &EmbeddedTree) -> String {
        let blocks: Vec<String> = self
            .blocks
            .iter()
            .map(|b| {
                let names: Vec<&str> = b.iter().map(|&v| tree.name(v)).collect();
                format!("{{{}}}", names.join(","))
            })
            .collect();
        format!("{{{}}}", blocks.join(","))
    }
}

/// Connected components of the interior vertices under the given segments.
fn components(tree: &EmbeddedTree, segments: &[Segment]) -> Vec<Vec<VertexId>> {
    let verts = tree.interior_vertices();
    let mut parent: Vec<usize> = (0..tree.vertex_count()).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let next = p[y];
            p[y] = r;
            y = next;
        }
        r
    }
    for s in segments {
        let (a, b) = s.endpoints();
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        parent[ra] = rb;
    }
    let mut blocks: Vec<Vec<VertexId>> = Vec::new();
    let mut roots: Vec<usize> = Vec::new();
    for &v in verts {
        let r = find(&mut parent, v);
        match roots.iter().position(|&x| x == r) {
            Some(i) => blocks[i].push(v),
            None => {
                roots.push(r);
                blocks.push(vec![v]);
            }
        }
    }
    for b in &mut blocks {
        b.sort();
    }
    blocks.sort();
    blocks
}

fn colored_segments(tree: &EmbeddedTree, f: &Facet, kind: ArcKind) -> Result<Vec<Segment>> {
    let mut out: Vec<Segment> =
        f.arcs().iter().filter(|fa| fa.kind == kind).map(|fa| segment_of(tree, f, &fa.arc)).collect::<Result<_>>()?;
    out.sort();
    Ok(out)
}

/// The partition whose blocks are joined by the red segments of `f`.
pub fn psi_r(tree: &EmbeddedTree, f: &Facet) -> Result<TreePartition> {
    let red = colored_segments(tree, f, ArcKind::Red)?;
    let green = colored_segments(tree, f, ArcKind::Green)?;
    Ok(TreePartition::from_segments(tree, red, green))
}

/// The partition whose blocks are joined by the green segments of `f`. The
/// two colors trade roles: the green segments are recorded as the joining
/// segments of the result.
pub fn psi_g(tree: &EmbeddedTree, f: &Facet) -> Result<TreePartition> {
    let red = colored_segments(tree, f, ArcKind::Red)?;
    let green = colored_segments(tree, f, ArcKind::Green)?;
    Ok(TreePartition::from_segments(tree, green, red))
}

/// `psi_r` of every facet, in facet order; fails if two facets give the
/// same partition.
pub fn ncp_all(tree: &EmbeddedTree, facets: &[Facet]) -> Result<Vec<TreePartition>> {
    let parts: Vec<TreePartition> = facets.iter().map(|f| psi_r(tree, f)).collect::<Result<_>>()?;
    let distinct: BTreeSet<&Vec<Vec<VertexId>>> = parts.iter().map(|p| &p.blocks).collect();
    if distinct.len() != parts.len() {
        return Err(Error::FacetInvariant("two facets define the same tree partition".into()));
    }
    Ok(parts)
}

fn position_of(all: &[TreePartition], blocks: &[Vec<VertexId>]) -> Option<usize> {
    all.iter().position(|p| p.blocks == blocks)
}

/// Index in `all` of the Kreweras complement of `all[b]`.
pub fn kreweras_index(tree: &EmbeddedTree, all: &[TreePartition], b: &TreePartition) -> Result<usize> {
    position_of(all, &b.blocks).ok_or(Error::UnknownPartition)?;
    position_of(all, &components(tree, &b.green_segments)).ok_or(Error::UnknownPartition)
}

pub fn kreweras(tree: &EmbeddedTree, all: &[TreePartition], b: &TreePartition) -> Result<TreePartition> {
    Ok(all[kreweras_index(tree, all, b)?].clone())
}

/// Sizes of the orbits of the Kreweras map, sorted.
pub fn kreweras_orbits(tree: &EmbeddedTree, all: &[TreePartition]) -> Result<Vec<usize>> {
    let next: Vec<usize> = all.iter().map(|b| kreweras_index(tree, all, b)).collect::<Result<_>>()?;
    let mut seen = vec![false; all.len()];
    let mut sizes = Vec::new();
    for start in 0..all.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = next[x];
            len += 1;
        }
        if x != start {
            return Err(Error::Internal("Kreweras map is not a permutation".into()));
        }
        sizes.push(len);
    }
    sizes.sort();
    Ok(sizes)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RedGreenTree {
    vertices: Vec<VertexId>,
    edges: Vec<(Segment, ArcKind)>,
}

impl RedGreenTree {
    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(Segment, ArcKind)] {
        &self.edges
    }
}

/// The graph on interior vertices whose edges are the colored segments of
/// `f`; fails unless it is a tree.
pub fn redgreen_tree(tree: &EmbeddedTree, f: &Facet) -> Result<RedGreenTree> {
    let mut edges = Vec::new();
    for fa in f.colored() {
        edges.push((segment_of(tree, f, &fa.arc)?, fa.kind));
    }
    edges.sort();
    let vertices = tree.interior_vertices().to_vec();
    let segs: Vec<Segment> = edges.iter().map(|(s, _)| s.clone()).collect();
    if edges.len() + 1 != vertices.len() || components(tree, &segs).len() != 1 {
        return Err(Error::FacetInvariant(format!(
            "colored segments do not form a tree on the {} interior vertices ({} edges)",
            vertices.len(),
            edges.len()
        )));
    }
    Ok(RedGreenTree { vertices, edges })
}

/// The unique path of colored segments from `v` to `u`.
pub fn tree_path(rg: &RedGreenTree, v: VertexId, u: VertexId) -> Vec<(Segment, ArcKind)> {
    let mut prev: std::collections::HashMap<VertexId, usize> = std::collections::HashMap::new();
    let mut queue = VecDeque::from([v]);
    let mut seen = BTreeSet::from([v]);
    while let Some(x) = queue.pop_front() {
        if x == u {
            break;
        }
        for (i, (s, _)) in rg.edges.iter().enumerate() {
            let (a, b) = s.endpoints();
            let y = if a == x {
                b
            } else if b == x {
                a
            } else {
                continue;
            };
            if seen.insert(y) {
                prev.insert(y, i);
                queue.push_back(y);
            }
        }
    }
    let mut path = Vec::new();
    let mut x = u;
    while x != v {
        let Some(&i) = prev.get(&x) else {
            return Vec::new();
        };
        let (a, b) = rg.edges[i].0.endpoints();
        path.push(rg.edges[i].clone());
        x = if a == x { b } else { a };
    }
    path.reverse();
    path
}

/// Smallest set containing `set` and closed under composition.
pub fn closure(tree: &EmbeddedTree, set: &BTreeSet<Segment>) -> BTreeSet<Segment> {
    let mut out = set.clone();
    let mut work: Vec<Segment> = set.iter().cloned().collect();
    while let Some(s) = work.pop() {
        let found: Vec<Segment> = out.iter().filter_map(|t| tree.compose(&s, t)).collect();
        for c in found {
            if out.insert(c.clone()) {
                work.push(c);
            }
        }
    }
    out
}

pub fn is_closed(tree: &EmbeddedTree, set: &BTreeSet<Segment>) -> bool {
    set.iter().all(|s| set.iter().all(|t| tree.compose(s, t).is_none_or(|c| set.contains(&c))))
}

/// Whether both `set` and its complement in the set of all segments are closed.
pub fn is_biclosed(tree: &EmbeddedTree, set: &BTreeSet<Segment>) -> bool {
    let complement: BTreeSet<Segment> = tree.segments().into_iter().filter(|s| !set.contains(s)).collect();
    is_closed(tree, set) && is_closed(tree, &complement)
}

pub fn join_biclosed(tree: &EmbeddedTree, a: &BTreeSet<Segment>, b: &BTreeSet<Segment>) -> BTreeSet<Segment> {
    closure(tree, &a.union(b).cloned().collect())
}

/// Writes `s` as a composition of consecutive pieces taken from `pieces`.
pub fn factor_through(s: &Segment, pieces: &BTreeSet<Segment>) -> Option<Vec<Segment>> {
    let path = s.vertices();
    let t = path.len() - 1;
    let mut from: Vec<Option<usize>> = vec![None; t + 1];
    let mut reach = vec![false; t + 1];
    reach[0] = true;
    for j in 1..=t {
        for i in 0..j {
            if reach[i] && pieces.contains(&Segment::from_path(path[i..=j].to_vec())) {
                reach[j] = true;
                from[j] = Some(i);
                break;
            }
        }
    }
    if !reach[t] {
        return None;
    }
    let mut out = Vec::new();
    let mut j = t;
    while j > 0 {
        let i = from[j].expect("reachable position has a predecessor");
        out.push(Segment::from_path(path[i..=j].to_vec()));
        j = i;
    }
    out.reverse();
    Some(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorsionPair {
    pub torsion: BTreeSet<Segment>,
    pub torsion_free: BTreeSet<Segment>,
}

pub fn torsion_pair(tree: &EmbeddedTree, b: &TreePartition) -> TorsionPair {
    let torsion: BTreeSet<Segment> = b.green_segments.iter().flat_map(|s| k_set(tree, s)).collect();
    let torsion_free: BTreeSet<Segment> = b.red_segments.iter().flat_map(|s| c_set(tree, s)).collect();
    TorsionPair { torsion: closure(tree, &torsion), torsion_free: closure(tree, &torsion_free) }
}

/// Submodules `S` of `M(x)` with all summands torsion and all summands of
/// `M(x)/S` torsion-free.
pub fn qualifying_submodules(cat: &ModuleCategory<'_>, pair: &TorsionPair, x: &Segment) -> Vec<(ModuleSum, ModuleSum)> {
    let Some(i) = cat.index_of(x) else {
        return Vec::new();
    };
    cat.submodules(i)
        .iter()
        .filter(|sub| sub.summands().iter().all(|t| pair.torsion.contains(t)))
        .map(|sub| (sub.clone(), quotient_runs(cat.tree(), x, sub)))
        .filter(|(_, quot)| quot.summands().iter().all(|t| pair.torsion_free.contains(t)))
        .collect()
}

/// The sequence `0 -> T -> M(x) -> F -> 0` with `T` torsion and `F`
/// torsion-free, taking the largest qualifying submodule.
pub fn torsion_decompose(cat: &ModuleCategory<'_>, pair: &TorsionPair, x: &Segment) -> Result<(ModuleSum, ModuleSum)> {
    let tree = cat.tree();
    qualifying_submodules(cat, pair, x)
        .into_iter()
        .max_by_key(|(sub, _)| sub.dim_vector(tree).0.iter().sum::<i64>())
        .ok_or_else(|| Error::NoTorsionDecomposition { module: format!("M{}", tree.display_segment(x)) })
}

/// `rho(B)`: the string modules of the closure of the red segments.
pub fn rho(tree: &EmbeddedTree, b: &TreePartition) -> BTreeSet<Segment> {
    closure(tree, &b.red_segments.iter().cloned().collect())
}

pub fn refinement_leq(a: &TreePartition, b: &TreePartition) -> bool {
    a.blocks.iter().all(|blk| b.blocks.iter().any(|big| blk.iter().all(|v| big.contains(v))))
}

pub fn ncp_poset(tree: &EmbeddedTree, all: &[TreePartition]) -> Poset {
    let labels = all.iter().map(|p| p.display(tree)).collect();
    Poset::new(labels, |i, j| refinement_leq(&all[i], &all[j]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::nc_complex::facets;

    fn seg(t: &EmbeddedTree, names: &[&str]) -> Segment {
        Segment::from_path(names.iter().map(|n| t.vertex_by_name(n).unwrap()).collect())
    }

    #[test]
    fn a2_partitions() {
        let t = fixtures::a2();
        let fs = facets(&t).unwrap();
        let all = ncp_all(&t, &fs).unwrap();
        assert_eq!(all.len(), 5);
        let p = ncp_poset(&t, &all);
        assert_eq!(p.height(), 2);
        assert!(p.is_partial_order());
        let n = t.interior_vertices().len();
        assert!(all.iter().any(|b| b.blocks().len() == n));
        assert!(all.iter().any(|b| b.blocks().len() == 1));
    }

    #[test]
    fn a2_example_partition_and_complement() {
        let t = fixtures::a2();
        let fs = facets(&t).unwrap();
        let all = ncp_all(&t, &fs).unwrap();
        let long = seg(&t, &["v1", "v2", "v3"]);
        let b = all.iter().find(|b| b.red_segments() == [long.clone()]).unwrap();
        assert_eq!(b.display(&t), "{{v1,v3},{v2}}");
        let kr = kreweras(&t, &all, b).unwrap();
        assert_eq!(kr.display(&t), "{{v1},{v2,v3}}");
    }

    #[test]
    fn kreweras_swaps_extremes() {
        for (_, t) in fixtures::all() {
            let fs = facets(&t).unwrap();
            let all = ncp_all(&t, &fs).unwrap();
            let bottom = all.iter().find(|b| b.red_segments().is_empty()).unwrap();
            assert_eq!(kreweras(&t, &all, bottom).unwrap().blocks().len(), 1);
            let total: usize = kreweras_orbits(&t, &all).unwrap().iter().sum();
            assert_eq!(total, all.len());
        }
    }

    #[test]
    fn closure_laws_on_a2() {
        let t = fixtures::a2();
        assert!(closure(&t, &BTreeSet::new()).is_empty());
        let gens = BTreeSet::from([seg(&t, &["v1", "v2"]), seg(&t, &["v2", "v3"])]);
        let c = closure(&t, &gens);
        assert_eq!(c.len(), 3);
        assert_eq!(closure(&t, &c), c);
        assert_eq!(factor_through(&seg(&t, &["v1", "v2", "v3"]), &gens).unwrap().len(), 2);
    }

    #[test]
    fn tree_paths() {
        let t = fixtures::mixed8();
        let f = &facets(&t).unwrap()[7];
        let rg = redgreen_tree(&t, f).unwrap();
        for &v in rg.vertices() {
            assert!(tree_path(&rg, v, v).is_empty());
            for &u in rg.vertices() {
                let p = tree_path(&rg, v, u);
                for w in p.windows(2) {
                    let shared = w[0].0.vertices().iter().filter(|x| {
                        let (a, b) = w[1].0.endpoints();
                        **x == a || **x == b
                    });
                    assert!(shared.count() >= 1);
                }
                let direct = rg.edges().iter().any(|(s, _)| {
                    let (a, b) = s.endpoints();
                    (a, b) == (v, u) || (a, b) == (u, v)
                });
                assert_eq!(p.len() == 1, direct);
            }
        }
    }
}
