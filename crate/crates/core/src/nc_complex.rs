//! Arcs, the noncrossing complex and the structure of its facets.
//!
//! An arc is a leaf-to-leaf path taking an extreme turn at every interior
//! vertex. Each arc cuts the disk in two; since faces biject with boundary
//! gaps, each side is a cyclic interval of gaps, and two arcs cross exactly
//! when their leaf pairs interleave around the boundary.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::tree::{Corner, EmbeddedTree, FaceId, FlagColor, Segment, VertexId};

/// A cyclic interval of boundary gaps (equivalently, of faces).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Region {
    pub start: usize,
    pub len: usize,
    pub modulus: usize,
}

impl Region {
    pub fn contains(&self, face: FaceId) -> bool {
        (face + self.modulus - self.start) % self.modulus < self.len
    }

    pub fn is_subset_of(&self, other: &Region) -> bool {
        debug_assert_eq!(self.modulus, other.modulus);
        if self.len > other.len {
            return false;
        }
        let offset = (self.start + self.modulus - other.start) % self.modulus;
        offset + self.len <= other.len
    }

    pub fn faces(&self) -> BTreeSet<FaceId> {
        (0..self.len).map(|i| (self.start + i) % self.modulus).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Arc {
    /// Boundary positions of the two leaves, `ends.0 < ends.1`.
    ends: (usize, usize),
    /// Vertex path from the leaf at `ends.0` to the leaf at `ends.1`.
    path: Vec<VertexId>,
    modulus: usize,
}

impl Arc {
    pub fn path(&self) -> &[VertexId] {
        &self.path
    }

    pub fn leaves(&self) -> (VertexId, VertexId) {
        (self.path[0], *self.path.last().unwrap())
    }

    pub fn boundary_positions(&self) -> (usize, usize) {
        self.ends
    }

    /// The two regions; the first holds the gaps between the two leaves
    /// going forward from `ends.0`.
    pub fn regions(&self) -> [Region; 2] {
        let (p, q) = self.ends;
        [
            Region { start: p, len: q - p, modulus: self.modulus },
            Region { start: q, len: self.modulus - (q - p), modulus: self.modulus },
        ]
    }

    /// `Reg(self, face)`.
    pub fn region_of(&self, face: FaceId) -> Region {
        let [a, b] = self.regions();
        if a.contains(face) {
            a
        } else {
            b
        }
    }

    /// Corners contained in the arc, in path order.
    pub fn corners(&self, tree: &EmbeddedTree) -> Vec<Corner> {
        self.path
            .windows(3)
            .map(|w| tree.corner_between(w[1], w[0], w[2]).expect("arc satisfies the corner condition"))
            .collect()
    }

    pub fn contains_corner(&self, tree: &EmbeddedTree, corner: Corner) -> bool {
        self.corners(tree).contains(&corner)
    }

    pub fn display(&self, tree: &EmbeddedTree) -> String {
        tree.display_path(&self.path)
    }
}

/// All arcs of the tree, ordered by boundary positions of their leaves.
pub fn arcs(tree: &EmbeddedTree) -> Vec<Arc> {
    let boundary = tree.boundary();
    let l = boundary.len();
    let mut out = Vec::new();
    for p in 0..l {
        for q in p + 1..l {
            let path = tree.path(boundary[p], boundary[q]);
            if tree.satisfies_corner_condition(&path) {
                out.push(Arc { ends: (p, q), path, modulus: l });
            }
        }
    }
    out
}

/// Crossing test by strict interleaving of leaf positions.
pub fn crossing(d1: &Arc, d2: &Arc) -> bool {
    let (a, b) = d1.ends;
    let (c, d) = d2.ends;
    if a == c || a == d || b == c || b == d {
        return false;
    }
    let inside = |x: usize| a < x && x < b;
    inside(c) != inside(d)
}

/// The two regions of an arc computed from face adjacency: faces on either
/// side of a tree edge not on the arc are glued together.
pub fn regions_by_adjacency(tree: &EmbeddedTree, arc: &Arc) -> Vec<BTreeSet<FaceId>> {
    let nf = tree.faces().len();
    let mut parent: Vec<usize> = (0..nf).collect();
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
    let on_arc: BTreeSet<(VertexId, VertexId)> =
        arc.path.windows(2).flat_map(|w| [(w[0], w[1]), (w[1], w[0])]).collect();
    for u in 0..tree.vertex_count() {
        for &w in tree.rotation(u) {
            if u < w && !on_arc.contains(&(u, w)) {
                let f = tree.dart_face(u, w).expect("every dart lies on a face");
                let g = tree.dart_face(w, u).expect("every dart lies on a face");
                let (rf, rg) = (find(&mut parent, f), find(&mut parent, g));
                parent[rf] = rg;
            }
        }
    }
    let mut groups: BTreeMap<usize, BTreeSet<FaceId>> = BTreeMap::new();
    for f in 0..nf {
        let r = find(&mut parent, f);
        groups.entry(r).or_default().insert(f);
    }
    groups.into_values().collect()
}

/// Crossing test straight from the region definition: two arcs are
/// noncrossing when some region of one contains some region of the other.
pub fn crossing_by_regions(tree: &EmbeddedTree, d1: &Arc, d2: &Arc) -> bool {
    let r1 = regions_by_adjacency(tree, d1);
    let r2 = regions_by_adjacency(tree, d2);
    let nested = r1.iter().any(|a| r2.iter().any(|b| a.is_subset(b) || b.is_subset(a)));
    !nested
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ArcKind {
    Boundary,
    Green,
    Red,
}

impl ArcKind {
    pub fn is_colored(self) -> bool {
        self != ArcKind::Boundary
    }

    pub fn as_str(self) -> &'static str {
        match self {
            ArcKind::Boundary => "boundary",
            ArcKind::Green => "green",
            ArcKind::Red => "red",
        }
    }
}

impl fmt::Display for ArcKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FacetArc {
    pub arc: Arc,
    /// Marked corners in the order they occur along the arc path.
    pub marks: Vec<Corner>,
    pub kind: ArcKind,
}

/// A maximal set of pairwise noncrossing arcs with its marking data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Facet {
    arcs: Vec<FacetArc>,
}

impl Facet {
    /// Computes marked corners and colors for a maximal noncrossing set.
    pub fn new(tree: &EmbeddedTree, mut arcs: Vec<Arc>) -> Result<Facet> {
        arcs.sort();
        arcs.dedup();
        let mut by_corner: BTreeMap<Corner, Vec<usize>> = BTreeMap::new();
        for (i, arc) in arcs.iter().enumerate() {
            for c in arc.corners(tree) {
                by_corner.entry(c).or_default().push(i);
            }
        }
        let mut marks: Vec<Vec<Corner>> = vec![Vec::new(); arcs.len()];
        for (&corner, members) in &by_corner {
            let top = *members
                .iter()
                .max_by(|&&a, &&b| {
                    let ra = arcs[a].region_of(corner.face);
                    let rb = arcs[b].region_of(corner.face);
                    match (ra.is_subset_of(&rb), rb.is_subset_of(&ra)) {
                        (true, true) => std::cmp::Ordering::Equal,
                        (true, false) => std::cmp::Ordering::Less,
                        (false, true) => std::cmp::Ordering::Greater,
                        (false, false) => std::cmp::Ordering::Equal,
                    }
                })
                .unwrap();
            let rtop = arcs[top].region_of(corner.face);
            for &m in members {
                if !arcs[m].region_of(corner.face).is_subset_of(&rtop) {
                    return Err(Error::FacetInvariant(format!(
                        "arcs through corner ({}, F{}) are not linearly ordered",
                        tree.name(corner.vertex),
                        corner.face
                    )));
                }
            }
            marks[top].push(corner);
        }
        let mut out = Vec::with_capacity(arcs.len());
        for (arc, mut m) in arcs.into_iter().zip(marks) {
            let order: Vec<Corner> = arc.corners(tree);
            m.sort_by_key(|c| order.iter().position(|x| x == c));
            let kind = match m.len() {
                1 => ArcKind::Boundary,
                2 => colour_of(tree, &arc, m[0], m[1])?,
                k => {
                    return Err(Error::FacetInvariant(format!("arc {} is marked at {} corners", arc.display(tree), k)))
                }
            };
            out.push(FacetArc { arc, marks: m, kind });
        }
        Ok(Facet { arcs: out })
    }

    pub fn arcs(&self) -> &[FacetArc] {
        &self.arcs
    }

    pub fn len(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }

    fn entry(&self, arc: &Arc) -> Option<&FacetArc> {
        self.arcs.iter().find(|fa| &fa.arc == arc)
    }

    pub fn contains(&self, arc: &Arc) -> bool {
        self.entry(arc).is_some()
    }

    pub fn colored(&self) -> impl Iterator<Item = &FacetArc> {
        self.arcs.iter().filter(|fa| fa.kind.is_colored())
    }

    pub fn green(&self) -> impl Iterator<Item = &FacetArc> {
        self.arcs.iter().filter(|fa| fa.kind == ArcKind::Green)
    }

    pub fn red(&self) -> impl Iterator<Item = &FacetArc> {
        self.arcs.iter().filter(|fa| fa.kind == ArcKind::Red)
    }

    pub fn plain_arcs(&self) -> Vec<Arc> {
        self.arcs.iter().map(|fa| fa.arc.clone()).collect()
    }
}

fn colour_of(tree: &EmbeddedTree, arc: &Arc, first: Corner, second: Corner) -> Result<ArcKind> {
    let path = arc.path();
    let i = path.iter().position(|&x| x == first.vertex).unwrap();
    let j = path.iter().position(|&x| x == second.vertex).unwrap();
    debug_assert!(i < j);
    let at_first = tree.flag(first.vertex, path[i + 1], first.face);
    let at_second = tree.flag(second.vertex, path[j - 1], second.face);
    let (Some(a), Some(b)) = (at_first, at_second) else {
        return Err(Error::FacetInvariant(format!(
            "marked corner of {} is not incident to the segment edge",
            arc.display(tree)
        )));
    };
    if arc.region_of(first.face) == arc.region_of(second.face) {
        return Err(Error::FacetInvariant(format!("marked corners of {} lie in the same region", arc.display(tree))));
    }
    if a.color != b.color {
        return Err(Error::ColorMismatch { arc: arc.display(tree) });
    }
    Ok(match a.color {
        FlagColor::Green => ArcKind::Green,
        FlagColor::Red => ArcKind::Red,
    })
}

/// Fixed-size bitset used by the clique search.
#[derive(Clone, PartialEq, Eq)]
struct Bits(Vec<u64>);

impl Bits {
    fn empty(n: usize) -> Bits {
        Bits(vec![0; n.div_ceil(64)])
    }
    fn full(n: usize) -> Bits {
        let mut b = Bits::empty(n);
        for i in 0..n {
            b.insert(i);
        }
        b
    }
    fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    fn remove(&mut self, i: usize) {
        self.0[i / 64] &= !(1 << (i % 64));
    }
    fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }
    fn and(&self, o: &Bits) -> Bits {
        Bits(self.0.iter().zip(&o.0).map(|(a, b)| a & b).collect())
    }
    fn and_not(&self, o: &Bits) -> Bits {
        Bits(self.0.iter().zip(&o.0).map(|(a, b)| a & !b).collect())
    }
    fn or(&self, o: &Bits) -> Bits {
        Bits(self.0.iter().zip(&o.0).map(|(a, b)| a | b).collect())
    }
    fn count(&self) -> u32 {
        self.0.iter().map(|w| w.count_ones()).sum()
    }
    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(wi, &w)| (0..64).filter(move |b| w >> b & 1 == 1).map(move |b| wi * 64 + b))
    }
}

/// Maximal cliques of the compatibility graph (Bron-Kerbosch with pivoting).
fn maximal_cliques(adj: &[Bits]) -> Vec<Vec<usize>> {
    fn expand(adj: &[Bits], r: &mut Vec<usize>, p: Bits, mut x: Bits, out: &mut Vec<Vec<usize>>) {
        if p.is_empty() {
            if x.is_empty() {
                out.push(r.clone());
            }
            return;
        }
        let pivot = p.or(&x).iter().max_by_key(|&u| p.and(&adj[u]).count()).expect("P or X is nonempty");
        let mut p = p;
        for v in p.and_not(&adj[pivot]).iter().collect::<Vec<_>>() {
            r.push(v);
            expand(adj, r, p.and(&adj[v]), x.and(&adj[v]), out);
            r.pop();
            p.remove(v);
            x.insert(v);
        }
    }
    let n = adj.len();
    let mut out = Vec::new();
    expand(adj, &mut Vec::new(), Bits::full(n), Bits::empty(n), &mut out);
    out
}

/// All facets of the noncrossing complex, in a deterministic order.
pub fn facets(tree: &EmbeddedTree) -> Result<Vec<Facet>> {
    let all = arcs(tree);
    facets_from_arcs(tree, &all)
}

pub fn facets_from_arcs(tree: &EmbeddedTree, all: &[Arc]) -> Result<Vec<Facet>> {
    let n = all.len();
    let adj: Vec<Bits> = (0..n)
        .map(|i| {
            let mut b = Bits::empty(n);
            for j in 0..n {
                if i != j && !crossing(&all[i], &all[j]) {
                    b.insert(j);
                }
            }
            b
        })
        .collect();
    let mut cliques = maximal_cliques(&adj);
    for c in &mut cliques {
        c.sort_unstable();
    }
    cliques.sort();
    cliques.into_iter().map(|c| Facet::new(tree, c.into_iter().map(|i| all[i].clone()).collect())).collect()
}

/// The corners at which `d` is marked in `f` (one or two).
pub fn marked_corners(f: &Facet, d: &Arc) -> Result<Vec<Corner>> {
    f.entry(d).map(|fa| fa.marks.clone()).ok_or_else(|| Error::NotInFacet { arc: format!("{:?}", d.leaves()) })
}

pub fn classify(f: &Facet, d: &Arc) -> Result<ArcKind> {
    f.entry(d).map(|fa| fa.kind).ok_or_else(|| Error::NotInFacet { arc: format!("{:?}", d.leaves()) })
}

/// The arc of `f` immediately below `d` at `corner` in the region order.
fn predecessor_at(tree: &EmbeddedTree, f: &Facet, d: &Arc, corner: Corner) -> Option<Arc> {
    let rd = d.region_of(corner.face);
    f.arcs
        .iter()
        .filter(|fa| &fa.arc != d && fa.arc.contains_corner(tree, corner))
        .filter(|fa| fa.arc.region_of(corner.face).is_subset_of(&rd))
        .max_by(|a, b| {
            let ra = a.arc.region_of(corner.face);
            let rb = b.arc.region_of(corner.face);
            ra.len.cmp(&rb.len)
        })
        .map(|fa| fa.arc.clone())
}

/// Supporting arcs `(mu, nu)` of a colored arc: `mu` is covered by `d` at the
/// first marked corner along the path and `nu` at the second.
pub fn supporting_arcs(tree: &EmbeddedTree, f: &Facet, d: &Arc) -> Result<(Arc, Arc)> {
    let marks = marked_corners(f, d)?;
    if marks.len() != 2 {
        return Err(Error::BoundaryArc { arc: d.display(tree) });
    }
    let mu = predecessor_at(tree, f, d, marks[0]);
    let nu = predecessor_at(tree, f, d, marks[1]);
    match (mu, nu) {
        (Some(mu), Some(nu)) => Ok((mu, nu)),
        _ => Err(Error::FacetInvariant(format!("colored arc {} has no supporting arc", d.display(tree)))),
    }
}

/// Facets obtained by exchanging one colored arc for an arc of the other color.
pub fn flip_neighbors(tree: &EmbeddedTree, all: &[Arc], f: &Facet) -> Result<Vec<Facet>> {
    let mut out = Vec::new();
    for fa in f.colored() {
        let rest: Vec<Arc> = f.arcs.iter().filter(|x| x.arc != fa.arc).map(|x| x.arc.clone()).collect();
        let candidates: Vec<&Arc> = all
            .iter()
            .filter(|a| **a != fa.arc && !rest.contains(a))
            .filter(|a| rest.iter().all(|r| !crossing(a, r)))
            .collect();
        for c in candidates {
            let mut arcs = rest.clone();
            arcs.push(c.clone());
            let g = Facet::new(tree, arcs)?;
            let new_kind = classify(&g, c)?;
            if new_kind.is_colored() && new_kind != fa.kind {
                out.push(g);
            }
        }
    }
    Ok(out)
}

/// The segment between the two marked corners of a colored arc.
pub fn marked_segment(tree: &EmbeddedTree, f: &Facet, d: &Arc) -> Result<Segment> {
    let marks = marked_corners(f, d)?;
    if marks.len() != 2 {
        return Err(Error::BoundaryArc { arc: d.display(tree) });
    }
    let p = d.path();
    let i = p.iter().position(|&x| x == marks[0].vertex).unwrap();
    let j = p.iter().position(|&x| x == marks[1].vertex).unwrap();
    Ok(Segment::from_path(p[i..=j].to_vec()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn star_has_three_arcs_and_one_facet() {
        let t = fixtures::star(3);
        assert_eq!(arcs(&t).len(), 3);
        let fs = facets(&t).unwrap();
        assert_eq!(fs.len(), 1);
        assert!(fs[0].arcs().iter().all(|a| a.kind == ArcKind::Boundary));
    }

    #[test]
    fn degree_four_star_excludes_opposite_leaves() {
        let t = fixtures::star(4);
        // only rotation-adjacent leaf pairs pass the corner condition
        assert_eq!(arcs(&t).len(), 4);
    }

    #[test]
    fn crossing_basics() {
        let t = fixtures::a2();
        let all = arcs(&t);
        for a in &all {
            assert!(!crossing(a, a));
            for b in &all {
                assert_eq!(crossing(a, b), crossing(b, a));
                let (x, y) = a.leaves();
                let (u, v) = b.leaves();
                if x == u || x == v || y == u || y == v {
                    assert!(!crossing(a, b));
                }
            }
        }
    }

    #[test]
    fn a2_facets() {
        let t = fixtures::a2();
        let fs = facets(&t).unwrap();
        assert_eq!(fs.len(), 5);
        let size = fs[0].len();
        for f in &fs {
            assert_eq!(f.len(), size);
            assert_eq!(f.colored().count(), 2);
            let total: usize = f.arcs().iter().map(|a| a.marks.len()).sum();
            let distinct: BTreeSet<Corner> = f.arcs().iter().flat_map(|a| a.marks.clone()).collect();
            assert_eq!(total, distinct.len());
        }
    }

    #[test]
    fn boundary_arc_has_no_supporting_arcs() {
        let t = fixtures::a2();
        let f = &facets(&t).unwrap()[0];
        let b = f.arcs().iter().find(|a| a.kind == ArcKind::Boundary).unwrap();
        assert!(matches!(supporting_arcs(&t, f, &b.arc), Err(Error::BoundaryArc { .. })));
    }
}
