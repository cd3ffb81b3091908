//! Trees embedded in the disk.
//!
//! An [`EmbeddedTree`] is a tree together with a rotation system: for every
//! vertex, the counterclockwise cyclic order of its neighbors. Leaves sit on
//! the boundary of the disk. Everything else in the crate (faces, corners,
//! arcs, segments, the quiver) is derived from this data.
//!
//! Faces are traced from darts: after the dart `u -> v` comes `v -> w`, where
//! `w` is the neighbor immediately clockwise from `u` about `v`. Cutting the
//! resulting closed walk at the leaves yields one face per gap between
//! cyclically consecutive leaves.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

pub type VertexId = usize;
/// Index of an interior edge in the canonical order.
pub type EdgeId = usize;
/// Index of a face; face `k` is the gap between boundary leaves `k` and `k + 1`.
pub type FaceId = usize;

/// Global handedness switch.
///
/// With the default (`false`) a path turns *right* at `v` when its exit edge
/// is immediately counterclockwise from its entry edge about `v`, which is
/// the reading under which turn-defined sub-segments match the submodules of
/// string modules for the counterclockwise arrow convention of the quiver.
/// Setting it to `true` flips the turn convention and the flag coloring
/// together.
pub const MIRROR_HANDEDNESS: bool = false;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Turn {
    Left,
    Right,
}

impl Turn {
    pub fn opposite(self) -> Turn {
        match self {
            Turn::Left => Turn::Right,
            Turn::Right => Turn::Left,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FlagColor {
    Green,
    Red,
}

/// A corner `(v, F)`: an interior vertex and an incident face.
///
/// Internally a corner is the angular sector at `v` that starts at the
/// neighbor `rotation(v)[sector]` and ends at the next neighbor
/// counterclockwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Corner {
    pub vertex: VertexId,
    pub face: FaceId,
}

/// A flag `(v, e, F)`; the edge is given by its far endpoint `toward`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Flag {
    pub vertex: VertexId,
    pub toward: VertexId,
    pub face: FaceId,
    pub color: FlagColor,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Face {
    pub id: FaceId,
    /// Corners met along the face boundary, from the first gap leaf to the second.
    pub corners: Vec<Corner>,
    /// The two cyclically consecutive leaves bounding the gap of this face.
    pub gap: (VertexId, VertexId),
}

/// A path between two interior vertices making an extreme turn at every
/// internal vertex. Stored with the smaller endpoint id first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Segment {
    vertices: Vec<VertexId>,
}

impl Segment {
    /// Builds a segment from an oriented vertex path, normalizing orientation.
    /// Does not check the corner condition; see [`EmbeddedTree::segment`].
    pub fn from_path(mut vertices: Vec<VertexId>) -> Segment {
        if vertices.first() > vertices.last() {
            vertices.reverse();
        }
        Segment { vertices }
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn endpoints(&self) -> (VertexId, VertexId) {
        (self.vertices[0], *self.vertices.last().unwrap())
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.len() < 2
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.vertices.contains(&v)
    }
}

#[derive(Debug, Clone)]
pub struct EmbeddedTree {
    names: Vec<String>,
    rotation: Vec<Vec<VertexId>>,
    leaves: Vec<VertexId>,
    interior: Vec<VertexId>,
    interior_edges: Vec<(VertexId, VertexId)>,
    edge_index: HashMap<(VertexId, VertexId), EdgeId>,
    boundary: Vec<VertexId>,
    leaf_position: Vec<Option<usize>>,
    faces: Vec<Face>,
    /// `sector_face[v][k]` is the face of the sector starting at `rotation[v][k]`.
    sector_face: Vec<Vec<FaceId>>,
    dart_face: HashMap<(VertexId, VertexId), FaceId>,
    /// `parent[root][x]` is the neighbor of `x` on the way to `root`.
    parent: Vec<Vec<VertexId>>,
}

impl EmbeddedTree {
    /// Builds and validates a tree from names and counterclockwise rotations.
    pub fn new(names: Vec<String>, rotation: Vec<Vec<VertexId>>) -> Result<EmbeddedTree> {
        let n = names.len();
        if rotation.len() != n {
            return Err(Error::InvalidTree("rotation table does not cover every vertex".into()));
        }
        if n == 0 {
            return Err(Error::InvalidTree("empty tree".into()));
        }
        for (v, rot) in rotation.iter().enumerate() {
            let distinct: BTreeSet<_> = rot.iter().collect();
            if distinct.len() != rot.len() {
                return Err(Error::InvalidTree(format!("rotation of {} repeats a neighbor", names[v])));
            }
            for &w in rot {
                if w >= n {
                    return Err(Error::InvalidTree(format!("{} has an unknown neighbor", names[v])));
                }
                if w == v {
                    return Err(Error::InvalidTree(format!("{} is adjacent to itself", names[v])));
                }
                if !rotation[w].contains(&v) {
                    return Err(Error::InvalidTree(format!(
                        "{} lists {} as a neighbor but not conversely",
                        names[v], names[w]
                    )));
                }
            }
            match rot.len() {
                0 => {
                    return Err(Error::InvalidTree(format!("{} is isolated", names[v])));
                }
                2 => {
                    return Err(Error::InvalidTree(format!("interior vertex {} has degree 2", names[v])));
                }
                _ => {}
            }
        }
        let edge_count: usize = rotation.iter().map(Vec::len).sum::<usize>() / 2;
        if edge_count + 1 != n {
            return Err(Error::InvalidTree(format!(
                "{} vertices but {} edges; a tree needs exactly one fewer edge than vertices (cycle or disconnected input)",
                n, edge_count
            )));
        }
        // connectivity
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &w in &rotation[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::InvalidTree("graph is not connected (contains a cycle)".into()));
        }
        let leaves: Vec<VertexId> = (0..n).filter(|&v| rotation[v].len() == 1).collect();
        let interior: Vec<VertexId> = (0..n).filter(|&v| rotation[v].len() >= 3).collect();
        if interior.is_empty() {
            return Err(Error::InvalidTree("no interior vertex".into()));
        }
        let mut interior_edges = Vec::new();
        for &v in &interior {
            for &w in &rotation[v] {
                if v < w && rotation[w].len() >= 3 {
                    interior_edges.push((v, w));
                }
            }
        }
        interior_edges.sort_unstable();
        let edge_index =
            interior_edges.iter().enumerate().flat_map(|(i, &(a, b))| [((a, b), i), ((b, a), i)]).collect();

        let parent = (0..n)
            .map(|root| {
                let mut parent = vec![usize::MAX; n];
                parent[root] = root;
                let mut stack = vec![root];
                while let Some(v) = stack.pop() {
                    for &w in &rotation[v] {
                        if parent[w] == usize::MAX {
                            parent[w] = v;
                            stack.push(w);
                        }
                    }
                }
                parent
            })
            .collect();

        let mut tree = EmbeddedTree {
            names,
            rotation,
            leaves,
            interior,
            interior_edges,
            edge_index,
            boundary: Vec::new(),
            leaf_position: vec![None; n],
            faces: Vec::new(),
            sector_face: Vec::new(),
            dart_face: HashMap::new(),
            parent,
        };
        tree.trace_faces();
        Ok(tree)
    }

    fn trace_faces(&mut self) {
        let n = self.names.len();
        let start_leaf = self.leaves[0];
        let start = (start_leaf, self.rotation[start_leaf][0]);
        let mut boundary = vec![start_leaf];
        let mut faces: Vec<Face> = Vec::new();
        let mut sector_face: Vec<Vec<FaceId>> = (0..n).map(|v| vec![usize::MAX; self.rotation[v].len()]).collect();
        let mut dart_face = HashMap::new();
        let mut corners = Vec::new();
        let mut dart = start;
        loop {
            let face = boundary.len() - 1;
            dart_face.insert(dart, face);
            let (x, y) = dart;
            if self.rotation[y].len() == 1 {
                faces.push(Face {
                    id: face,
                    corners: std::mem::take(&mut corners),
                    gap: (*boundary.last().unwrap(), y),
                });
                if y == start_leaf {
                    break;
                }
                boundary.push(y);
                dart = (y, x);
                continue;
            }
            let w = self.rotate(y, x, -1);
            let sector = self.position(y, w);
            sector_face[y][sector] = face;
            corners.push(Corner { vertex: y, face });
            dart = (y, w);
        }
        for (i, &l) in boundary.iter().enumerate() {
            self.leaf_position[l] = Some(i);
        }
        self.boundary = boundary;
        self.faces = faces;
        self.sector_face = sector_face;
        self.dart_face = dart_face;
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn name(&self, v: VertexId) -> &str {
        &self.names[v]
    }

    pub fn vertex_by_name(&self, name: &str) -> Option<VertexId> {
        self.names.iter().position(|n| n == name)
    }

    /// Counterclockwise neighbor list of `v`.
    pub fn rotation(&self, v: VertexId) -> &[VertexId] {
        &self.rotation[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.rotation[v].len()
    }

    pub fn is_leaf(&self, v: VertexId) -> bool {
        self.rotation[v].len() == 1
    }

    pub fn leaves(&self) -> &[VertexId] {
        &self.leaves
    }

    pub fn interior_vertices(&self) -> &[VertexId] {
        &self.interior
    }

    /// Edges joining two interior vertices, in canonical (lexicographic) order.
    pub fn interior_edges(&self) -> &[(VertexId, VertexId)] {
        &self.interior_edges
    }

    /// Ambient dimension `n = |Int(E_T)|`.
    pub fn dim(&self) -> usize {
        self.interior_edges.len()
    }

    pub fn edge_id(&self, a: VertexId, b: VertexId) -> Option<EdgeId> {
        self.edge_index.get(&(a, b)).copied()
    }

    /// Human-readable edge label, e.g. `v1-v2`.
    pub fn edge_label(&self, e: EdgeId) -> String {
        let (a, b) = self.interior_edges[e];
        format!("{}-{}", self.names[a], self.names[b])
    }

    /// Leaves in cyclic boundary order.
    pub fn boundary(&self) -> &[VertexId] {
        &self.boundary
    }

    pub fn leaf_position(&self, leaf: VertexId) -> Option<usize> {
        self.leaf_position[leaf]
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    /// Face containing the dart `a -> b` on its boundary.
    pub fn dart_face(&self, a: VertexId, b: VertexId) -> Option<FaceId> {
        self.dart_face.get(&(a, b)).copied()
    }

    pub fn position(&self, v: VertexId, w: VertexId) -> usize {
        self.rotation[v].iter().position(|&x| x == w).expect("neighbor is in the rotation")
    }

    /// Neighbor of `v` reached from `w` by `steps` counterclockwise steps.
    pub fn rotate(&self, v: VertexId, w: VertexId, steps: isize) -> VertexId {
        let rot = &self.rotation[v];
        let d = rot.len() as isize;
        let p = self.position(v, w) as isize;
        rot[((p + steps).rem_euclid(d)) as usize]
    }

    /// Face of the sector at `v` starting at neighbor `from` and ending at the
    /// next neighbor counterclockwise.
    pub fn sector_face(&self, v: VertexId, from: VertexId) -> FaceId {
        self.sector_face[v][self.position(v, from)]
    }

    /// Corner shared by the edges `v-a` and `v-b`, if they are rotation neighbors.
    pub fn corner_between(&self, v: VertexId, a: VertexId, b: VertexId) -> Option<Corner> {
        if self.degree(v) < 3 {
            return None;
        }
        let from = if self.rotate(v, a, 1) == b {
            a
        } else if self.rotate(v, b, 1) == a {
            b
        } else {
            return None;
        };
        Some(Corner { vertex: v, face: self.sector_face(v, from) })
    }

    /// Color of the flag `(v, v-toward, face)`; `None` if the face is not on
    /// either side of the edge at `v`.
    pub fn flag(&self, v: VertexId, toward: VertexId, face: FaceId) -> Option<Flag> {
        let ccw_side = self.sector_face(v, toward);
        let cw_side = self.sector_face(v, self.rotate(v, toward, -1));
        let ccw_color = if MIRROR_HANDEDNESS { FlagColor::Red } else { FlagColor::Green };
        let color = if face == ccw_side {
            ccw_color
        } else if face == cw_side {
            match ccw_color {
                FlagColor::Green => FlagColor::Red,
                FlagColor::Red => FlagColor::Green,
            }
        } else {
            return None;
        };
        Some(Flag { vertex: v, toward, face, color })
    }

    /// The unique acyclic path from `a` to `b`.
    pub fn path(&self, a: VertexId, b: VertexId) -> Vec<VertexId> {
        let parent = &self.parent[b];
        let mut path = vec![a];
        let mut x = a;
        while x != b {
            x = parent[x];
            path.push(x);
        }
        path
    }

    /// Whether every internal vertex of the path is an extreme turn.
    pub fn satisfies_corner_condition(&self, path: &[VertexId]) -> bool {
        path.windows(3).all(|w| self.corner_between(w[1], w[0], w[2]).is_some())
    }

    /// Turn direction of `path` at index `i`.
    pub fn turn(&self, path: &[VertexId], i: usize) -> Result<Turn> {
        if i == 0 || i + 1 >= path.len() {
            return Err(Error::Precondition(format!(
                "turn index {} is not internal to a path of {} vertices",
                i,
                path.len()
            )));
        }
        let (prev, v, next) = (path[i - 1], path[i], path[i + 1]);
        if !self.rotation[v].contains(&prev) || !self.rotation[v].contains(&next) {
            return Err(Error::Precondition("path steps are not tree edges".into()));
        }
        let exit_ccw = if self.degree(v) >= 3 && self.rotate(v, prev, 1) == next {
            true
        } else if self.degree(v) >= 3 && self.rotate(v, prev, -1) == next {
            false
        } else {
            return Err(Error::NotATurn { vertex: self.names[v].clone() });
        };
        let turn = if exit_ccw { Turn::Right } else { Turn::Left };
        Ok(if MIRROR_HANDEDNESS { turn.opposite() } else { turn })
    }

    /// The segment with the given endpoints, if the path between them is one.
    pub fn segment(&self, a: VertexId, b: VertexId) -> Option<Segment> {
        if a == b || self.is_leaf(a) || self.is_leaf(b) {
            return None;
        }
        let path = self.path(a, b);
        self.satisfies_corner_condition(&path).then(|| Segment::from_path(path))
    }

    /// All segments, in canonical order.
    pub fn segments(&self) -> Vec<Segment> {
        let mut out = Vec::new();
        for (i, &a) in self.interior.iter().enumerate() {
            for &b in &self.interior[i + 1..] {
                if let Some(s) = self.segment(a, b) {
                    out.push(s);
                }
            }
        }
        out.sort();
        out
    }

    /// Interior edges of a path, in path order.
    pub fn path_edges(&self, path: &[VertexId]) -> Vec<EdgeId> {
        path.windows(2).filter_map(|w| self.edge_id(w[0], w[1])).collect()
    }

    pub fn segment_edges(&self, s: &Segment) -> Vec<EdgeId> {
        self.path_edges(s.vertices())
    }

    /// Composition `[a, b] o [b, c] = [a, c]` when the two segments meet only
    /// at a common endpoint and the result is again a segment.
    pub fn compose(&self, s: &Segment, t: &Segment) -> Option<Segment> {
        let (s0, s1) = s.endpoints();
        let (t0, t1) = t.endpoints();
        let shared = s.vertices().iter().filter(|v| t.contains_vertex(**v)).count();
        if shared != 1 {
            return None;
        }
        let (a, b, c) = if s0 == t0 {
            (s1, s0, t1)
        } else if s0 == t1 {
            (s1, s0, t0)
        } else if s1 == t0 {
            (s0, s1, t1)
        } else if s1 == t1 {
            (s0, s1, t0)
        } else {
            return None;
        };
        let before = self.path(a, b);
        let after = self.path(b, c);
        let p = before[before.len() - 2];
        let q = after[1];
        self.corner_between(b, p, q)?;
        Some(Segment::from_path(self.path(a, c)))
    }

    pub fn display_path(&self, path: &[VertexId]) -> String {
        let names: Vec<&str> = path.iter().map(|&v| self.name(v)).collect();
        format!("[{}]", names.join(","))
    }

    pub fn display_segment(&self, s: &Segment) -> String {
        self.display_path(s.vertices())
    }

    pub fn display_vector(&self, v: &[i64]) -> String {
        let parts: Vec<String> = v.iter().map(i64::to_string).collect();
        format!("({})", parts.join(","))
    }
}

impl fmt::Display for EmbeddedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in 0..self.vertex_count() {
            let nbrs: Vec<&str> = self.rotation[v].iter().map(|&w| self.name(w)).collect();
            writeln!(f, "vertex {}: {}", self.name(v), nbrs.join(" "))?;
        }
        Ok(())
    }
}

/// Parses the text tree format.
///
/// One line per vertex: `vertex NAME: N1 N2 ... Nk`, neighbors listed
/// counterclockwise; `#` starts a comment. A name that is referenced but
/// never declared is taken to be a leaf attached to the single vertex that
/// mentions it.
pub fn parse_tree(text: &str) -> Result<EmbeddedTree> {
    let mut names: Vec<String> = Vec::new();
    let mut ids: HashMap<String, VertexId> = HashMap::new();
    let mut declared: Vec<Option<Vec<String>>> = Vec::new();
    let mut referenced_by: HashMap<String, Vec<usize>> = HashMap::new();

    let mut intern = |name: &str, names: &mut Vec<String>, declared: &mut Vec<Option<Vec<String>>>| {
        *ids.entry(name.to_string()).or_insert_with(|| {
            names.push(name.to_string());
            declared.push(None);
            names.len() - 1
        })
    };

    for (lineno, raw) in text.lines().enumerate() {
        let line_no = lineno + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let rest = line.strip_prefix("vertex").filter(|r| r.starts_with(char::is_whitespace));
        let Some(rest) = rest else {
            return Err(Error::Parse {
                line: line_no,
                message: format!("expected `vertex NAME: NEIGHBORS`, found `{}`", line),
            });
        };
        let Some((name, nbrs)) = rest.split_once(':') else {
            return Err(Error::Parse { line: line_no, message: "missing `:` after vertex name".into() });
        };
        let name = name.trim();
        if name.is_empty() || name.contains(char::is_whitespace) {
            return Err(Error::Parse { line: line_no, message: format!("bad vertex name `{}`", name) });
        }
        let nbrs: Vec<String> = nbrs.split_whitespace().map(str::to_string).collect();
        if nbrs.is_empty() {
            return Err(Error::Parse { line: line_no, message: format!("vertex {} has no neighbors", name) });
        }
        if let Some(dup) = nbrs.iter().enumerate().find_map(|(i, nb)| nbrs[..i].contains(nb).then_some(nb)) {
            return Err(Error::Parse {
                line: line_no,
                message: format!("neighbor {} repeats in the rotation of {}", dup, name),
            });
        }
        let id = intern(name, &mut names, &mut declared);
        if declared[id].is_some() {
            return Err(Error::Parse { line: line_no, message: format!("vertex {} declared twice", name) });
        }
        for nb in &nbrs {
            intern(nb, &mut names, &mut declared);
            referenced_by.entry(nb.clone()).or_default().push(line_no);
        }
        declared[id] = Some(nbrs);
    }

    let mut rotation = Vec::with_capacity(names.len());
    for (v, decl) in declared.iter().enumerate() {
        match decl {
            Some(nbrs) => rotation.push(nbrs.iter().map(|nb| ids[nb]).collect()),
            None => {
                let refs = &referenced_by[&names[v]];
                if refs.len() > 1 {
                    return Err(Error::Parse {
                        line: refs[1],
                        message: format!(
                            "undeclared vertex {} is referenced more than once; declare its rotation",
                            names[v]
                        ),
                    });
                }
                let owner = (0..declared.len())
                    .find(|&u| declared[u].as_ref().is_some_and(|ns| ns.contains(&names[v])))
                    .expect("referenced vertex has an owner");
                rotation.push(vec![owner]);
            }
        }
    }
    EmbeddedTree::new(names, rotation)
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) const A2: &str = "vertex v1: l1 v2 l2\nvertex v2: v1 l3 v3\nvertex v3: v2 l4 l5\nvertex l1: v1\nvertex l2: v1\nvertex l3: v2\nvertex l4: v3\nvertex l5: v3\n";

    fn a2() -> EmbeddedTree {
        parse_tree(A2).unwrap()
    }

    #[test]
    fn a2_has_two_interior_edges_and_five_faces() {
        let t = a2();
        assert_eq!(t.dim(), 2);
        assert_eq!(t.interior_vertices().len(), 3);
        assert_eq!(t.leaves().len(), 5);
        assert_eq!(t.faces().len(), 5);
    }

    #[test]
    fn corner_multiplicity_matches_degree() {
        let t = a2();
        for &v in t.interior_vertices() {
            let count: usize = t.faces().iter().map(|f| f.corners.iter().filter(|c| c.vertex == v).count()).sum();
            assert_eq!(count, t.degree(v));
        }
        assert!(t.faces().iter().all(|f| !f.corners.is_empty()));
    }

    #[test]
    fn star_has_no_interior_edges() {
        let t = parse_tree("vertex c: a b d\n").unwrap();
        assert_eq!(t.dim(), 0);
        assert_eq!(t.faces().len(), 3);
        assert!(t.segments().is_empty());
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(matches!(
            parse_tree("vertex a: b\nvertex b: a\n"),
            Err(Error::InvalidTree(m)) if m.contains("no interior vertex")
        ));
        assert!(matches!(
            parse_tree("vertex a: x b y\nvertex b: a c\nvertex c: b p q\n"),
            Err(Error::InvalidTree(m)) if m.contains("degree 2")
        ));
        assert!(matches!(parse_tree("vertex a b c\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(
            parse_tree("# header\nvertex a: b c d\nvertex b: a c e\nvertex c: a b f\n"),
            Err(Error::InvalidTree(_))
        ));
        assert!(matches!(
            parse_tree("vertex a: b b c\n"),
            Err(Error::Parse { line: 1, message }) if message.contains("repeats")
        ));
    }

    #[test]
    fn reversed_turn_is_opposite() {
        let t = a2();
        let p: Vec<VertexId> = ["l1", "v1", "v2", "v3", "l5"].iter().map(|n| t.vertex_by_name(n).unwrap()).collect();
        let mut r = p.clone();
        r.reverse();
        for i in 1..p.len() - 1 {
            let a = t.turn(&p, i);
            let b = t.turn(&r, p.len() - 1 - i);
            match (a, b) {
                (Ok(a), Ok(b)) => assert_eq!(a, b.opposite()),
                (Err(_), Err(_)) => {}
                other => panic!("asymmetric turn result {:?}", other),
            }
        }
    }

    #[test]
    fn non_extreme_turn_is_an_error() {
        let t = parse_tree("vertex c: a b d e\n").unwrap();
        let (a, d) = (t.vertex_by_name("a").unwrap(), t.vertex_by_name("d").unwrap());
        let c = t.vertex_by_name("c").unwrap();
        assert!(matches!(t.turn(&[a, c, d], 1), Err(Error::NotATurn { .. })));
        let b = t.vertex_by_name("b").unwrap();
        assert!(t.turn(&[a, c, b], 1).is_ok());
    }

    #[test]
    fn a2_segments_and_composition() {
        let t = a2();
        let segs = t.segments();
        assert_eq!(segs.len(), 3);
        let v = |n: &str| t.vertex_by_name(n).unwrap();
        let s12 = t.segment(v("v1"), v("v2")).unwrap();
        let s23 = t.segment(v("v2"), v("v3")).unwrap();
        let s13 = t.segment(v("v1"), v("v3")).unwrap();
        assert_eq!(t.compose(&s12, &s23), Some(s13.clone()));
        assert_eq!(t.compose(&s12, &s12), None);
        assert_eq!(t.compose(&s13, &s12), None);
        assert_eq!(s13.len(), 2);
    }
}
