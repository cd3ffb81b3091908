//! Parse a tree, then list its faces and segments.

use tiling_semistable::tree::parse_tree;

const TREE: &str = "
vertex v1: l1 v2 l2
vertex v2: v1 l3 v3
vertex v3: v2 l4 l5
";

fn main() {
    let tree = parse_tree(TREE).expect("valid tree");
    println!(
        "{} interior vertices, {} interior edges, {} leaves",
        tree.interior_vertices().len(),
        tree.dim(),
        tree.leaves().len()
    );
    for face in tree.faces() {
        let corners: Vec<String> = face.corners.iter().map(|c| tree.name(c.vertex).to_string()).collect();
        println!(
            "F{} between {} and {}: corners at {}",
            face.id,
            tree.name(face.gap.0),
            tree.name(face.gap.1),
            corners.join(",")
        );
    }
    for s in tree.segments() {
        let v = s.vertices();
        let turns: Vec<String> =
            (1..v.len().saturating_sub(1)).map(|i| format!("{:?}", tree.turn(v, i).unwrap())).collect();
        println!("segment {} turns [{}]", tree.display_segment(&s), turns.join(" "));
    }
}
