//! Finite posets with Hasse diagrams and DOT/JSON export.

use std::fmt::Write;

use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poset {
    labels: Vec<String>,
    leq: Vec<Vec<bool>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct PosetJson<'a> {
    pub elements: &'a [String],
    /// Covering relations `[lower, upper]`.
    pub hasse: Vec<[usize; 2]>,
}

impl Poset {
    pub fn new(labels: Vec<String>, leq: impl Fn(usize, usize) -> bool) -> Poset {
        let n = labels.len();
        let leq = (0..n).map(|i| (0..n).map(|j| leq(i, j)).collect()).collect();
        Poset { labels, leq }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i][j]
    }

    pub fn is_partial_order(&self) -> bool {
        let n = self.len();
        (0..n).all(|i| self.leq[i][i])
            && (0..n).all(|i| (0..n).all(|j| i == j || !(self.leq[i][j] && self.leq[j][i])))
            && (0..n).all(|i| (0..n).all(|j| (0..n).all(|k| !(self.leq[i][j] && self.leq[j][k]) || self.leq[i][k])))
    }

    /// Pairs `(i, j)` with `i < j` and nothing strictly between.
    pub fn hasse_edges(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let lt = |i: usize, j: usize| i != j && self.leq[i][j];
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if lt(i, j) && !(0..n).any(|k| lt(i, k) && lt(k, j)) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Number of edges in a longest chain.
    pub fn height(&self) -> usize {
        let n = self.len();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&i| (0..n).filter(|&j| self.leq[j][i]).count());
        let mut longest = vec![0usize; n];
        for &j in &order {
            for &i in &order {
                if i != j && self.leq[i][j] {
                    longest[j] = longest[j].max(longest[i] + 1);
                }
            }
        }
        longest.into_iter().max().unwrap_or(0)
    }

    pub fn bottom(&self) -> Option<usize> {
        (0..self.len()).find(|&i| (0..self.len()).all(|j| self.leq[i][j]))
    }

    pub fn top(&self) -> Option<usize> {
        (0..self.len()).find(|&i| (0..self.len()).all(|j| self.leq[j][i]))
    }

    /// Whether `map` is a bijection onto `other` that preserves and reflects
    /// the order.
    pub fn isomorphic_via(&self, other: &Poset, map: &[usize]) -> bool {
        let n = self.len();
        if other.len() != n || map.len() != n {
            return false;
        }
        let mut hit = vec![false; n];
        for &m in map {
            if m >= n || hit[m] {
                return false;
            }
            hit[m] = true;
        }
        (0..n).all(|i| (0..n).all(|j| self.leq[i][j] == other.leq[map[i]][map[j]]))
    }

    pub fn to_dot(&self, name: &str) -> String {
        let mut out = String::new();
        writeln!(out, "digraph {} {{", name).unwrap();
        writeln!(out, "  rankdir=BT;").unwrap();
        for (i, l) in self.labels.iter().enumerate() {
            writeln!(out, "  n{} [label=\"{}\"];", i, l.replace('"', "\\\"")).unwrap();
        }
        for (i, j) in self.hasse_edges() {
            writeln!(out, "  n{} -> n{};", i, j).unwrap();
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> PosetJson<'_> {
        PosetJson { elements: &self.labels, hasse: self.hasse_edges().into_iter().map(|(i, j)| [i, j]).collect() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn divisors(n: usize) -> Poset {
        let ds: Vec<usize> = (1..=n).filter(|d| n.is_multiple_of(*d)).collect();
        Poset::new(ds.iter().map(|d| d.to_string()).collect(), |i, j| ds[j].is_multiple_of(ds[i]))
    }

    #[test]
    fn divisor_lattice() {
        let p = divisors(12);
        assert!(p.is_partial_order());
        assert_eq!(p.len(), 6);
        assert_eq!(p.height(), 3);
        assert_eq!(p.hasse_edges().len(), 7);
        assert_eq!(p.labels()[p.bottom().unwrap()], "1");
        assert_eq!(p.labels()[p.top().unwrap()], "12");
    }

    #[test]
    fn dot_lists_every_cover() {
        let dot = divisors(6).to_dot("d6");
        assert!(dot.starts_with("digraph d6 {"));
        assert_eq!(dot.matches("->").count(), 4);
    }

    #[test]
    fn isomorphism_check() {
        let p = divisors(6);
        let q = divisors(10);
        assert!(p.isomorphic_via(&q, &[0, 1, 2, 3]));
        assert!(p.isomorphic_via(&q, &[0, 2, 1, 3]));
        assert!(!p.isomorphic_via(&q, &[3, 1, 2, 0]));
        assert!(!p.isomorphic_via(&q, &[0, 0, 2, 3]));
    }
}
