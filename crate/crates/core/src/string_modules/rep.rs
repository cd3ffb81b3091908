//! Finite-dimensional representations of a bound quiver over the rationals.
//!
//! These are the general objects behind the string-module combinatorics; the
//! linear algebra here is what the combinatorial answers are checked against.

use num_traits::{One, Zero};

use super::{Algebra, Quiver};
use crate::linalg::{Matrix, Q};

/// A representation: a vector space `Q^dims[v]` at every quiver vertex and a
/// matrix `dims[target] x dims[source]` for every arrow.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rep {
    pub dims: Vec<usize>,
    pub maps: Vec<Matrix>,
}

/// A morphism of representations, one matrix per quiver vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Morphism {
    pub comps: Vec<Matrix>,
}

impl Rep {
    pub fn zero(quiver: &Quiver) -> Rep {
        Rep { dims: vec![0; quiver.vertex_count], maps: quiver.arrows.iter().map(|_| Matrix::zeros(0, 0)).collect() }
    }

    /// The thin representation supported on `support` in which exactly the
    /// arrows listed in `active` act by the identity.
    pub fn thin(quiver: &Quiver, support: &[bool], active: &[usize]) -> Rep {
        let dims: Vec<usize> = support.iter().map(|&b| usize::from(b)).collect();
        let maps = quiver
            .arrows
            .iter()
            .enumerate()
            .map(|(a, arrow)| {
                let mut m = Matrix::zeros(dims[arrow.target], dims[arrow.source]);
                if active.contains(&a) {
                    m.set(0, 0, Q::one());
                }
                m
            })
            .collect();
        Rep { dims, maps }
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn direct_sum(&self, quiver: &Quiver, other: &Rep) -> Rep {
        let dims: Vec<usize> = self.dims.iter().zip(&other.dims).map(|(a, b)| a + b).collect();
        let maps = quiver
            .arrows
            .iter()
            .enumerate()
            .map(|(a, arrow)| {
                let (s1, t1) = (self.dims[arrow.source], self.dims[arrow.target]);
                Matrix::from_fn(dims[arrow.target], dims[arrow.source], |r, c| match (r < t1, c < s1) {
                    (true, true) => self.maps[a].get(r, c).clone(),
                    (false, false) => other.maps[a].get(r - t1, c - s1).clone(),
                    _ => Q::zero(),
                })
            })
            .collect();
        Rep { dims, maps }
    }

    /// Whether every forbidden composition acts by zero.
    pub fn satisfies_relations(&self, algebra: &Algebra) -> bool {
        algebra.relations.forbidden.iter().all(|r| self.maps[r.second].mul(&self.maps[r.first]).is_zero())
    }
}

impl Morphism {
    pub fn is_injective(&self) -> bool {
        self.comps.iter().all(|m| m.rank() == m.cols())
    }

    pub fn is_surjective(&self) -> bool {
        self.comps.iter().all(|m| m.rank() == m.rows())
    }

    pub fn add(&self, other: &Morphism) -> Morphism {
        Morphism { comps: self.comps.iter().zip(&other.comps).map(|(a, b)| a.add(b)).collect() }
    }
}

pub fn is_morphism(quiver: &Quiver, m: &Rep, n: &Rep, f: &Morphism) -> bool {
    quiver
        .arrows
        .iter()
        .enumerate()
        .all(|(a, arrow)| n.maps[a].mul(&f.comps[arrow.source]) == f.comps[arrow.target].mul(&m.maps[a]))
}

/// A basis of `Hom(m, n)`.
pub fn hom_basis(quiver: &Quiver, m: &Rep, n: &Rep) -> Vec<Morphism> {
    let nv = quiver.vertex_count;
    let mut offset = vec![0; nv + 1];
    for v in 0..nv {
        offset[v + 1] = offset[v] + n.dims[v] * m.dims[v];
    }
    let unknowns = offset[nv];
    let var = |v: usize, r: usize, c: usize| offset[v] + r * m.dims[v] + c;
    let mut rows: Vec<Vec<Q>> = Vec::new();
    for (a, arrow) in quiver.arrows.iter().enumerate() {
        let (i, j) = (arrow.source, arrow.target);
        for r in 0..n.dims[j] {
            for c in 0..m.dims[i] {
                let mut row = vec![Q::zero(); unknowns];
                // (N_a f_i)[r, c] - (f_j M_a)[r, c]
                for k in 0..n.dims[i] {
                    let x = n.maps[a].get(r, k);
                    if !x.is_zero() {
                        row[var(i, k, c)] += x;
                    }
                }
                for k in 0..m.dims[j] {
                    let x = m.maps[a].get(k, c);
                    if !x.is_zero() {
                        row[var(j, r, k)] -= x;
                    }
                }
                rows.push(row);
            }
        }
    }
    let system = Matrix::from_fn(rows.len(), unknowns, |r, c| rows[r][c].clone());
    system
        .nullspace()
        .into_iter()
        .map(|x| Morphism {
            comps: (0..nv).map(|v| Matrix::from_fn(n.dims[v], m.dims[v], |r, c| x[var(v, r, c)].clone())).collect(),
        })
        .collect()
}

pub fn hom_dim(quiver: &Quiver, m: &Rep, n: &Rep) -> usize {
    hom_basis(quiver, m, n).len()
}

/// The subrepresentation spanned by the columns of `spaces[v]` at each
/// vertex, in those coordinates; `None` if the spaces are not arrow-stable.
pub fn subrep(quiver: &Quiver, m: &Rep, spaces: &[Matrix]) -> Option<Rep> {
    let maps = quiver
        .arrows
        .iter()
        .enumerate()
        .map(|(a, arrow)| {
            let image = m.maps[a].mul(&spaces[arrow.source]);
            spaces[arrow.target].solve(&image)
        })
        .collect::<Option<Vec<Matrix>>>()?;
    Some(Rep { dims: spaces.iter().map(Matrix::cols).collect(), maps })
}

/// The quotient of `m` by the subrepresentation spanned by `spaces`, with
/// the projection onto it; `None` if the spaces are not arrow-stable.
pub fn quotient(quiver: &Quiver, m: &Rep, spaces: &[Matrix]) -> Option<(Rep, Morphism)> {
    let nv = quiver.vertex_count;
    let complements: Vec<Matrix> = spaces.iter().map(Matrix::complement).collect();
    let mut inverses = Vec::with_capacity(nv);
    for v in 0..nv {
        let p = spaces[v].hstack(&complements[v]);
        inverses.push(p.inverse().expect("subspace plus complement is a basis"));
    }
    let mut maps = Vec::with_capacity(quiver.arrows.len());
    for (a, arrow) in quiver.arrows.iter().enumerate() {
        let (i, j) = (arrow.source, arrow.target);
        let u = spaces[j].cols();
        let leak = inverses[j].mul(&m.maps[a]).mul(&spaces[i]);
        if !leak.row_block(u, m.dims[j]).is_zero() {
            return None;
        }
        let induced = inverses[j].mul(&m.maps[a]).mul(&complements[i]);
        maps.push(induced.row_block(u, m.dims[j]));
    }
    let projection = Morphism { comps: (0..nv).map(|v| inverses[v].row_block(spaces[v].cols(), m.dims[v])).collect() };
    Some((Rep { dims: complements.iter().map(Matrix::cols).collect(), maps }, projection))
}

pub fn kernel(quiver: &Quiver, m: &Rep, f: &Morphism) -> Rep {
    let spaces: Vec<Matrix> = f.comps.iter().map(Matrix::kernel).collect();
    subrep(quiver, m, &spaces).expect("kernels are subrepresentations")
}

pub fn cokernel(quiver: &Quiver, n: &Rep, f: &Morphism) -> Rep {
    let spaces: Vec<Matrix> = f.comps.iter().map(Matrix::column_space).collect();
    quotient(quiver, n, &spaces).expect("images are subrepresentations").0
}

pub fn image(quiver: &Quiver, n: &Rep, f: &Morphism) -> Rep {
    let spaces: Vec<Matrix> = f.comps.iter().map(Matrix::column_space).collect();
    subrep(quiver, n, &spaces).expect("images are subrepresentations")
}

/// `dim Ext^1(y, x)`, the extensions `0 -> x -> e -> y -> 0`.
///
/// Computed from the standard complex for a quiver with relations,
/// `⊕_v Hom(y_v, x_v) -> ⊕_arrows Hom(y_s, x_t) -> ⊕_relations Hom(y_s, x_t)`,
/// whose middle cohomology is `Ext^1`. The relations must be the minimal
/// generating set, which for a tiling algebra is the list of forbidden
/// length-two paths.
pub fn ext1_dim(algebra: &Algebra, y: &Rep, x: &Rep) -> usize {
    let quiver = &algebra.quiver;
    let c0: usize = (0..quiver.vertex_count).map(|v| y.dims[v] * x.dims[v]).sum();
    let rank_d0 = c0 - hom_dim(quiver, y, x);

    let mut offset = vec![0; quiver.arrows.len() + 1];
    for (a, arrow) in quiver.arrows.iter().enumerate() {
        offset[a + 1] = offset[a] + x.dims[arrow.target] * y.dims[arrow.source];
    }
    let c1 = offset[quiver.arrows.len()];
    // g_a is a dims_x[t] x dims_y[s] block.
    let var = |a: usize, r: usize, c: usize| offset[a] + r * y.dims[quiver.arrows[a].source] + c;
    let mut rows: Vec<Vec<Q>> = Vec::new();
    for rel in &algebra.relations.forbidden {
        let (alpha, beta) = (rel.first, rel.second);
        let i = quiver.arrows[alpha].source;
        let j = quiver.arrows[alpha].target;
        let k = quiver.arrows[beta].target;
        for r in 0..x.dims[k] {
            for c in 0..y.dims[i] {
                let mut row = vec![Q::zero(); c1];
                // (x_beta g_alpha + g_beta y_alpha)[r, c]
                for p in 0..x.dims[j] {
                    let coeff = x.maps[beta].get(r, p);
                    if !coeff.is_zero() {
                        row[var(alpha, p, c)] += coeff;
                    }
                }
                for p in 0..y.dims[j] {
                    let coeff = y.maps[alpha].get(p, c);
                    if !coeff.is_zero() {
                        row[var(beta, r, p)] += coeff;
                    }
                }
                rows.push(row);
            }
        }
    }
    let d1 = Matrix::from_fn(rows.len(), c1, |r, c| rows[r][c].clone());
    c1 - d1.rank() - rank_d0
}
