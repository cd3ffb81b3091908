use std::collections::{BTreeSet, HashMap};
use std::sync::OnceLock;

use rayon::prelude::*;

use super::rep::{self, Morphism, Rep};
use super::{all_submodules_with, build_algebra, quotient_runs, string_rep, Algebra, ModuleSum};
use crate::error::{Error, Result};
use crate::linalg::{q, Matrix};
use crate::tree::{EmbeddedTree, Segment};

/// The module category of a tiling algebra, with the indecomposables, their
/// Hom dimensions and lazily built closure data cached.
pub struct ModuleCategory<'t> {
    tree: &'t EmbeddedTree,
    algebra: Algebra,
    segments: Vec<Segment>,
    index: HashMap<Segment, usize>,
    reps: Vec<Rep>,
    hom: Vec<Vec<usize>>,
    hom_inverse: Matrix,
    submodules: OnceLock<Vec<Vec<ModuleSum>>>,
    /// `requirements[x][y]`: indecomposables forced into any wide
    /// subcategory containing `x` and `y`.
    requirements: OnceLock<Result<Vec<Vec<Vec<usize>>>>>,
}

impl<'t> ModuleCategory<'t> {
    pub fn new(tree: &'t EmbeddedTree) -> Result<ModuleCategory<'t>> {
        let algebra = build_algebra(tree);
        let segments = tree.segments();
        let index = segments.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
        let reps: Vec<Rep> = segments.iter().map(|s| string_rep(tree, &algebra, s)).collect();
        let hom: Vec<Vec<usize>> =
            reps.par_iter().map(|x| reps.iter().map(|y| rep::hom_dim(&algebra.quiver, x, y)).collect()).collect();
        if let Some((i, j)) = pairs(segments.len()).find(|&(i, j)| hom[i][j] > 1) {
            return Err(Error::Internal(format!(
                "Hom({}, {}) has dimension {}",
                tree.display_segment(&segments[i]),
                tree.display_segment(&segments[j]),
                hom[i][j]
            )));
        }
        let n = segments.len();
        let h = Matrix::from_fn(n, n, |r, c| q(hom[r][c] as i64));
        let hom_inverse =
            h.inverse().ok_or_else(|| Error::Internal("Hom matrix of the indecomposables is singular".into()))?;
        Ok(ModuleCategory {
            tree,
            algebra,
            segments,
            index,
            reps,
            hom,
            hom_inverse,
            submodules: OnceLock::new(),
            requirements: OnceLock::new(),
        })
    }

    pub fn tree(&self) -> &EmbeddedTree {
        self.tree
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    pub fn index_of(&self, s: &Segment) -> Option<usize> {
        self.index.get(s).copied()
    }

    pub fn rep(&self, i: usize) -> &Rep {
        &self.reps[i]
    }

    pub fn sum_rep(&self, m: &ModuleSum) -> Rep {
        m.rep(self.tree, &self.algebra)
    }

    /// `dim Hom(M(segments[i]), M(segments[j]))`.
    pub fn hom_dim(&self, i: usize, j: usize) -> usize {
        self.hom[i][j]
    }

    /// Decomposes a representation into string modules.
    ///
    /// A module over a representation-finite algebra is determined by the
    /// dimensions of the Hom spaces from each indecomposable, and those
    /// vectors are linearly independent, so the multiplicities are the
    /// solution of one square system.
    pub fn decompose(&self, m: &Rep) -> Result<ModuleSum> {
        let n = self.segments.len();
        let h: Vec<i64> = self.reps.iter().map(|x| rep::hom_dim(&self.algebra.quiver, x, m) as i64).collect();
        let mult = self
            .hom_inverse
            .mul(&Matrix::from_i64(n, 1, &h))
            .to_integers()
            .filter(|v| v.iter().all(|&x| x >= 0))
            .ok_or_else(|| Error::Internal("representation has no decomposition into string modules".into()))?;
        let mut parts = Vec::new();
        for (i, &k) in mult.iter().enumerate() {
            for _ in 0..k {
                parts.push(self.segments[i].clone());
            }
        }
        let sum = ModuleSum::new(parts);
        let dims: Vec<i64> = m.dims.iter().map(|&d| d as i64).collect();
        if sum.dim_vector(self.tree).0 != dims {
            return Err(Error::Internal("decomposition does not match the dimension vector".into()));
        }
        Ok(sum)
    }

    /// All submodules of `M(segments[i])`, cached.
    pub fn submodules(&self, i: usize) -> &[ModuleSum] {
        let all = self.submodules.get_or_init(|| {
            self.segments.par_iter().map(|s| all_submodules_with(self.tree, &self.algebra, s)).collect()
        });
        &all[i]
    }

    /// `dim Ext^1(M(segments[y]), M(segments[x]))`.
    pub fn ext1(&self, y: usize, x: usize) -> usize {
        rep::ext1_dim(&self.algebra, &self.reps[y], &self.reps[x])
    }

    /// Kernel and cokernel of each basis morphism `M(x) -> M(y)`.
    pub fn kernel_cokernel(&self, x: usize, y: usize) -> Result<Vec<(ModuleSum, ModuleSum)>> {
        let quiver = &self.algebra.quiver;
        rep::hom_basis(quiver, &self.reps[x], &self.reps[y])
            .iter()
            .map(|f| {
                let k = self.decompose(&rep::kernel(quiver, &self.reps[x], f))?;
                let c = self.decompose(&rep::cokernel(quiver, &self.reps[y], f))?;
                Ok((k, c))
            })
            .collect()
    }

    /// Every middle term `E` of a short exact sequence `0 -> M(x) -> E -> M(y) -> 0`,
    /// the split one included.
    ///
    /// Candidates are the sums of indecomposables with dimension vector
    /// `dim M(x) + dim M(y)`. Since every Hom space from `M(x)` to an
    /// indecomposable has dimension at most one, rescaling the summands of
    /// `E` brings any morphism `M(x) -> E` to one whose components are basis
    /// maps or zero, so trying every support pattern is exhaustive.
    pub fn middle_terms(&self, x: usize, y: usize) -> Result<Vec<ModuleSum>> {
        let quiver = &self.algebra.quiver;
        let target = ModuleSum::single(self.segments[y].clone());
        let mut want = ModuleSum::new(vec![self.segments[x].clone(), self.segments[y].clone()]).dim_vector(self.tree).0;
        let mut out = Vec::new();
        for e in self.sums_with_dim(&mut want) {
            let summands: Vec<usize> = e.summands().iter().map(|s| self.index[s]).collect();
            let maps: Vec<Option<Morphism>> = summands
                .iter()
                .map(|&i| rep::hom_basis(quiver, &self.reps[x], &self.reps[i]).into_iter().next())
                .collect();
            let e_rep = self.sum_rep(&e);
            let live: Vec<usize> = (0..summands.len()).filter(|&i| maps[i].is_some()).collect();
            let mut found = false;
            for pattern in 1u64..(1u64 << live.len()) {
                let comps: Vec<Matrix> = (0..quiver.vertex_count)
                    .map(|v| {
                        let mut col = Matrix::zeros(0, self.reps[x].dims[v]);
                        for (k, &i) in summands.iter().enumerate() {
                            let block = match live.iter().position(|&l| l == k) {
                                Some(p) if pattern >> p & 1 == 1 => maps[k].as_ref().unwrap().comps[v].clone(),
                                _ => Matrix::zeros(self.reps[i].dims[v], self.reps[x].dims[v]),
                            };
                            col = col.vstack(&block);
                        }
                        col
                    })
                    .collect();
                let f = Morphism { comps };
                if !f.is_injective() {
                    continue;
                }
                if self.decompose(&rep::cokernel(quiver, &e_rep, &f))? == target {
                    found = true;
                    break;
                }
            }
            if found {
                out.push(e);
            }
        }
        Ok(out)
    }

    /// Sums of indecomposables whose dimension vector is `want`.
    fn sums_with_dim(&self, want: &mut [i64]) -> Vec<ModuleSum> {
        let edges: Vec<Vec<usize>> = self.segments.iter().map(|s| self.tree.segment_edges(s)).collect();
        let mut out = BTreeSet::new();
        let mut chosen = Vec::new();
        fn go(want: &mut [i64], edges: &[Vec<usize>], chosen: &mut Vec<usize>, out: &mut BTreeSet<Vec<usize>>) {
            let Some(first) = want.iter().position(|&w| w > 0) else {
                let mut c = chosen.clone();
                c.sort();
                out.insert(c);
                return;
            };
            for (i, es) in edges.iter().enumerate() {
                if es.contains(&first) && es.iter().all(|&e| want[e] > 0) {
                    es.iter().for_each(|&e| want[e] -= 1);
                    chosen.push(i);
                    go(want, edges, chosen, out);
                    chosen.pop();
                    es.iter().for_each(|&e| want[e] += 1);
                }
            }
        }
        go(want, &edges, &mut chosen, &mut out);
        out.into_iter().map(|c| ModuleSum::new(c.into_iter().map(|i| self.segments[i].clone()).collect())).collect()
    }

    fn requirements(&self) -> Result<&Vec<Vec<Vec<usize>>>> {
        let computed = self.requirements.get_or_init(|| {
            let n = self.segments.len();
            (0..n)
                .into_par_iter()
                .map(|x| {
                    (0..n)
                        .map(|y| {
                            let mut need = BTreeSet::new();
                            for (k, c) in self.kernel_cokernel(x, y)? {
                                need.extend(k.summands().iter().chain(c.summands()).map(|s| self.index[s]));
                            }
                            if self.ext1(y, x) > 0 {
                                for e in self.middle_terms(x, y)? {
                                    need.extend(e.summands().iter().map(|s| self.index[s]));
                                }
                            }
                            Ok(need.into_iter().collect())
                        })
                        .collect::<Result<Vec<Vec<usize>>>>()
                })
                .collect::<Result<Vec<_>>>()
        });
        computed.as_ref().map_err(Clone::clone)
    }

    fn indices(&self, set: &BTreeSet<Segment>) -> Option<Vec<bool>> {
        let mut member = vec![false; self.segments.len()];
        for s in set {
            member[self.index_of(s)?] = true;
        }
        Some(member)
    }

    /// Whether `add(set)` is wide: closed under kernels and cokernels of the
    /// morphisms between its indecomposables and under extensions between
    /// them.
    pub fn is_wide(&self, set: &BTreeSet<Segment>) -> Result<bool> {
        let Some(member) = self.indices(set) else {
            return Ok(false);
        };
        let req = self.requirements()?;
        let n = self.segments.len();
        Ok(pairs(n).filter(|&(x, y)| member[x] && member[y]).all(|(x, y)| req[x][y].iter().all(|&z| member[z])))
    }

    /// Members of `set` with no proper nonzero submodule `N` such that `N`
    /// and the quotient both lie in `add(set)`.
    pub fn relative_simples(&self, set: &BTreeSet<Segment>) -> BTreeSet<Segment> {
        set.iter()
            .filter(|s| {
                let i = self.index[*s];
                !self.submodules(i).iter().any(|sub| {
                    !sub.is_zero()
                        && sub.summands() != [(*s).clone()]
                        && sub.summands().iter().all(|t| set.contains(t))
                        && quotient_runs(self.tree, s, sub).summands().iter().all(|t| set.contains(t))
                })
            })
            .cloned()
            .collect()
    }

    /// Whether the modules are bricks with no nonzero morphisms between
    /// distinct members.
    pub fn is_semibrick(&self, set: &BTreeSet<Segment>) -> bool {
        let idx: Vec<usize> = set.iter().map(|s| self.index[s]).collect();
        idx.iter().all(|&i| idx.iter().all(|&j| self.hom[i][j] == usize::from(i == j)))
    }

    /// Indecomposables admitting a filtration with subquotients in `bricks`.
    pub fn filtered_by(&self, bricks: &BTreeSet<Segment>) -> BTreeSet<Segment> {
        let mut order: Vec<usize> = (0..self.segments.len()).collect();
        order.sort_by_key(|&i| self.segments[i].len());
        let mut filt = vec![false; self.segments.len()];
        for i in order {
            let s = &self.segments[i];
            filt[i] = bricks.contains(s)
                || self.submodules(i).iter().any(|sub| {
                    sub.len() == 1
                        && sub.summands()[0] != *s
                        && bricks.contains(&sub.summands()[0])
                        && quotient_runs(self.tree, s, sub).summands().iter().all(|t| filt[self.index[t]])
                });
        }
        (0..self.segments.len()).filter(|&i| filt[i]).map(|i| self.segments[i].clone()).collect()
    }

    /// Independent wideness test: a subcategory is wide exactly when it is
    /// the filtration closure of a semibrick, which must then be its set of
    /// relative simples.
    pub fn is_wide_by_simples(&self, set: &BTreeSet<Segment>) -> bool {
        if self.indices(set).is_none() {
            return false;
        }
        let simples = self.relative_simples(set);
        self.is_semibrick(&simples) && self.filtered_by(&simples) == *set
    }
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |i| (0..n).map(move |j| (i, j)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn decomposition_recovers_sums() {
        let t = fixtures::claw();
        let cat = ModuleCategory::new(&t).unwrap();
        let segs = cat.segments().to_vec();
        for a in &segs {
            assert_eq!(
                cat.decompose(&cat.sum_rep(&ModuleSum::single(a.clone()))).unwrap(),
                ModuleSum::single(a.clone())
            );
            for b in &segs {
                let m = ModuleSum::new(vec![a.clone(), b.clone()]);
                assert_eq!(cat.decompose(&cat.sum_rep(&m)).unwrap(), m);
            }
        }
    }

    #[test]
    fn ext_vanishes_exactly_when_only_the_split_sequence_exists() {
        for (_, t) in fixtures::all().into_iter().take(5) {
            let cat = ModuleCategory::new(&t).unwrap();
            let n = cat.segments().len();
            for x in 0..n {
                for y in 0..n {
                    let split = ModuleSum::new(vec![cat.segments()[x].clone(), cat.segments()[y].clone()]);
                    let terms = cat.middle_terms(x, y).unwrap();
                    assert!(terms.contains(&split));
                    assert_eq!(cat.ext1(y, x) > 0, terms.len() > 1, "pair {} {}", x, y);
                }
            }
        }
    }

    #[test]
    fn a2_extension() {
        let t = fixtures::a2();
        let cat = ModuleCategory::new(&t).unwrap();
        let nonsplit: usize = (0..3).flat_map(|x| (0..3).map(move |y| (x, y))).map(|(x, y)| cat.ext1(y, x)).sum();
        assert_eq!(nonsplit, 1);
    }

    #[test]
    fn trivial_sets_are_wide() {
        let t = fixtures::quad();
        let cat = ModuleCategory::new(&t).unwrap();
        let all: BTreeSet<Segment> = cat.segments().iter().cloned().collect();
        assert!(cat.is_wide(&BTreeSet::new()).unwrap());
        assert!(cat.is_wide(&all).unwrap());
        assert!(cat.is_wide_by_simples(&BTreeSet::new()));
        assert!(cat.is_wide_by_simples(&all));
    }

    #[test]
    fn two_wideness_tests_agree_on_a2() {
        let t = fixtures::a2();
        let cat = ModuleCategory::new(&t).unwrap();
        let segs = cat.segments().to_vec();
        let mut wide = 0;
        for mask in 0u32..(1 << segs.len()) {
            let set: BTreeSet<Segment> =
                (0..segs.len()).filter(|i| mask >> i & 1 == 1).map(|i| segs[i].clone()).collect();
            let a = cat.is_wide(&set).unwrap();
            assert_eq!(a, cat.is_wide_by_simples(&set), "{:?}", set);
            wide += usize::from(a);
        }
        assert_eq!(wide, 5);
    }
}
