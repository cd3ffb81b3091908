//! Stability conditions, semistable subcategories and the check that the
//! Kreweras stability condition of each facet cuts out the expected wide
//! subcategory.
//!
//! Semistability of `M(s)` only needs the indecomposable submodules: every
//! submodule is a direct sum of string modules `M(t)` with `t` in `C_s`, and
//! `theta` is additive, so if each `theta(M(t))` is `<= 0` (resp. `< 0`) the
//! same holds for every nonzero proper submodule.

use std::collections::BTreeSet;

use num_integer::Integer;
use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::nc_complex::Facet;
use crate::partitions::{closure, factor_through, rho, TreePartition};
use crate::poset::Poset;
use crate::string_modules::ModuleCategory;
use crate::tree::{EmbeddedTree, Segment};
use crate::vectors::{c_set, kreweras_theta, IntVector};

/// A linear form on dimension vectors, given in the canonical edge order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct StabilityCondition {
    pub theta: IntVector,
}

impl StabilityCondition {
    pub fn new(theta: IntVector) -> StabilityCondition {
        StabilityCondition { theta }
    }

    pub fn zero(n: usize) -> StabilityCondition {
        StabilityCondition::new(IntVector::zeros(n))
    }

    /// Parses `"a,b,..."` and checks the length against `n`.
    pub fn parse(text: &str, n: usize) -> Result<StabilityCondition> {
        let trimmed = text.trim();
        let entries: Vec<i64> = if trimmed.is_empty() {
            Vec::new()
        } else {
            trimmed
                .split(',')
                .map(|p| {
                    p.trim().parse::<i64>().map_err(|_| Error::Parse {
                        line: 1,
                        message: format!("theta entry `{}` is not an integer", p.trim()),
                    })
                })
                .collect::<Result<_>>()?
        };
        if entries.len() != n {
            return Err(Error::Dimension { expected: n, found: entries.len() });
        }
        Ok(StabilityCondition::new(IntVector(entries)))
    }

    /// Clears denominators; positive scaling does not change semistability.
    pub fn from_ratios(entries: &[Ratio<i64>]) -> StabilityCondition {
        let lcm = entries.iter().fold(1i64, |acc, r| acc.lcm(r.denom()));
        StabilityCondition::new(IntVector(entries.iter().map(|r| r.numer() * (lcm / r.denom())).collect()))
    }

    pub fn len(&self) -> usize {
        self.theta.len()
    }

    pub fn is_empty(&self) -> bool {
        self.theta.is_empty()
    }

    pub fn scale(&self, c: i64) -> StabilityCondition {
        StabilityCondition::new(self.theta.scale(c))
    }
}

pub fn theta_value(theta: &StabilityCondition, dim: &IntVector) -> i64 {
    theta.theta.dot(dim)
}

fn value_of(tree: &EmbeddedTree, theta: &StabilityCondition, s: &Segment) -> i64 {
    tree.segment_edges(s).into_iter().map(|e| theta.theta[e]).sum()
}

pub fn is_semistable(tree: &EmbeddedTree, theta: &StabilityCondition, s: &Segment) -> bool {
    value_of(tree, theta, s) == 0 && c_set(tree, s).iter().filter(|t| *t != s).all(|t| value_of(tree, theta, t) <= 0)
}

pub fn is_stable(tree: &EmbeddedTree, theta: &StabilityCondition, s: &Segment) -> bool {
    value_of(tree, theta, s) == 0 && c_set(tree, s).iter().filter(|t| *t != s).all(|t| value_of(tree, theta, t) < 0)
}

/// The indecomposable `theta`-semistable modules.
pub fn semistable_subcat(tree: &EmbeddedTree, theta: &StabilityCondition) -> BTreeSet<Segment> {
    tree.segments().into_iter().filter(|s| is_semistable(tree, theta, s)).collect()
}

pub fn stable_modules(tree: &EmbeddedTree, theta: &StabilityCondition) -> BTreeSet<Segment> {
    tree.segments().into_iter().filter(|s| is_stable(tree, theta, s)).collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemistableReport {
    pub facet: usize,
    pub theta: IntVector,
    pub semistable: BTreeSet<Segment>,
    pub expected: BTreeSet<Segment>,
    pub equal: bool,
    /// Every red segment gives a stable module.
    pub red_stable: bool,
    /// Every composite of red segments gives a semistable module that is not stable.
    pub composites_not_stable: bool,
}

impl SemistableReport {
    pub fn passed(&self) -> bool {
        self.equal && self.red_stable && self.composites_not_stable
    }
}

/// For every facet, compares the semistable subcategory of its Kreweras
/// stability condition with the image of its partition under `rho`.
pub fn verify_theorem1(tree: &EmbeddedTree, facets: &[Facet], partitions: &[TreePartition]) -> Vec<SemistableReport> {
    facets
        .par_iter()
        .zip(partitions.par_iter())
        .enumerate()
        .map(|(i, (f, b))| {
            let theta = StabilityCondition::new(kreweras_theta(tree, f));
            let semistable = semistable_subcat(tree, &theta);
            let expected = rho(tree, b);
            let red: BTreeSet<Segment> = b.red_segments().iter().cloned().collect();
            let red_stable = red.iter().all(|s| is_stable(tree, &theta, s));
            let composites_not_stable = closure(tree, &red).difference(&red).all(|s| {
                factor_through(s, &red).is_some() && value_of(tree, &theta, s) == 0 && !is_stable(tree, &theta, s)
            });
            SemistableReport {
                facet: i,
                equal: semistable == expected,
                theta: theta.theta,
                semistable,
                expected,
                red_stable,
                composites_not_stable,
            }
        })
        .collect()
}

/// The distinct semistable subcategories of the Kreweras stability
/// conditions, ordered by inclusion, together with the map sending each
/// partition (in `partitions` order) to its element.
pub fn ss_poset(tree: &EmbeddedTree, facets: &[Facet]) -> (Poset, Vec<BTreeSet<Segment>>, Vec<usize>) {
    let sets: Vec<BTreeSet<Segment>> =
        facets.iter().map(|f| semistable_subcat(tree, &StabilityCondition::new(kreweras_theta(tree, f)))).collect();
    let mut distinct: Vec<BTreeSet<Segment>> = sets.clone();
    distinct.sort();
    distinct.dedup();
    let map = sets.iter().map(|s| distinct.binary_search(s).expect("set is listed")).collect();
    let labels = distinct.iter().map(|s| display_set(tree, s)).collect();
    let poset = Poset::new(labels, |i, j| distinct[i].is_subset(&distinct[j]));
    (poset, distinct, map)
}

pub fn display_set(tree: &EmbeddedTree, set: &BTreeSet<Segment>) -> String {
    let parts: Vec<String> = set.iter().map(|s| tree.display_segment(s)).collect();
    format!("{{{}}}", parts.join(" "))
}

/// Whether the semistable subcategory of `theta` is wide.
pub fn converse_check(cat: &ModuleCategory<'_>, theta: &StabilityCondition) -> Result<bool> {
    cat.is_wide(&semistable_subcat(cat.tree(), theta))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub seed: u64,
    pub trials: usize,
    /// Conditions whose semistable subcategory is not wide.
    pub not_wide: Vec<IntVector>,
    /// Conditions whose semistable subcategory changes under positive scaling.
    pub scaling_changes: Vec<IntVector>,
    /// Number of distinct semistable subcategories met.
    pub distinct_subcategories: usize,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.not_wide.is_empty() && self.scaling_changes.is_empty()
    }
}

pub const SCALINGS: [i64; 3] = [2, 3, 7];

/// Draws `trials` conditions with entries in `-2..=2` and checks that each
/// semistable subcategory is wide and invariant under [`SCALINGS`].
pub fn converse_sweep(cat: &ModuleCategory<'_>, seed: u64, trials: usize) -> Result<SweepReport> {
    let tree = cat.tree();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let thetas: Vec<StabilityCondition> = (0..trials)
        .map(|_| StabilityCondition::new(IntVector((0..tree.dim()).map(|_| rng.random_range(-2..=2)).collect())))
        .collect();
    let results: Vec<(StabilityCondition, BTreeSet<Segment>, bool, bool)> = thetas
        .into_par_iter()
        .map(|theta| {
            let ss = semistable_subcat(tree, &theta);
            let wide = cat.is_wide(&ss)?;
            let scaled = SCALINGS.iter().all(|&c| semistable_subcat(tree, &theta.scale(c)) == ss);
            Ok((theta, ss, wide, scaled))
        })
        .collect::<Result<_>>()?;
    let distinct: BTreeSet<&BTreeSet<Segment>> = results.iter().map(|r| &r.1).collect();
    Ok(SweepReport {
        seed,
        trials,
        distinct_subcategories: distinct.len(),
        not_wide: results.iter().filter(|r| !r.2).map(|r| r.0.theta.clone()).collect(),
        scaling_changes: results.iter().filter(|r| !r.3).map(|r| r.0.theta.clone()).collect(),
    })
}

/// Sizes of the semistable subcategories of the partial sums of the green
/// g-vectors of `f`, taken in arc order.
pub fn partial_sum_profile(tree: &EmbeddedTree, f: &Facet) -> Vec<usize> {
    let mut theta = IntVector::zeros(tree.dim());
    let mut sizes = vec![semistable_subcat(tree, &StabilityCondition::new(theta.clone())).len()];
    for fa in f.green() {
        theta = &theta + &crate::vectors::g_vector(tree, &fa.arc);
        sizes.push(semistable_subcat(tree, &StabilityCondition::new(theta.clone())).len());
    }
    sizes
}
