//! Invariant suites over a single tree, shared by `check-all` and the
//! acceptance harness.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::Result;
use crate::nc_complex::{arcs, facets_from_arcs, flip_neighbors, Arc, ArcKind, Facet};
use crate::partitions::{
    is_biclosed, kreweras_index, ncp_all, ncp_poset, qualifying_submodules, rho, torsion_pair, TreePartition,
};
use crate::semistable::{converse_sweep, ss_poset, verify_theorem1};
use crate::string_modules::oracle::{indecomposable_quotients, indecomposable_subs, submodule_classes, subquotients};
use crate::string_modules::{all_submodules_with, quot_indecs, quotient_by, sub_indecs, ModuleCategory};
use crate::tree::EmbeddedTree;
use crate::vectors::{c_set, c_vector, counting_check, dual_pairing, k_set, segment_of};

pub const SWEEP_TRIALS: usize = 200;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl CheckResult {
    fn new(name: &'static str, passed: bool, detail: impl Into<String>) -> CheckResult {
        CheckResult { name, passed, detail: detail.into() }
    }
}

/// Everything the checks need, computed once per tree.
pub struct TreeData<'t> {
    pub tree: &'t EmbeddedTree,
    pub arcs: Vec<Arc>,
    pub facets: Vec<Facet>,
    pub partitions: Vec<TreePartition>,
    pub category: ModuleCategory<'t>,
}

impl<'t> TreeData<'t> {
    pub fn new(tree: &'t EmbeddedTree) -> Result<TreeData<'t>> {
        let arcs = arcs(tree);
        let facets = facets_from_arcs(tree, &arcs)?;
        let partitions = ncp_all(tree, &facets)?;
        let category = ModuleCategory::new(tree)?;
        Ok(TreeData { tree, arcs, facets, partitions, category })
    }
}

/// All facets have one size, and each has `dim` colored arcs.
pub fn pure_complex(d: &TreeData<'_>) -> CheckResult {
    let sizes: BTreeSet<usize> = d.facets.iter().map(Facet::len).collect();
    let bad_colored = d.facets.iter().filter(|f| f.colored().count() != d.tree.dim()).count();
    CheckResult::new(
        "pure-complex",
        sizes.len() == 1 && bad_colored == 0,
        format!("{} facets, sizes {:?}, {} with wrong colored count", d.facets.len(), sizes, bad_colored),
    )
}

pub fn dual_bases(d: &TreeData<'_>) -> CheckResult {
    let n = d.tree.dim();
    let mut failures = Vec::new();
    for (i, f) in d.facets.iter().enumerate() {
        let ok = match dual_pairing(d.tree, f) {
            Ok(m) => m.len() == n && (0..n).all(|a| (0..n).all(|b| m[a][b] == i64::from(a == b))),
            Err(_) => false,
        };
        if !ok {
            failures.push(i);
        }
    }
    CheckResult::new(
        "dual-bases",
        failures.is_empty(),
        format!("{}/{} facets give the identity pairing", d.facets.len() - failures.len(), d.facets.len()),
    )
}

/// c-vector signs follow colors and supports are the segment edges.
pub fn c_vector_shape(d: &TreeData<'_>) -> CheckResult {
    let mut bad = 0;
    let mut total = 0;
    for f in &d.facets {
        for fa in f.colored() {
            total += 1;
            let (Ok(c), Ok(s)) = (c_vector(d.tree, f, &fa.arc), segment_of(d.tree, f, &fa.arc)) else {
                bad += 1;
                continue;
            };
            let support: BTreeSet<usize> = (0..c.len()).filter(|&e| c[e] != 0).collect();
            let edges: BTreeSet<usize> = d.tree.segment_edges(&s).into_iter().collect();
            let sign = if fa.kind == ArcKind::Green { 1 } else { -1 };
            if support != edges || support.iter().any(|&e| c[e] != sign) {
                bad += 1;
            }
        }
    }
    CheckResult::new("c-vector-shape", bad == 0, format!("{}/{} colored arcs", total - bad, total))
}

/// Arcs between neighbouring leaves lie in every facet. A violation is
/// reported as a warning only.
pub fn boundary_arcs(d: &TreeData<'_>) -> (CheckResult, Option<String>) {
    let in_all = d
        .facets
        .iter()
        .map(|f| f.arcs().iter().filter(|fa| fa.kind == ArcKind::Boundary).map(|fa| fa.arc.clone()).collect())
        .reduce(|a: BTreeSet<Arc>, b| a.intersection(&b).cloned().collect())
        .unwrap_or_default();
    let in_any: BTreeSet<Arc> = d
        .facets
        .iter()
        .flat_map(|f| f.arcs().iter().filter(|fa| fa.kind == ArcKind::Boundary).map(|fa| fa.arc.clone()))
        .collect();
    let ok = in_all == in_any;
    let warning = (!ok).then(|| format!("{} boundary arcs are missing from some facet", in_any.len() - in_all.len()));
    (
        CheckResult::new(
            "boundary-arcs",
            true,
            format!("{} boundary arcs, shared by all facets: {}", in_any.len(), ok),
        ),
        warning,
    )
}

pub fn flip_graph_connected(d: &TreeData<'_>) -> Result<CheckResult> {
    let index: BTreeMap<Vec<Arc>, usize> = d.facets.iter().enumerate().map(|(i, f)| (f.plain_arcs(), i)).collect();
    let neighbours: Vec<Vec<usize>> = d
        .facets
        .par_iter()
        .map(|f| {
            let ns = flip_neighbors(d.tree, &d.arcs, f)?;
            Ok(ns.iter().filter_map(|g| index.get(&g.plain_arcs()).copied()).collect())
        })
        .collect::<Result<_>>()?;
    let mut seen = vec![false; d.facets.len()];
    let mut queue = VecDeque::from([0]);
    if !seen.is_empty() {
        seen[0] = true;
    }
    while let Some(i) = queue.pop_front() {
        for &j in &neighbours[i] {
            if !seen[j] {
                seen[j] = true;
                queue.push_back(j);
            }
        }
    }
    let reached = seen.iter().filter(|&&x| x).count();
    Ok(CheckResult::new(
        "flip-graph",
        reached == d.facets.len(),
        format!("{}/{} facets reached", reached, d.facets.len()),
    ))
}

pub fn biclosed_sets(d: &TreeData<'_>) -> CheckResult {
    let segs = d.category.segments();
    let bad = segs
        .iter()
        .filter(|s| !is_biclosed(d.tree, &c_set(d.tree, s)) || !is_biclosed(d.tree, &k_set(d.tree, s)))
        .count();
    CheckResult::new("biclosed-sub-quotient-sets", bad == 0, format!("{}/{} segments", segs.len() - bad, segs.len()))
}

/// Combinatorial submodule and quotient data against exhaustive linear
/// algebra.
pub fn oracle_agreement(d: &TreeData<'_>) -> Result<CheckResult> {
    let algebra = d.category.algebra();
    let segs = d.category.segments();
    let bad: Vec<bool> = segs
        .par_iter()
        .map(|s| {
            let all = subquotients(&d.category, s)?;
            let classes = submodule_classes(&all);
            let combinatorial: BTreeSet<_> = all_submodules_with(d.tree, algebra, s).into_iter().collect();
            let quotients_agree =
                all.iter().all(|sq| quotient_by(d.tree, s, &sq.sub).ok() == Some(sq.quotient.clone()));
            Ok(indecomposable_subs(&all) != sub_indecs(d.tree, s)
                || indecomposable_quotients(&all) != quot_indecs(d.tree, s)
                || classes != combinatorial
                || !quotients_agree)
        })
        .collect::<Result<_>>()?;
    let n_bad = bad.iter().filter(|&&b| b).count();
    Ok(CheckResult::new("oracle-agreement", n_bad == 0, format!("{}/{} modules", segs.len() - n_bad, segs.len())))
}

/// Counting property over all qualifying (facet, red arc) pairs. The detail
/// also reports how many pairs admit one green arc serving every
/// sub-segment at once.
pub fn zigzag_counting(d: &TreeData<'_>) -> CheckResult {
    let (mut pairs, mut held, mut uniform) = (0, 0, 0);
    for f in &d.facets {
        for r in f.red() {
            if let Ok(c) = counting_check(d.tree, f, &r.arc) {
                pairs += 1;
                held += usize::from(c.holds());
                uniform += usize::from(c.uniform);
            }
        }
    }
    CheckResult::new(
        "zigzag-counting",
        held == pairs,
        format!("{}/{} pairs hold; {} with a single witness", held, pairs, uniform),
    )
}

/// `Kr` permutes the partitions.
pub fn kreweras_bijection(d: &TreeData<'_>) -> Result<CheckResult> {
    let images: BTreeSet<usize> =
        d.partitions.iter().map(|b| kreweras_index(d.tree, &d.partitions, b)).collect::<Result<_>>()?;
    Ok(CheckResult::new(
        "kreweras-bijection",
        images.len() == d.partitions.len(),
        format!("{} partitions, {} images", d.partitions.len(), images.len()),
    ))
}

pub fn torsion_pairs(d: &TreeData<'_>) -> CheckResult {
    let cat = &d.category;
    let tree = d.tree;
    let (orth, decomp) = d
        .partitions
        .par_iter()
        .map(|b| {
            let tp = torsion_pair(tree, b);
            let orth = tp.torsion.iter().all(|x| {
                tp.torsion_free.iter().all(|y| cat.hom_dim(cat.index_of(x).unwrap(), cat.index_of(y).unwrap()) == 0)
            });
            let decomp = cat.segments().iter().all(|s| {
                let q = qualifying_submodules(cat, &tp, s);
                q.len() == 1 && {
                    let (t, f) = &q[0];
                    let total = &t.dim_vector(tree) + &f.dim_vector(tree);
                    total == crate::string_modules::ModuleSum::single(s.clone()).dim_vector(tree)
                }
            });
            (orth, decomp)
        })
        .reduce(|| (true, true), |a, b| (a.0 && b.0, a.1 && b.1));
    CheckResult::new(
        "torsion-pairs",
        orth && decomp,
        format!("{} partitions; orthogonal: {}, unique decompositions: {}", d.partitions.len(), orth, decomp),
    )
}

/// `rho(B)` is wide, by two independent tests.
pub fn rho_wide(d: &TreeData<'_>) -> Result<CheckResult> {
    let results: Vec<(bool, bool)> = d
        .partitions
        .par_iter()
        .map(|b| {
            let w = rho(d.tree, b);
            Ok((d.category.is_wide(&w)?, d.category.is_wide_by_simples(&w)))
        })
        .collect::<Result<_>>()?;
    let wide = results.iter().filter(|r| r.0).count();
    let agree = results.iter().filter(|r| r.0 == r.1).count();
    Ok(CheckResult::new(
        "rho-wide",
        wide == results.len() && agree == results.len(),
        format!("{}/{} wide, {}/{} agree with the simples test", wide, results.len(), agree, results.len()),
    ))
}

pub fn kreweras_semistable(d: &TreeData<'_>) -> CheckResult {
    let reports = verify_theorem1(d.tree, &d.facets, &d.partitions);
    let passed = reports.iter().filter(|r| r.passed()).count();
    CheckResult::new(
        "kreweras-semistable",
        passed == reports.len(),
        format!("{}/{} facets pass", passed, reports.len()),
    )
}

pub fn poset_isomorphism(d: &TreeData<'_>) -> CheckResult {
    let (ss, _, map) = ss_poset(d.tree, &d.facets);
    let ncp = ncp_poset(d.tree, &d.partitions);
    let ok = ncp.is_partial_order() && ncp.isomorphic_via(&ss, &map);
    CheckResult::new(
        "poset-isomorphism",
        ok,
        format!("{} elements, {} cover relations", ss.len(), ss.hasse_edges().len()),
    )
}

pub fn converse(d: &TreeData<'_>, seed: u64) -> Result<CheckResult> {
    let r = converse_sweep(&d.category, seed, SWEEP_TRIALS)?;
    Ok(CheckResult::new(
        "converse-sweep",
        r.passed(),
        format!(
            "seed {}: {} trials, {} not wide, {} scaling changes, {} distinct subcategories",
            r.seed,
            r.trials,
            r.not_wide.len(),
            r.scaling_changes.len(),
            r.distinct_subcategories
        ),
    ))
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub checks: Vec<CheckResult>,
    pub warnings: Vec<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Every invariant check on one tree.
pub fn run_all(tree: &EmbeddedTree, seed: u64) -> Result<SuiteReport> {
    let d = TreeData::new(tree)?;
    let (boundary, warning) = boundary_arcs(&d);
    let checks = vec![
        pure_complex(&d),
        boundary,
        flip_graph_connected(&d)?,
        dual_bases(&d),
        c_vector_shape(&d),
        biclosed_sets(&d),
        zigzag_counting(&d),
        oracle_agreement(&d)?,
        kreweras_bijection(&d)?,
        torsion_pairs(&d),
        rho_wide(&d)?,
        kreweras_semistable(&d),
        poset_isomorphism(&d),
        converse(&d, seed)?,
    ];
    Ok(SuiteReport { checks, warnings: warning.into_iter().collect() })
}
