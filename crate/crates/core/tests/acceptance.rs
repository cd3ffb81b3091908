//! Acceptance criteria, one line each. Exits non-zero if any criterion fails.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use tiling_semistable::checks::{self, CheckResult, TreeData};
use tiling_semistable::fixtures;
use tiling_semistable::nc_complex::facets;
use tiling_semistable::string_modules::algebra_dimension;
use tiling_semistable::tree::EmbeddedTree;
use tiling_semistable::vectors::{c_vector, g_vector};

const SEED: u64 = 1;

struct Outcome {
    passed: bool,
    detail: String,
}

fn combine(parts: Vec<(String, CheckResult)>) -> Outcome {
    let failed: Vec<String> =
        parts.iter().filter(|(_, c)| !c.passed).map(|(n, c)| format!("{}: {}", n, c.detail)).collect();
    let detail = if failed.is_empty() {
        parts.iter().map(|(n, c)| format!("{} {}", n, c.detail)).collect::<Vec<_>>().join("; ")
    } else {
        format!("FAILED {}", failed.join("; "))
    };
    Outcome { passed: failed.is_empty(), detail }
}

fn per_tree(data: &[(String, TreeData<'_>)], check: impl Fn(&TreeData<'_>) -> CheckResult) -> Outcome {
    combine(data.iter().map(|(n, d)| (n.clone(), check(d))).collect())
}

fn a2_example() -> Outcome {
    let t = fixtures::a2();
    let want = [(vec![-1, 0], vec![-1, -1]), (vec![-1, 1], vec![0, 1])];
    let hit = facets(&t).unwrap().iter().position(|f| {
        let pairs: BTreeSet<(Vec<i64>, Vec<i64>)> =
            f.colored().map(|fa| (g_vector(&t, &fa.arc).0, c_vector(&t, f, &fa.arc).unwrap().0)).collect();
        pairs == want.iter().cloned().collect()
    });
    Outcome {
        passed: hit.is_some(),
        detail: match hit {
            Some(i) => format!("facet {} carries g=(-1,0)/c=(-1,-1) and g=(-1,1)/c=(0,1)", i),
            None => "no facet carries the example vector pairs".into(),
        },
    }
}

fn a2_dimension() -> Outcome {
    let d = algebra_dimension(&fixtures::a2()).unwrap();
    Outcome { passed: d == 3, detail: format!("dim = {}", d) }
}

fn suite_shape(trees: &[(String, EmbeddedTree)]) -> (bool, String) {
    let max_interior = trees.iter().map(|(_, t)| t.interior_vertices().len()).max().unwrap_or(0);
    let degrees: BTreeSet<usize> = trees
        .iter()
        .flat_map(|(_, t)| t.interior_vertices().iter().map(|&v| t.degree(v)).collect::<Vec<_>>())
        .collect();
    let three_cycle = trees.iter().any(|(_, t)| {
        let alg = tiling_semistable::string_modules::build_algebra(t);
        alg.relations.forbidden.iter().any(|r| {
            let a = &alg.quiver.arrows;
            alg.relations.forbidden.iter().any(|s| s.first == r.second && alg.relations.forbids(s.second, r.first))
                && a[r.first].corner.vertex == a[r.second].corner.vertex
        })
    });
    let ok = trees.len() >= 6 && max_interior <= 8 && degrees.contains(&4) && degrees.contains(&5) && three_cycle;
    (
        ok,
        format!(
            "{} trees, up to {} interior vertices, degrees {:?}, 3-cycle relations: {}",
            trees.len(),
            max_interior,
            degrees,
            three_cycle
        ),
    )
}

fn dual_bases(trees: &[(String, EmbeddedTree)], data: &[(String, TreeData<'_>)]) -> Outcome {
    let (shape_ok, shape) = suite_shape(trees);
    let mut o = per_tree(data, checks::dual_bases);
    o.passed &= shape_ok;
    o.detail = format!("{}; {}", shape, o.detail);
    o
}

fn corollary(data: &[(String, TreeData<'_>)]) -> Outcome {
    let mut o = per_tree(data, checks::poset_isomorphism);
    let a2 = &data.iter().find(|(n, _)| n == "a2").unwrap().1;
    let (ss, _, _) = tiling_semistable::semistable::ss_poset(a2.tree, &a2.facets);
    let lattice = ss.len() == 5 && ss.bottom().is_some() && ss.top().is_some();
    o.passed &= lattice;
    o.detail = format!("A2: {} elements with bottom and top: {}; {}", ss.len(), lattice, o.detail);
    o
}

fn fallible(
    data: &[(String, TreeData<'_>)],
    check: impl Fn(&TreeData<'_>) -> tiling_semistable::error::Result<CheckResult>,
) -> Outcome {
    let mut parts = Vec::new();
    for (n, d) in data {
        match check(d) {
            Ok(c) => parts.push((n.clone(), c)),
            Err(e) => return Outcome { passed: false, detail: format!("{}: error {}", n, e) },
        }
    }
    combine(parts)
}

fn main() {
    let trees: Vec<(String, EmbeddedTree)> = fixtures::all().into_iter().map(|(n, t)| (n.to_string(), t)).collect();
    let start = Instant::now();
    let data: Vec<(String, TreeData<'_>)> = trees.iter().map(|(n, t)| (n.clone(), TreeData::new(t).unwrap())).collect();
    println!("fixture data built in {:.2?}", start.elapsed());

    type Criterion<'a> = (u32, &'static str, Option<Duration>, Box<dyn Fn() -> Outcome + 'a>);
    let criteria: Vec<Criterion<'_>> = vec![
        (1, "A2 example vector pairs", Some(Duration::from_secs(1)), Box::new(a2_example)),
        (2, "A2 algebra dimension 3", None, Box::new(a2_dimension)),
        (3, "dual bases on every facet", Some(Duration::from_secs(60)), Box::new(|| dual_bases(&trees, &data))),
        (4, "pure complex, dim colored arcs", None, Box::new(|| per_tree(&data, checks::pure_complex))),
        (
            5,
            "Kreweras conditions cut out rho(B)",
            Some(Duration::from_secs(300)),
            Box::new(|| per_tree(&data, checks::kreweras_semistable)),
        ),
        (6, "semistable lattice isomorphic to NCP", None, Box::new(|| corollary(&data))),
        (7, "torsion pairs orthogonal and decomposing", None, Box::new(|| per_tree(&data, checks::torsion_pairs))),
        (8, "zigzag counting property", None, Box::new(|| per_tree(&data, checks::zigzag_counting))),
        (
            9,
            "combinatorial vs linear-algebra subquotients",
            None,
            Box::new(|| fallible(&data, checks::oracle_agreement)),
        ),
        (
            10,
            "random conditions wide and scale-free",
            Some(Duration::from_secs(300)),
            Box::new(|| fallible(&data, |d| checks::converse(d, SEED))),
        ),
    ];

    let mut failures = 0;
    for (id, title, limit, run) in &criteria {
        let t0 = Instant::now();
        let outcome = run();
        let elapsed = t0.elapsed();
        let in_time = limit.is_none_or(|l| elapsed < l);
        let passed = outcome.passed && in_time;
        failures += usize::from(!passed);
        let limit_text = match limit {
            Some(l) => format!("limit {:?}", l),
            None => "no limit".into(),
        };
        println!(
            "[{}] criterion {:>2}: {} ({:.3?}, {}{}) {}",
            if passed { "PASS" } else { "FAIL" },
            id,
            title,
            elapsed,
            limit_text,
            if in_time { "" } else { ", over time" },
            outcome.detail
        );
    }
    println!("{}/{} criteria pass", criteria.len() - failures, criteria.len());
    if failures > 0 {
        std::process::exit(1);
    }
}
