//! Command-line front end.

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::checks::{self, TreeData};
use crate::error::Error;
use crate::fixtures;
use crate::nc_complex::{flip_neighbors, FacetArc};
use crate::partitions::{kreweras_index, kreweras_orbits, ncp_poset, torsion_pair, TreePartition};
use crate::semistable::{
    display_set, semistable_subcat, ss_poset, stable_modules, verify_theorem1, StabilityCondition,
};
use crate::string_modules::{algebra_dimension, indecomposables, quot_indecs, sub_indecs};
use crate::tree::{parse_tree, EmbeddedTree, Segment};
use crate::vectors::{c_vector, g_vector, kreweras_theta, segment_of, IntVector};

pub const FORMAT_VERSION: u32 = 1;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Which {
    Ncp,
    Ss,
}

/// Noncrossing complexes, tiling algebras and Kreweras stability conditions
/// of trees embedded in a disk.
#[derive(Debug, Parser)]
#[command(name = "tiling-ss", version)]
pub struct RunConfig {
    /// Worker threads; 0 uses every core.
    #[arg(long, global = true, default_value_t = 0)]
    pub jobs: usize,
    /// Seed for the randomized converse sweep in `check-all`.
    #[arg(long, global = true, default_value_t = 1)]
    pub seed: u64,
    /// Output format; `dot` is available for `facets` (flip graph) and `poset`.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Facets of the noncrossing complex with marked corners and colors.
    Facets { tree: PathBuf },
    /// g- and c-vectors of the colored arcs of every facet.
    Vectors { tree: PathBuf },
    /// Quiver, relations, algebra dimension and string modules.
    Modules { tree: PathBuf },
    /// Noncrossing tree partitions, one per facet.
    Ncp { tree: PathBuf },
    /// Kreweras complements and orbit sizes.
    Kreweras { tree: PathBuf },
    /// Torsion pairs of every partition.
    Torsion { tree: PathBuf },
    /// Semistable and stable modules of a stability condition.
    Semistable {
        /// Integers in canonical edge order, e.g. "1,-1".
        #[arg(long, allow_hyphen_values = true)]
        theta: String,
        tree: PathBuf,
    },
    /// Checks that every Kreweras stability condition cuts out its wide subcategory.
    #[command(name = "verify-thm1")]
    VerifyThm1 { tree: PathBuf },
    /// The lattice of partitions or of semistable subcategories.
    Poset {
        #[arg(long, value_enum)]
        which: Which,
        tree: PathBuf,
    },
    /// Runs every invariant suite; with no trees, on the shipped fixtures.
    #[command(name = "check-all")]
    CheckAll { trees: Vec<PathBuf> },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Facets { .. } => "facets",
            Command::Vectors { .. } => "vectors",
            Command::Modules { .. } => "modules",
            Command::Ncp { .. } => "ncp",
            Command::Kreweras { .. } => "kreweras",
            Command::Torsion { .. } => "torsion",
            Command::Semistable { .. } => "semistable",
            Command::VerifyThm1 { .. } => "verify-thm1",
            Command::Poset { .. } => "poset",
            Command::CheckAll { .. } => "check-all",
        }
    }
}

/// Rendered output of one command.
struct Report {
    body: String,
    code: i32,
}

impl Report {
    fn ok(body: String) -> Report {
        Report { body, code: EXIT_OK }
    }
}

enum Failure {
    Input(String),
    Engine(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::Parse { .. } | Error::InvalidTree(_) | Error::Dimension { .. } => Failure::Input(e.to_string()),
            _ => Failure::Engine(e.to_string()),
        }
    }
}

/// Runs the tool with process arguments, writing to stdout and stderr.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_to(argv, &mut stdout.lock(), &mut stderr.lock())
}

pub fn run_to<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(config.jobs).build() {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "error: cannot start {} worker threads: {}", config.jobs, e);
            return EXIT_INPUT;
        }
    };
    match pool.install(|| execute(&config)) {
        Ok(report) => {
            let _ = out.write_all(report.body.as_bytes());
            report.code
        }
        Err(Failure::Input(msg)) => {
            let _ = writeln!(err, "error: {}", msg);
            EXIT_INPUT
        }
        Err(Failure::Engine(msg)) => {
            let _ = writeln!(err, "verification error: {}", msg);
            EXIT_FAILED
        }
    }
}

fn load(path: &Path) -> Result<EmbeddedTree, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {}", path.display(), e)))?;
    parse_tree(&text).map_err(|e| Failure::Input(format!("{}: {}", path.display(), e)))
}

fn execute(config: &RunConfig) -> Result<Report, Failure> {
    let dot_ok = matches!(config.command, Command::Facets { .. } | Command::Poset { .. });
    if config.format == Format::Dot && !dot_ok {
        return Err(Failure::Input(format!("`{}` has no dot output; use text or json", config.command.name())));
    }
    let ctx = Ctx { config };
    match &config.command {
        Command::Facets { tree } => ctx.facets(tree),
        Command::Vectors { tree } => ctx.vectors(tree),
        Command::Modules { tree } => ctx.modules(tree),
        Command::Ncp { tree } => ctx.ncp(tree),
        Command::Kreweras { tree } => ctx.kreweras(tree),
        Command::Torsion { tree } => ctx.torsion(tree),
        Command::Semistable { theta, tree } => ctx.semistable(theta, tree),
        Command::VerifyThm1 { tree } => ctx.verify(tree),
        Command::Poset { which, tree } => ctx.poset(*which, tree),
        Command::CheckAll { trees } => ctx.check_all(trees),
    }
}

struct Ctx<'a> {
    config: &'a RunConfig,
}

fn names(tree: &EmbeddedTree, vs: &[usize]) -> Vec<String> {
    vs.iter().map(|&v| tree.name(v).to_string()).collect()
}

fn seg_json(tree: &EmbeddedTree, s: &Segment) -> Value {
    json!(names(tree, s.vertices()))
}

fn set_json(tree: &EmbeddedTree, set: &BTreeSet<Segment>) -> Value {
    Value::Array(set.iter().map(|s| seg_json(tree, s)).collect())
}

fn partition_json(tree: &EmbeddedTree, b: &TreePartition) -> Value {
    json!({
        "blocks": b.blocks().iter().map(|bl| names(tree, bl)).collect::<Vec<_>>(),
        "red_segments": b.red_segments().iter().map(|s| seg_json(tree, s)).collect::<Vec<_>>(),
        "green_segments": b.green_segments().iter().map(|s| seg_json(tree, s)).collect::<Vec<_>>(),
    })
}

fn arc_json(tree: &EmbeddedTree, fa: &FacetArc) -> Value {
    let (a, b) = fa.arc.leaves();
    json!({
        "leaves": [tree.name(a), tree.name(b)],
        "path": names(tree, fa.arc.path()),
        "kind": fa.kind,
        "marks": fa.marks.iter().map(|c| json!([tree.name(c.vertex), c.face])).collect::<Vec<_>>(),
    })
}

fn arc_text(tree: &EmbeddedTree, fa: &FacetArc) -> String {
    let marks: Vec<String> = fa.marks.iter().map(|c| format!("({},F{})", tree.name(c.vertex), c.face)).collect();
    format!("{:<8} {}  marks {}", fa.kind.as_str(), fa.arc.display(tree), marks.join(" "))
}

fn vec_text(tree: &EmbeddedTree, v: &IntVector) -> String {
    tree.display_vector(v.as_slice())
}

impl Ctx<'_> {
    fn header(&self, path: &Path) -> String {
        format!("# {} {} (seed {})\n", self.config.command.name(), path.display(), self.config.seed)
    }

    fn json(&self, path: Option<&Path>, mut body: Value) -> String {
        let obj = body.as_object_mut().expect("report bodies are objects");
        obj.insert("format_version".into(), json!(FORMAT_VERSION));
        obj.insert("command".into(), json!(self.config.command.name()));
        obj.insert("seed".into(), json!(self.config.seed));
        if let Some(p) = path {
            obj.insert("tree".into(), json!(p.display().to_string()));
        }
        let mut s = serde_json::to_string_pretty(&body).expect("json values serialize");
        s.push('\n');
        s
    }

    fn facets(&self, path: &Path) -> Result<Report, Failure> {
        let tree = load(path)?;
        let d = TreeData::new(&tree)?;
        match self.config.format {
            Format::Dot => {
                let mut out = String::from("graph flips {\n");
                let index: std::collections::BTreeMap<_, _> =
                    d.facets.iter().enumerate().map(|(i, f)| (f.plain_arcs(), i)).collect();
                for i in 0..d.facets.len() {
                    writeln!(out, "  f{} [label=\"F{}\"];", i, i).unwrap();
                }
                for (i, f) in d.facets.iter().enumerate() {
                    let mut ns: Vec<usize> = flip_neighbors(&tree, &d.arcs, f)?
                        .iter()
                        .filter_map(|g| index.get(&g.plain_arcs()).copied())
                        .filter(|&j| j > i)
                        .collect();
                    ns.sort();
                    ns.dedup();
                    for j in ns {
                        writeln!(out, "  f{} -- f{};", i, j).unwrap();
                    }
                }
                out.push_str("}\n");
                Ok(Report::ok(out))
            }
            Format::Json => {
                let fs: Vec<Value> = d
                    .facets
                    .iter()
                    .enumerate()
                    .map(|(i, f)| json!({"index": i, "arcs": f.arcs().iter().map(|fa| arc_json(&tree, fa)).collect::<Vec<_>>()}))
                    .collect();
                Ok(Report::ok(self.json(Some(path), json!({"arc_count": d.arcs.len(), "facets": fs}))))
            }
            Format::Text => {
                let mut out = self.header(path);
                writeln!(out, "{} arcs, {} facets", d.arcs.len(), d.facets.len()).unwrap();
                for (i, f) in d.facets.iter().enumerate() {
                    writeln!(out, "F{}:", i).unwrap();
                    for fa in f.arcs() {
                        writeln!(out, "  {}", arc_text(&tree, fa)).unwrap();
                    }
                }
                Ok(Report::ok(out))
            }
        }
    }

    fn vectors(&self, path: &Path) -> Result<Report, Failure> {
        let tree = load(path)?;
        let d = TreeData::new(&tree)?;
        let legend: Vec<String> = (0..tree.dim()).map(|e| tree.edge_label(e)).collect();
        let mut rows = Vec::new();
        for f in &d.facets {
            let mut arcs = Vec::new();
            for fa in f.colored() {
                let s = segment_of(&tree, f, &fa.arc)?;
                arcs.push((fa, g_vector(&tree, &fa.arc), c_vector(&tree, f, &fa.arc)?, s));
            }
            rows.push((arcs, kreweras_theta(&tree, f)));
        }
        if self.config.format == Format::Json {
            let fs: Vec<Value> = rows
                .iter()
                .enumerate()
                .map(|(i, (arcs, theta))| {
                    json!({
                        "index": i,
                        "theta": theta.as_slice(),
                        "arcs": arcs.iter().map(|(fa, g, c, s)| json!({
                            "path": names(&tree, fa.arc.path()),
                            "kind": fa.kind,
                            "g": g.as_slice(),
                            "c": c.as_slice(),
                            "segment": seg_json(&tree, s),
                        })).collect::<Vec<_>>(),
                    })
                })
                .collect();
            return Ok(Report::ok(self.json(Some(path), json!({"edges": legend, "facets": fs}))));
        }
        let mut out = self.header(path);
        out.push_str("edges:");
        for (e, l) in legend.iter().enumerate() {
            write!(out, " e{}={}", e, l).unwrap();
        }
        out.push('\n');
        for (i, (arcs, theta)) in rows.iter().enumerate() {
            writeln!(out, "F{}: theta {}", i, vec_text(&tree, theta)).unwrap();
            for (fa, g, c, s) in arcs {
                writeln!(
                    out,
                    "  {:<5} {}  g {}  c {}  segment {}",
                    fa.kind.as_str(),
                    fa.arc.display(&tree),
                    vec_text(&tree, g),
                    vec_text(&tree, c),
                    tree.display_segment(s)
                )
                .unwrap();
            }
        }
        Ok(Report::ok(out))
    }

    fn modules(&self, path: &Path) -> Result<Report, Failure> {
        let tree = load(path)?;
        let d = TreeData::new(&tree)?;
        let alg = d.category.algebra();
        let dim = algebra_dimension(&tree)?;
        let mods = indecomposables(&tree);
        let arrow = |a: usize| {
            let ar = &alg.quiver.arrows[a];
            (tree.edge_label(ar.source), tree.edge_label(ar.target))
        };
        if self.config.format == Format::Json {
            let ms: Vec<Value> = mods
                .iter()
                .map(|m| {
                    json!({
                        "segment": seg_json(&tree, &m.segment),
                        "dim_vector": m.dim_vector.as_slice(),
                        "submodules": set_json(&tree, &sub_indecs(&tree, &m.segment)),
                        "quotients": set_json(&tree, &quot_indecs(&tree, &m.segment)),
                    })
                })
                .collect();
            let arrows: Vec<Value> = (0..alg.quiver.arrows.len()).map(|a| json!(arrow(a))).collect();
            let rels: Vec<Value> = alg.relations.forbidden.iter().map(|r| json!([r.first, r.second])).collect();
            return Ok(Report::ok(self.json(
                Some(path),
                json!({"algebra_dimension": dim, "arrows": arrows, "relations": rels, "modules": ms}),
            )));
        }
        let mut out = self.header(path);
        writeln!(out, "quiver: {} vertices, {} arrows", alg.quiver.vertex_count, alg.quiver.arrows.len()).unwrap();
        for a in 0..alg.quiver.arrows.len() {
            let (s, t) = arrow(a);
            writeln!(out, "  a{}: {} -> {}", a, s, t).unwrap();
        }
        writeln!(out, "relations: {}", alg.relations.forbidden.len()).unwrap();
        for r in &alg.relations.forbidden {
            writeln!(out, "  a{} a{} = 0", r.first, r.second).unwrap();
        }
        writeln!(out, "algebra dimension: {}", dim).unwrap();
        writeln!(out, "indecomposables: {}", mods.len()).unwrap();
        for m in &mods {
            writeln!(
                out,
                "  M{}  dim {}  sub {}  quot {}",
                tree.display_segment(&m.segment),
                vec_text(&tree, &m.dim_vector),
                display_set(&tree, &sub_indecs(&tree, &m.segment)),
                display_set(&tree, &quot_indecs(&tree, &m.segment))
            )
            .unwrap();
        }
        Ok(Report::ok(out))
    }

    fn ncp(&self, path: &Path) -> Result<Report, Failure> {
        let tree = load(path)?;
        let d = TreeData::new(&tree)?;
        if self.config.format == Format::Json {
            let ps: Vec<Value> = d.partitions.iter().map(|b| partition_json(&tree, b)).collect();
            return Ok(Report::ok(self.json(Some(path), json!({"partitions": ps}))));
        }
        let mut out = self.header(path);
        writeln!(out, "{} partitions", d.partitions.len()).unwrap();
        for (i, b) in d.partitions.iter().enumerate() {
            let list = |segs: &[Segment]| {
                if segs.is_empty() {
                    "-".to_string()
                } else {
                    segs.iter().map(|s| tree.display_segment(s)).collect::<Vec<_>>().join(" ")
                }
            };
            writeln!(
                out,
                "F{}: {}  red {}  green {}",
                i,
                b.display(&tree),
                list(b.red_segments()),
                list(b.green_segments())
            )
            .unwrap();
        }
        Ok(Report::ok(out))
    }

    fn kreweras(&self, path: &Path) -> Result<Report, Failure> {
        let tree = load(path)?;
        let d = TreeData::new(&tree)?;
        let images: Vec<usize> =
            d.partitions.iter().map(|b| kreweras_index(&tree, &d.partitions, b)).collect::<Result<_, _>>()?;
        let orbits = kreweras_orbits(&tree, &d.partitions)?;
        if self.config.format == Format::Json {
            let pairs: Vec<Value> = d
                .partitions
                .iter()
                .zip(&images)
                .map(|(b, &k)| json!({"partition": b.blocks().iter().map(|bl| names(&tree, bl)).collect::<Vec<_>>(), "image": k}))
                .collect();
            return Ok(Report::ok(self.json(Some(path), json!({"complements": pairs, "orbit_sizes": orbits}))));
        }
        let mut out = self.header(path);
        for (b, &k) in d.partitions.iter().zip(&images) {
            writeln!(out, "{} -> {}", b.display(&tree), d.partitions[k].display(&tree)).unwrap();
        }
        let sizes: Vec<String> = orbits.iter().map(usize::to_string).collect();
        writeln!(out, "orbit sizes: {}", sizes.join(" ")).unwrap();
        Ok(Report::ok(out))
    }

    fn torsion(&self, path: &Path) -> Result<Report, Failure> {
        let tree = load(path)?;
        let d = TreeData::new(&tree)?;
        let pairs: Vec<_> = d.partitions.iter().map(|b| (b, torsion_pair(&tree, b))).collect();
        if self.config.format == Format::Json {
            let ps: Vec<Value> = pairs
                .iter()
                .map(|(b, tp)| {
                    json!({
                        "partition": b.blocks().iter().map(|bl| names(&tree, bl)).collect::<Vec<_>>(),
                        "torsion": set_json(&tree, &tp.torsion),
                        "torsion_free": set_json(&tree, &tp.torsion_free),
                    })
                })
                .collect();
            return Ok(Report::ok(self.json(Some(path), json!({"pairs": ps}))));
        }
        let mut out = self.header(path);
        for (b, tp) in &pairs {
            writeln!(
                out,
                "{}  T {}  F {}",
                b.display(&tree),
                display_set(&tree, &tp.torsion),
                display_set(&tree, &tp.torsion_free)
            )
            .unwrap();
        }
        Ok(Report::ok(out))
    }

    fn semistable(&self, theta: &str, path: &Path) -> Result<Report, Failure> {
        let tree = load(path)?;
        let theta = StabilityCondition::parse(theta, tree.dim()).map_err(|e| {
            Failure::Input(format!("bad --theta ({}): expected {} comma-separated integers", e, tree.dim()))
        })?;
        let ss = semistable_subcat(&tree, &theta);
        let st = stable_modules(&tree, &theta);
        let cat = crate::string_modules::ModuleCategory::new(&tree)?;
        let wide = cat.is_wide(&ss)?;
        if self.config.format == Format::Json {
            return Ok(Report::ok(self.json(
                Some(path),
                json!({"theta": theta.theta.as_slice(), "semistable": set_json(&tree, &ss), "stable": set_json(&tree, &st), "wide": wide}),
            )));
        }
        let mut out = self.header(path);
        writeln!(out, "theta {}", vec_text(&tree, &theta.theta)).unwrap();
        writeln!(out, "semistable ({}): {}", ss.len(), display_set(&tree, &ss)).unwrap();
        writeln!(out, "stable ({}): {}", st.len(), display_set(&tree, &st)).unwrap();
        writeln!(out, "wide: {}", wide).unwrap();
        Ok(Report::ok(out))
    }

    fn verify(&self, path: &Path) -> Result<Report, Failure> {
        let tree = load(path)?;
        let d = TreeData::new(&tree)?;
        let reports = verify_theorem1(&tree, &d.facets, &d.partitions);
        let passed = reports.iter().filter(|r| r.passed()).count();
        let code = if passed == reports.len() { EXIT_OK } else { EXIT_FAILED };
        if self.config.format == Format::Json {
            let rows: Vec<Value> = reports
                .iter()
                .map(|r| {
                    json!({
                        "facet": r.facet,
                        "theta": r.theta.as_slice(),
                        "passed": r.passed(),
                        "semistable": set_json(&tree, &r.semistable),
                        "expected": set_json(&tree, &r.expected),
                        "red_stable": r.red_stable,
                        "composites_not_stable": r.composites_not_stable,
                    })
                })
                .collect();
            let body = self.json(Some(path), json!({"passed": passed, "total": reports.len(), "facets": rows}));
            return Ok(Report { body, code });
        }
        let mut out = self.header(path);
        let failing: Vec<_> = reports.iter().filter(|r| !r.passed()).collect();
        if !failing.is_empty() {
            writeln!(out, "facet  theta  semistable  expected  red-stable  composites").unwrap();
            for r in failing {
                writeln!(
                    out,
                    "F{}  {}  {}  {}  {}  {}",
                    r.facet,
                    vec_text(&tree, &r.theta),
                    display_set(&tree, &r.semistable),
                    display_set(&tree, &r.expected),
                    r.red_stable,
                    r.composites_not_stable
                )
                .unwrap();
            }
        }
        writeln!(out, "{}/{} facets pass", passed, reports.len()).unwrap();
        Ok(Report { body: out, code })
    }

    fn poset(&self, which: Which, path: &Path) -> Result<Report, Failure> {
        let tree = load(path)?;
        let d = TreeData::new(&tree)?;
        let (poset, name) = match which {
            Which::Ncp => (ncp_poset(&tree, &d.partitions), "ncp"),
            Which::Ss => (ss_poset(&tree, &d.facets).0, "ss"),
        };
        let body = match self.config.format {
            Format::Dot => poset.to_dot(name),
            Format::Json => self.json(
                Some(path),
                json!({"which": name, "poset": serde_json::to_value(poset.to_json()).expect("poset serializes")}),
            ),
            Format::Text => {
                let mut out = self.header(path);
                writeln!(out, "{} elements, height {}", poset.len(), poset.height()).unwrap();
                for (i, l) in poset.labels().iter().enumerate() {
                    writeln!(out, "  {}: {}", i, l).unwrap();
                }
                writeln!(out, "covers:").unwrap();
                for (i, j) in poset.hasse_edges() {
                    writeln!(out, "  {} < {}", i, j).unwrap();
                }
                out
            }
        };
        Ok(Report::ok(body))
    }

    fn check_all(&self, paths: &[PathBuf]) -> Result<Report, Failure> {
        let trees: Vec<(String, EmbeddedTree)> = if paths.is_empty() {
            fixtures::all().into_iter().map(|(n, t)| (n.to_string(), t)).collect()
        } else {
            paths.iter().map(|p| Ok((p.display().to_string(), load(p)?))).collect::<Result<_, Failure>>()?
        };
        let mut results = Vec::new();
        for (name, tree) in &trees {
            results.push((name, checks::run_all(tree, self.config.seed)?));
        }
        let all_passed = results.iter().all(|(_, r)| r.passed());
        let code = if all_passed { EXIT_OK } else { EXIT_FAILED };
        if self.config.format == Format::Json {
            let rows: Vec<Value> = results
                .iter()
                .map(|(n, r)| json!({"tree": n, "passed": r.passed(), "checks": r.checks, "warnings": r.warnings}))
                .collect();
            return Ok(Report { body: self.json(None, json!({"passed": all_passed, "trees": rows})), code });
        }
        let mut out = format!("# check-all (seed {})\n", self.config.seed);
        for (name, r) in &results {
            writeln!(out, "{}:", name).unwrap();
            for c in &r.checks {
                writeln!(out, "  {} {:<28} {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail).unwrap();
            }
            for w in &r.warnings {
                writeln!(out, "  warning: {}", w).unwrap();
            }
        }
        let n_checks: usize = results.iter().map(|(_, r)| r.checks.len()).sum();
        let n_pass: usize = results.iter().map(|(_, r)| r.checks.iter().filter(|c| c.passed).count()).sum();
        writeln!(out, "{}/{} checks pass", n_pass, n_checks).unwrap();
        Ok(Report { body: out, code })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2_path() -> String {
        concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/a2.tree").to_string()
    }

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("tiling-ss").chain(args.iter().copied());
        let code = run_to(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn verify_a2() {
        let p = a2_path();
        let (code, out, _) = run_capture(&["verify-thm1", &p]);
        assert_eq!(code, 0);
        assert!(out.ends_with("5/5 facets pass\n"), "{}", out);
    }

    #[test]
    fn zero_theta_gives_everything() {
        let p = a2_path();
        let (code, out, _) = run_capture(&["semistable", "--theta", "0,0", &p]);
        assert_eq!(code, 0);
        assert!(out.contains("semistable (3)"), "{}", out);
    }

    #[test]
    fn wrong_theta_length_is_an_input_error() {
        let p = a2_path();
        let (code, _, err) = run_capture(&["semistable", "--theta", "1", &p]);
        assert_eq!(code, 2);
        assert!(err.contains("expected 2"), "{}", err);
        let (code, _, _) = run_capture(&["semistable", "--theta", "1,x", &p]);
        assert_eq!(code, 2);
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(run_capture(&["frobnicate"]).0, 2);
        assert_eq!(run_capture(&["facets", "/no/such/file.tree"]).0, 2);
        assert_eq!(run_capture(&["ncp", "--format", "dot", &a2_path()]).0, 2);
        assert_eq!(run_capture(&["--help"]).0, 0);
    }

    #[test]
    fn json_is_versioned_and_stable() {
        let p = a2_path();
        let (_, a, _) = run_capture(&["vectors", "--format", "json", "--jobs", "2", &p]);
        let (_, b, _) = run_capture(&["vectors", "--format", "json", "--jobs", "1", &p]);
        assert_eq!(a, b);
        let v: Value = serde_json::from_str(&a).unwrap();
        assert_eq!(v["format_version"], json!(FORMAT_VERSION));
        assert_eq!(v["seed"], json!(1));
    }
}
