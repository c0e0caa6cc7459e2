use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use homtop::graph::Graph;
use homtop::homcomplex::{cellular_chain_complex, enumerate_multihoms, multihom_poset, restricted_cells};
use homtop::homology::{homology_summary, mod2_summary};
use homtop::neighborhoods::{verify_neighborhood_pair, TripleSpace};
use homtop::verify::{self, sphere_boundary_faces, Budget, Scenario};
use homtop::{HomologySummary, MultiHom, Poset, RestrictionMethod, SimplicialComplex, Status, VerificationReport, VertexSet};

/// Graph homomorphism complexes, restricted models, interval subdivisions and
/// exact homology.
#[derive(Parser)]
#[command(name = "homtop", version)]
struct Cli {
    /// Worker threads (default: all cores). Results do not depend on it.
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Include wall-clock times in verification reports.
    #[arg(long, global = true)]
    timings: bool,

    /// Suppress progress messages on stderr.
    #[arg(long, short, global = true)]
    quiet: bool,

    #[command(flatten)]
    budget: BudgetArgs,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct BudgetArgs {
    /// Largest n accepted by the Stiefel-family scenarios.
    #[arg(long, global = true)]
    max_n: Option<u32>,
    /// Largest poset materialized with its full order relation.
    #[arg(long, global = true)]
    max_poset_elements: Option<usize>,
    /// Largest order complex (total faces) that is built.
    #[arg(long, global = true)]
    max_order_complex_faces: Option<u128>,
    /// Largest complex (total cells) given integral homology.
    #[arg(long, global = true)]
    max_integral_cells: Option<usize>,
}

impl BudgetArgs {
    fn resolve(&self) -> Budget {
        let d = Budget::default();
        Budget {
            max_n: self.max_n.unwrap_or(d.max_n),
            max_poset_elements: self.max_poset_elements.unwrap_or(d.max_poset_elements),
            max_order_complex_faces: self.max_order_complex_faces.unwrap_or(d.max_order_complex_faces),
            max_integral_cells: self.max_integral_cells.unwrap_or(d.max_integral_cells),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Build Hom(G, H) or Hom_S(G, H) and print its cell counts.
    Hom {
        #[command(flatten)]
        pair: GraphPair,
        /// Print every cell.
        #[arg(long)]
        list: bool,
    },
    /// Homology of a face-list file or of a Hom complex.
    Homology {
        /// Face-list file (one face per line, vertex labels separated by spaces).
        #[arg(long, conflicts_with_all = ["g", "g_file", "h", "h_file", "restrict"])]
        faces: Option<PathBuf>,
        #[command(flatten)]
        pair: OptionalGraphPair,
        /// Use the cellular chain complex of the Hom complex instead of the
        /// order complex of its face poset.
        #[arg(long)]
        cellular: bool,
        /// Compute mod-2 Betti numbers only.
        #[arg(long)]
        mod2_only: bool,
    },
    /// Interval-poset subdivision of a poset.
    Subdivide {
        #[command(flatten)]
        poset: PosetSource,
        /// Print the elements and cover relations of Int P.
        #[arg(long)]
        covers: bool,
    },
    /// Build the N/B/D triple posets and check the neighbourhood structure.
    Neighborhood {
        #[command(flatten)]
        poset: PosetSource,
        /// Print the triples of one of the posets.
        #[arg(long, value_enum)]
        list: Option<TripleSet>,
    },
    /// Run one verification scenario.
    Verify {
        /// One of stiefel, small-homology, full-vs-small, involution, manifold, dual,
        /// subdivision, restriction, neighborhood.
        scenario: String,
        /// Size parameter: K_{n+2} for the Stiefel family, K_n for manifold.
        #[arg(long)]
        n: Option<u32>,
        /// Graph for the manifold and dual scenarios.
        #[arg(long)]
        g: Option<String>,
        /// Independent set for the dual scenario, e.g. `2,4`.
        #[arg(long)]
        s: Option<String>,
        /// Poset for the subdivision scenario: `chain:<k>` or `sphere:<n>`
        /// (faces of the boundary of the (n+1)-simplex).
        #[arg(long)]
        poset: Option<String>,
        /// Skip integral homology in the small-homology scenario.
        #[arg(long)]
        mod2_only: bool,
    },
    /// Run the full acceptance battery.
    ReportAll,
}

#[derive(Args)]
struct GraphPair {
    /// Source graph literal: `cycle:<n>`, `complete:<n>` or `path:<n>`.
    #[arg(long, required_unless_present = "g_file")]
    g: Option<String>,
    /// Source graph as an edge-list file.
    #[arg(long, conflicts_with = "g")]
    g_file: Option<PathBuf>,
    /// Target graph literal.
    #[arg(long, required_unless_present = "h_file")]
    h: Option<String>,
    /// Target graph as an edge-list file.
    #[arg(long, conflicts_with = "h")]
    h_file: Option<PathBuf>,
    /// Restrict to G \ S for the vertex set S, e.g. `2,4`.
    #[arg(long)]
    restrict: Option<String>,
}

#[derive(Args)]
struct OptionalGraphPair {
    #[arg(long)]
    g: Option<String>,
    #[arg(long, conflicts_with = "g")]
    g_file: Option<PathBuf>,
    #[arg(long)]
    h: Option<String>,
    #[arg(long, conflicts_with = "h")]
    h_file: Option<PathBuf>,
    #[arg(long)]
    restrict: Option<String>,
}

#[derive(Args)]
struct PosetSource {
    /// Face poset of the boundary of the (n+1)-simplex.
    #[arg(long, conflicts_with_all = ["chain", "faces"])]
    sphere: Option<u32>,
    /// Chain with k elements.
    #[arg(long, conflicts_with = "faces")]
    chain: Option<usize>,
    /// Face poset of the complex in a face-list file.
    #[arg(long)]
    faces: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum TripleSet {
    N,
    B,
    D,
}

/// Errors in the user's input: exit status 2.
#[derive(Debug)]
struct UsageError(String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

fn usage(message: impl Into<String>) -> anyhow::Error {
    UsageError(message.into()).into()
}

struct Ctx {
    format: Format,
    timings: bool,
    quiet: bool,
    budget: Budget,
}

impl Ctx {
    fn progress(&self, message: &str) {
        if !self.quiet {
            eprintln!("homtop: {message}");
        }
    }

    fn emit<T: Serialize>(&self, value: &T, text: impl FnOnce() -> String) -> Result<()> {
        match self.format {
            Format::Json => println!("{}", serde_json::to_string_pretty(value)?),
            Format::Text => print!("{}", text()),
        }
        Ok(())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if t == 0 {
            eprintln!("error: --threads must be at least 1");
            return ExitCode::from(2);
        }
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let ctx = Ctx { format: cli.format, timings: cli.timings, quiet: cli.quiet, budget: cli.budget.resolve() };
    match run(&ctx, cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            // bad input and violated preconditions are usage errors
            let input = e.is::<UsageError>() || e.is::<homtop::Error>() || e.is::<std::io::Error>();
            ExitCode::from(if input { 2 } else { 1 })
        }
    }
}

/// Returns whether every executed check passed.
fn run(ctx: &Ctx, command: Command) -> Result<bool> {
    match command {
        Command::Hom { pair: args, list } => {
            let (pair, s) = graph_pair(&args.g, &args.g_file, &args.h, &args.h_file, &args.restrict)?;
            hom(ctx, &pair, s, list)
        }
        Command::Homology { faces, pair: args, cellular, mod2_only } => match faces {
            Some(path) => homology_of_faces(ctx, &path, mod2_only),
            None => {
                if args.g.is_none() && args.g_file.is_none() {
                    return Err(usage("homology needs --faces or --g/--h"));
                }
                let (pair, s) = graph_pair(&args.g, &args.g_file, &args.h, &args.h_file, &args.restrict)?;
                homology_of_hom(ctx, &pair, s, cellular, mod2_only)
            }
        },
        Command::Subdivide { poset, covers } => subdivide(ctx, &poset, covers),
        Command::Neighborhood { poset, list } => neighborhood(ctx, &poset, list),
        Command::Verify { scenario, n, g, s, poset, mod2_only } => {
            let scenario: Scenario = scenario.parse().map_err(|e: homtop::Error| usage(e.to_string()))?;
            verify_one(ctx, scenario, n, g, s, poset, mod2_only)
        }
        Command::ReportAll => report_all(ctx),
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn load_graph(literal: &Option<String>, file: &Option<PathBuf>, flag: &str) -> Result<(Graph, String)> {
    match (literal, file) {
        (Some(l), _) => Ok((Graph::from_literal(l)?, l.clone())),
        (None, Some(p)) => Ok((Graph::parse_edge_list(&read(p)?)?, p.display().to_string())),
        (None, None) => Err(usage(format!("missing --{flag}"))),
    }
}

fn parse_vertex_set(text: &str) -> Result<VertexSet> {
    let labels = text
        .split(',')
        .filter(|x| !x.trim().is_empty())
        .map(|x| x.trim().parse::<u32>().map_err(|_| usage(format!("bad vertex label {x:?} in {text:?}"))))
        .collect::<Result<Vec<_>>>()?;
    Ok(VertexSet::from_labels(labels)?)
}

struct LabelledPair {
    g: Graph,
    g_label: String,
    h: Graph,
    h_label: String,
}

fn graph_pair(
    g: &Option<String>,
    g_file: &Option<PathBuf>,
    h: &Option<String>,
    h_file: &Option<PathBuf>,
    restrict: &Option<String>,
) -> Result<(LabelledPair, Option<VertexSet>)> {
    let (g, g_label) = load_graph(g, g_file, "g")?;
    let (h, h_label) = load_graph(h, h_file, "h")?;
    let s = restrict.as_deref().map(parse_vertex_set).transpose()?;
    Ok((LabelledPair { g, g_label, h, h_label }, s))
}

impl LabelledPair {
    fn title(&self, s: Option<VertexSet>) -> String {
        match s {
            Some(s) => format!("Hom_{s}({}, {})", self.g_label, self.h_label),
            None => format!("Hom({}, {})", self.g_label, self.h_label),
        }
    }

    fn cells(&self, s: Option<VertexSet>) -> Result<Vec<MultiHom>> {
        Ok(match s {
            None => enumerate_multihoms(&self.g, &self.h),
            Some(s) => {
                let method =
                    if self.g.is_independent(s) { RestrictionMethod::Criterion } else { RestrictionMethod::Image };
                restricted_cells(&self.g, &self.h, s, method)?
            }
        })
    }
}

#[derive(Serialize)]
struct HomOutput {
    command: &'static str,
    complex: String,
    cells: usize,
    cells_by_dimension: Vec<usize>,
    dimension: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    list: Option<Vec<String>>,
}

fn hom(ctx: &Ctx, pair: &LabelledPair, s: Option<VertexSet>, list: bool) -> Result<bool> {
    let title = pair.title(s);
    ctx.progress(&format!("enumerating {title}"));
    let cells = pair.cells(s)?;
    let dimension = cells.iter().map(|c| c.dim() as i64).max().unwrap_or(-1);
    let mut by_dim = vec![0usize; (dimension + 1) as usize];
    for c in &cells {
        by_dim[c.dim()] += 1;
    }
    let out = HomOutput {
        command: "hom",
        complex: title.clone(),
        cells: cells.len(),
        cells_by_dimension: by_dim,
        dimension,
        list: list.then(|| cells.iter().map(MultiHom::compact).collect()),
    };
    ctx.emit(&out, || {
        if cells.is_empty() {
            return format!("{title}: empty complex\n");
        }
        let counts: Vec<String> = out.cells_by_dimension.iter().map(|c| c.to_string()).collect();
        let mut text =
            format!("{title}\ncells {}\ncells by dimension ({})\ndimension {dimension}\n", out.cells, counts.join(","));
        for c in out.list.iter().flatten() {
            text.push_str(&format!("{c}\n"));
        }
        text
    })?;
    Ok(true)
}

#[derive(Serialize)]
struct HomologyOutput {
    command: &'static str,
    source: String,
    chain_complex: &'static str,
    cells: Vec<usize>,
    homology: HomologySummary,
}

fn emit_homology(ctx: &Ctx, out: HomologyOutput) -> Result<bool> {
    let consistent = out.homology.consistent_mod2();
    ctx.emit(&out, || {
        let cells: Vec<String> = out.cells.iter().map(|c| c.to_string()).collect();
        let mut text = format!("{} ({})\ncells ({})\n", out.source, out.chain_complex, cells.join(","));
        text.push_str(&out.homology.to_text());
        if let Some(g) = out.homology.groups_text() {
            text.push_str(&format!("groups {g}\n"));
        }
        if let Some(b) = out.homology.betti() {
            let b: Vec<String> = b.iter().map(|x| x.to_string()).collect();
            text.push_str(&format!("b ({})\n", b.join(",")));
        }
        let b2: Vec<String> = out.homology.mod2.iter().map(|b| b.to_string()).collect();
        text.push_str(&format!("b2 ({})\n", b2.join(",")));
        text
    })?;
    Ok(consistent)
}

fn simplicial_homology(ctx: &Ctx, k: &SimplicialComplex, mod2_only: bool) -> Result<HomologySummary> {
    let total = k.f_vector().total();
    if mod2_only || total > ctx.budget.max_integral_cells {
        if !mod2_only {
            ctx.progress(&format!("{total} faces exceed the integral budget; computing mod 2 only"));
        }
        Ok(mod2_summary(k))
    } else {
        Ok(homology_summary(k)?)
    }
}

fn homology_of_faces(ctx: &Ctx, path: &Path, mod2_only: bool) -> Result<bool> {
    let k = SimplicialComplex::parse_face_list(&read(path)?)?;
    let homology = simplicial_homology(ctx, &k, mod2_only)?;
    emit_homology(
        ctx,
        HomologyOutput {
            command: "homology",
            source: path.display().to_string(),
            chain_complex: "simplicial",
            cells: k.f_vector().counts,
            homology,
        },
    )
}

fn homology_of_hom(
    ctx: &Ctx,
    pair: &LabelledPair,
    s: Option<VertexSet>,
    cellular: bool,
    mod2_only: bool,
) -> Result<bool> {
    let title = pair.title(s);
    ctx.progress(&format!("enumerating {title}"));
    let cells = pair.cells(s)?;
    if cellular {
        let cc = cellular_chain_complex(&cells)?;
        if let Err(d) = cc.check_boundary_squared() {
            bail!("cellular boundary does not square to zero in degree {} (column {})", d.dim, d.column);
        }
        let homology = if mod2_only || cc.cells.iter().sum::<usize>() > ctx.budget.max_integral_cells {
            HomologySummary { integral: None, mod2: cc.betti_mod2() }
        } else {
            cc.homology()?
        };
        return emit_homology(
            ctx,
            HomologyOutput { command: "homology", source: title, chain_complex: "cellular", cells: cc.cells, homology },
        );
    }
    if cells.len() > ctx.budget.max_poset_elements {
        return Err(usage(format!(
            "{title} has {} cells, over the poset budget {}; use --cellular or --max-poset-elements",
            cells.len(),
            ctx.budget.max_poset_elements
        )));
    }
    let poset = multihom_poset(cells);
    let faces: u128 = poset.chain_counts().iter().sum();
    if faces > ctx.budget.max_order_complex_faces {
        return Err(usage(format!(
            "order complex has {faces} faces, over the budget {}; use --cellular or --max-order-complex-faces",
            ctx.budget.max_order_complex_faces
        )));
    }
    ctx.progress(&format!("building the order complex ({faces} faces)"));
    let k = poset.order_complex();
    let homology = simplicial_homology(ctx, &k, mod2_only)?;
    emit_homology(
        ctx,
        HomologyOutput {
            command: "homology",
            source: title,
            chain_complex: "order complex",
            cells: k.f_vector().counts,
            homology,
        },
    )
}

fn load_poset(source: &PosetSource) -> Result<(Poset, String)> {
    match (source.sphere, source.chain, &source.faces) {
        (Some(n), _, _) => Ok((sphere_boundary_faces(n)?, format!("faces of ∂Δ^{}", n + 1))),
        (None, Some(k), _) => Ok((Poset::chain(k), format!("chain:{k}"))),
        (None, None, Some(path)) => {
            let k = SimplicialComplex::parse_face_list(&read(path)?)?;
            Ok((k.face_poset()?, format!("faces of {}", path.display())))
        }
        (None, None, None) => Err(usage("give one of --sphere, --chain or --faces")),
    }
}

#[derive(Serialize)]
struct SubdivideOutput {
    command: &'static str,
    poset: String,
    elements: usize,
    interval_elements: usize,
    order_complex: Vec<usize>,
    interval_order_complex: Vec<usize>,
    homology: HomologySummary,
    interval_homology: HomologySummary,
    #[serde(skip_serializing_if = "Option::is_none")]
    covers: Option<String>,
}

fn subdivide(ctx: &Ctx, source: &PosetSource, covers: bool) -> Result<bool> {
    let (p, label) = load_poset(source)?;
    let int = p.interval_poset();
    for (name, q) in [("P", &p), ("Int P", &int)] {
        let faces: u128 = q.chain_counts().iter().sum();
        if q.len() > ctx.budget.max_poset_elements || faces > ctx.budget.max_order_complex_faces {
            return Err(usage(format!("{name} is over budget ({} elements, {faces} chains)", q.len())));
        }
    }
    let (kp, ki) = (p.order_complex(), int.order_complex());
    let out = SubdivideOutput {
        command: "subdivide",
        poset: label,
        elements: p.len(),
        interval_elements: int.len(),
        order_complex: kp.f_vector().counts.clone(),
        interval_order_complex: ki.f_vector().counts.clone(),
        homology: simplicial_homology(ctx, &kp, false)?,
        interval_homology: simplicial_homology(ctx, &ki, false)?,
        covers: covers.then(|| int.to_cover_text()),
    };
    let same = out.homology == out.interval_homology;
    ctx.emit(&out, || {
        let fv = |v: &[usize]| v.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",");
        let mut text = format!(
            "{}\nelements {}\ninterval elements {}\nf(ΔP) ({})\nf(Δ Int P) ({})\n",
            out.poset,
            out.elements,
            out.interval_elements,
            fv(&out.order_complex),
            fv(&out.interval_order_complex)
        );
        text.push_str(&format!("homology ΔP {}\n", out.homology.groups_text().unwrap_or_default()));
        text.push_str(&format!("homology Δ Int P {}\n", out.interval_homology.groups_text().unwrap_or_default()));
        if let Some(c) = &out.covers {
            text.push_str(c);
        }
        text
    })?;
    Ok(same)
}

#[derive(Serialize)]
struct NeighborhoodOutput<'a> {
    command: &'static str,
    report: &'a VerificationReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    triples: Option<Vec<String>>,
}

fn neighborhood(ctx: &Ctx, source: &PosetSource, list: Option<TripleSet>) -> Result<bool> {
    let (p, label) = load_poset(source)?;
    ctx.progress(&format!("building N, B and D over {label}"));
    let mut report = verify_neighborhood_pair(&p, &ctx.budget)?.finish();
    report.parameter = label;
    if ctx.timings {
        report = report.with_timing();
    }
    let triples = match list {
        None => None,
        Some(which) => {
            let space = TripleSpace::new(&p)?;
            let sel = match which {
                TripleSet::N => space.n(),
                TripleSet::B => space.b(),
                TripleSet::D => space.d(),
            };
            Some(sel.triples.iter().map(|t| t.to_string()).collect())
        }
    };
    let out = NeighborhoodOutput { command: "neighborhood", report: &report, triples };
    ctx.emit(&out, || {
        let mut text = report.to_text();
        for t in out.triples.iter().flatten() {
            text.push_str(&format!("{t}\n"));
        }
        text
    })?;
    Ok(!report.failed())
}

fn parse_poset_spec(spec: &str) -> Result<(Poset, String)> {
    let bad = || usage(format!("poset {spec:?} is not chain:<k> or sphere:<n>"));
    let (kind, k) = spec.split_once(':').ok_or_else(bad)?;
    let k: u32 = k.parse().map_err(|_| bad())?;
    match kind {
        "chain" => Ok((Poset::chain(k as usize), spec.to_string())),
        "sphere" => Ok((sphere_boundary_faces(k)?, format!("∂Δ^{}", k + 1))),
        _ => Err(bad()),
    }
}

#[derive(Serialize)]
struct VerifyOutput<'a> {
    command: &'static str,
    status: Status,
    reports: &'a [VerificationReport],
}

fn emit_reports(ctx: &Ctx, command: &'static str, mut reports: Vec<VerificationReport>) -> Result<bool> {
    if ctx.timings {
        reports = reports.into_iter().map(VerificationReport::with_timing).collect();
    }
    let status = reports.iter().map(|r| r.status).max().unwrap_or(Status::Skipped);
    let out = VerifyOutput { command, status, reports: &reports };
    ctx.emit(&out, || {
        let mut text = String::new();
        for r in &reports {
            text.push_str(&r.to_text());
        }
        if reports.len() > 1 {
            let count = |s: Status| reports.iter().filter(|r| r.status == s).count();
            text.push_str(&format!(
                "summary: {} pass, {} skipped, {} fail\n",
                count(Status::Pass),
                count(Status::Skipped),
                count(Status::Fail)
            ));
        }
        text
    })?;
    Ok(status != Status::Fail)
}

fn verify_one(
    ctx: &Ctx,
    scenario: Scenario,
    n: Option<u32>,
    g: Option<String>,
    s: Option<String>,
    poset: Option<String>,
    mod2_only: bool,
) -> Result<bool> {
    let b = &ctx.budget;
    let need_n = || n.ok_or_else(|| usage(format!("scenario {scenario} needs --n")));
    if let Some(n) = n {
        let limit = match scenario {
            Scenario::FullVsSmall => 2,
            Scenario::Stiefel
            | Scenario::SmallHomology
            | Scenario::Involution
            | Scenario::Restriction
            | Scenario::Neighborhood => b.max_n,
            _ => u32::MAX,
        };
        if n > limit {
            return Err(usage(format!("--n {n} is out of range for {scenario} (at most {limit})")));
        }
    }
    let graph = |default: &str| -> Result<Graph> { Ok(Graph::from_literal(g.as_deref().unwrap_or(default))?) };
    ctx.progress(&format!("running {scenario}"));
    let report = match scenario {
        Scenario::Stiefel => match &g {
            Some(_) => verify::stiefel_iso_for(&graph("cycle:5")?, need_n()?, b)?,
            None => verify::stiefel_iso(need_n()?, b)?,
        },
        Scenario::SmallHomology => verify::small_model_homology(need_n()?, mod2_only, b)?,
        Scenario::FullVsSmall => verify::full_vs_small_homology(need_n()?, b)?,
        Scenario::Involution => verify::involution_equivariance(need_n()?, b)?,
        Scenario::Manifold => verify::manifold_criterion(&graph("cycle:5")?, need_n()?, b)?,
        Scenario::Dual => {
            let s = parse_vertex_set(s.as_deref().unwrap_or("2,4"))?;
            verify::dual_decomposition(&graph("cycle:5")?, s)?
        }
        Scenario::Subdivision => {
            let (p, label) = parse_poset_spec(poset.as_deref().unwrap_or("sphere:1"))?;
            verify::subdivision_suite(&label, &p, b)?
        }
        Scenario::Restriction => verify::restriction_example(need_n()?, b)?,
        Scenario::Neighborhood => verify::neighborhood_suite(need_n()?, b)?,
    };
    emit_reports(ctx, "verify", vec![report])
}

fn report_all(ctx: &Ctx) -> Result<bool> {
    ctx.progress("running the full battery");
    emit_reports(ctx, "report-all", verify::report_all(&ctx.budget))
}
