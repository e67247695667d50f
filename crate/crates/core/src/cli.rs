//! Command-line front end.
//!
//! Exit codes: 0 when every checked claim holds, 1 when a claim is violated
//! (the witness is printed), 2 on usage or I/O errors.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::coloring::Coloring;
use crate::construct::{self, ClassColoring};
use crate::error::{Error, Result};
use crate::forest::EliminationForest;
use crate::graph::{self, Graph};
use crate::obstruct::{self, MineOptions, ObstructionSet};
use crate::scan::{self, ClassTag, ScanReport};
use crate::solve::{centered_chromatic, linear_chromatic};
use crate::verify::{self, Violation};

pub const THREADS_ENV: &str = "CHROMLAB_THREADS";

#[derive(Parser, Debug)]
#[command(name = "chromlab", version, about = "Linear and centered chromatic numbers of small graphs")]
pub struct Cli {
    /// Worker threads for graph-level parallelism (default: all cores).
    #[arg(long, global = true, env = THREADS_ENV)]
    pub threads: Option<usize>,
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Emit named or enumerated graphs.
    Gen(GenArgs),
    /// Exact χlin / χcen of every graph in FILE (graph6 lines or one edge list; `-` for stdin).
    Compute {
        #[arg(long)]
        lin: bool,
        #[arg(long)]
        cen: bool,
        file: PathBuf,
    },
    /// Check a coloring against a graph.
    Verify {
        #[arg(long)]
        coloring: PathBuf,
        #[arg(long, value_enum, default_value = "linear")]
        kind: VerifyKind,
        /// Elimination forest (JSON array of parents, null for roots) for `--kind certified`.
        #[arg(long)]
        forest: Option<PathBuf>,
        file: PathBuf,
    },
    /// Run a constructive colorer and check its output.
    Color {
        #[arg(value_enum)]
        class: ColorClass,
        /// Sizes: side, order, levels, part sizes, legs, or rows and columns.
        params: Vec<usize>,
        /// Input graph for `star-forest` and `caterpillar` (instead of legs).
        #[arg(long)]
        graph: Option<PathBuf>,
    },
    /// Enumerate obstructions to χlin <= k, resuming from and saving to a database.
    Obstructions {
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 8)]
        nmax: usize,
        #[arg(long)]
        db: Option<PathBuf>,
        /// Stop after this many seconds at a level boundary.
        #[arg(long)]
        budget_secs: Option<u64>,
        /// Re-check every member and the antichain property.
        #[arg(long)]
        check: bool,
    },
    /// Compare an obstruction database with the solver over a stream.
    Characterize {
        #[arg(long)]
        db: PathBuf,
        /// Graphs to check; default: all connected graphs up to the horizon.
        #[arg(long)]
        stream: Option<PathBuf>,
        #[arg(long)]
        nmax: Option<usize>,
    },
    /// Claim scans.
    Scan(ScanArgs),
    /// Check the topological-minor pair (built-in reconstruction unless given).
    Prop3 {
        /// Edges of G over letters a..k, e.g. "ab bc".
        #[arg(long)]
        g: Option<String>,
        /// Edges of H over letters a..j.
        #[arg(long)]
        h: Option<String>,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum VerifyKind {
    Proper,
    Linear,
    Centered,
    Certified,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum ColorClass {
    Path,
    StarForest,
    BinaryTree,
    Caterpillar,
    Multipartite,
    Corook,
    Grid,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Graph6,
    Edges,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Path,
    Cycle,
    Complete,
    Star,
    Claw,
    Net,
    Paw,
    P3p1,
    BinaryTree,
    Grid,
    Multipartite,
    Corook,
    Caterpillar,
    Spider,
    All,
    Trees,
}

#[derive(Args, Debug)]
pub struct GenArgs {
    #[arg(value_enum)]
    pub family: Family,
    pub params: Vec<usize>,
    /// Largest order for `all` and `trees`.
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub connected: bool,
    #[arg(long, value_enum, default_value = "graph6")]
    pub format: Format,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum ScanKind {
    Conjecture,
    Trees,
    Caterpillars,
    Classes,
}

#[derive(Args, Debug)]
pub struct ScanArgs {
    #[arg(value_enum)]
    pub kind: ScanKind,
    #[arg(long, default_value_t = 6)]
    pub nmax: usize,
    /// Also scan this many seeded random graphs (conjecture only).
    #[arg(long)]
    pub random: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 0.5)]
    pub p: f64,
    /// Largest order of the random graphs.
    #[arg(long, default_value_t = 10)]
    pub random_nmax: usize,
}

/// What a command produced: a JSON value, its text rendering, and whether
/// every claim it checked held.
struct Outcome {
    json: serde_json::Value,
    text: String,
    ok: bool,
}

impl Outcome {
    fn new(value: impl Serialize, text: String, ok: bool) -> Result<Outcome> {
        let json = serde_json::to_value(value).map_err(|e| Error::Io(e.to_string()))?;
        Ok(Outcome { json, text, ok })
    }
}

/// Parses `args` (program name first), runs the command, and writes to `out`
/// and `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 { out.write_all(rendered.as_bytes()) } else { err.write_all(rendered.as_bytes()) };
            return code;
        }
    };
    if let Some(t) = cli.threads {
        // a second call in the same process keeps the first pool
        let _ = rayon::ThreadPoolBuilder::new().num_threads(t).build_global();
    }
    match execute(&cli) {
        Ok(outcome) => {
            let text = if cli.json {
                serde_json::to_string_pretty(&outcome.json).expect("values serialize") + "\n"
            } else {
                outcome.text
            };
            if out.write_all(text.as_bytes()).is_err() {
                return 2;
            }
            if outcome.ok {
                0
            } else {
                1
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn execute(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Gen(args) => gen(args),
        Command::Compute { lin, cen, file } => compute(*lin, *cen, file),
        Command::Verify { coloring, kind, forest, file } => verify_cmd(coloring, *kind, forest.as_deref(), file),
        Command::Color { class, params, graph } => color(*class, params, graph.as_deref()),
        Command::Obstructions { k, nmax, db, budget_secs, check } => {
            obstructions(*k, *nmax, db.as_deref(), *budget_secs, *check)
        }
        Command::Characterize { db, stream, nmax } => characterize(db, stream.as_deref(), *nmax),
        Command::Scan(args) => scan_cmd(args),
        Command::Prop3 { g, h } => prop3(g.as_deref(), h.as_deref()),
    }
}

fn read_input(path: &Path) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        Ok(std::fs::read_to_string(path)?)
    }
}

/// graph6 lines, or a single edge list when the first line is a number.
pub fn parse_graphs(text: &str) -> Result<Vec<Graph>> {
    let first = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty());
    match first {
        None => Ok(Vec::new()),
        Some(l) if l.parse::<usize>().is_ok() => Ok(vec![graph::from_edge_list(text)?]),
        Some(_) => text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(graph::from_graph6)
            .collect(),
    }
}

fn read_graphs(path: &Path) -> Result<Vec<Graph>> {
    parse_graphs(&read_input(path)?)
}

fn read_single_graph(path: &Path) -> Result<Graph> {
    let mut gs = read_graphs(path)?;
    if gs.len() != 1 {
        return Err(Error::InvalidArgument(format!("expected one graph, found {}", gs.len())));
    }
    Ok(gs.remove(0))
}

fn need(params: &[usize], count: usize, what: &str) -> Result<()> {
    if params.len() == count {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!("{what} takes {count} number(s), got {}", params.len())))
    }
}

fn gen(args: &GenArgs) -> Result<Outcome> {
    let p = &args.params;
    let graphs = match args.family {
        Family::All | Family::Trees => {
            let n = args.n.or(p.first().copied()).ok_or_else(|| Error::InvalidArgument("missing --n".into()))?;
            if args.family == Family::All {
                graph::enumerate_graphs(n, args.connected)
            } else {
                graph::enumerate_trees(n)
            }
        }
        Family::Claw | Family::Net | Family::Paw | Family::P3p1 => {
            need(p, 0, "this family")?;
            vec![match args.family {
                Family::Claw => graph::claw(),
                Family::Net => graph::net(),
                Family::Paw => graph::paw(),
                _ => graph::p3_plus_p1(),
            }]
        }
        Family::Multipartite => vec![graph::complete_multipartite(p)?],
        Family::Caterpillar => vec![graph::caterpillar(p)?],
        Family::Spider => vec![graph::spider(p)?],
        Family::Corook => {
            need(p, 2, "corook")?;
            vec![graph::corook_graph(p[0], p[1])?]
        }
        family => {
            need(p, 1, "this family")?;
            let x = p[0];
            vec![match family {
                Family::Path => graph::path_graph(x)?,
                Family::Cycle => graph::cycle_graph(x)?,
                Family::Complete => graph::complete_graph(x)?,
                Family::Star => graph::star(x)?,
                Family::BinaryTree => graph::complete_binary_tree(x)?,
                _ => graph::grid_graph(x)?,
            }]
        }
    };
    let encoded: Vec<String> = graphs
        .iter()
        .map(|g| match args.format {
            Format::Graph6 => graph::to_graph6(g) + "\n",
            Format::Edges => graph::to_edge_list(g),
        })
        .collect();
    let text = encoded.concat();
    Outcome::new(encoded.iter().map(|s| s.trim_end()).collect::<Vec<_>>(), text, true)
}

#[derive(Serialize)]
struct ComputeRecord {
    order: usize,
    edges: usize,
    chi_lin: Option<usize>,
    chi_cen: Option<usize>,
    witness_lin: Option<Coloring>,
    witness_cen: Option<Coloring>,
    forest: Option<EliminationForest>,
    millis: u128,
}

/// JSON record of both solvers on `g` (`lin`/`cen` select which).
fn compute_record(g: &Graph, lin: bool, cen: bool) -> ComputeRecord {
    let start = Instant::now();
    let l = lin.then(|| linear_chromatic(g));
    let c = cen.then(|| centered_chromatic(g));
    ComputeRecord {
        order: g.n(),
        edges: g.edge_count(),
        chi_lin: l.as_ref().map(|r| r.value),
        chi_cen: c.as_ref().map(|r| r.value),
        witness_lin: l.map(|r| r.witness),
        witness_cen: c.as_ref().map(|r| r.witness.clone()),
        forest: c.and_then(|r| r.certificate),
        millis: start.elapsed().as_millis(),
    }
}

fn compute(lin: bool, cen: bool, file: &Path) -> Result<Outcome> {
    let (lin, cen) = if lin || cen { (lin, cen) } else { (true, true) };
    let graphs = read_graphs(file)?;
    let records: Vec<ComputeRecord> = graphs.iter().map(|g| compute_record(g, lin, cen)).collect();
    let mut text = String::new();
    for r in &records {
        text.push_str(&serde_json::to_string(r).expect("records serialize"));
        text.push('\n');
    }
    Outcome::new(records, text, true)
}

fn verify_cmd(coloring: &Path, kind: VerifyKind, forest: Option<&Path>, file: &Path) -> Result<Outcome> {
    let g = read_single_graph(file)?;
    let c = Coloring::parse(&read_input(coloring)?)?;
    if c.len() != g.n() {
        return Err(Error::InvalidArgument(format!("coloring has {} entries for {} vertices", c.len(), g.n())));
    }
    let (accepted, witness): (bool, Option<Violation>) = match kind {
        VerifyKind::Proper => {
            let w = verify::find_improper_edge(&g, &c);
            (w.is_none(), w)
        }
        VerifyKind::Linear => {
            let w = verify::find_improper_edge(&g, &c).or_else(|| verify::find_centerless_path(&g, &c));
            (w.is_none(), w)
        }
        VerifyKind::Centered => {
            let w = verify::find_centerless_connected_set(&g, &c);
            (w.is_none(), w)
        }
        VerifyKind::Certified => {
            let path = forest.ok_or_else(|| Error::InvalidArgument("--kind certified needs --forest".into()))?;
            let parents: Vec<Option<usize>> =
                serde_json::from_str(&read_input(path)?).map_err(|e| Error::Parse(e.to_string()))?;
            let f = EliminationForest::new(parents)?;
            (verify::certified_centered(&g, &f, &c), None)
        }
    };
    let text = match &witness {
        None if accepted => "accepted\n".to_string(),
        None => "rejected\n".to_string(),
        Some(v) => format!("rejected: {:?} {:?}\n", v.kind, v.witness),
    };
    Outcome::new(json!({ "accepted": accepted, "violation": witness }), text, accepted)
}

fn color(class: ColorClass, p: &[usize], input: Option<&Path>) -> Result<Outcome> {
    let (edges, n, c): (Vec<(usize, usize)>, usize, ClassColoring) = match class {
        ColorClass::Grid => {
            need(p, 1, "grid")?;
            let c = construct::color_grid(p[0])?;
            (construct::grid_edges(p[0], p[0]), p[0] * p[0], c)
        }
        _ => {
            let (g, c) = match class {
                ColorClass::Path => {
                    need(p, 1, "path")?;
                    construct::color_path(p[0])?
                }
                ColorClass::BinaryTree => {
                    need(p, 1, "binary-tree")?;
                    construct::color_binary_tree(p[0])?
                }
                ColorClass::Multipartite => construct::color_complete_multipartite(p)?,
                ColorClass::Corook => {
                    need(p, 2, "corook")?;
                    construct::color_corook(p[0], p[1])?
                }
                ColorClass::StarForest | ColorClass::Caterpillar => {
                    let g = match input {
                        Some(path) => read_single_graph(path)?,
                        None if class == ColorClass::Caterpillar => graph::caterpillar(p)?,
                        None => return Err(Error::InvalidArgument("star-forest needs --graph".into())),
                    };
                    let c = if class == ColorClass::StarForest {
                        construct::color_star_forest(&g)?
                    } else {
                        construct::color_caterpillar(&g)?
                    };
                    (g, c)
                }
                ColorClass::Grid => unreachable!(),
            };
            (g.edges(), g.n(), c)
        }
    };
    let verified = verify::certified_centered_on_edges(n, &edges, &c.forest, &c.coloring);
    let palette = c.coloring.palette_size();
    let ok = verified && palette == c.claimed_size;
    let text = format!(
        "{:?}: {} colors (claimed {}), certificate {}\n{}",
        c.class_tag,
        palette,
        c.claimed_size,
        if verified { "verified" } else { "REJECTED" },
        c.coloring.to_lines()
    );
    let value = json!({
        "class": c.class_tag,
        "kind": c.kind,
        "order": n,
        "claimed_size": c.claimed_size,
        "palette_size": palette,
        "verified": verified,
        "coloring": c.coloring,
        "forest": c.forest,
    });
    Outcome::new(value, text, ok)
}

fn obstruction_summary(set: &ObstructionSet) -> serde_json::Value {
    json!({
        "k": set.k,
        "n_max_searched": set.n_max_searched,
        "count": set.len(),
        "members": set.members().iter().map(|m| json!({
            "g6": m.code.as_str(),
            "order": m.graph.n(),
            "size": m.graph.edge_count(),
        })).collect::<Vec<_>>(),
    })
}

fn obstructions(k: usize, nmax: usize, db: Option<&Path>, budget_secs: Option<u64>, check: bool) -> Result<Outcome> {
    let mut opts = MineOptions {
        deadline: budget_secs.map(|s| Instant::now() + Duration::from_secs(s)),
        seed: None,
    };
    if let Some(path) = db.filter(|p| p.exists()) {
        let seed = ObstructionSet::load(path)?;
        if seed.k != k {
            return Err(Error::InvalidArgument(format!("database is for k = {}, not {k}", seed.k)));
        }
        opts.seed = Some(seed);
    }
    let mut save_error = None;
    let set = obstruct::enumerate_obstructions_with(k, nmax, &opts, |level| {
        if let Some(path) = db {
            if let Err(e) = level.save(path) {
                save_error.get_or_insert(e);
            }
        }
    });
    if let Some(e) = save_error {
        return Err(e);
    }
    let mut summary = obstruction_summary(&set);
    let mut ok = true;
    let mut text = format!(
        "k = {k}: {} obstructions, complete through order {}\n",
        set.len(),
        set.n_max_searched
    );
    for m in set.members() {
        text.push_str(&format!("{} order {} size {}\n", m.code, m.graph.n(), m.graph.edge_count()));
    }
    if check {
        let invalid: Vec<String> = set.invalid_members().into_iter().map(|i| set.members()[i].code.to_string()).collect();
        let antichain = set.is_antichain();
        ok = invalid.is_empty() && antichain;
        text.push_str(&format!("invalid members: {invalid:?}, antichain: {antichain}\n"));
        summary["invalid_members"] = json!(invalid);
        summary["antichain"] = json!(antichain);
    }
    if set.n_max_searched < nmax {
        text.push_str(&format!("stopped early; horizon {}\n", set.n_max_searched));
    }
    Ok(Outcome { json: summary, text, ok })
}

fn characterize(db: &Path, stream: Option<&Path>, nmax: Option<usize>) -> Result<Outcome> {
    let mut set = ObstructionSet::load(db)?;
    if let Some(n) = nmax {
        set = set.up_to_order(n);
    }
    let graphs = match stream {
        Some(path) => read_graphs(path)?,
        None => graph::enumerate_graphs(set.n_max_searched, true),
    };
    let report = obstruct::check_characterization(&set, &graphs);
    let mut text = format!(
        "k = {}: {} graphs checked, {} above the horizon, {} discrepancies\n",
        report.k,
        report.checked,
        report.skipped,
        report.discrepancies.len()
    );
    for d in &report.discrepancies {
        text.push_str(&format!("{} solver_in_class={} member={:?}\n", d.g6, d.solver_in_class, d.contained_member));
    }
    let ok = report.holds();
    Outcome::new(report, text, ok)
}

fn report_text(r: &ScanReport) -> String {
    let mut text = format!("{}: {} graphs, {} violations", r.claim, r.graphs_scanned, r.violations.len());
    if let Some(w) = &r.max_ratio {
        text.push_str(&format!(", max ratio {} on {}", w.ratio, w.g6));
    }
    if !r.equality_witnesses.is_empty() {
        text.push_str(&format!(", {} equality witnesses", r.equality_witnesses.len()));
    }
    text.push('\n');
    for v in &r.violations {
        text.push_str(&format!("  violation {} {}\n", v.g6, v.detail));
    }
    text
}

fn scan_cmd(args: &ScanArgs) -> Result<Outcome> {
    let reports: Vec<ScanReport> = match args.kind {
        ScanKind::Conjecture => {
            let mut rs = vec![scan::conjecture_scan(&graph::enumerate_graphs(args.nmax, true))];
            if let Some(count) = args.random {
                rs.push(scan::random_conjecture_scan(count, args.random_nmax, args.p, args.seed)?);
            }
            rs
        }
        ScanKind::Trees => vec![scan::tree_ratio_scan(args.nmax)],
        ScanKind::Caterpillars => vec![scan::caterpillar_scan(args.nmax)],
        ScanKind::Classes => {
            let mut rs = Vec::new();
            for tag in [ClassTag::P3p1Free, ClassTag::ClawNetFree] {
                rs.push(scan::class_scan(tag, args.nmax, false)?);
            }
            rs.push(scan::class_scan(ClassTag::Cobipartite, args.nmax, true)?);
            rs
        }
    };
    let mut ok = reports.iter().all(ScanReport::holds);
    if args.kind == ScanKind::Caterpillars && args.nmax >= 8 {
        // the +1 bound is attained from order 8 on
        ok &= !reports[0].equality_witnesses.is_empty();
    }
    let text = reports.iter().map(report_text).collect();
    Outcome::new(reports, text, ok)
}

fn prop3(g: Option<&str>, h: Option<&str>) -> Result<Outcome> {
    let custom = g.is_some() || h.is_some();
    let report = scan::proposition3_check(
        g.unwrap_or(scan::PROP3_G_EDGES),
        h.unwrap_or(scan::PROP3_H_EDGES),
        (!custom).then_some(&scan::PROP3_PSI[..]),
    )?;
    let show = |v: Option<usize>| v.map_or("-".to_string(), |v| v.to_string());
    let text = if report.reconstruction_accepted() {
        format!(
            "reconstruction accepted; chi_lin(G) = {}, chi_lin(H) = {}\n",
            show(report.chi_lin_g),
            show(report.chi_lin_h)
        )
    } else {
        format!(
            "reconstruction rejected: invalid sequences {:?}, contraction ok: {}\n",
            report.invalid_sequences, report.contraction_ok
        )
    };
    let ok = report.holds();
    Outcome::new(report, text, ok)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("chromlab").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap() + &String::from_utf8(err).unwrap())
    }

    #[test]
    fn gen_and_usage() {
        assert_eq!(run_str(&["gen", "path", "4"]), (0, "Ch\n".to_string()));
        let (code, text) = run_str(&["gen", "all", "--n", "4"]);
        assert_eq!((code, text.lines().count()), (0, 1 + 2 + 4 + 11));
        assert_eq!(run_str(&["gen", "corook", "3"]).0, 2);
        assert_eq!(run_str(&["frobnicate"]).0, 2);
        assert_eq!(run_str(&["--help"]).0, 0);
    }

    #[test]
    fn color_and_prop3() {
        assert_eq!(run_str(&["color", "grid", "5"]).0, 0);
        assert_eq!(run_str(&["color", "caterpillar", "0", "0", "1", "1", "0", "0"]).0, 0);
        assert_eq!(run_str(&["color", "caterpillar", "2", "0", "2"]).0, 0);
        let (code, text) = run_str(&["--json", "prop3"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["chi_lin_h"], 5);
        assert_eq!(run_str(&["prop3", "--g", "ab"]).0, 1);
    }

    #[test]
    fn parse_inputs() {
        assert_eq!(parse_graphs("C~\nBg\n").unwrap().len(), 2);
        assert_eq!(parse_graphs("3\n0 1\n1 2\n").unwrap(), vec![graph::path_graph(3).unwrap()]);
        assert!(parse_graphs("").unwrap().is_empty());
    }
}
