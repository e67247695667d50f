//! Claim checks over graph streams.
//!
//! Each scan computes what it needs per graph in parallel and folds the
//! results in stream order, so reports are deterministic.

use std::time::Instant;

use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::graph::{self, canonical_form, enumerate_graphs, enumerate_trees, to_graph6, Graph, VertexSet};
use crate::partitions::for_each_partition;
use crate::solve::{centered_chromatic, linear_chromatic};
use crate::verify::{is_centered, is_linear};

/// Largest order accepted by [`linear_implies_centered`].
pub const PARTITION_SCAN_MAX_ORDER: usize = 8;
/// Largest order accepted by [`is_traceable_hereditary`].
pub const TRACEABLE_MAX_ORDER: usize = 20;

#[derive(Clone, Debug, Serialize)]
pub struct RatioWitness {
    /// `χcen / χlin` in lowest terms, as `"p/q"`.
    pub ratio: String,
    pub g6: String,
    pub chi_lin: usize,
    pub chi_cen: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct ScanViolation {
    pub claim: String,
    pub g6: String,
    pub detail: String,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Timing {
    pub total_micros: u128,
    pub max_micros: u128,
    pub slowest_g6: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ScanReport {
    pub claim: String,
    pub graphs_scanned: usize,
    pub max_ratio: Option<RatioWitness>,
    pub violations: Vec<ScanViolation>,
    /// Graphs on which the claimed bound is attained.
    pub equality_witnesses: Vec<String>,
    /// Seeds of random streams, for replay.
    pub seeds: Vec<u64>,
    pub timing: Timing,
}

impl ScanReport {
    fn new(claim: &str) -> ScanReport {
        ScanReport {
            claim: claim.to_string(),
            graphs_scanned: 0,
            max_ratio: None,
            violations: Vec::new(),
            equality_witnesses: Vec::new(),
            seeds: Vec::new(),
            timing: Timing::default(),
        }
    }

    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }

    fn time(&mut self, g: &Graph, micros: u128) {
        self.timing.total_micros += micros;
        if self.timing.slowest_g6.is_none() || micros > self.timing.max_micros {
            self.timing.max_micros = micros;
            self.timing.slowest_g6 = Some(to_graph6(g));
        }
    }

    fn violation(&mut self, g: &Graph, detail: String) {
        self.violations.push(ScanViolation { claim: self.claim.clone(), g6: to_graph6(g), detail });
    }

    /// Ratio of the report's largest-ratio witness, if any.
    pub fn max_ratio_value(&self) -> Option<Ratio<usize>> {
        self.max_ratio.as_ref().map(|w| Ratio::new(w.chi_cen, w.chi_lin))
    }
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct Invariants {
    pub chi_lin: usize,
    pub chi_cen: usize,
    pub micros: u128,
}

pub fn invariants(g: &Graph) -> Invariants {
    let start = Instant::now();
    let chi_lin = linear_chromatic(g).value;
    let chi_cen = centered_chromatic(g).value;
    Invariants { chi_lin, chi_cen, micros: start.elapsed().as_micros() }
}

/// Runs both solvers over `stream`, tracks the largest `χcen / χlin`, and
/// records a violation wherever `ok(lin, cen)` fails and an equality witness
/// wherever `tight(lin, cen)` holds.
fn ratio_scan<F, T>(claim: &str, stream: &[Graph], ok: F, tight: T) -> ScanReport
where
    F: Fn(usize, usize) -> bool,
    T: Fn(usize, usize) -> bool,
{
    let results: Vec<Invariants> = stream.par_iter().map(invariants).collect();
    let mut report = ScanReport::new(claim);
    let mut best: Option<Ratio<usize>> = None;
    for (g, inv) in stream.iter().zip(results) {
        report.graphs_scanned += 1;
        report.time(g, inv.micros);
        let (lin, cen) = (inv.chi_lin, inv.chi_cen);
        if lin > 0 {
            let r = Ratio::new(cen, lin);
            if best.is_none_or(|b| r > b) {
                best = Some(r);
                report.max_ratio = Some(RatioWitness {
                    ratio: format!("{}/{}", r.numer(), r.denom()),
                    g6: to_graph6(g),
                    chi_lin: lin,
                    chi_cen: cen,
                });
            }
        }
        if !ok(lin, cen) {
            report.violation(g, format!("chi_lin = {lin}, chi_cen = {cen}"));
        }
        if tight(lin, cen) {
            report.equality_witnesses.push(to_graph6(g));
        }
    }
    report
}

/// `χcen <= 2 χlin` on every graph of the stream.
pub fn conjecture_scan(stream: &[Graph]) -> ScanReport {
    ratio_scan("conjecture", stream, |l, c| c <= 2 * l, |l, c| c == 2 * l)
}

/// `χcen <= 3.7 χlin` over all trees with at most `n_max` vertices, compared
/// exactly as `10 χcen <= 37 χlin`.
pub fn tree_ratio_scan(n_max: usize) -> ScanReport {
    let trees = enumerate_trees(n_max);
    ratio_scan("trees", &trees, |l, c| 10 * c <= 37 * l, |_, _| false)
}

/// Is `g` a tree whose non-leaf vertices induce a path (or nothing)?
pub fn is_caterpillar(g: &Graph) -> bool {
    if !g.is_tree() {
        return false;
    }
    let spine: VertexSet = g.vertices().iter().filter(|&v| g.degree(v) >= 2).collect();
    spine.iter().all(|v| g.neighbors(v).intersection(spine).len() <= 2)
}

/// `χcen <= χlin + 1` over all caterpillars with at most `n_max` vertices.
pub fn caterpillar_scan(n_max: usize) -> ScanReport {
    let cats: Vec<Graph> = enumerate_trees(n_max).into_iter().filter(is_caterpillar).collect();
    ratio_scan("caterpillars", &cats, |l, c| c <= l + 1, |l, c| c == l + 1)
}

/// `seed`-determined graphs `G(n, p)` with `n` uniform in `n_min..=n_max`.
pub fn random_graphs(count: usize, n_min: usize, n_max: usize, p: f64, seed: u64) -> Result<Vec<Graph>> {
    if n_min == 0 || n_min > n_max || n_max > graph::MAX_VERTICES || !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidArgument(format!(
            "need 1 <= n_min <= n_max <= 64 and 0 <= p <= 1, got {n_min}, {n_max}, {p}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let n = rng.gen_range(n_min..=n_max);
        let mut edges = Vec::new();
        for v in 1..n {
            for u in 0..v {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        out.push(Graph::from_edges(n, &edges)?);
    }
    Ok(out)
}

/// Conjecture scan over a seeded random stream; the seed is kept in the report.
pub fn random_conjecture_scan(count: usize, n_max: usize, p: f64, seed: u64) -> Result<ScanReport> {
    let stream = random_graphs(count, 1, n_max, p, seed)?;
    let mut report = conjecture_scan(&stream);
    report.seeds.push(seed);
    Ok(report)
}

/// Calls `visit` on every `size`-subset of `0..n` until it returns `true`.
fn any_subset(n: usize, size: usize, mut visit: impl FnMut(VertexSet) -> bool) -> bool {
    if size > n {
        return false;
    }
    if size == 0 {
        return visit(VertexSet::EMPTY);
    }
    let limit = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut s: u64 = if size == 64 { u64::MAX } else { (1u64 << size) - 1 };
    loop {
        if visit(VertexSet(s)) {
            return true;
        }
        // next subset of the same size (Gosper)
        let c = s & s.wrapping_neg();
        let r = s.wrapping_add(c);
        if r == 0 || r > limit {
            return false;
        }
        s = (((r ^ s) >> 2) / c) | r;
        if s > limit {
            return false;
        }
    }
}

/// Does `host` contain `pattern` as an induced subgraph?
pub fn has_induced(host: &Graph, pattern: &Graph) -> bool {
    let p = pattern.n();
    let want_degrees = pattern.degree_sequence();
    let want_code = canonical_form(pattern);
    any_subset(host.n(), p, |s| {
        let sub = host.induced(s);
        sub.edge_count() == pattern.edge_count()
            && sub.degree_sequence() == want_degrees
            && canonical_form(&sub) == want_code
    })
}

pub fn is_p3p1_free(g: &Graph) -> bool {
    !has_induced(g, &graph::p3_plus_p1())
}

pub fn is_claw_net_free(g: &Graph) -> bool {
    !has_induced(g, &graph::claw()) && !has_induced(g, &graph::net())
}

/// Vertex set is the union of two cliques.
pub fn is_cobipartite(g: &Graph) -> bool {
    g.complement().is_bipartite()
}

/// No induced `P4`.
pub fn is_cograph(g: &Graph) -> bool {
    !has_induced(g, &graph::path_graph(4).expect("P4"))
}

/// Every connected induced subgraph has a Hamiltonian path.
pub fn is_traceable_hereditary(g: &Graph) -> Result<bool> {
    let n = g.n();
    if n > TRACEABLE_MAX_ORDER {
        return Err(Error::Budget { what: "is_traceable_hereditary", limit: TRACEABLE_MAX_ORDER, n });
    }
    // ends[s] = vertices where a Hamiltonian path of G[s] can end
    let mut ends = vec![0u64; 1usize << n];
    for s in 1usize..(1 << n) {
        let set = VertexSet(s as u64);
        if set.len() == 1 {
            ends[s] = s as u64;
            continue;
        }
        let mut e = 0u64;
        for v in set {
            let rest = s & !(1usize << v);
            if ends[rest] & g.neighbors(v).0 != 0 {
                e |= 1u64 << v;
            }
        }
        ends[s] = e;
        if e == 0 && g.is_connected_within(set) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClassTag {
    P3p1Free,
    ClawNetFree,
    Cobipartite,
    TraceableHereditary,
    Caterpillar,
    Tree,
    Cograph,
}

impl ClassTag {
    pub const ALL: [ClassTag; 7] = [
        ClassTag::P3p1Free,
        ClassTag::ClawNetFree,
        ClassTag::Cobipartite,
        ClassTag::TraceableHereditary,
        ClassTag::Caterpillar,
        ClassTag::Tree,
        ClassTag::Cograph,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ClassTag::P3p1Free => "p3p1-free",
            ClassTag::ClawNetFree => "claw-net-free",
            ClassTag::Cobipartite => "cobipartite",
            ClassTag::TraceableHereditary => "traceable-hereditary",
            ClassTag::Caterpillar => "caterpillar",
            ClassTag::Tree => "tree",
            ClassTag::Cograph => "cograph",
        }
    }

    pub fn contains(self, g: &Graph) -> bool {
        match self {
            ClassTag::P3p1Free => is_p3p1_free(g),
            ClassTag::ClawNetFree => is_claw_net_free(g),
            ClassTag::Cobipartite => is_cobipartite(g),
            ClassTag::TraceableHereditary => is_traceable_hereditary(g).unwrap_or(false),
            ClassTag::Caterpillar => is_caterpillar(g),
            ClassTag::Tree => g.is_tree(),
            ClassTag::Cograph => is_cograph(g),
        }
    }
}

/// A coloring of `g` that is linear but not centered, if one exists. All set
/// partitions of `V(G)` are tried (colorings up to renaming), skipping those
/// that are improper on a prefix.
pub fn linear_implies_centered(g: &Graph) -> Result<Option<Coloring>> {
    let n = g.n();
    if n > PARTITION_SCAN_MAX_ORDER {
        return Err(Error::Budget { what: "linear_implies_centered", limit: PARTITION_SCAN_MAX_ORDER, n });
    }
    let mut found = None;
    for_each_partition(
        n,
        n.max(1),
        |prefix| {
            let v = prefix.len() - 1;
            g.neighbors(v).iter().take_while(|&u| u < v).all(|u| prefix[u] != prefix[v])
        },
        |colors| {
            let c = Coloring::new(colors.to_vec());
            if is_linear(g, &c) && !is_centered(g, &c) {
                found = Some(c);
                false
            } else {
                true
            }
        },
    );
    Ok(found)
}

/// Does every linear coloring of `g` happen to be centered?
pub fn linear_implies_centered_scan(g: &Graph) -> Result<bool> {
    Ok(linear_implies_centered(g)?.is_none())
}

/// Every linear coloring is centered, over all graphs of the class with at
/// most `n_max` vertices (connected ones only if `connected_only`).
pub fn class_scan(tag: ClassTag, n_max: usize, connected_only: bool) -> Result<ScanReport> {
    if n_max > PARTITION_SCAN_MAX_ORDER {
        return Err(Error::Budget { what: "class_scan", limit: PARTITION_SCAN_MAX_ORDER, n: n_max });
    }
    let stream: Vec<Graph> = enumerate_graphs(n_max, connected_only)
        .into_par_iter()
        .filter(|g| tag.contains(g))
        .collect();
    let results: Vec<(Option<Coloring>, u128)> = stream
        .par_iter()
        .map(|g| {
            let start = Instant::now();
            let bad = linear_implies_centered(g).expect("order checked above");
            (bad, start.elapsed().as_micros())
        })
        .collect();
    let mut report = ScanReport::new(&format!("classes:{}", tag.name()));
    for (g, (bad, micros)) in stream.iter().zip(results) {
        report.graphs_scanned += 1;
        report.time(g, micros);
        if let Some(c) = bad {
            report.violation(g, format!("linear but not centered: {:?}", c.colors()));
        }
    }
    Ok(report)
}

/// `χlin = χcen` on connected cobipartite graphs with at most `n_max` vertices.
pub fn cobipartite_equality_scan(n_max: usize) -> ScanReport {
    let stream: Vec<Graph> = enumerate_graphs(n_max, true).into_iter().filter(is_cobipartite).collect();
    ratio_scan("cobipartite-equality", &stream, |l, c| l == c, |_, _| false)
}

/// A graph of the topological-minor pair, with letters for vertices (`a = 0`).
#[derive(Clone, Debug)]
pub struct LetterGraph {
    pub edges: Vec<(usize, usize)>,
    pub n: usize,
}

impl LetterGraph {
    pub fn parse(n: usize, edges: &str) -> Result<LetterGraph> {
        let mut out = Vec::new();
        for e in edges.split_whitespace() {
            let v = letters(e)?;
            if v.len() != 2 {
                return Err(Error::Parse(format!("edge {e:?} must name two vertices")));
            }
            out.push((v[0], v[1]));
        }
        Ok(LetterGraph { edges: out, n })
    }

    pub fn graph(&self) -> Result<Graph> {
        Graph::from_edges(self.n, &self.edges)
    }
}

fn letters(s: &str) -> Result<Vec<usize>> {
    s.bytes()
        .map(|b| {
            if b.is_ascii_lowercase() {
                Ok((b - b'a') as usize)
            } else {
                Err(Error::Parse(format!("bad vertex letter in {s:?}")))
            }
        })
        .collect()
}

/// Edges of the eleven-vertex graph `G` (vertices `a..k`), rebuilt from the
/// vertex sequences the argument names.
pub const PROP3_G_EDGES: &str = "ab bc cd de ef fa fg dh ak kc cj aj bi";
/// `G` with the edge `kc` contracted (vertices `a..j`).
pub const PROP3_H_EDGES: &str = "ab bc cd de ef fa fg dh ac cj aj bi";
/// Sequences that must be paths of `G`.
pub const PROP3_G_PATHS: [&str; 4] = ["gfedh", "gfa", "cdh", "gfedcjabi"];
/// Sequences that must be paths of `H`.
pub const PROP3_H_PATHS: [&str; 13] = [
    "bcdefg", "bafedh", "bcdh", "bafg", "gfacdh", "fedcbi", "ibaj", "ibcj", "jcdefabi", "ibcd", "jcde", "jcdefg",
    "dcjafg",
];
/// Sequences that must be cycles of `H`.
pub const PROP3_H_CYCLES: [&str; 2] = ["abcdef", "acj"];
/// The four-color linear coloring of `G` (by vertex letter), with `g = a = 1`,
/// `c = h = 2` and `d, f` in `{0, 3}`.
pub const PROP3_PSI: [u32; 11] = [1, 0, 2, 3, 0, 3, 1, 2, 3, 0, 0];

#[derive(Clone, Debug, Serialize)]
pub struct Prop3Report {
    pub invalid_sequences: Vec<String>,
    /// `H` equals `G` with `kc` contracted (`k` merged into `c`).
    pub contraction_ok: bool,
    pub psi_linear: Option<bool>,
    pub chi_lin_g: Option<usize>,
    /// Exact `χlin(H)`.
    pub chi_lin_h: Option<usize>,
    pub millis: u128,
}

impl Prop3Report {
    pub fn reconstruction_accepted(&self) -> bool {
        self.invalid_sequences.is_empty() && self.contraction_ok
    }

    pub fn holds(&self) -> bool {
        self.reconstruction_accepted() && self.chi_lin_g == Some(4) && self.chi_lin_h.is_some_and(|h| h >= 5)
    }
}

fn contract_last_into(g: &Graph, keep: usize) -> Graph {
    let last = g.n() - 1;
    let mut h = g.remove_vertex(last);
    for u in g.neighbors(last).without(keep) {
        let u = if u > last { u - 1 } else { u };
        h = h.with_edge(u, keep).expect("in range");
    }
    h
}

/// Validates a reconstruction of the pair and solves both graphs. `g_edges`
/// names vertices `a..k`; `h_edges` names `a..j`. Solving is skipped when a
/// named sequence is not a path or cycle.
pub fn proposition3_check(g_edges: &str, h_edges: &str, psi: Option<&[u32]>) -> Result<Prop3Report> {
    let start = Instant::now();
    let g = LetterGraph::parse(11, g_edges)?.graph()?;
    let h = LetterGraph::parse(10, h_edges)?.graph()?;
    let mut invalid = Vec::new();
    for p in PROP3_G_PATHS {
        if !g.is_path(&letters(p)?) {
            invalid.push(format!("G:{p}"));
        }
    }
    for p in PROP3_H_PATHS {
        if !h.is_path(&letters(p)?) {
            invalid.push(format!("H:{p}"));
        }
    }
    for c in PROP3_H_CYCLES {
        if !h.is_cycle(&letters(c)?) {
            invalid.push(format!("H:cycle {c}"));
        }
    }
    let contraction_ok = g.has_edge(10, 2) && contract_last_into(&g, 2) == h;
    let mut report = Prop3Report {
        invalid_sequences: invalid,
        contraction_ok,
        psi_linear: None,
        chi_lin_g: None,
        chi_lin_h: None,
        millis: 0,
    };
    if report.reconstruction_accepted() {
        report.psi_linear = psi.map(|p| p.len() == g.n() && is_linear(&g, &Coloring::new(p.to_vec())));
        report.chi_lin_g = Some(linear_chromatic(&g).value);
        report.chi_lin_h = Some(linear_chromatic(&h).value);
    }
    report.millis = start.elapsed().as_millis();
    Ok(report)
}

/// [`proposition3_check`] on the built-in reconstruction.
pub fn proposition3_builtin() -> Prop3Report {
    proposition3_check(PROP3_G_EDGES, PROP3_H_EDGES, Some(&PROP3_PSI)).expect("built-in reconstruction parses")
}
