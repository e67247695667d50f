//! Verifiers for proper, linear and centered colorings.
//!
//! Whether a path or connected subgraph has a center depends only on its
//! vertex set, so every search here works on `(endpoint, set)` or plain
//! set states and never distinguishes two orderings of the same vertices.
//!
//! The witness-producing searches ([`find_centerless_path`],
//! [`find_centerless_connected_set`]) deepen the witness size one vertex at a
//! time, so the witness returned is a shortest one, and the first found under
//! ascending start vertices and ascending neighbors. The boolean checks
//! ([`is_linear`], [`is_centered`]) take faster routes that only need to
//! decide existence.

use std::collections::HashSet;

use serde::Serialize;

use crate::coloring::Coloring;
use crate::forest::EliminationForest;
use crate::graph::{Graph, VertexSet};
use crate::tally::Tally;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ViolationKind {
    ImproperEdge,
    CenterlessPath,
    CenterlessConnectedSet,
}

/// A subgraph of `G` on which no color appears exactly once.
///
/// For paths the witness is the vertex sequence; for connected sets it is the
/// sorted vertex list; for improper edges it is the two endpoints.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub kind: ViolationKind,
    pub witness: Vec<usize>,
}

impl Violation {
    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::from_vertices(self.witness.iter().copied())
    }
}

fn check_lengths(g: &Graph, c: &Coloring) {
    assert_eq!(c.len(), g.n(), "coloring has {} entries for a graph of order {}", c.len(), g.n());
}

/// Colors renumbered to `0..p` so per-color counters fit in a `u64` mask.
struct Dense {
    color: Vec<usize>,
    palette: usize,
}

impl Dense {
    fn new(c: &Coloring) -> Dense {
        let normalized = c.normalized();
        let color: Vec<usize> = normalized.colors().iter().map(|&x| x as usize).collect();
        let palette = color.iter().max().map_or(0, |&m| m + 1);
        Dense { color, palette }
    }

    /// Vertices of `set` whose color occurs exactly once in `set`.
    fn unique_in(&self, set: VertexSet) -> VertexSet {
        let mut counts = vec![0u32; self.palette];
        for v in set {
            counts[self.color[v]] += 1;
        }
        set.iter().filter(|&v| counts[self.color[v]] == 1).collect()
    }

    /// Colors appearing exactly once in `set`, as a bitmask over colors.
    fn once_mask(&self, set: VertexSet) -> u64 {
        let mut counts = vec![0u32; self.palette];
        for v in set {
            counts[self.color[v]] += 1;
        }
        counts
            .iter()
            .enumerate()
            .filter(|&(_, &k)| k == 1)
            .fold(0u64, |m, (i, _)| m | 1u64 << i)
    }
}

/// First monochromatic edge in lexicographic order, if any.
pub fn find_improper_edge(g: &Graph, c: &Coloring) -> Option<Violation> {
    check_lengths(g, c);
    g.edges().into_iter().find(|&(u, v)| c.color(u) == c.color(v)).map(|(u, v)| Violation {
        kind: ViolationKind::ImproperEdge,
        witness: vec![u, v],
    })
}

pub fn is_proper(g: &Graph, c: &Coloring) -> bool {
    find_improper_edge(g, c).is_none()
}

struct PathSearch<'a> {
    g: &'a Graph,
    dense: &'a Dense,
    within: VertexSet,
    /// Colors that occur once in `within`: a path holding one can never lose its center.
    fixed_once: u64,
    limit: usize,
    stack: Vec<usize>,
    tally: Tally,
    seen: HashSet<(usize, u64)>,
}

impl PathSearch<'_> {
    fn run_from(&mut self, start: usize) -> bool {
        self.stack.clear();
        self.tally = Tally::default();
        self.stack.push(start);
        self.tally.add(self.dense.color[start]);
        self.step(start, VertexSet::singleton(start))
    }

    fn step(&mut self, end: usize, set: VertexSet) -> bool {
        let len = self.stack.len();
        if len >= 2 && self.tally.ones == 0 && (self.limit == 0 || len == self.limit) {
            return true;
        }
        if self.limit != 0 && len == self.limit {
            return false;
        }
        if self.tally.ones & self.fixed_once != 0 {
            return false;
        }
        if self.limit != 0 && self.tally.ones.count_ones() as usize > self.limit - len {
            return false;
        }
        if !self.seen.insert((end, set.0)) {
            return false;
        }
        let next = self.g.neighbors(end).intersection(self.within).difference(set);
        for w in next {
            let cw = self.dense.color[w];
            self.stack.push(w);
            self.tally.add(cw);
            if self.step(w, set.with(w)) {
                return true;
            }
            self.tally.remove(cw);
            self.stack.pop();
        }
        false
    }
}

/// Shortest path whose vertex set has no uniquely colored vertex.
pub fn find_centerless_path(g: &Graph, c: &Coloring) -> Option<Violation> {
    check_lengths(g, c);
    if is_linear(g, c) {
        return None;
    }
    let dense = Dense::new(c);
    let within = g.vertices();
    let mut search = PathSearch {
        g,
        dense: &dense,
        within,
        fixed_once: dense.once_mask(within),
        limit: 2,
        stack: Vec::new(),
        tally: Tally::default(),
        seen: HashSet::new(),
    };
    for limit in 2..=g.n() {
        search.limit = limit;
        search.seen.clear();
        for start in 0..g.n() {
            if search.run_from(start) {
                return Some(Violation {
                    kind: ViolationKind::CenterlessPath,
                    witness: search.stack.clone(),
                });
            }
        }
    }
    unreachable!("is_linear reported a violation that deepening did not find")
}

/// Any centerless path inside `within`, searching all lengths at once.
fn any_centerless_path(g: &Graph, dense: &Dense, within: VertexSet) -> Option<Vec<usize>> {
    let mut search = PathSearch {
        g,
        dense,
        within,
        fixed_once: dense.once_mask(within),
        limit: 0,
        stack: Vec::new(),
        tally: Tally::default(),
        seen: HashSet::new(),
    };
    for start in within {
        if search.run_from(start) {
            return Some(search.stack.clone());
        }
    }
    None
}

/// Peels vertices that are uniquely colored in their component: every path
/// through one of them is centered, and the remaining paths live inside the
/// components of what is left. Only components without any such vertex need
/// a path search.
fn linear_violation_within(g: &Graph, dense: &Dense, within: VertexSet) -> Option<Vec<usize>> {
    for comp in g.components_within(within) {
        if comp.len() < 2 {
            continue;
        }
        let unique = dense.unique_in(comp);
        let found = if unique.is_empty() {
            any_centerless_path(g, dense, comp)
        } else {
            linear_violation_within(g, dense, comp.difference(unique))
        };
        if found.is_some() {
            return found;
        }
    }
    None
}

/// Every path of `G` has a vertex whose color is unique on it.
pub fn is_linear(g: &Graph, c: &Coloring) -> bool {
    check_lengths(g, c);
    let dense = Dense::new(c);
    linear_violation_within(g, &dense, g.vertices()).is_none()
}

struct SetSearch<'a> {
    g: &'a Graph,
    dense: &'a Dense,
    fixed_once: u64,
    size: usize,
    root: usize,
    found: Option<VertexSet>,
}

impl SetSearch<'_> {
    /// Enumerates each connected set with minimum vertex `root` exactly once
    /// (extension sets restricted to exclusive neighbors).
    fn extend(&mut self, sub: VertexSet, ext: VertexSet, closed_nbhd: VertexSet) -> bool {
        let once = self.dense.once_mask(sub);
        if sub.len() == self.size {
            if once == 0 {
                self.found = Some(sub);
                return true;
            }
            return false;
        }
        if once & self.fixed_once != 0 {
            return false;
        }
        let above_root = VertexSet(!((1u64 << self.root) - 1) & !(1u64 << self.root)).intersection(self.g.vertices());
        let mut ext = ext;
        while let Some(w) = ext.first() {
            ext.remove(w);
            let fresh = self.g.neighbors(w).intersection(above_root).difference(closed_nbhd);
            let next_sub = sub.with(w);
            if self.extend(next_sub, ext.union(fresh), closed_nbhd.union(fresh)) {
                return true;
            }
        }
        false
    }
}

/// Smallest connected vertex set with no uniquely colored vertex.
pub fn find_centerless_connected_set(g: &Graph, c: &Coloring) -> Option<Violation> {
    check_lengths(g, c);
    if is_centered(g, c) {
        return None;
    }
    let dense = Dense::new(c);
    let mut search = SetSearch {
        g,
        dense: &dense,
        fixed_once: dense.once_mask(g.vertices()),
        size: 2,
        root: 0,
        found: None,
    };
    for size in 2..=g.n() {
        search.size = size;
        for root in 0..g.n() {
            search.root = root;
            let above = VertexSet(!((1u64 << root) - 1) & !(1u64 << root)).intersection(g.vertices());
            let ext = g.neighbors(root).intersection(above);
            let closed = ext.with(root);
            if search.extend(VertexSet::singleton(root), ext, closed) {
                return Some(Violation {
                    kind: ViolationKind::CenterlessConnectedSet,
                    witness: search.found.expect("set recorded").to_vec(),
                });
            }
        }
    }
    unreachable!("is_centered reported a violation that deepening did not find")
}

/// Same peeling as for paths, except that a component without a uniquely
/// colored vertex is itself a violation.
fn centered_violation_within(g: &Graph, dense: &Dense, within: VertexSet) -> Option<VertexSet> {
    for comp in g.components_within(within) {
        let unique = dense.unique_in(comp);
        if unique.is_empty() {
            return Some(comp);
        }
        if let Some(bad) = centered_violation_within(g, dense, comp.difference(unique)) {
            return Some(bad);
        }
    }
    None
}

/// Every connected subgraph of `G` has a vertex whose color is unique on it.
pub fn is_centered(g: &Graph, c: &Coloring) -> bool {
    check_lengths(g, c);
    let dense = Dense::new(c);
    centered_violation_within(g, &dense, g.vertices()).is_none()
}

/// Every edge joins an ancestor-descendant pair, and the forest is acyclic.
pub fn verify_elimination_forest(g: &Graph, f: &EliminationForest) -> bool {
    verify_forest_on_edges(g.n(), &g.edges(), f)
}

/// [`verify_elimination_forest`] for a graph given as `n` and an edge list,
/// with no limit on the order.
pub fn verify_forest_on_edges(n: usize, edges: &[(usize, usize)], f: &EliminationForest) -> bool {
    if f.len() != n || f.levels().is_none() {
        return false;
    }
    edges
        .iter()
        .all(|&(u, v)| u < n && v < n && (f.is_ancestor(u, v) || f.is_ancestor(v, u)))
}

/// `f` is a valid elimination forest for `G` and colors along every
/// root-to-leaf path are pairwise distinct. This implies `c` is centered:
/// the shallowest vertex of a connected subgraph is an ancestor of all its
/// other vertices, so its color is unique there.
pub fn certified_centered(g: &Graph, f: &EliminationForest, c: &Coloring) -> bool {
    certified_centered_on_edges(g.n(), &g.edges(), f, c)
}

/// [`certified_centered`] for a graph given as `n` and an edge list.
pub fn certified_centered_on_edges(n: usize, edges: &[(usize, usize)], f: &EliminationForest, c: &Coloring) -> bool {
    if c.len() != n || !verify_forest_on_edges(n, edges, f) {
        return false;
    }
    (0..n).all(|v| f.ancestors(v).into_iter().all(|a| c.color(a) != c.color(v)))
}
