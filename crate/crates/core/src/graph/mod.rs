//! Simple undirected graphs on at most 64 vertices.
//!
//! Adjacency is stored as one `u64` bit row per vertex, so adjacency tests,
//! neighborhood intersections and subset manipulations are single word
//! operations. Everything the solvers and enumerators do is built on that.

mod canon;
mod enumerate;
mod graph6;
mod named;
mod subgraph;

pub use canon::{canonical_form, canonical_labeling, CanonicalCode};
pub use enumerate::{enumerate_graphs, enumerate_trees, extend_by_vertex};
pub use graph6::{from_edge_list, from_graph6, to_edge_list, to_graph6};
pub use named::*;
pub use subgraph::{contains_subgraph, find_subgraph};

use std::fmt;

use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 64;

/// A set of vertices of a graph with at most 64 vertices.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// The set `{0, .., n-1}`.
    pub fn full(n: usize) -> VertexSet {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> VertexSet {
        VertexSet(1u64 << v)
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(it: I) -> VertexSet {
        VertexSet(it.into_iter().fold(0u64, |acc, v| acc | (1u64 << v)))
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    #[inline]
    pub fn with(self, v: usize) -> VertexSet {
        VertexSet(self.0 | (1u64 << v))
    }

    #[inline]
    pub fn without(self, v: usize) -> VertexSet {
        VertexSet(self.0 & !(1u64 << v))
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Lowest vertex of the set.
    #[inline]
    pub fn first(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    #[inline]
    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    #[inline]
    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Vertices in ascending order.
    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;

    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::from_vertices(iter)
    }
}

pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for VertexIter {}

/// Immutable simple undirected graph over vertices `0..n`.
///
/// Invariants: `adj` is symmetric, irreflexive, and has no bits at or above `n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            g.adj[u] |= 1u64 << v;
            g.adj[v] |= 1u64 << u;
        }
        Ok(g)
    }

    /// Builds a graph from raw bit rows, validating every invariant.
    pub fn from_rows(rows: Vec<u64>) -> Result<Graph> {
        let n = rows.len();
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        let mask = VertexSet::full(n).0;
        for (u, &row) in rows.iter().enumerate() {
            if row & !mask != 0 {
                return Err(Error::InvalidArgument(format!("row {u} has bits beyond n = {n}")));
            }
            if row >> u & 1 == 1 {
                return Err(Error::SelfLoop(u));
            }
            for v in VertexSet(row) {
                if rows[v] >> u & 1 == 0 {
                    return Err(Error::InvalidArgument(format!("asymmetric adjacency at {u}-{v}")));
                }
            }
        }
        Ok(Graph { n, adj: rows })
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Edges `(u, v)` with `u < v`, lexicographically ordered.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in VertexSet(self.adj[u] >> u << u).iter() {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Non-increasing degree sequence.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        let mut g = self.clone();
        g.adj[u] |= 1u64 << v;
        g.adj[v] |= 1u64 << u;
        Ok(g)
    }

    /// The graph with edge `uv` removed (a no-op if absent).
    pub fn without_edge(&self, u: usize, v: usize) -> Graph {
        let mut g = self.clone();
        g.adj[u] &= !(1u64 << v);
        g.adj[v] &= !(1u64 << u);
        g
    }

    /// Appends a new vertex `n` adjacent to `neighborhood`.
    pub fn with_vertex(&self, neighborhood: VertexSet) -> Result<Graph> {
        if self.n + 1 > MAX_VERTICES {
            return Err(Error::TooManyVertices(self.n + 1));
        }
        if !neighborhood.is_subset(self.vertices()) {
            return Err(Error::InvalidArgument("neighborhood outside vertex range".into()));
        }
        let new = self.n;
        let mut adj = self.adj.clone();
        for v in neighborhood {
            adj[v] |= 1u64 << new;
        }
        adj.push(neighborhood.0);
        Ok(Graph { n: self.n + 1, adj })
    }

    /// The subgraph induced by `set`, with vertices renumbered in ascending order.
    pub fn induced(&self, set: VertexSet) -> Graph {
        let verts = set.intersection(self.vertices()).to_vec();
        self.induced_ordered(&verts)
    }

    /// Induced subgraph where new vertex `i` is old vertex `verts[i]`.
    pub fn induced_ordered(&self, verts: &[usize]) -> Graph {
        let mut adj = vec![0u64; verts.len()];
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate() {
                if self.has_edge(u, v) {
                    adj[i] |= 1u64 << j;
                }
            }
        }
        Graph { n: verts.len(), adj }
    }

    pub fn remove_vertex(&self, v: usize) -> Graph {
        self.induced(self.vertices().without(v))
    }

    /// Relabels so that old vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::InvalidArgument("permutation length differs from order".into()));
        }
        let mut seen = VertexSet::EMPTY;
        for &p in perm {
            if p >= self.n || seen.contains(p) {
                return Err(Error::InvalidArgument("not a permutation".into()));
            }
            seen.insert(p);
        }
        let mut adj = vec![0u64; self.n];
        for (u, v) in self.edges() {
            adj[perm[u]] |= 1u64 << perm[v];
            adj[perm[v]] |= 1u64 << perm[u];
        }
        Ok(Graph { n: self.n, adj })
    }

    pub fn complement(&self) -> Graph {
        let full = self.vertices().0;
        let adj = (0..self.n).map(|v| !self.adj[v] & full & !(1u64 << v)).collect();
        Graph { n: self.n, adj }
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|r| r << self.n));
        Ok(Graph { n, adj })
    }

    /// Vertices reachable from `start` inside `within`.
    pub fn component_of(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = 0u64;
            for v in frontier {
                next |= self.adj[v];
            }
            frontier = VertexSet(next & within.0 & !seen.0);
            seen = seen.union(frontier);
        }
        seen
    }

    /// Connected components of `G[within]`, ordered by their lowest vertex.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut rest = within;
        let mut out = Vec::new();
        while let Some(v) = rest.first() {
            let c = self.component_of(v, within);
            rest = rest.difference(c);
            out.push(c);
        }
        out
    }

    pub fn connected_components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertices())
    }

    pub fn is_connected_within(&self, set: VertexSet) -> bool {
        match set.first() {
            None => true,
            Some(v) => self.component_of(v, set) == set,
        }
    }

    /// The order-zero graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.is_connected_within(self.vertices())
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.edge_count() == self.n - 1 && self.is_connected()
    }

    pub fn is_forest(&self) -> bool {
        self.edge_count() + self.connected_components().len() == self.n
    }

    /// Every component is `K1`, `K2` or a star `K_{1,r}`.
    pub fn is_star_forest(&self) -> bool {
        self.is_forest()
            && self.connected_components().into_iter().all(|c| {
                let size = c.len();
                size <= 2 || c.iter().any(|v| self.degree(v) == size - 1)
            })
    }

    /// A proper 2-coloring if the graph is bipartite.
    pub fn bipartition(&self) -> Option<VertexSet> {
        let mut side = VertexSet::EMPTY;
        let mut seen = VertexSet::EMPTY;
        for start in 0..self.n {
            if seen.contains(start) {
                continue;
            }
            seen.insert(start);
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                for w in self.neighbors(u) {
                    if !seen.contains(w) {
                        seen.insert(w);
                        if !side.contains(u) {
                            side.insert(w);
                        }
                        stack.push(w);
                    } else if side.contains(w) == side.contains(u) {
                        return None;
                    }
                }
            }
        }
        Some(side)
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    pub fn is_clique(&self, set: VertexSet) -> bool {
        set.iter().all(|v| set.without(v).is_subset(self.neighbors(v)))
    }

    /// Does the vertex sequence form a path (consecutive vertices adjacent, no repeats)?
    pub fn is_path(&self, seq: &[usize]) -> bool {
        if seq.is_empty() || seq.iter().any(|&v| v >= self.n) {
            return false;
        }
        let set = VertexSet::from_vertices(seq.iter().copied());
        set.len() == seq.len() && seq.windows(2).all(|w| self.has_edge(w[0], w[1]))
    }

    /// Does the vertex sequence form a cycle (a path whose ends are adjacent, length >= 3)?
    pub fn is_cycle(&self, seq: &[usize]) -> bool {
        seq.len() >= 3 && self.is_path(seq) && self.has_edge(seq[0], seq[seq.len() - 1])
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&to_graph6(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_oversized_and_loops() {
        assert_eq!(Graph::empty(65), Err(Error::TooManyVertices(65)));
        assert_eq!(Graph::from_edges(3, &[(1, 1)]), Err(Error::SelfLoop(1)));
        assert!(matches!(
            Graph::from_edges(3, &[(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        ));
        assert!(Graph::from_rows(vec![0b10, 0b00]).is_err());
    }

    #[test]
    fn sixty_four_vertices_fit() {
        let g = path_graph(64).unwrap();
        assert_eq!(g.edge_count(), 63);
        assert!(g.is_connected());
        assert_eq!(g.vertices().len(), 64);
    }

    #[test]
    fn components_and_induced() {
        let two_k2 = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!two_k2.is_connected());
        let p3_p1 = p3_plus_p1();
        let mut sizes: Vec<usize> = p3_p1.connected_components().iter().map(|c| c.len()).collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 3]);
        let k4 = complete_graph(4).unwrap();
        let k3 = k4.induced(VertexSet::from_vertices([0, 1, 2]));
        assert_eq!(k3, complete_graph(3).unwrap());
    }

    #[test]
    fn star_forest_recognition() {
        assert!(star(5).unwrap().is_star_forest());
        assert!(Graph::empty(3).unwrap().is_star_forest());
        assert!(!path_graph(4).unwrap().is_star_forest());
        assert!(!complete_graph(3).unwrap().is_star_forest());
    }

    #[test]
    fn paths_and_cycles_as_sequences() {
        let c4 = cycle_graph(4).unwrap();
        assert!(c4.is_path(&[0, 1, 2, 3]));
        assert!(c4.is_cycle(&[0, 1, 2, 3]));
        assert!(!c4.is_path(&[0, 2]));
        assert!(!c4.is_path(&[0, 1, 0]));
    }
}
