//! Isomorphism-free generation of small graphs.
//!
//! Level `n + 1` is produced from level `n` by adding one vertex with every
//! possible neighborhood and deduplicating on [`canonical_form`]. Connected
//! graphs only need connected parents: every connected graph has a non-cut
//! vertex (a leaf of any spanning tree), and deleting it leaves a connected
//! graph of the previous order.

use std::collections::BTreeMap;

use rayon::prelude::*;

use super::{canonical_form, CanonicalCode, Graph, VertexSet};

fn sorted_level(codes: BTreeMap<CanonicalCode, Graph>) -> Vec<Graph> {
    let mut level: Vec<(usize, CanonicalCode, Graph)> =
        codes.into_iter().map(|(c, g)| (g.edge_count(), c, g)).collect();
    level.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
    level.into_iter().map(|(_, _, g)| g).collect()
}

/// All one-vertex extensions of `parents` (up to isomorphism), restricted to
/// extensions accepted by `keep`, as canonical representatives ordered by
/// edge count and then canonical code.
pub fn extend_by_vertex<F>(parents: &[Graph], connected_only: bool, keep: F) -> Vec<Graph>
where
    F: Fn(&Graph) -> bool + Sync,
{
    let found: Vec<(CanonicalCode, Graph)> = parents
        .par_iter()
        .flat_map_iter(|g| {
            let n = g.n();
            let start = if connected_only && n > 0 { 1u64 } else { 0 };
            let end = 1u64 << n;
            (start..end).filter_map(move |mask| {
                let child = g.with_vertex(VertexSet(mask)).ok()?;
                Some(child)
            })
        })
        .filter(|child| keep(child))
        .map(|child| {
            let code = canonical_form(&child);
            let rep = code.to_graph();
            (code, rep)
        })
        .collect();
    sorted_level(found.into_iter().collect())
}

/// One representative per isomorphism class, orders `1..=n_max`, ordered by
/// order, then edge count, then canonical code.
pub fn enumerate_graphs(n_max: usize, connected_only: bool) -> Vec<Graph> {
    let mut out = Vec::new();
    if n_max == 0 {
        return out;
    }
    let mut level = vec![Graph::empty(1).expect("K1")];
    out.extend(level.iter().cloned());
    for _ in 2..=n_max {
        level = extend_by_vertex(&level, connected_only, |_| true);
        out.extend(level.iter().cloned());
    }
    out
}

/// All trees on `1..=n_max` vertices up to isomorphism.
pub fn enumerate_trees(n_max: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    if n_max == 0 {
        return out;
    }
    let mut level = vec![Graph::empty(1).expect("K1")];
    out.extend(level.iter().cloned());
    for _ in 2..=n_max {
        let found: BTreeMap<CanonicalCode, Graph> = level
            .par_iter()
            .flat_map_iter(|t| {
                (0..t.n()).map(move |v| t.with_vertex(VertexSet::singleton(v)).expect("tree fits"))
            })
            .map(|child| {
                let code = canonical_form(&child);
                let rep = code.to_graph();
                (code, rep)
            })
            .collect::<Vec<_>>()
            .into_iter()
            .collect();
        level = sorted_level(found);
        out.extend(level.iter().cloned());
    }
    out
}
