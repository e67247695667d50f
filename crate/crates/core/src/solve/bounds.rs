use std::collections::HashSet;

use crate::graph::{Graph, VertexSet};

/// Maximum clique size by Bron-Kerbosch with pivoting and a size bound.
pub fn clique_number(g: &Graph) -> usize {
    fn expand(g: &Graph, size: usize, cand: VertexSet, excl: VertexSet, best: &mut usize) {
        if cand.is_empty() {
            if excl.is_empty() {
                *best = (*best).max(size);
            }
            return;
        }
        if size + cand.len() <= *best {
            return;
        }
        let pivot = cand
            .union(excl)
            .iter()
            .max_by_key(|&u| g.neighbors(u).intersection(cand).len())
            .expect("nonempty");
        let mut cand = cand;
        let mut excl = excl;
        for v in cand.difference(g.neighbors(pivot)) {
            let nv = g.neighbors(v);
            expand(g, size + 1, cand.intersection(nv), excl.intersection(nv), best);
            cand.remove(v);
            excl.insert(v);
        }
    }
    let mut best = 0;
    expand(g, 0, g.vertices(), VertexSet::EMPTY, &mut best);
    best
}

/// Order (vertex count) of a longest simple path, by exhaustive search over
/// `(endpoint, vertex set)` states.
pub fn longest_path_order(g: &Graph) -> usize {
    fn walk(g: &Graph, end: usize, set: VertexSet, best: &mut usize, seen: &mut HashSet<(usize, u64)>, target: usize) {
        *best = (*best).max(set.len());
        if *best == target || !seen.insert((end, set.0)) {
            return;
        }
        let reach = g.component_of(end, g.vertices().difference(set).with(end)).len() - 1;
        if set.len() + reach <= *best {
            return;
        }
        for w in g.neighbors(end).difference(set) {
            walk(g, w, set.with(w), best, seen, target);
            if *best == target {
                return;
            }
        }
    }
    let mut best = 0;
    let mut seen = HashSet::new();
    for comp in g.connected_components() {
        let target = comp.len();
        if target <= best {
            continue;
        }
        let mut comp_best = 0;
        for v in comp {
            walk(g, v, VertexSet::singleton(v), &mut comp_best, &mut seen, target);
            if comp_best == target {
                break;
            }
        }
        best = best.max(comp_best);
    }
    best
}

/// `ceil(log2(m + 1))`, the number of colors a path on `m` vertices needs.
pub fn ceil_log2_plus_one(m: usize) -> usize {
    (usize::BITS - m.leading_zeros()) as usize
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundTrace {
    Empty,
    Clique,
    LongestPath,
}

/// `max(ω(G), ceil(log2(L + 1)))` with `L` the order of a longest path, and
/// which of the two is active (clique on ties).
pub fn lower_bound_with_trace(g: &Graph) -> (usize, BoundTrace) {
    if g.n() == 0 {
        return (0, BoundTrace::Empty);
    }
    let omega = clique_number(g);
    let by_path = ceil_log2_plus_one(longest_path_order(g));
    if omega >= by_path {
        (omega, BoundTrace::Clique)
    } else {
        (by_path, BoundTrace::LongestPath)
    }
}

pub fn lower_bound(g: &Graph) -> usize {
    lower_bound_with_trace(g).0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, cycle_graph, grid_graph, paw, path_graph};

    #[test]
    fn cliques() {
        assert_eq!(clique_number(&complete_graph(4).unwrap()), 4);
        assert_eq!(clique_number(&cycle_graph(5).unwrap()), 2);
        assert_eq!(clique_number(&paw()), 3);
        assert_eq!(clique_number(&Graph::empty(3).unwrap()), 1);
        assert_eq!(clique_number(&Graph::empty(0).unwrap()), 0);
    }

    #[test]
    fn log_values() {
        let expect = [0, 1, 2, 2, 3, 3, 3, 3, 4, 4, 4, 4, 4, 4, 4, 4, 5];
        for (m, &e) in expect.iter().enumerate() {
            assert_eq!(ceil_log2_plus_one(m), e, "m = {m}");
        }
    }

    #[test]
    fn paths_and_bounds() {
        assert_eq!(longest_path_order(&path_graph(8).unwrap()), 8);
        assert_eq!(longest_path_order(&grid_graph(3).unwrap()), 9);
        assert_eq!(lower_bound(&path_graph(8).unwrap()), 4);
        assert_eq!(lower_bound(&complete_graph(4).unwrap()), 4);
        assert_eq!(lower_bound(&Graph::empty(5).unwrap()), 1);
        assert_eq!(lower_bound_with_trace(&path_graph(8).unwrap()).1, BoundTrace::LongestPath);
    }
}
