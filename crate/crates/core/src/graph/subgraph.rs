//! Non-induced subgraph containment by backtracking.

use super::{Graph, VertexSet};

/// Pattern vertices ordered so that each one (after the first of its
/// component) has as many already-placed neighbors as possible.
fn match_order(pattern: &Graph) -> Vec<usize> {
    let n = pattern.n();
    let mut placed = VertexSet::EMPTY;
    let mut order = Vec::with_capacity(n);
    while order.len() < n {
        let next = (0..n)
            .filter(|&v| !placed.contains(v))
            .max_by_key(|&v| {
                let links = pattern.neighbors(v).intersection(placed).len();
                (links, pattern.degree(v), std::cmp::Reverse(v))
            })
            .expect("unplaced vertex remains");
        placed.insert(next);
        order.push(next);
    }
    order
}

struct Matcher<'a> {
    host: &'a Graph,
    pattern: &'a Graph,
    order: Vec<usize>,
    map: Vec<usize>,
}

impl Matcher<'_> {
    fn extend(&mut self, depth: usize, used: VertexSet) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let p = self.order[depth];
        let need = self.pattern.degree(p);
        let mut candidates = self.host.vertices().difference(used);
        for q in self.pattern.neighbors(p) {
            let image = self.map[q];
            if image != usize::MAX {
                candidates = candidates.intersection(self.host.neighbors(image));
            }
        }
        for h in candidates {
            if self.host.degree(h) < need {
                continue;
            }
            self.map[p] = h;
            if self.extend(depth + 1, used.with(h)) {
                return true;
            }
        }
        self.map[p] = usize::MAX;
        false
    }
}

fn degrees_dominate(host: &Graph, pattern: &Graph) -> bool {
    let hd = host.degree_sequence();
    let pd = pattern.degree_sequence();
    pd.iter().zip(hd.iter()).all(|(p, h)| p <= h)
}

/// An injective map `pattern -> host` sending edges to edges, if one exists.
/// `result[p]` is the host vertex that pattern vertex `p` lands on.
pub fn find_subgraph(host: &Graph, pattern: &Graph) -> Option<Vec<usize>> {
    if pattern.n() > host.n() || pattern.edge_count() > host.edge_count() {
        return None;
    }
    if !degrees_dominate(host, pattern) {
        return None;
    }
    let mut m = Matcher {
        host,
        pattern,
        order: match_order(pattern),
        map: vec![usize::MAX; pattern.n()],
    };
    if m.extend(0, VertexSet::EMPTY) {
        Some(m.map)
    } else {
        None
    }
}

/// Does `host` contain `pattern` as a (not necessarily induced) subgraph?
pub fn contains_subgraph(host: &Graph, pattern: &Graph) -> bool {
    find_subgraph(host, pattern).is_some()
}
