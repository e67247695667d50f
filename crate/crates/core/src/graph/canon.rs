//! Canonical labeling by color refinement plus individualization.
//!
//! The search refines an ordered vertex partition to equitability, then
//! branches on the vertices of the first non-singleton cell. Each discrete
//! leaf yields a relabeled adjacency matrix; the lexicographically largest one
//! is the canonical form. Branches on twin vertices (equal neighborhoods up to
//! each other) are skipped since swapping twins is an automorphism fixing the
//! current node.

use super::{to_graph6, Graph, VertexSet};

/// graph6 encoding of the canonically relabeled graph.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CanonicalCode(String);

impl CanonicalCode {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// The canonical representative itself.
    pub fn to_graph(&self) -> Graph {
        super::from_graph6(&self.0).expect("canonical codes are valid graph6")
    }
}

impl std::fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

type Partition = Vec<Vec<usize>>;

fn refine(g: &Graph, cells: &mut Partition) {
    'restart: loop {
        for s in 0..cells.len() {
            let splitter = VertexSet::from_vertices(cells[s].iter().copied()).0;
            for i in 0..cells.len() {
                if cells[i].len() < 2 {
                    continue;
                }
                let count = |v: usize| (g.rows()[v] & splitter).count_ones();
                let first = count(cells[i][0]);
                if cells[i].iter().all(|&v| count(v) == first) {
                    continue;
                }
                let mut keyed: Vec<(u32, usize)> = cells[i].iter().map(|&v| (count(v), v)).collect();
                keyed.sort_unstable();
                let mut groups: Partition = Vec::new();
                let mut last = None;
                for (k, v) in keyed {
                    if last != Some(k) {
                        groups.push(Vec::new());
                        last = Some(k);
                    }
                    groups.last_mut().unwrap().push(v);
                }
                cells.splice(i..=i, groups);
                continue 'restart;
            }
        }
        return;
    }
}

fn is_twin(g: &Graph, u: usize, v: usize) -> bool {
    let a = g.rows()[u] & !(1u64 << v);
    let b = g.rows()[v] & !(1u64 << u);
    a == b
}

struct Search<'a> {
    g: &'a Graph,
    best: Option<(Vec<u64>, Vec<usize>)>,
}

impl Search<'_> {
    fn leaf(&mut self, cells: &Partition) {
        let n = self.g.n();
        let mut perm = vec![0usize; n];
        for (i, cell) in cells.iter().enumerate() {
            perm[cell[0]] = i;
        }
        let mut rows = vec![0u64; n];
        for u in 0..n {
            for v in self.g.neighbors(u) {
                rows[perm[u]] |= 1u64 << perm[v];
            }
        }
        // reverse bit order so that lexicographic u64 comparison follows column order
        for r in rows.iter_mut() {
            *r = r.reverse_bits();
        }
        match &self.best {
            Some((b, _)) if *b >= rows => {}
            _ => self.best = Some((rows, perm)),
        }
    }

    fn descend(&mut self, mut cells: Partition) {
        refine(self.g, &mut cells);
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            self.leaf(&cells);
            return;
        };
        let cell = cells[target].clone();
        let mut tried: Vec<usize> = Vec::new();
        for &v in &cell {
            if tried.iter().any(|&u| is_twin(self.g, u, v)) {
                continue;
            }
            tried.push(v);
            let mut next = cells.clone();
            let rest: Vec<usize> = cell.iter().copied().filter(|&w| w != v).collect();
            next.splice(target..=target, [vec![v], rest]);
            self.descend(next);
        }
    }
}

/// `perm[v]` is the canonical position of vertex `v`.
pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    if g.n() == 0 {
        return Vec::new();
    }
    let mut search = Search { g, best: None };
    search.descend(vec![(0..g.n()).collect()]);
    search.best.expect("at least one leaf").1
}

pub fn canonical_form(g: &Graph) -> CanonicalCode {
    let perm = canonical_labeling(g);
    let relabeled = g.relabel(&perm).expect("canonical labeling is a permutation");
    CanonicalCode(to_graph6(&relabeled))
}
