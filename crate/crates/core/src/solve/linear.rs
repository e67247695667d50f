//! Exact linear chromatic number by set-partition search.
//!
//! Vertices are colored one at a time (descending degree, ties by index) with
//! restricted-growth color choices, so each partition of the vertex set is
//! visited once. After a vertex is colored, every path through it that lies
//! entirely among colored vertices is checked; such a path's colors are final,
//! so a centerless one refutes the whole subtree. Paths touching uncolored
//! vertices are never used to prune.

use std::collections::HashSet;

use crate::coloring::Coloring;
use crate::graph::{Graph, VertexSet};
use crate::tally::Tally;
use crate::verify::is_linear;

const NONE: u8 = u8::MAX;

struct Search<'a> {
    g: &'a Graph,
    k: usize,
    order: Vec<usize>,
    color: Vec<u8>,
    colored: VertexSet,
    /// Color counts over all colored vertices.
    global: Tally,
    seen_a: HashSet<(u8, u64)>,
    seen_b: HashSet<(u8, u64)>,
    nodes: u64,
}

impl Search<'_> {
    /// Colors that currently occur exactly once among colored vertices; a
    /// path containing such a color keeps that center however it is extended
    /// inside the colored set.
    #[inline]
    fn locked(&self) -> u64 {
        self.global.ones
    }

    /// Is there a centerless path through `v` using only colored vertices?
    fn bad_path_through(&mut self, v: usize) -> bool {
        self.seen_a.clear();
        self.seen_b.clear();
        let mut tally = Tally::default();
        tally.add(self.color[v] as usize);
        self.arm_a(v, v, VertexSet::singleton(v), &mut tally)
    }

    fn arm_a(&mut self, v: usize, end: usize, set: VertexSet, tally: &mut Tally) -> bool {
        if tally.ones & self.locked() != 0 || !self.seen_a.insert((end as u8, set.0)) {
            return false;
        }
        if self.arm_b(v, set, tally) {
            return true;
        }
        for w in self.g.neighbors(end).intersection(self.colored).difference(set) {
            let cw = self.color[w];
            tally.add(cw as usize);
            let hit = self.arm_a(v, w, set.with(w), tally);
            tally.remove(cw as usize);
            if hit {
                return true;
            }
        }
        false
    }

    fn arm_b(&mut self, end: usize, set: VertexSet, tally: &mut Tally) -> bool {
        if set.len() >= 2 && tally.ones == 0 {
            return true;
        }
        if tally.ones & self.locked() != 0 || !self.seen_b.insert((end as u8, set.0)) {
            return false;
        }
        for w in self.g.neighbors(end).intersection(self.colored).difference(set) {
            let cw = self.color[w];
            tally.add(cw as usize);
            let hit = self.arm_b(w, set.with(w), tally);
            tally.remove(cw as usize);
            if hit {
                return true;
            }
        }
        false
    }

    fn run(&mut self, pos: usize, used: usize) -> bool {
        self.nodes += 1;
        if pos == self.order.len() {
            return true;
        }
        let v = self.order[pos];
        let top = used.min(self.k - 1);
        let mut forbidden = 0u64;
        for u in self.g.neighbors(v).intersection(self.colored) {
            forbidden |= 1u64 << self.color[u];
        }
        for c in 0..=top {
            if forbidden >> c & 1 == 1 {
                continue;
            }
            let c8 = c as u8;
            self.color[v] = c8;
            self.colored.insert(v);
            self.global.add(c);
            let ok = !self.bad_path_through(v) && self.run(pos + 1, used.max(c + 1));
            if ok {
                return true;
            }
            self.global.remove(c);
            self.colored.remove(v);
            self.color[v] = NONE;
        }
        false
    }
}

/// Search order: descending degree, ties broken by lower index.
fn vertex_order(g: &Graph, set: VertexSet) -> Vec<usize> {
    let mut order = set.to_vec();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    order
}

/// A linear coloring of the connected set `comp` with at most `k` colors.
/// Colors of vertices outside `comp` in the returned vector are unspecified.
fn color_component(g: &Graph, comp: VertexSet, k: usize) -> Option<Vec<u8>> {
    if k == 0 {
        return None;
    }
    let mut search = Search {
        g,
        k,
        order: vertex_order(g, comp),
        color: vec![NONE; g.n()],
        colored: VertexSet::EMPTY,
        global: Tally::default(),
        seen_a: HashSet::new(),
        seen_b: HashSet::new(),
        nodes: 0,
    };
    if search.run(0, 0) {
        Some(search.color)
    } else {
        None
    }
}

/// Linear coloring of `g` with at most `k` colors, if one exists. Components
/// are solved independently and share the palette.
pub fn decide_linear_at_most(g: &Graph, k: usize) -> Option<Coloring> {
    let mut colors = vec![0u32; g.n()];
    for comp in g.connected_components() {
        let found = color_component(g, comp, k)?;
        for v in comp {
            colors[v] = found[v] as u32;
        }
    }
    let c = Coloring::new(colors);
    debug_assert!(is_linear(g, &c));
    Some(c)
}

/// `χlin` of each component together with its witness, trying
/// `k = lower_bound(component), lower_bound + 1, ..`.
pub(crate) fn linear_by_components(g: &Graph) -> (usize, Coloring) {
    let mut colors = vec![0u32; g.n()];
    let mut value = 0;
    for comp in g.connected_components() {
        let sub = g.induced(comp);
        let verts = comp.to_vec();
        let mut k = super::bounds::lower_bound(&sub).max(1);
        let found = loop {
            if let Some(c) = color_component(&sub, sub.vertices(), k) {
                break c;
            }
            k += 1;
        };
        for (i, &v) in verts.iter().enumerate() {
            colors[v] = found[i] as u32;
        }
        value = value.max(k);
    }
    (value, Coloring::new(colors))
}
