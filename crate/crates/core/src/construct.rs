//! Explicit centered colorings for the classes with known exact values.
//!
//! Every constructor also returns the elimination forest its coloring comes
//! from, so outputs can be checked with
//! [`certified_centered`](crate::verify::certified_centered) even when the
//! exponential verifiers are out of reach.

use serde::Serialize;

use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::forest::EliminationForest;
use crate::graph::{self, Graph, VertexSet};
use crate::solve::ceil_log2_plus_one;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ColoringKind {
    Linear,
    Centered,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Construction {
    Path,
    StarForest,
    BinaryTree,
    Caterpillar,
    CompleteMultipartite,
    Corook,
    Grid,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassColoring {
    pub coloring: Coloring,
    pub kind: ColoringKind,
    /// Palette size predicted by the class formula.
    pub claimed_size: usize,
    pub class_tag: Construction,
    pub forest: EliminationForest,
}

impl ClassColoring {
    fn centered(coloring: Coloring, claimed_size: usize, class_tag: Construction, forest: EliminationForest) -> Self {
        ClassColoring { coloring, kind: ColoringKind::Centered, claimed_size, class_tag, forest }
    }
}

/// Recursive bisection of a vertex sequence: the middle vertex (lower middle
/// for even lengths) becomes the root of the segment, the two halves hang
/// below it. Writes parents and levels.
fn bisect(seq: &[usize], above: Option<usize>, level: usize, parent: &mut [Option<usize>], levels: &mut [usize]) {
    if seq.is_empty() {
        return;
    }
    let mid = (seq.len() - 1) / 2;
    let v = seq[mid];
    parent[v] = above;
    levels[v] = level;
    bisect(&seq[..mid], Some(v), level + 1, parent, levels);
    bisect(&seq[mid + 1..], Some(v), level + 1, parent, levels);
}

/// Coloring `depth - 1 - level`: the middle of the path gets the top color
/// and the deepest level gets color 0.
fn bisection_coloring(seq: &[usize], n: usize) -> (Coloring, EliminationForest, usize) {
    let mut parent = vec![None; n];
    let mut levels = vec![0; n];
    bisect(seq, None, 0, &mut parent, &mut levels);
    let depth = ceil_log2_plus_one(seq.len());
    let mut colors = vec![0u32; n];
    for &v in seq {
        colors[v] = (depth - 1 - levels[v]) as u32;
    }
    let forest = EliminationForest::new(parent).expect("bisection forest is acyclic");
    (Coloring::new(colors), forest, depth)
}

/// `P_n` with `ceil(log2(n + 1))` colors.
pub fn color_path(n: usize) -> Result<(Graph, ClassColoring)> {
    let g = graph::path_graph(n)?;
    let seq: Vec<usize> = (0..n).collect();
    let (coloring, forest, depth) = bisection_coloring(&seq, n);
    Ok((g, ClassColoring::centered(coloring, depth, Construction::Path, forest)))
}

/// Centers color 0, leaves color 1.
pub fn color_star_forest(g: &Graph) -> Result<ClassColoring> {
    if !g.is_star_forest() {
        return Err(Error::InvalidArgument("graph is not a star forest".into()));
    }
    let mut parent = vec![None; g.n()];
    let mut colors = vec![0u32; g.n()];
    for comp in g.connected_components() {
        let size = comp.len();
        let center = comp
            .iter()
            .find(|&v| g.degree(v) == size - 1)
            .expect("every star has a center");
        for leaf in comp.without(center) {
            parent[leaf] = Some(center);
            colors[leaf] = 1;
        }
    }
    let claimed = match (g.n(), g.edge_count()) {
        (0, _) => 0,
        (_, 0) => 1,
        _ => 2,
    };
    let forest = EliminationForest::new(parent).expect("stars are acyclic");
    Ok(ClassColoring::centered(Coloring::new(colors), claimed, Construction::StarForest, forest))
}

/// `B_k` colored by distance to the root.
pub fn color_binary_tree(levels: usize) -> Result<(Graph, ClassColoring)> {
    let g = graph::complete_binary_tree(levels)?;
    let parent = (0..g.n()).map(|i| if i == 0 { None } else { Some((i - 1) / 2) }).collect();
    let forest = EliminationForest::new(parent).expect("heap order is a tree");
    let coloring = forest.depth_coloring();
    Ok((g, ClassColoring::centered(coloring, levels, Construction::BinaryTree, forest)))
}

/// Orders the vertices of a path-shaped connected set from its lower-index end.
fn path_sequence(g: &Graph, set: VertexSet) -> Option<Vec<usize>> {
    if set.len() == 1 {
        return Some(set.to_vec());
    }
    let deg_in = |v: usize| g.neighbors(v).intersection(set).len();
    if set.iter().any(|v| deg_in(v) > 2) || !g.is_connected_within(set) {
        return None;
    }
    let start = set.iter().find(|&v| deg_in(v) == 1)?;
    let mut seq = vec![start];
    let mut seen = VertexSet::singleton(start);
    while let Some(next) = g.neighbors(*seq.last().unwrap()).intersection(set).difference(seen).first() {
        seen.insert(next);
        seq.push(next);
    }
    (seq.len() == set.len()).then_some(seq)
}

/// Paths are colored as paths. Otherwise the spine (the tree minus its
/// leaves) is colored by bisection and all leaves share one extra color.
pub fn color_caterpillar(g: &Graph) -> Result<ClassColoring> {
    let not_cat = || Error::InvalidArgument("graph is not a caterpillar".into());
    if !g.is_tree() {
        return Err(not_cat());
    }
    let n = g.n();
    if g.max_degree() <= 2 {
        let seq = path_sequence(g, g.vertices()).ok_or_else(not_cat)?;
        let (coloring, forest, depth) = bisection_coloring(&seq, n);
        return Ok(ClassColoring::centered(coloring, depth, Construction::Caterpillar, forest));
    }
    let spine: VertexSet = g.vertices().iter().filter(|&v| g.degree(v) >= 2).collect();
    let seq = path_sequence(g, spine).ok_or_else(not_cat)?;
    let (spine_coloring, spine_forest, depth) = bisection_coloring(&seq, n);
    let mut parent = spine_forest.parents().to_vec();
    let mut colors = spine_coloring.colors().to_vec();
    for leaf in g.vertices().difference(spine) {
        parent[leaf] = g.neighbors(leaf).first();
        colors[leaf] = depth as u32;
    }
    let forest = EliminationForest::new(parent).expect("leaves hang below the spine");
    Ok(ClassColoring::centered(Coloring::new(colors), depth + 1, Construction::Caterpillar, forest))
}

/// `mono` shares one color at the bottom of a chain over `rest`.
fn chain_then_block(n: usize, rest: &[usize], mono: &[usize]) -> (Coloring, EliminationForest) {
    let mut parent = vec![None; n];
    let mut colors = vec![0u32; n];
    for (i, &v) in rest.iter().enumerate() {
        parent[v] = if i == 0 { None } else { Some(rest[i - 1]) };
        colors[v] = i as u32 + 1;
    }
    for &v in mono {
        parent[v] = rest.last().copied();
        colors[v] = 0;
    }
    let forest = EliminationForest::new(parent).expect("chain with leaves is acyclic");
    (Coloring::new(colors), forest)
}

/// One largest part monochromatic, every other vertex its own color:
/// `n - p + 1` colors for largest part size `p`.
pub fn color_complete_multipartite(parts: &[usize]) -> Result<(Graph, ClassColoring)> {
    let g = graph::complete_multipartite(parts)?;
    let p = *parts
        .iter()
        .max()
        .ok_or_else(|| Error::InvalidArgument("no parts given".into()))?;
    let largest = parts.iter().position(|&s| s == p).expect("max is present");
    let start: usize = parts[..largest].iter().sum();
    let mono: Vec<usize> = (start..start + p).collect();
    let rest: Vec<usize> = (0..g.n()).filter(|v| !(start..start + p).contains(v)).collect();
    let (coloring, forest) = chain_then_block(g.n(), &rest, &mono);
    let claimed = g.n() - p + 1;
    Ok((g, ClassColoring::centered(coloring, claimed, Construction::CompleteMultipartite, forest)))
}

/// Value of `χcen = χlin` for the co-rook graph with the given sides.
pub fn corook_value(rows: usize, cols: usize) -> usize {
    let (big, small) = if rows >= cols { (rows, cols) } else { (cols, rows) };
    if small >= 2 && big >= 3 {
        big * small - big + 1
    } else {
        small
    }
}

/// Restriction of the complete multipartite coloring whose parts are the
/// longer lines of the layout (columns when `rows >= cols`); the degenerate
/// sides use `min(rows, cols)` colors.
pub fn color_corook(rows: usize, cols: usize) -> Result<(Graph, ClassColoring)> {
    let g = graph::corook_graph(rows, cols)?;
    let n = g.n();
    let claimed = corook_value(rows, cols);
    if rows.min(cols) == 1 {
        let c = ClassColoring::centered(Coloring::constant(n), 1, Construction::Corook, EliminationForest::flat(n));
        return Ok((g, c));
    }
    if rows == 2 && cols == 2 {
        // two disjoint edges 0-3 and 1-2
        let forest = EliminationForest::new(vec![None, None, Some(1), Some(0)]).expect("two edges");
        let coloring = Coloring::new(vec![0, 0, 1, 1]);
        return Ok((g, ClassColoring::centered(coloring, 2, Construction::Corook, forest)));
    }
    let mono: VertexSet = if rows >= cols {
        graph::layout_column(0, rows, cols)
    } else {
        graph::layout_row(0, cols)
    };
    let rest: Vec<usize> = g.vertices().difference(mono).to_vec();
    let (coloring, forest) = chain_then_block(n, &rest, &mono.to_vec());
    Ok((g, ClassColoring::centered(coloring, claimed, Construction::Corook, forest)))
}

/// Edges of the `rows x cols` grid in row-major numbering, with no order cap.
pub fn grid_edges(rows: usize, cols: usize) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for i in 0..rows {
        for j in 0..cols {
            let v = i * cols + j;
            if j + 1 < cols {
                edges.push((v, v + 1));
            }
            if i + 1 < rows {
                edges.push((v, v + cols));
            }
        }
    }
    edges
}

struct GridBuilder {
    cols: usize,
    parent: Vec<Option<usize>>,
    levels: Vec<usize>,
}

impl GridBuilder {
    fn id(&self, i: usize, j: usize) -> usize {
        i * self.cols + j
    }

    /// Colors the sub-rectangle `[r0, r0 + h) x [c0, c0 + w)` below `above`.
    fn rect(&mut self, r0: usize, c0: usize, h: usize, w: usize, above: Option<usize>, level: usize) {
        if h == 0 || w == 0 {
            return;
        }
        if h == 1 || w == 1 {
            let seq: Vec<usize> = if h == 1 {
                (c0..c0 + w).map(|j| self.id(r0, j)).collect()
            } else {
                (r0..r0 + h).map(|i| self.id(i, c0)).collect()
            };
            self.line(&seq, above, level);
            return;
        }
        let mr = (h - 1) / 2;
        let mc = (w - 1) / 2;
        let mut separator: Vec<usize> = (0..w).map(|j| self.id(r0 + mr, c0 + j)).collect();
        separator.extend((0..h).filter(|&i| i != mr).map(|i| self.id(r0 + i, c0 + mc)));
        let mut prev = above;
        for (t, &v) in separator.iter().enumerate() {
            self.parent[v] = prev;
            self.levels[v] = level + t;
            prev = Some(v);
        }
        let below = level + separator.len();
        let quadrants = [
            (r0, c0, mr, mc),
            (r0, c0 + mc + 1, mr, w - mc - 1),
            (r0 + mr + 1, c0, h - mr - 1, mc),
            (r0 + mr + 1, c0 + mc + 1, h - mr - 1, w - mc - 1),
        ];
        for (r, c, hh, ww) in quadrants {
            self.rect(r, c, hh, ww, prev, below);
        }
    }

    fn line(&mut self, seq: &[usize], above: Option<usize>, level: usize) {
        if seq.is_empty() {
            return;
        }
        let mid = (seq.len() - 1) / 2;
        let v = seq[mid];
        self.parent[v] = above;
        self.levels[v] = level;
        self.line(&seq[..mid], Some(v), level + 1);
        self.line(&seq[mid + 1..], Some(v), level + 1);
    }
}

/// The `k x k` grid: the middle row and middle column (lower ones for even
/// `k`) form a chain of unique colors, and the four remaining rectangles are
/// colored recursively with one shared palette. Rectangles of width one are
/// colored as paths. Colors are levels in the resulting forest, so the palette
/// size is the forest depth, at most `4k`.
///
/// Works for any `k`; the grid is described by [`grid_edges`] rather than a
/// [`Graph`] since it exceeds 64 vertices from `k = 9` on.
pub fn color_grid(k: usize) -> Result<ClassColoring> {
    if k == 0 {
        return Err(Error::InvalidArgument("grid side must be positive".into()));
    }
    let n = k * k;
    let mut b = GridBuilder { cols: k, parent: vec![None; n], levels: vec![0; n] };
    b.rect(0, 0, k, k, None, 0);
    let forest = EliminationForest::new(b.parent).expect("grid recursion is a forest");
    let coloring = Coloring::new(b.levels.iter().map(|&l| l as u32).collect());
    let depth = forest.depth();
    Ok(ClassColoring::centered(coloring, depth, Construction::Grid, forest))
}
