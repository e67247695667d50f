//! Constructors for the named graph families.
//!
//! Vertex numbering is fixed: paths and cycles run `0..n` in order, grids are
//! row-major (`(i, j) -> i * cols + j`), binary trees use heap order, and
//! caterpillars number the spine first and then the leaves spine vertex by
//! spine vertex.

use super::{Graph, VertexSet};
use crate::error::{Error, Result};

fn need(cond: bool, msg: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidArgument(msg.to_string()))
    }
}

/// `P_n`, edges `i -- i+1`.
pub fn path_graph(n: usize) -> Result<Graph> {
    need(n >= 1, "a path needs at least one vertex")?;
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &edges)
}

pub fn cycle_graph(n: usize) -> Result<Graph> {
    need(n >= 3, "a cycle needs at least three vertices")?;
    let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    edges.push((n - 1, 0));
    Graph::from_edges(n, &edges)
}

pub fn complete_graph(n: usize) -> Result<Graph> {
    need(n >= 1, "a complete graph needs at least one vertex")?;
    Ok(Graph::empty(n)?.complement())
}

/// `K_{1,r}`: center `0`, leaves `1..=r`.
pub fn star(leaves: usize) -> Result<Graph> {
    let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
    Graph::from_edges(leaves + 1, &edges)
}

pub fn claw() -> Graph {
    star(3).expect("claw fits")
}

/// Triangle `0,1,2` with pendant `3+i` on vertex `i`.
pub fn net() -> Graph {
    Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)]).expect("net fits")
}

/// Path `0-1-2` plus the isolated vertex `3`.
pub fn p3_plus_p1() -> Graph {
    Graph::from_edges(4, &[(0, 1), (1, 2)]).expect("P3+P1 fits")
}

/// Complement of `P3 + P1`: triangle `0,2,3` with `1` pendant on `3`.
pub fn paw() -> Graph {
    p3_plus_p1().complement()
}

/// `B_k` with `2^k - 1` vertices; children of `i` are `2i+1` and `2i+2`.
pub fn complete_binary_tree(levels: usize) -> Result<Graph> {
    need(levels >= 1, "a binary tree needs at least one level")?;
    need(levels <= 6, "B_k has more than 64 vertices for k > 6")?;
    let n = (1usize << levels) - 1;
    let edges: Vec<_> = (1..n).map(|i| ((i - 1) / 2, i)).collect();
    Graph::from_edges(n, &edges)
}

/// `rows x cols` grid, vertex `(i, j)` is `i * cols + j`.
pub fn rect_grid(rows: usize, cols: usize) -> Result<Graph> {
    need(rows >= 1 && cols >= 1, "grid sides must be positive")?;
    let n = rows.checked_mul(cols).unwrap_or(usize::MAX);
    if n > super::MAX_VERTICES {
        return Err(Error::TooManyVertices(n));
    }
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
    Graph::from_edges(n, &edges)
}

/// The `k x k` grid.
pub fn grid_graph(k: usize) -> Result<Graph> {
    rect_grid(k, k)
}

/// Parts occupy consecutive index ranges in the given order.
pub fn complete_multipartite(parts: &[usize]) -> Result<Graph> {
    need(!parts.is_empty(), "at least one part is required")?;
    need(parts.iter().all(|&p| p >= 1), "every part needs at least one vertex")?;
    let n: usize = parts.iter().sum();
    if n > super::MAX_VERTICES {
        return Err(Error::TooManyVertices(n));
    }
    let mut part_of = Vec::with_capacity(n);
    for (i, &size) in parts.iter().enumerate() {
        part_of.extend(std::iter::repeat(i).take(size));
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if part_of[u] != part_of[v] {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges)
}

/// Complement of the `rows x cols` rook's graph: `(i, j)` is `i * cols + j`,
/// adjacent to `(i', j')` iff `i != i'` and `j != j'`.
pub fn corook_graph(rows: usize, cols: usize) -> Result<Graph> {
    need(rows >= 1 && cols >= 1, "co-rook sides must be positive")?;
    let n = rows.checked_mul(cols).unwrap_or(usize::MAX);
    if n > super::MAX_VERTICES {
        return Err(Error::TooManyVertices(n));
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if u / cols != v / cols && u % cols != v % cols {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges)
}

/// Row `i` of the co-rook / grid layout as a vertex set.
pub fn layout_row(i: usize, cols: usize) -> VertexSet {
    VertexSet::from_vertices((0..cols).map(|j| i * cols + j))
}

/// Column `j` of the co-rook / grid layout as a vertex set.
pub fn layout_column(j: usize, rows: usize, cols: usize) -> VertexSet {
    VertexSet::from_vertices((0..rows).map(|i| i * cols + j))
}

/// Spine `0..len` with `legs[i]` pendant leaves on spine vertex `i`.
pub fn caterpillar(legs: &[usize]) -> Result<Graph> {
    need(!legs.is_empty(), "a caterpillar needs a spine vertex")?;
    let spine = legs.len();
    let n = spine + legs.iter().sum::<usize>();
    if n > super::MAX_VERTICES {
        return Err(Error::TooManyVertices(n));
    }
    let mut edges: Vec<_> = (1..spine).map(|i| (i - 1, i)).collect();
    let mut next = spine;
    for (i, &count) in legs.iter().enumerate() {
        for _ in 0..count {
            edges.push((i, next));
            next += 1;
        }
    }
    Graph::from_edges(n, &edges)
}

/// Tree made of paths with `legs[i]` edges glued at a common center `0`.
pub fn spider(legs: &[usize]) -> Result<Graph> {
    let n = 1 + legs.iter().sum::<usize>();
    if n > super::MAX_VERTICES {
        return Err(Error::TooManyVertices(n));
    }
    let mut edges = Vec::new();
    let mut next = 1;
    for &len in legs {
        let mut prev = 0;
        for _ in 0..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    Graph::from_edges(n, &edges)
}
