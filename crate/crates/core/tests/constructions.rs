mod common;

use chromlab::construct::{
    color_binary_tree, color_caterpillar, color_complete_multipartite, color_corook, color_grid, color_path,
    color_star_forest, corook_value, grid_edges,
};
use chromlab::graph::{enumerate_trees, grid_graph, star, Graph};
use chromlab::scan::is_caterpillar;
use chromlab::solve::{centered_chromatic, linear_chromatic};
use chromlab::verify::{certified_centered, certified_centered_on_edges, is_centered};

fn partitions_of(n: usize, max: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in (1..=max.min(n)).rev() {
        for mut rest in partitions_of(n - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

#[test]
fn paths_are_tight() {
    for n in 1..=10 {
        let (g, c) = color_path(n).unwrap();
        assert!(is_centered(&g, &c.coloring) && certified_centered(&g, &c.forest, &c.coloring));
        assert_eq!(c.coloring.palette_size(), c.claimed_size);
        assert_eq!(c.claimed_size, centered_chromatic(&g).value);
    }
}

#[test]
fn binary_trees_are_tight() {
    for k in 1..=4 {
        let (g, c) = color_binary_tree(k).unwrap();
        assert!(certified_centered(&g, &c.forest, &c.coloring));
        assert_eq!(c.coloring.palette_size(), k);
        if g.n() <= 10 {
            assert!(is_centered(&g, &c.coloring));
            assert_eq!(centered_chromatic(&g).value, k);
        }
    }
}

#[test]
fn multipartite_is_tight() {
    for n in 1..=8 {
        for parts in partitions_of(n, n) {
            let (g, c) = color_complete_multipartite(&parts).unwrap();
            assert!(is_centered(&g, &c.coloring), "{parts:?}");
            assert_eq!(c.coloring.palette_size(), c.claimed_size);
            if n <= 7 {
                assert_eq!(c.claimed_size, centered_chromatic(&g).value, "{parts:?}");
            }
        }
    }
}

#[test]
fn corook_is_tight() {
    for (r, cl) in [(1, 1), (2, 1), (3, 1), (1, 3), (2, 2), (3, 2), (2, 3), (4, 2), (3, 3)] {
        let (g, c) = color_corook(r, cl).unwrap();
        assert!(is_centered(&g, &c.coloring), "({r},{cl})");
        assert_eq!(c.coloring.palette_size(), corook_value(r, cl));
        assert_eq!(centered_chromatic(&g).value, corook_value(r, cl));
        assert_eq!(linear_chromatic(&g).value, corook_value(r, cl));
    }
}

#[test]
fn star_forests() {
    let g = star(3).unwrap().disjoint_union(&star(1).unwrap()).unwrap();
    let c = color_star_forest(&g).unwrap();
    assert!(is_centered(&g, &c.coloring));
    assert_eq!(c.claimed_size, 2);
}

#[test]
fn caterpillars_within_one_of_linear() {
    for t in enumerate_trees(10).into_iter().filter(is_caterpillar) {
        let c = color_caterpillar(&t).unwrap();
        assert!(certified_centered(&t, &c.forest, &c.coloring));
        assert_eq!(c.coloring.palette_size(), c.claimed_size);
        assert!(c.claimed_size <= linear_chromatic(&t).value + 1, "{t:?}");
    }
    let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
    assert_eq!(color_caterpillar(&k2).unwrap().claimed_size, 2);
}

#[test]
fn grids() {
    for k in 2..=3 {
        let c = color_grid(k).unwrap();
        let g = grid_graph(k).unwrap();
        assert!(is_centered(&g, &c.coloring));
        assert!(c.coloring.palette_size() <= 4 * k);
    }
    for k in 4..=16 {
        let c = color_grid(k).unwrap();
        assert!(certified_centered_on_edges(k * k, &grid_edges(k, k), &c.forest, &c.coloring));
    }
    for k in 1..=64 {
        assert!(color_grid(k).unwrap().coloring.palette_size() <= 4 * k, "k = {k}");
    }
}
