//! Exact solvers for `χcen` (treedepth) and `χlin`.

mod bounds;
mod linear;
mod treedepth;

pub use bounds::{ceil_log2_plus_one, clique_number, longest_path_order, lower_bound, lower_bound_with_trace, BoundTrace};
pub use linear::decide_linear_at_most;
pub use treedepth::{treedepth, MEMO_MAX_ORDER};

use serde::Serialize;

use crate::coloring::Coloring;
use crate::forest::EliminationForest;
use crate::graph::Graph;

#[derive(Clone, Debug, Serialize)]
pub struct ChromaticResult {
    pub value: usize,
    /// Linear (for `χlin`) or centered (for `χcen`) coloring with `value` colors.
    pub witness: Coloring,
    /// Minimum-depth elimination forest, for `χcen` only.
    pub certificate: Option<EliminationForest>,
    pub lower_bound: usize,
    pub lower_bound_trace: BoundTrace,
}

/// `χcen(G)`, i.e. treedepth, with an elimination forest and its depth coloring.
pub fn centered_chromatic(g: &Graph) -> ChromaticResult {
    let (lower_bound, trace) = lower_bound_with_trace(g);
    let (value, forest) = treedepth(g);
    ChromaticResult {
        value,
        witness: forest.depth_coloring(),
        certificate: Some(forest),
        lower_bound,
        lower_bound_trace: trace,
    }
}

/// `χlin(G)` with a linear coloring attaining it.
pub fn linear_chromatic(g: &Graph) -> ChromaticResult {
    let (lower_bound, trace) = lower_bound_with_trace(g);
    let (value, witness) = linear::linear_by_components(g);
    ChromaticResult {
        value,
        witness,
        certificate: None,
        lower_bound,
        lower_bound_trace: trace,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{caterpillar, corook_graph, cycle_graph, path_graph};
    use crate::verify::{is_centered, is_linear, verify_elimination_forest};

    #[test]
    fn known_values() {
        assert_eq!(linear_chromatic(&path_graph(8).unwrap()).value, 4);
        assert_eq!(centered_chromatic(&path_graph(7).unwrap()).value, 3);
        let op = caterpillar(&[0, 0, 1, 1, 0, 0]).unwrap();
        assert_eq!(linear_chromatic(&op).value, 3);
        assert_eq!(centered_chromatic(&op).value, 4);
        assert_eq!(linear_chromatic(&cycle_graph(5).unwrap()).value, 4);
        assert_eq!(linear_chromatic(&corook_graph(3, 3).unwrap()).value, 7);
    }

    #[test]
    fn witnesses_verify() {
        let g = cycle_graph(7).unwrap();
        let lin = linear_chromatic(&g);
        assert!(is_linear(&g, &lin.witness));
        assert_eq!(lin.witness.palette_size(), lin.value);
        let cen = centered_chromatic(&g);
        assert!(is_centered(&g, &cen.witness));
        assert_eq!(cen.witness.palette_size(), cen.value);
        let f = cen.certificate.unwrap();
        assert!(verify_elimination_forest(&g, &f));
        assert_eq!(f.depth(), cen.value);
    }

    #[test]
    fn empty_graph() {
        let g = Graph::empty(0).unwrap();
        assert_eq!(linear_chromatic(&g).value, 0);
        assert_eq!(centered_chromatic(&g).value, 0);
    }
}
