mod common;

use std::collections::BTreeSet;

use chromlab::graph::{
    canonical_form, contains_subgraph, enumerate_graphs, enumerate_trees, find_subgraph, from_graph6, to_graph6, Graph,
};
use common::{brute_contains, brute_iso_class_count, permutations};
use proptest::prelude::*;

#[test]
fn class_counts_match_brute_force() {
    let all = enumerate_graphs(6, false);
    for n in 1..=6 {
        let found = all.iter().filter(|g| g.n() == n).count();
        assert_eq!(found, brute_iso_class_count(n), "n = {n}");
    }
}

#[test]
fn connected_counts() {
    let counts: Vec<usize> = (1..=6)
        .map(|n| enumerate_graphs(6, true).iter().filter(|g| g.n() == n).count())
        .collect();
    assert_eq!(counts, vec![1, 1, 2, 6, 21, 112]);
    assert_eq!(enumerate_graphs(1, false).len(), 1);
}

#[test]
fn codes_separate_all_labelings_of_four_vertices() {
    let pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
    let mut codes = BTreeSet::new();
    for mask in 0..64u32 {
        let edges: Vec<_> = pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &e)| e).collect();
        codes.insert(canonical_form(&Graph::from_edges(4, &edges).unwrap()));
    }
    assert_eq!(codes.len(), 11);
}

#[test]
fn codes_are_orbit_invariant_on_small_graphs() {
    for g in enumerate_graphs(5, false) {
        let code = canonical_form(&g);
        for p in permutations(g.n()) {
            assert_eq!(canonical_form(&g.relabel(&p).unwrap()), code);
        }
    }
}

#[test]
fn containment_matches_injective_maps() {
    let graphs = enumerate_graphs(6, false);
    let patterns: Vec<&Graph> = graphs.iter().filter(|g| g.n() <= 5).collect();
    for host in &graphs {
        for pattern in &patterns {
            let want = brute_contains(host, pattern);
            assert_eq!(contains_subgraph(host, pattern), want, "{host:?} vs {pattern:?}");
            if let Some(map) = find_subgraph(host, pattern) {
                for (u, v) in pattern.edges() {
                    assert!(host.has_edge(map[u], map[v]));
                }
            }
        }
    }
}

#[test]
fn graph6_round_trip_through_order_eight() {
    for g in enumerate_graphs(8, false) {
        assert_eq!(from_graph6(&to_graph6(&g)).unwrap(), g);
    }
}

#[test]
fn trees_are_trees() {
    let trees = enumerate_trees(9);
    assert!(trees.iter().all(Graph::is_tree));
    let counts: Vec<usize> = (1..=9).map(|n| trees.iter().filter(|t| t.n() == n).count()).collect();
    assert_eq!(counts, vec![1, 1, 1, 2, 3, 6, 11, 23, 47]);
}

fn arb_graph() -> impl Strategy<Value = Graph> {
    (1usize..=12).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for v in 1..n {
                for u in 0..v {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn canonical_form_on_random_orbits(g in arb_graph(), seed in any::<u64>()) {
        use rand::{seq::SliceRandom, SeedableRng};
        let mut perm: Vec<usize> = (0..g.n()).collect();
        perm.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
        let h = g.relabel(&perm).unwrap();
        prop_assert_eq!(canonical_form(&g), canonical_form(&h));
        prop_assert_eq!(from_graph6(&to_graph6(&h)).unwrap(), h);
    }
}
