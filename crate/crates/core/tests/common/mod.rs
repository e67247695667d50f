//! Brute-force oracles and property checks shared by the integration tests
//! and the acceptance runner. Nothing here calls the library's search code;
//! only graph construction and enumeration are reused.

#![allow(dead_code)]

use std::collections::BTreeSet;

use chromlab::graph::{enumerate_graphs, Graph};
use chromlab::solve::{centered_chromatic, decide_linear_at_most, linear_chromatic};
use chromlab::verify::{
    certified_centered, find_centerless_connected_set, find_centerless_path, is_centered, is_linear, is_proper,
    verify_elimination_forest,
};
use chromlab::Coloring;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type Check = Result<(), String>;

fn has_unique_color(colors: &[u32], verts: &[usize]) -> bool {
    verts
        .iter()
        .any(|&v| verts.iter().filter(|&&u| colors[u] == colors[v]).count() == 1)
}

/// Vertex sets of all simple paths, found by plain DFS over sequences.
pub fn all_path_sets(g: &Graph) -> BTreeSet<Vec<usize>> {
    fn grow(g: &Graph, seq: &mut Vec<usize>, out: &mut BTreeSet<Vec<usize>>) {
        let mut set = seq.clone();
        set.sort();
        out.insert(set);
        let last = *seq.last().unwrap();
        for w in 0..g.n() {
            if g.has_edge(last, w) && !seq.contains(&w) {
                seq.push(w);
                grow(g, seq, out);
                seq.pop();
            }
        }
    }
    let mut out = BTreeSet::new();
    for v in 0..g.n() {
        grow(g, &mut vec![v], &mut out);
    }
    out
}

/// Every path has a vertex with a unique color.
pub fn naive_is_linear(g: &Graph, c: &[u32]) -> bool {
    all_path_sets(g).iter().all(|p| has_unique_color(c, p))
}

fn naive_connected(g: &Graph, verts: &[usize]) -> bool {
    let mut seen = vec![verts[0]];
    let mut i = 0;
    while i < seen.len() {
        let v = seen[i];
        for &w in verts {
            if g.has_edge(v, w) && !seen.contains(&w) {
                seen.push(w);
            }
        }
        i += 1;
    }
    seen.len() == verts.len()
}

/// Every nonempty connected vertex subset has a vertex with a unique color.
pub fn naive_is_centered(g: &Graph, c: &[u32]) -> bool {
    let n = g.n();
    (1u64..(1u64 << n)).all(|mask| {
        let verts: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        !naive_connected(g, &verts) || has_unique_color(c, &verts)
    })
}

/// Every coloring of `0..n` up to renaming, as restricted-growth strings.
pub fn naive_partitions(n: usize) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        let mut next = Vec::new();
        for p in &out {
            let top = p.iter().map(|&x| x + 1).max().unwrap_or(0);
            for c in 0..=top {
                let mut q = p.clone();
                q.push(c);
                next.push(q);
            }
        }
        out = next;
    }
    out
}

fn palette(c: &[u32]) -> usize {
    c.iter().collect::<BTreeSet<_>>().len()
}

/// Least palette over all partitions accepted by `ok`.
fn naive_min(g: &Graph, ok: impl Fn(&Graph, &[u32]) -> bool) -> usize {
    naive_partitions(g.n())
        .iter()
        .filter(|c| ok(g, c))
        .map(|c| palette(c))
        .min()
        .unwrap_or(0)
}

pub fn naive_chi_lin(g: &Graph) -> usize {
    naive_min(g, naive_is_linear)
}

pub fn naive_chi_cen(g: &Graph) -> usize {
    naive_min(g, naive_is_centered)
}

/// Treedepth by the textbook recursion over vertex subsets, no memo.
pub fn naive_treedepth(g: &Graph) -> usize {
    fn td(g: &Graph, verts: &[usize]) -> usize {
        if verts.is_empty() {
            return 0;
        }
        // split into components
        let mut left: Vec<usize> = verts.to_vec();
        let mut best = 0;
        let mut comps = Vec::new();
        while let Some(&s) = left.first() {
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let v = comp[i];
                for &w in &left {
                    if g.has_edge(v, w) && !comp.contains(&w) {
                        comp.push(w);
                    }
                }
                i += 1;
            }
            left.retain(|v| !comp.contains(v));
            comps.push(comp);
        }
        if comps.len() > 1 {
            for comp in comps {
                best = best.max(td(g, &comp));
            }
            return best;
        }
        let comp = &comps[0];
        1 + comp
            .iter()
            .map(|&v| {
                let rest: Vec<usize> = comp.iter().copied().filter(|&u| u != v).collect();
                td(g, &rest)
            })
            .min()
            .unwrap()
    }
    let all: Vec<usize> = (0..g.n()).collect();
    td(g, &all)
}

/// Number of isomorphism classes of graphs on exactly `n` vertices, by
/// bucketing all labeled graphs under every permutation.
pub fn brute_iso_class_count(n: usize) -> usize {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let perms = permutations(n);
    let mut index = vec![vec![0usize; n]; n];
    for (k, &(i, j)) in pairs.iter().enumerate() {
        index[i][j] = k;
        index[j][i] = k;
    }
    let mut seen = vec![false; 1 << pairs.len()];
    let mut classes = 0;
    for mask in 0..(1usize << pairs.len()) {
        if seen[mask] {
            continue;
        }
        classes += 1;
        for p in &perms {
            let mut image = 0usize;
            for (k, &(i, j)) in pairs.iter().enumerate() {
                if mask >> k & 1 == 1 {
                    image |= 1 << index[p[i]][p[j]];
                }
            }
            seen[image] = true;
        }
    }
    classes
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Is there an injective map sending pattern edges to host edges?
pub fn brute_contains(host: &Graph, pattern: &Graph) -> bool {
    fn place(host: &Graph, pattern: &Graph, map: &mut Vec<usize>) -> bool {
        let p = map.len();
        if p == pattern.n() {
            return true;
        }
        for h in 0..host.n() {
            if map.contains(&h) {
                continue;
            }
            if (0..p).all(|q| !pattern.has_edge(p, q) || host.has_edge(h, map[q])) {
                map.push(h);
                if place(host, pattern, map) {
                    return true;
                }
                map.pop();
            }
        }
        false
    }
    pattern.n() <= host.n() && place(host, pattern, &mut Vec::new())
}

pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        for u in 0..v {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

pub fn random_coloring(rng: &mut ChaCha8Rng, n: usize, colors: u32) -> Coloring {
    Coloring::new((0..n).map(|_| rng.gen_range(0..colors)).collect())
}

fn fail(what: &str, g: &Graph, extra: impl std::fmt::Debug) -> String {
    format!("{what} on {} ({g:?}): {extra:?}", chromlab::graph::to_graph6(g))
}

/// centered => linear => proper on random graphs and colorings.
pub fn check_verifier_chain(samples: usize, seed: u64) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let n = rng.gen_range(1..=7);
        let g = random_graph(&mut rng, n, 0.45);
        let k = rng.gen_range(1..=n as u32);
        let c = random_coloring(&mut rng, n, k);
        let (cen, lin, prop) = (is_centered(&g, &c), is_linear(&g, &c), is_proper(&g, &c));
        if (cen && !lin) || (lin && !prop) {
            return Err(fail("chain broken", &g, c.colors()));
        }
    }
    Ok(())
}

/// Verifiers against the naive oracles, and witnesses are genuine.
pub fn check_verifier_oracles(samples: usize, seed: u64) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let n = rng.gen_range(1..=6);
        let g = random_graph(&mut rng, n, 0.5);
        let k = rng.gen_range(1..=n as u32);
        let c = random_coloring(&mut rng, n, k);
        let lin = naive_is_linear(&g, c.colors());
        if is_linear(&g, &c) != lin || find_centerless_path(&g, &c).is_none() != lin {
            return Err(fail("linear verdict differs from oracle", &g, c.colors()));
        }
        if let Some(v) = find_centerless_path(&g, &c) {
            if !g.is_path(&v.witness) || has_unique_color(c.colors(), &v.witness) {
                return Err(fail("bad path witness", &g, v));
            }
            let shortest = all_path_sets(&g)
                .into_iter()
                .filter(|p| !has_unique_color(c.colors(), p))
                .map(|p| p.len())
                .min();
            if shortest != Some(v.witness.len()) {
                return Err(fail("path witness not shortest", &g, v));
            }
        }
        let cen = naive_is_centered(&g, c.colors());
        if is_centered(&g, &c) != cen || find_centerless_connected_set(&g, &c).is_none() != cen {
            return Err(fail("centered verdict differs from oracle", &g, c.colors()));
        }
        if let Some(v) = find_centerless_connected_set(&g, &c) {
            if !naive_connected(&g, &v.witness) || has_unique_color(c.colors(), &v.witness) {
                return Err(fail("bad connected-set witness", &g, v));
            }
        }
    }
    Ok(())
}

/// Renaming colors never changes a verdict; restricting a linear coloring to
/// a random subgraph keeps it linear.
pub fn check_renaming_and_restriction(samples: usize, seed: u64) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let n = rng.gen_range(1..=7);
        let g = random_graph(&mut rng, n, 0.5);
        let k = rng.gen_range(1..=n as u32);
        let c = random_coloring(&mut rng, n, k);
        let mut perm: Vec<u32> = (0..n as u32).collect();
        for i in (1..perm.len()).rev() {
            let j = rng.gen_range(0..=i);
            perm.swap(i, j);
        }
        let renamed = c.map_colors(|x| perm[x as usize] + 10);
        if is_linear(&g, &c) != is_linear(&g, &renamed) || is_centered(&g, &c) != is_centered(&g, &renamed) {
            return Err(fail("renaming changed a verdict", &g, c.colors()));
        }
        if is_linear(&g, &c) {
            let mut sub = g.clone();
            for (u, v) in g.edges() {
                if rng.gen_bool(0.3) {
                    sub = sub.without_edge(u, v);
                }
            }
            let keep: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.8)).collect();
            if !keep.is_empty() {
                let induced = sub.induced_ordered(&keep);
                if !is_linear(&induced, &c.restrict(&keep)) {
                    return Err(fail("restriction lost linearity", &g, c.colors()));
                }
            }
        }
    }
    Ok(())
}

/// certified_centered implies is_centered for random forests over random graphs.
pub fn check_certificates(samples: usize, seed: u64) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let n = rng.gen_range(1..=7);
        // random forest: parent of v is a lower-index vertex or none
        let parent: Vec<Option<usize>> =
            (0..n).map(|v| if v == 0 || rng.gen_bool(0.2) { None } else { Some(rng.gen_range(0..v)) }).collect();
        let f = chromlab::EliminationForest::new(parent).unwrap();
        let levels = f.levels().unwrap();
        // graph edges only between ancestor pairs, sometimes one extra edge
        let mut edges = Vec::new();
        for v in 0..n {
            for a in f.ancestors(v) {
                if rng.gen_bool(0.6) {
                    edges.push((a, v));
                }
            }
        }
        if n > 2 && rng.gen_bool(0.2) {
            let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
            if u != v && !edges.contains(&(u, v)) && !edges.contains(&(v, u)) {
                edges.push((u, v));
            }
        }
        let g = Graph::from_edges(n, &edges).unwrap();
        let c = if rng.gen_bool(0.5) {
            f.depth_coloring()
        } else {
            Coloring::new(levels.iter().map(|&l| l as u32 % 3).collect())
        };
        if certified_centered(&g, &f, &c) && !naive_is_centered(&g, c.colors()) {
            return Err(fail("certificate accepted a non-centered coloring", &g, c.colors()));
        }
    }
    Ok(())
}

/// Solvers against the partition oracles on all connected graphs of order
/// at most `n_max`, and treedepth against the plain recursion.
pub fn check_solver_oracles(n_max: usize) -> Check {
    for g in enumerate_graphs(n_max, true) {
        let lin = linear_chromatic(&g).value;
        let cen = centered_chromatic(&g).value;
        if lin != naive_chi_lin(&g) {
            return Err(fail("chi_lin differs from oracle", &g, lin));
        }
        if cen != naive_chi_cen(&g) || cen != naive_treedepth(&g) {
            return Err(fail("chi_cen differs from oracle", &g, cen));
        }
    }
    Ok(())
}

/// Witness validity, chain, edge and vertex deletion on all graphs of order
/// at most `n_max`.
pub fn check_solver_invariants(n_max: usize) -> Check {
    let graphs = enumerate_graphs(n_max, false);
    for g in &graphs {
        let l = linear_chromatic(g);
        let c = centered_chromatic(g);
        let forest = c.certificate.as_ref().unwrap();
        if !is_linear(g, &l.witness) || l.witness.palette_size() != l.value {
            return Err(fail("bad linear witness", g, l.witness.colors()));
        }
        if !is_centered(g, &c.witness) || c.witness.palette_size() != c.value {
            return Err(fail("bad centered witness", g, c.witness.colors()));
        }
        if !verify_elimination_forest(g, forest) || forest.depth() != c.value {
            return Err(fail("bad certificate", g, forest));
        }
        if l.value > c.value || l.lower_bound > l.value {
            return Err(fail("chain or lower bound broken", g, (l.value, c.value, l.lower_bound)));
        }
        for (u, v) in g.edges() {
            let h = g.without_edge(u, v);
            if decide_linear_at_most(&h, l.value).is_none() || centered_chromatic(&h).value > c.value {
                return Err(fail("edge deletion raised a value", g, (u, v)));
            }
        }
        for v in 0..g.n() {
            let h = g.remove_vertex(v);
            if l.value > linear_chromatic(&h).value + 1 {
                return Err(fail("vertex deletion dropped chi_lin by more than one", g, v));
            }
        }
    }
    Ok(())
}

/// `χ(G1 + G2) = max(χ(G1), χ(G2))` over all pairs of connected graphs of
/// order at most `n_max`.
pub fn check_disjoint_union(n_max: usize) -> Check {
    let graphs = enumerate_graphs(n_max, true);
    let values: Vec<(usize, usize)> =
        graphs.iter().map(|g| (linear_chromatic(g).value, centered_chromatic(g).value)).collect();
    for (a, va) in graphs.iter().zip(&values) {
        for (b, vb) in graphs.iter().zip(&values) {
            let u = a.disjoint_union(b).unwrap();
            let lin = linear_chromatic(&u).value;
            let cen = centered_chromatic(&u).value;
            if lin != va.0.max(vb.0) || cen != va.1.max(vb.1) {
                return Err(fail("union law broken", &u, (lin, cen)));
            }
        }
    }
    Ok(())
}
