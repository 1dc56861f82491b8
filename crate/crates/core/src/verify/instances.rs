//! Instance generation: exhaustive enumeration up to isomorphism and seeded
//! Erdős–Rényi sampling.

use std::collections::HashSet;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::graph::{canonical_code, find_fold, Graph, PointedGraph};

fn labels(n: usize) -> Vec<String> {
    (0..n).map(|i| i.to_string()).collect()
}

/// Graph on `0..n` whose upper-triangle entries (row by row, diagonal
/// included) are read from the bits of `code`.
fn from_code(n: usize, code: u64) -> Graph {
    let mut bit = 0;
    let mut adj = vec![vec![false; n]; n];
    for i in 0..n {
        for j in i..n {
            let on = code >> bit & 1 == 1;
            adj[i][j] = on;
            adj[j][i] = on;
            bit += 1;
        }
    }
    let edges: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).filter(|&(i, j)| adj[i][j]).collect();
    Graph::from_edges(labels(n), &edges).expect("generated edges are valid")
}

/// One representative of every pointed graph on exactly `n` vertices up to
/// basepoint-preserving isomorphism, basepoint `0`.
pub fn pointed_graphs_on(n: usize) -> Vec<PointedGraph> {
    assert!(n >= 1 && n <= 6, "exhaustive enumeration is limited to 6 vertices");
    let bits = n * (n + 1) / 2;
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for code in 0..1u64 << bits {
        // Bit 0 is the basepoint loop.
        if code & 1 == 0 {
            continue;
        }
        let g = PointedGraph::new(from_code(n, code), 0).expect("basepoint is looped");
        if seen.insert(canonical_code(&g)) {
            out.push(g);
        }
    }
    out
}

/// Pointed graphs with `1..=max` vertices up to isomorphism.
pub fn pointed_graphs_up_to(max: usize) -> Vec<PointedGraph> {
    (1..=max).flat_map(pointed_graphs_on).collect()
}

/// Deterministic generator for instance `index` of a run seeded with `seed`.
pub fn instance_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

const EDGE_PROBABILITIES: [f64; 3] = [0.3, 0.5, 0.7];

/// Erdős–Rényi graph on `n` vertices; loops independently with probability 1/2.
pub fn random_graph(rng: &mut impl Rng, n: usize) -> Graph {
    let p = EDGE_PROBABILITIES[rng.gen_range(0..EDGE_PROBABILITIES.len())];
    let mut edges = Vec::new();
    for i in 0..n {
        if rng.gen_bool(0.5) {
            edges.push((i, i));
        }
        for j in i + 1..n {
            if rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(labels(n), &edges).expect("generated edges are valid")
}

/// Random pointed graph with basepoint `0`, which is forced to carry a loop.
pub fn random_pointed(rng: &mut impl Rng, n: usize) -> PointedGraph {
    let g = random_graph(rng, n);
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    if !g.is_looped(0) {
        edges.push((0, 0));
    }
    PointedGraph::new(Graph::from_edges(labels(n), &edges).expect("valid"), 0).expect("basepoint looped")
}

/// Random pointed graph on `2..=max` vertices admitting a fold.
pub fn random_foldable(rng: &mut impl Rng, max: usize) -> PointedGraph {
    loop {
        let n = rng.gen_range(2..=max.max(2));
        let g = random_pointed(rng, n);
        if find_fold(&g).is_some() {
            return g;
        }
    }
}

/// Random connected graph on `1..=max` vertices with at least one edge.
pub fn random_connected(rng: &mut impl Rng, max: usize) -> Graph {
    loop {
        let n = rng.gen_range(1..=max.max(1));
        let g = random_graph(rng, n);
        if g.is_connected() && g.edge_count() > 0 {
            return g;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::find_pointed_isomorphism;

    #[test]
    fn class_counts() {
        let counts: Vec<usize> = (1..=3).map(|n| pointed_graphs_on(n).len()).collect();
        assert_eq!(counts, vec![1, 4, 20]);
        assert_eq!(pointed_graphs_up_to(3).len(), 25);
    }

    #[test]
    fn classes_are_pairwise_non_isomorphic_and_complete() {
        let reps = pointed_graphs_on(3);
        for (i, a) in reps.iter().enumerate() {
            for b in &reps[i + 1..] {
                assert!(find_pointed_isomorphism(a, b).is_none());
            }
        }
        // Every pointed graph on 3 vertices matches some representative.
        for code in (1..64u64).filter(|c| c & 1 == 1) {
            let g = PointedGraph::new(from_code(3, code), 0).unwrap();
            assert!(reps.iter().any(|r| find_pointed_isomorphism(&g, r).is_some()));
        }
    }

    #[test]
    fn seeded_generation_is_reproducible() {
        let a = random_pointed(&mut instance_rng(42, 7), 4);
        let b = random_pointed(&mut instance_rng(42, 7), 4);
        assert_eq!(a.graph(), b.graph());
        assert!(a.graph().is_looped(0));
        let g = random_foldable(&mut instance_rng(1, 0), 4);
        assert!(find_fold(&g).is_some());
        let c = random_connected(&mut instance_rng(3, 2), 3);
        assert!(c.is_connected() && c.edge_count() > 0);
    }
}
