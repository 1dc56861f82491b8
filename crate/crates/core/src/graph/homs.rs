//! Enumeration of graph homomorphisms.

use super::{Graph, GraphMap, PointedGraph};
use crate::bits::iter_ones;

/// All pointed graph maps `G → H` in lexicographic order of their assignments.
pub fn enumerate_pointed_homs(g: &PointedGraph, h: &PointedGraph) -> Vec<GraphMap> {
    enumerate(g.graph(), h.graph(), Some((g.basepoint(), h.basepoint())))
}

/// All graph maps `G → H` in lexicographic order of their assignments.
pub fn enumerate_homs(g: &Graph, h: &Graph) -> Vec<GraphMap> {
    enumerate(g, h, None)
}

fn enumerate(g: &Graph, h: &Graph, pin: Option<(usize, usize)>) -> Vec<GraphMap> {
    let n = g.vertex_count();
    let m = h.vertex_count();
    let words = m.div_ceil(64).max(1);
    let mut looped = vec![0u64; words];
    for t in (0..m).filter(|&t| h.is_looped(t)) {
        looped[t / 64] |= 1 << (t % 64);
    }
    let mut all = vec![0u64; words];
    for t in 0..m {
        all[t / 64] |= 1 << (t % 64);
    }

    let mut assignment = vec![usize::MAX; n];
    if let Some((x, y)) = pin {
        assignment[x] = y;
    }
    let order: Vec<usize> = (0..n).filter(|&v| pin.map_or(true, |(x, _)| v != x)).collect();
    let mut out = Vec::new();
    search(g, h, &order, 0, &mut assignment, &looped, &all, &mut out);
    out
}

#[allow(clippy::too_many_arguments)]
fn search(
    g: &Graph,
    h: &Graph,
    order: &[usize],
    depth: usize,
    assignment: &mut Vec<usize>,
    looped: &[u64],
    all: &[u64],
    out: &mut Vec<GraphMap>,
) {
    if depth == order.len() {
        out.push(GraphMap::unchecked(assignment.clone(), h.vertex_count()));
        return;
    }
    let v = order[depth];
    let mut allowed = if g.is_looped(v) { looped.to_vec() } else { all.to_vec() };
    for w in g.neighbors(v) {
        let fw = assignment[w];
        if w != v && fw != usize::MAX {
            for (a, b) in allowed.iter_mut().zip(h.neighbor_words(fw)) {
                *a &= b;
            }
        }
    }
    for t in iter_ones(&allowed).collect::<Vec<_>>() {
        assignment[v] = t;
        search(g, h, order, depth + 1, assignment, looped, all, out);
    }
    assignment[v] = usize::MAX;
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::{complete, make_interval, one_star, square_y};
    use crate::graph::{is_graph_map, MapSpace};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn one_star_homs_are_looped_vertices() {
        for h in [square_y(false), square_y(true)] {
            let homs = enumerate_pointed_homs(&one_star(), &h);
            let images: Vec<usize> = homs.iter().map(|f| f.apply(0)).collect();
            let looped: Vec<usize> = (0..4).filter(|&v| h.graph().is_looped(v)).collect();
            assert_eq!(images, looped);
        }
    }

    #[test]
    fn interval_endomorphisms() {
        let i1 = make_interval(1);
        let homs = enumerate_pointed_homs(&i1, &i1);
        assert_eq!(homs.len(), 2);
        assert_eq!(homs[0].assignment(), &[0, 0]);
        assert_eq!(homs[1].assignment(), &[0, 1]);
    }

    #[test]
    fn no_homs_from_triangle_to_edge() {
        assert!(enumerate_homs(&complete(3, false), &complete(2, false)).is_empty());
        assert_eq!(enumerate_homs(&complete(2, false), &complete(3, false)).len(), 6);
    }

    #[test]
    fn counts_match_brute_force() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..40 {
            let mk = |rng: &mut ChaCha8Rng| {
                let mut g = Graph::with_vertices(3);
                for i in 0..3 {
                    for j in i..3 {
                        if rng.gen_bool(0.5) {
                            g.set_edge(i, j);
                        }
                    }
                }
                g.set_edge(0, 0);
                PointedGraph::new(g, 0).unwrap()
            };
            let g = mk(&mut rng);
            let h = mk(&mut rng);
            let space = MapSpace::new(&g, &h).unwrap();
            let brute: Vec<Vec<usize>> = (0..space.len())
                .map(|i| space.decode(i))
                .filter(|m| is_graph_map(g.graph(), h.graph(), m))
                .collect();
            let homs: Vec<Vec<usize>> = enumerate_pointed_homs(&g, &h)
                .into_iter()
                .map(|f| f.assignment().to_vec())
                .collect();
            assert_eq!(homs, brute);
        }
    }
}
