//! Categorical, cartesian and smash products.

use super::{Graph, PointedGraph};
use crate::unionfind::UnionFind;

fn pair_labels(g: &Graph, h: &Graph) -> Vec<String> {
    let mut labels = Vec::with_capacity(g.vertex_count() * h.vertex_count());
    for a in g.labels() {
        for b in h.labels() {
            labels.push(format!("({a},{b})"));
        }
    }
    labels
}

/// G × H: `(g,h) ~ (g',h')` iff `g ~ g'` and `h ~ h'`. Vertex `(g,h)` has index `g·|H| + h`.
pub fn categorical_product(g: &Graph, h: &Graph) -> Graph {
    let m = h.vertex_count();
    Graph::from_fn(pair_labels(g, h), |i, j| {
        g.is_adjacent(i / m, j / m) && h.is_adjacent(i % m, j % m)
    })
}

/// G □ H: adjacent in one coordinate and equal in the other.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Graph {
    let m = h.vertex_count();
    Graph::from_fn(pair_labels(g, h), |i, j| {
        let (a, b, a2, b2) = (i / m, i % m, j / m, j % m);
        (g.is_adjacent(a, a2) && b == b2) || (h.is_adjacent(b, b2) && a == a2)
    })
}

/// G ∧ H with the map from `V(G) × V(H)` onto its vertex classes.
#[derive(Clone, Debug)]
pub struct SmashProduct {
    pub graph: PointedGraph,
    class_of: Vec<usize>,
    right_size: usize,
}

impl SmashProduct {
    /// Class `[(a,b)]` of a pair of vertices.
    #[inline]
    pub fn class(&self, a: usize, b: usize) -> usize {
        self.class_of[a * self.right_size + b]
    }
}

/// Quotient of `V(G) × V(H)` identifying every `(x,h)` and `(g,y)` with the
/// basepoint; classes are adjacent when some representatives are.
pub fn smash_product(g: &PointedGraph, h: &PointedGraph) -> SmashProduct {
    let (n, m) = (g.vertex_count(), h.vertex_count());
    let (x, y) = (g.basepoint(), h.basepoint());
    let mut uf = UnionFind::new(n * m);
    let base = x * m + y;
    for a in 0..n {
        uf.union(base, a * m + y);
    }
    for b in 0..m {
        uf.union(base, x * m + b);
    }
    let (class_of, count) = uf.labels();

    let mut labels = vec![String::new(); count];
    for a in (0..n).rev() {
        for b in (0..m).rev() {
            labels[class_of[a * m + b]] = format!("[({},{})]", g.graph().label(a), h.graph().label(b));
        }
    }
    labels[class_of[base]] = format!("[({},{})]", g.graph().label(x), h.graph().label(y));

    let mut quotient = Graph::empty(labels).expect("class labels are distinct");
    for (a, a2) in g.graph().edges() {
        for (b, b2) in h.graph().edges() {
            quotient.set_edge(class_of[a * m + b], class_of[a2 * m + b2]);
            quotient.set_edge(class_of[a * m + b2], class_of[a2 * m + b]);
        }
    }
    let graph = PointedGraph::new(quotient, class_of[base]).expect("basepoint class is looped");
    SmashProduct {
        graph,
        class_of,
        right_size: m,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::find_isomorphism;
    use crate::graph::named::{complete, make_interval, one_star};
    use crate::graph::{find_pointed_isomorphism, PointedGraph};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_graph(rng: &mut ChaCha8Rng, n: usize) -> Graph {
        let mut g = Graph::with_vertices(n);
        for i in 0..n {
            for j in i..n {
                if rng.gen_bool(0.5) {
                    g.set_edge(i, j);
                }
            }
        }
        g
    }

    fn random_pointed(rng: &mut ChaCha8Rng, n: usize) -> PointedGraph {
        let mut g = random_graph(rng, n);
        g.set_edge(0, 0);
        PointedGraph::new(g, 0).unwrap()
    }

    #[test]
    fn k2_times_k2_is_two_edges() {
        let k2 = complete(2, false);
        let p = categorical_product(&k2, &k2);
        assert_eq!(p.vertex_count(), 4);
        assert_eq!(p.edge_count(), 2);
        assert!(!p.is_looped(0) && !p.is_looped(3));
        assert!(p.is_adjacent(0, 3) && p.is_adjacent(1, 2));
    }

    #[test]
    fn reflexive_edge_squared_is_reflexive_k4() {
        let i1 = make_interval(1);
        let p = categorical_product(i1.graph(), i1.graph());
        assert!(find_isomorphism(&p, &complete(4, true)).is_some());
    }

    #[test]
    fn looped_point_is_a_unit() {
        let pt = complete(1, true);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..20 {
            let h = random_graph(&mut rng, 4);
            assert!(find_isomorphism(&categorical_product(&pt, &h), &h).is_some());
        }
    }

    #[test]
    fn cartesian_cases() {
        let k2 = complete(2, false);
        let sq = cartesian_product(&k2, &k2);
        assert!(find_isomorphism(&sq, &crate::graph::named::cycle(4, false)).is_some());

        let pt = Graph::with_vertices(1);
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..20 {
            let g = random_graph(&mut rng, 4);
            assert!(find_isomorphism(&cartesian_product(&g, &pt), &g).is_some());
        }
    }

    // Brute-force count over all vertex pairs of the product, checked against
    // |V(G)|·|E(H)| + |V(H)|·|E(G)| with loops counted as edges, minus the
    // pairs counted twice (a loop on both coordinates gives one loop).
    #[test]
    fn cartesian_edge_count_matches_brute_force() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let g = random_graph(&mut rng, 4);
            let h = random_graph(&mut rng, 4);
            let p = cartesian_product(&g, &h);
            let mut brute = 0;
            for a in 0..4 {
                for b in 0..4 {
                    for a2 in 0..4 {
                        for b2 in 0..4 {
                            let (i, j) = (a * 4 + b, a2 * 4 + b2);
                            if i > j {
                                continue;
                            }
                            let adj = (g.is_adjacent(a, a2) && b == b2) || (h.is_adjacent(b, b2) && a == a2);
                            if adj {
                                brute += 1;
                            }
                        }
                    }
                }
            }
            assert_eq!(p.edge_count(), brute);
            let loops_g = (0..4).filter(|&v| g.is_looped(v)).count();
            let loops_h = (0..4).filter(|&v| h.is_looped(v)).count();
            let formula = 4 * h.edge_count() + 4 * g.edge_count() - loops_g * loops_h;
            assert_eq!(p.edge_count(), formula);
        }
    }

    #[test]
    fn products_commute_and_associate() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for _ in 0..10 {
            let a = random_graph(&mut rng, 3);
            let b = random_graph(&mut rng, 3);
            let c = random_graph(&mut rng, 2);
            // (a,b) -> (b,a) is an explicit bijection.
            let swap: Vec<usize> = (0..9).map(|i| (i % 3) * 3 + i / 3).collect();
            for prod in [categorical_product, cartesian_product] {
                let ab = prod(&a, &b);
                let ba = prod(&b, &a);
                for i in 0..9 {
                    for j in 0..9 {
                        assert_eq!(ab.is_adjacent(i, j), ba.is_adjacent(swap[i], swap[j]));
                    }
                }
                // ((a,b),c) and (a,(b,c)) share the index a·6 + b·2 + c.
                let left = prod(&prod(&a, &b), &c);
                let right = prod(&a, &prod(&b, &c));
                for i in 0..18 {
                    for j in 0..18 {
                        assert_eq!(left.is_adjacent(i, j), right.is_adjacent(i, j));
                    }
                }
            }
        }
    }

    #[test]
    fn smash_with_one_star_is_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let s = one_star();
        for n in 1..=5 {
            let g = random_pointed(&mut rng, n);
            let sm = smash_product(&g, &s);
            assert!(find_pointed_isomorphism(&sm.graph, &g).is_some());
            let sm = smash_product(&s, &g);
            assert!(find_pointed_isomorphism(&sm.graph, &g).is_some());
        }
        let ss = smash_product(&s, &s);
        assert!(find_pointed_isomorphism(&ss.graph, &s).is_some());
    }

    #[test]
    fn smash_vertex_count() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        for _ in 0..30 {
            let n = rng.gen_range(1..=4);
            let m = rng.gen_range(1..=4);
            let g = random_pointed(&mut rng, n);
            let h = random_pointed(&mut rng, m);
            let sm = smash_product(&g, &h);
            // Count quotient classes directly: pairs off both axes, plus one.
            let off_axis = (0..n * m)
                .filter(|&i| i / m != g.basepoint() && i % m != h.basepoint())
                .count();
            assert_eq!(sm.graph.vertex_count(), off_axis + 1);
            assert_eq!(sm.graph.vertex_count(), (n - 1) * (m - 1) + 1);
            assert_eq!(sm.class(g.basepoint(), m - 1), sm.graph.basepoint());
        }
    }
}
