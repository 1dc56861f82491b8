//! Randomised structural properties across graphs, Hom posets, complexes and
//! loop graphs.

use homstar::graph::named::reflexive_cycle;
use homstar::graph::{
    apply_fold, cartesian_product, categorical_product, enumerate_pointed_homs, exponential, find_fold,
    unfold_inclusion, Graph, GraphMap, PointedGraph,
};
use homstar::hom::{build_hom_star, x_homotopy_classes};
use homstar::loops::{endpoint_map, stabilization_map, LoopGraph};
use homstar::topology::SimplicialComplex;
use proptest::prelude::*;

fn labels(n: usize) -> Vec<String> {
    (0..n).map(|i| i.to_string()).collect()
}

/// A graph on `1..=max` vertices from an upper-triangular adjacency pattern
/// (diagonal entries are loops).
fn graph(max: usize) -> impl Strategy<Value = Graph> {
    (1..=max).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n + 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in u..n {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(labels(n), &edges).unwrap()
        })
    })
}

/// Like [`graph`], with vertex 0 looped and used as the basepoint.
fn pointed(max: usize) -> impl Strategy<Value = PointedGraph> {
    graph(max).prop_map(|g| {
        let mut edges: Vec<(usize, usize)> = g.edges().filter(|&e| e != (0, 0)).collect();
        edges.push((0, 0));
        PointedGraph::new(Graph::from_edges(labels(g.vertex_count()), &edges).unwrap(), 0).unwrap()
    })
}

/// Random complex: up to five facets over at most six vertices.
fn complex() -> impl Strategy<Value = SimplicialComplex> {
    (1usize..=6).prop_flat_map(|n| {
        prop::collection::vec(prop::collection::btree_set(0..n, 1..=3), 1..=5).prop_map(move |facets| {
            SimplicialComplex::new(labels(n), facets.into_iter().map(|f| f.into_iter().collect()).collect()).unwrap()
        })
    })
}

fn disjoint_union(a: &SimplicialComplex, b: &SimplicialComplex) -> SimplicialComplex {
    let shift = a.vertex_count();
    let mut facets = a.facets().to_vec();
    facets.extend(b.facets().iter().map(|f| f.iter().map(|v| v + shift).collect()));
    SimplicialComplex::new(labels(shift + b.vertex_count()), facets).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn products_commute_under_the_swap(g in graph(4), h in graph(4)) {
        let (n, m) = (g.vertex_count(), h.vertex_count());
        // (a,b) sits at a·m + b in G×H and at b·n + a in H×G.
        let swap = |i: usize| (i % m) * n + i / m;
        for (gh, hg) in [
            (categorical_product(&g, &h), categorical_product(&h, &g)),
            (cartesian_product(&g, &h), cartesian_product(&h, &g)),
        ] {
            for i in 0..n * m {
                for j in 0..n * m {
                    prop_assert_eq!(gh.is_adjacent(i, j), hg.is_adjacent(swap(i), swap(j)));
                }
            }
        }
    }

    #[test]
    fn products_associate(a in graph(3), b in graph(3), c in graph(3)) {
        let (p, q) = (b.vertex_count(), c.vertex_count());
        for prod in [categorical_product, cartesian_product] {
            let left = prod(&prod(&a, &b), &c);
            let right = prod(&a, &prod(&b, &c));
            // ((x,y),z) and (x,(y,z)) share the index (x·p + y)·q + z.
            prop_assert_eq!(left.vertex_count(), a.vertex_count() * p * q);
            let n = left.vertex_count();
            for i in 0..n {
                for j in 0..n {
                    prop_assert_eq!(left.is_adjacent(i, j), right.is_adjacent(i, j));
                }
            }
        }
    }

    #[test]
    fn cartesian_edge_count(g in graph(4), h in graph(4)) {
        let count = |x: &Graph| x.edges().count();
        let loops = |x: &Graph| (0..x.vertex_count()).filter(|&v| x.is_looped(v)).count();
        let expected = g.vertex_count() * count(&h) + h.vertex_count() * count(&g) - loops(&g) * loops(&h);
        prop_assert_eq!(count(&cartesian_product(&g, &h)), expected);
    }

    #[test]
    fn exponential_loops_are_the_homs(g in pointed(3), h in pointed(3)) {
        let e = exponential(&h, &g).unwrap();
        let mut homs: Vec<usize> = enumerate_pointed_homs(&g, &h)
            .iter()
            .map(|f| e.space.encode(f.assignment()).unwrap())
            .collect();
        homs.sort_unstable();
        let looped: Vec<usize> = (0..e.graph.vertex_count()).filter(|&v| e.graph.graph().is_looped(v)).collect();
        prop_assert_eq!(homs, looped);
    }

    #[test]
    fn hom_elements_are_multihoms_and_atoms_are_homs(g in pointed(3), h in pointed(4)) {
        let p = build_hom_star(&g, &h).unwrap();
        let (gg, hh) = (g.graph(), h.graph());
        for i in 0..p.len() {
            let sets = p.sets(i);
            prop_assert_eq!(sets[g.basepoint()], 1u64 << h.basepoint());
            // Re-check the multihom condition pair by pair.
            for u in 0..g.vertex_count() {
                prop_assert!(sets[u] != 0);
                for v in 0..g.vertex_count() {
                    if gg.is_adjacent(u, v) {
                        for a in (0..h.vertex_count()).filter(|&a| sets[u] >> a & 1 == 1) {
                            for b in (0..h.vertex_count()).filter(|&b| sets[v] >> b & 1 == 1) {
                                prop_assert!(hh.is_adjacent(a, b));
                            }
                        }
                    }
                }
            }
        }
        let mut atoms: Vec<Vec<usize>> = p.atoms().iter().map(|&i| p.element(i).as_map().unwrap()).collect();
        let mut homs: Vec<Vec<usize>> = enumerate_pointed_homs(&g, &h).iter().map(|f| f.assignment().to_vec()).collect();
        atoms.sort();
        homs.sort();
        prop_assert_eq!(atoms, homs);
    }

    #[test]
    fn folds_retract(g in pointed(4)) {
        let Some(fold) = find_fold(&g) else { return Ok(()) };
        let (folded, retraction) = apply_fold(&g, fold).unwrap();
        let inclusion = unfold_inclusion(&g, fold.vertex).unwrap();
        prop_assert_eq!(inclusion.then(&retraction), GraphMap::identity(folded.graph()));
        // The other composite is ×-homotopic to the identity.
        let round = retraction.then(&inclusion);
        let classes = x_homotopy_classes(&g, &g);
        let find = |f: &GraphMap| classes.homs.iter().position(|h| h.assignment() == f.assignment()).unwrap();
        let id = GraphMap::identity(g.graph());
        prop_assert_eq!(classes.class_of[find(&round)], classes.class_of[find(&id)]);
    }

    #[test]
    fn euler_characteristic_is_additive(a in complex(), b in complex()) {
        let u = disjoint_union(&a, &b);
        prop_assert_eq!(u.euler_characteristic(), a.euler_characteristic() + b.euler_characteristic());
        prop_assert_eq!(u.components().1, a.components().1 + b.components().1);
    }

    #[test]
    fn cones_have_trivial_first_homology(a in complex()) {
        let apex = a.vertex_count();
        let facets = a.facets().iter().map(|f| f.iter().copied().chain([apex]).collect()).collect();
        let cone = SimplicialComplex::new(labels(apex + 1), facets).unwrap();
        prop_assert!(cone.h1().is_trivial());
        prop_assert!(cone.pi1_presentation(apex).unwrap().abelianize().is_trivial());
        prop_assert_eq!(cone.euler_characteristic(), 1);
    }

    #[test]
    fn stabilization_commutes_with_endpoints(g in pointed(3), n in 0usize..3) {
        let j = stabilization_map(&g, n).unwrap();
        let (phi, phi_next) = (endpoint_map(&g, n).unwrap(), endpoint_map(&g, n + 1).unwrap());
        prop_assert_eq!(j.then(&phi_next), phi);
    }

    #[test]
    fn padding_never_separates_components(g in pointed(4), bound in 1usize..6) {
        let (small, big) = (LoopGraph::new(&g, bound).unwrap(), LoopGraph::new(&g, bound + 1).unwrap());
        let (cs, cb) = (small.components(), big.components());
        let mut image = vec![None; cs.count()];
        for i in 0..small.len() {
            let Some(c) = cs.component(i) else { continue };
            let mut w = small.word(i);
            w.push(g.basepoint());
            let target = cb.component(big.index_of(&w).unwrap());
            prop_assert!(target.is_some());
            prop_assert!(image[c].is_none() || image[c] == target);
            image[c] = target;
        }
    }

    #[test]
    fn winding_is_constant_on_components(m in 4usize..8, bound in 1usize..9) {
        let lg = LoopGraph::new(&reflexive_cycle(m), bound).unwrap();
        let comps = lg.components();
        let mut winding = vec![None; comps.count()];
        for i in 0..lg.len() {
            let c = comps.component(i).unwrap();
            let w = lg.winding(i);
            prop_assert!(winding[c].is_none() || winding[c] == w);
            winding[c] = w;
        }
    }
}
