//! Poset maps between Hom posets and the graph of pointed homomorphisms.

use super::{HomPoset, Multihom};
use crate::bits::mask_ones;
use crate::error::{Error, Result};
use crate::graph::{enumerate_pointed_homs, Graph, GraphMap, PointedGraph};

impl Multihom {
    /// `f ∘ η`: each set replaced by its image under `f`.
    pub fn push(&self, f: &GraphMap) -> Multihom {
        Multihom::new(
            self.sets()
                .iter()
                .map(|&s| mask_ones(s).fold(0u64, |acc, t| acc | 1 << f.apply(t)))
                .collect(),
        )
    }

    /// `η ∘ f` for a map `f` into the source of `η`.
    pub fn pull(&self, f: &GraphMap) -> Multihom {
        Multihom::new(f.assignment().iter().map(|&w| self.set(w)).collect())
    }
}

/// A map between the element sets of two posets, by index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PosetMap {
    images: Vec<usize>,
}

impl PosetMap {
    pub fn new(images: Vec<usize>) -> PosetMap {
        PosetMap { images }
    }

    pub fn identity(len: usize) -> PosetMap {
        PosetMap { images: (0..len).collect() }
    }

    /// Build by transforming each element of `from` and locating it in `to`.
    pub fn from_fn(from: &HomPoset, to: &HomPoset, f: impl Fn(&Multihom) -> Multihom) -> Result<PosetMap> {
        let images = (0..from.len())
            .map(|i| {
                let img = f(&from.element(i));
                to.index_of(img.sets())
                    .ok_or_else(|| Error::InvalidMultihom(format!("image of {} is not in the target poset", from.label(i))))
            })
            .collect::<Result<_>>()?;
        Ok(PosetMap { images })
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &PosetMap) -> PosetMap {
        PosetMap {
            images: self.images.iter().map(|&i| other.images[i]).collect(),
        }
    }

    /// Sorted distinct image indices.
    pub fn image(&self) -> Vec<usize> {
        let mut v = self.images.clone();
        v.sort_unstable();
        v.dedup();
        v
    }

    pub fn is_injective(&self) -> bool {
        self.image().len() == self.images.len()
    }

    /// Order preservation, checked on single-step pairs of `from`; enough for
    /// families closed under faces.
    pub fn is_monotone(&self, from: &HomPoset, to: &HomPoset) -> bool {
        (0..from.len()).all(|i| {
            let mut ok = true;
            from.for_each_upper_cover(i, |j| ok &= to.le(self.images[i], self.images[j]));
            ok
        })
    }
}

/// `f_T: Hom_*(T,H) → Hom_*(T,H')` for `f: H → H'`, given both posets.
pub fn induced_map_target(f: &GraphMap, from: &HomPoset, to: &HomPoset) -> Result<PosetMap> {
    PosetMap::from_fn(from, to, |m| m.push(f))
}

/// `f^T: Hom_*(G',T) → Hom_*(G,T)` for `f: G → G'`, given both posets.
pub fn induced_map_source(f: &GraphMap, from: &HomPoset, to: &HomPoset) -> Result<PosetMap> {
    PosetMap::from_fn(from, to, |m| m.pull(f))
}

/// The subposet `{p ∈ P : φ(p) ≤ q}`.
pub fn quillen_fiber(map: &PosetMap, from: &HomPoset, to: &HomPoset, q: usize) -> HomPoset {
    let flat: Vec<u64> = (0..from.len())
        .filter(|&p| to.le(map.apply(p), q))
        .flat_map(|p| from.sets(p).to_vec())
        .collect();
    let base = from.basepoint().map(|b| from.sets(b).to_vec());
    HomPoset::from_flat(
        from.source_labels().to_vec(),
        from.target_labels().to_vec(),
        flat,
        base.as_deref(),
    )
}

/// The subgraph of `H^G` induced by the pointed homomorphisms, built without
/// materializing the exponential.
pub fn atom_hom_graph(g: &PointedGraph, h: &PointedGraph) -> (Graph, Vec<GraphMap>) {
    let homs = enumerate_pointed_homs(g, h);
    let labels = homs
        .iter()
        .map(|f| {
            let parts: Vec<&str> = f.assignment().iter().map(|&w| h.graph().label(w)).collect();
            format!("({})", parts.join(","))
        })
        .collect();
    let hg = h.graph();
    let edges: Vec<(usize, usize)> = g.graph().edges().collect();
    let graph = Graph::from_fn(labels, |i, j| {
        let (a, b) = (homs[i].assignment(), homs[j].assignment());
        edges.iter().all(|&(u, v)| hg.is_adjacent(a[u], b[v]) && hg.is_adjacent(a[v], b[u]))
    });
    (graph, homs)
}

/// Pointed homomorphisms grouped by walks through looped vertices of `H^G`.
#[derive(Clone, Debug)]
pub struct XHomotopyClasses {
    pub homs: Vec<GraphMap>,
    pub class_of: Vec<usize>,
    pub count: usize,
}

pub fn x_homotopy_classes(g: &PointedGraph, h: &PointedGraph) -> XHomotopyClasses {
    let (graph, homs) = atom_hom_graph(g, h);
    let (class_of, count) = graph.components();
    XHomotopyClasses { homs, class_of, count }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::{complete, make_interval, one_star, reflexive_cycle, square_y};
    use crate::graph::{apply_fold, exponential, find_fold};
    use crate::hom::build_hom_star;

    #[test]
    fn atom_graph_is_induced_subgraph_of_exponential() {
        for (g, h) in [(make_interval(2), square_y(true)), (square_y(false), reflexive_cycle(4)), (one_star(), reflexive_cycle(5))] {
            let (atoms, homs) = atom_hom_graph(&g, &h);
            let e = exponential(&h, &g).unwrap();
            let idx: Vec<usize> = homs.iter().map(|f| e.space.encode(f.assignment()).unwrap()).collect();
            let looped: Vec<usize> = (0..e.graph.vertex_count()).filter(|&v| e.graph.graph().is_looped(v)).collect();
            assert_eq!(idx, looped);
            assert_eq!(atoms, e.graph.graph().induced_subgraph(&idx));
        }
    }

    #[test]
    fn classes_match_hom_components() {
        let cases = [(one_star(), reflexive_cycle(5)), (make_interval(1), square_y(true)), (square_y(true), square_y(true))];
        for (g, h) in cases {
            let classes = x_homotopy_classes(&g, &h);
            let inv = build_hom_star(&g, &h).unwrap().invariants(false).unwrap();
            assert_eq!(classes.count, inv.pi0);
        }
        let k = PointedGraph::new(complete(4, true), 0).unwrap();
        assert_eq!(x_homotopy_classes(&make_interval(2), &k).count, 1);
        assert_eq!(x_homotopy_classes(&one_star(), &reflexive_cycle(5)).count, 1);
    }

    #[test]
    fn functoriality() {
        let t = make_interval(1);
        let h = square_y(true);
        let p = build_hom_star(&t, &h).unwrap();
        let id = GraphMap::identity(h.graph());
        assert_eq!(induced_map_target(&id, &p, &p).unwrap(), PosetMap::identity(p.len()));
        let src = build_hom_star(&h, &t).unwrap();
        assert_eq!(induced_map_source(&id, &src, &src).unwrap(), PosetMap::identity(src.len()));

        // Fold twice and compare (g∘f)_T with g_T ∘ f_T.
        let g0 = PointedGraph::new(complete(4, true), 0).unwrap();
        let (g1, f1) = apply_fold(&g0, find_fold(&g0).unwrap()).unwrap();
        let (g2, f2) = apply_fold(&g1, find_fold(&g1).unwrap()).unwrap();
        let p0 = build_hom_star(&t, &g0).unwrap();
        let p1 = build_hom_star(&t, &g1).unwrap();
        let p2 = build_hom_star(&t, &g2).unwrap();
        let a = induced_map_target(&f1, &p0, &p1).unwrap().then(&induced_map_target(&f2, &p1, &p2).unwrap());
        let b = induced_map_target(&f1.then(&f2), &p0, &p2).unwrap();
        assert_eq!(a, b);
        assert!(a.is_monotone(&p0, &p2));
    }

    #[test]
    fn quillen_fibers() {
        let t = make_interval(1);
        let g0 = PointedGraph::new(complete(3, true), 0).unwrap();
        let (g1, f) = apply_fold(&g0, find_fold(&g0).unwrap()).unwrap();
        let p = build_hom_star(&t, &g0).unwrap();
        let q = build_hom_star(&t, &g1).unwrap();
        let m = induced_map_target(&f, &p, &q).unwrap();
        let top = q.maximal_elements();
        assert_eq!(top.len(), 1);
        assert_eq!(quillen_fiber(&m, &p, &q, top[0]), p);
        for a in 0..q.len() {
            for b in q.upper_covers(a) {
                let fa = quillen_fiber(&m, &p, &q, a);
                let fb = quillen_fiber(&m, &p, &q, b);
                assert!(fa.elements().all(|e| fb.index_of(e).is_some()));
                assert!(fa.is_down_closed());
            }
        }
    }
}
