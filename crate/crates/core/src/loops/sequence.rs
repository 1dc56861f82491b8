//! Path-graph fibers over cliques and the homotopies comparing them.
//!
//! For cliques `γ ⊆ γ'` of looped vertices and `v ∈ γ`, `H_n` is the subgraph
//! of `G^{I_n}` on paths ending in `γ`, and `H'_n` the one on paths ending in
//! `γ'`. The maps are
//!
//! * `k_n: H_n → H'_n` inclusion,
//! * `i_n: H'_n → H'_{n+1}` and `j_n: H_n → H_{n+1}` repeating the last entry,
//! * `h_n: H'_n → H_{n+1}` appending `v`,
//!
//! with `A: H'_n × I_1 → H'_{n+1}` from `i_n` to `k_{n+1} h_n` and
//! `B: H_n × I_1 → H_{n+1}` from `j_n` to `h_n k_n`.

use std::collections::HashMap;

use super::path_graph;
use crate::error::{Error, Result};
use crate::graph::{categorical_product, is_graph_map, make_interval, Graph, GraphMap, PointedGraph};

/// The subgraph of `G^{I_n}` on paths ending in `set`.
#[derive(Clone, Debug)]
pub struct Fiber {
    pub graph: Graph,
    pub words: Vec<Vec<usize>>,
}

impl Fiber {
    fn new(g: &PointedGraph, n: usize, set: &[usize]) -> Result<Fiber> {
        let p = path_graph(g, n)?;
        let keep: Vec<usize> = (0..p.space.len()).filter(|&k| set.contains(&p.space.value(k, n))).collect();
        Ok(Fiber {
            graph: p.graph.graph().induced_subgraph(&keep),
            words: keep.iter().map(|&k| p.space.decode(k)).collect(),
        })
    }

    fn index(&self) -> HashMap<&[usize], usize> {
        self.words.iter().enumerate().map(|(i, w)| (&w[..], i)).collect()
    }

    fn map_words(&self, to: &Fiber, f: impl Fn(&[usize]) -> Vec<usize>) -> Result<GraphMap> {
        let index = to.index();
        let assignment = self
            .words
            .iter()
            .map(|w| {
                let image = f(w);
                index
                    .get(&image[..])
                    .copied()
                    .ok_or_else(|| Error::NotAGraphMap(format!("{image:?} is outside the target fiber")))
            })
            .collect::<Result<_>>()?;
        GraphMap::new(&self.graph, &to.graph, assignment)
    }
}

#[derive(Clone, Debug)]
pub struct SequenceMaps {
    pub n: usize,
    pub h_n: Fiber,
    pub h_n1: Fiber,
    pub hp_n: Fiber,
    pub hp_n1: Fiber,
    pub k_n: GraphMap,
    pub k_n1: GraphMap,
    pub i_n: GraphMap,
    pub j_n: GraphMap,
    pub h_map: GraphMap,
    /// Indexed by `2·f + s` on `H'_n × I_1`.
    pub a: GraphMap,
    /// Indexed by `2·f + s` on `H_n × I_1`.
    pub b: GraphMap,
}

fn extend(w: &[usize], last: usize) -> Vec<usize> {
    let mut out = w.to_vec();
    out.push(last);
    out
}

/// Build every map for stage `n`; construction fails if any of them is not
/// a graph map.
pub fn fiber_homotopy_maps(
    g: &PointedGraph,
    gamma: &[usize],
    gamma_prime: &[usize],
    v: usize,
    n: usize,
) -> Result<SequenceMaps> {
    let gr = g.graph();
    if gamma_prime.is_empty() || gamma.iter().any(|c| !gamma_prime.contains(c)) || !gamma.contains(&v) {
        return Err(Error::InvalidClique("need v ∈ γ ⊆ γ' with γ' nonempty".into()));
    }
    if let Some(&bad) = gamma_prime.iter().find(|&&c| c >= gr.vertex_count()) {
        return Err(Error::VertexOutOfRange { index: bad, count: gr.vertex_count() });
    }
    if !gamma_prime.iter().all(|&a| gamma_prime.iter().all(|&b| gr.is_adjacent(a, b))) {
        return Err(Error::InvalidClique("γ' is not a clique of looped vertices".into()));
    }
    let h_n = Fiber::new(g, n, gamma)?;
    let h_n1 = Fiber::new(g, n + 1, gamma)?;
    let hp_n = Fiber::new(g, n, gamma_prime)?;
    let hp_n1 = Fiber::new(g, n + 1, gamma_prime)?;

    let k_n = h_n.map_words(&hp_n, |w| w.to_vec())?;
    let k_n1 = h_n1.map_words(&hp_n1, |w| w.to_vec())?;
    let i_n = hp_n.map_words(&hp_n1, |w| extend(w, w[n]))?;
    let j_n = h_n.map_words(&h_n1, |w| extend(w, w[n]))?;
    let h_map = hp_n.map_words(&h_n1, |w| extend(w, v))?;

    let interval = make_interval(1);
    let kh = h_map.then(&k_n1);
    let a_assign = (0..hp_n.words.len())
        .flat_map(|f| [i_n.apply(f), kh.apply(f)])
        .collect();
    let a = GraphMap::new(&categorical_product(&hp_n.graph, interval.graph()), &hp_n1.graph, a_assign)?;
    let hk = k_n.then(&h_map);
    let b_assign = (0..h_n.words.len())
        .flat_map(|f| [j_n.apply(f), hk.apply(f)])
        .collect();
    let b = GraphMap::new(&categorical_product(&h_n.graph, interval.graph()), &h_n1.graph, b_assign)?;

    Ok(SequenceMaps { n, h_n, h_n1, hp_n, hp_n1, k_n, k_n1, i_n, j_n, h_map, a, b })
}

impl SequenceMaps {
    /// Re-check every map and the endpoint identities of `A` and `B`.
    pub fn check(&self) -> std::result::Result<(), String> {
        let interval = make_interval(1);
        let checks = [
            ("k_n", is_graph_map(&self.h_n.graph, &self.hp_n.graph, self.k_n.assignment())),
            ("k_n+1", is_graph_map(&self.h_n1.graph, &self.hp_n1.graph, self.k_n1.assignment())),
            ("i_n", is_graph_map(&self.hp_n.graph, &self.hp_n1.graph, self.i_n.assignment())),
            ("j_n", is_graph_map(&self.h_n.graph, &self.h_n1.graph, self.j_n.assignment())),
            ("h_n", is_graph_map(&self.hp_n.graph, &self.h_n1.graph, self.h_map.assignment())),
            (
                "A",
                is_graph_map(
                    &categorical_product(&self.hp_n.graph, interval.graph()),
                    &self.hp_n1.graph,
                    self.a.assignment(),
                ),
            ),
            (
                "B",
                is_graph_map(&categorical_product(&self.h_n.graph, interval.graph()), &self.h_n1.graph, self.b.assignment()),
            ),
        ];
        if let Some((name, _)) = checks.iter().find(|c| !c.1) {
            return Err(format!("{name} is not a graph map"));
        }
        let kh = self.h_map.then(&self.k_n1);
        let hk = self.k_n.then(&self.h_map);
        for f in 0..self.hp_n.words.len() {
            if self.a.apply(2 * f) != self.i_n.apply(f) || self.a.apply(2 * f + 1) != kh.apply(f) {
                return Err(format!("A does not restrict correctly at {:?}", self.hp_n.words[f]));
            }
        }
        for f in 0..self.h_n.words.len() {
            if self.b.apply(2 * f) != self.j_n.apply(f) || self.b.apply(2 * f + 1) != hk.apply(f) {
                return Err(format!("B does not restrict correctly at {:?}", self.h_n.words[f]));
            }
        }
        if self.k_n.then(&self.i_n) != self.j_n.then(&self.k_n1) {
            return Err("i_n k_n differs from k_n+1 j_n".into());
        }
        // Looped paths: i_n(f) and k_{n+1} h_n(f) share a component of the
        // looped part of H'_{n+1}.
        let g1 = &self.hp_n1.graph;
        let looped: Vec<usize> = (0..g1.vertex_count()).filter(|&w| g1.is_looped(w)).collect();
        let (labels, _) = g1.induced_subgraph(&looped).components();
        let comp = |w: usize| looped.binary_search(&w).ok().map(|p| labels[p]);
        for f in (0..self.hp_n.words.len()).filter(|&f| self.hp_n.graph.is_looped(f)) {
            let (x, y) = (comp(self.i_n.apply(f)), comp(kh.apply(f)));
            if x.is_none() || x != y {
                return Err(format!("i_n and k h_n separate {:?}", self.hp_n.words[f]));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::{complete, square_y};

    #[test]
    fn square_fibers() {
        let g = square_y(true);
        // γ = {y}, γ' = {y, 1}, v = y.
        for n in 0..=2 {
            let s = fiber_homotopy_maps(&g, &[0], &[0, 1], 0, n).unwrap();
            s.check().unwrap();
            if n > 0 {
                assert_eq!(s.hp_n.words.len(), 2 * s.h_n.words.len());
            }
        }
    }

    #[test]
    fn complete_reflexive_triangle() {
        let g = PointedGraph::new(complete(3, true), 0).unwrap();
        for (gamma, gp, v) in [(vec![1], vec![1, 2], 1), (vec![0, 2], vec![0, 1, 2], 2)] {
            for n in 0..=2 {
                fiber_homotopy_maps(&g, &gamma, &gp, v, n).unwrap().check().unwrap();
            }
        }
    }

    #[test]
    fn rejects_bad_cliques() {
        let g = square_y(true);
        assert!(fiber_homotopy_maps(&g, &[0], &[0, 2], 0, 1).is_err());
        assert!(fiber_homotopy_maps(&g, &[1], &[0], 1, 1).is_err());
        assert!(fiber_homotopy_maps(&g, &[0], &[0, 1], 1, 1).is_err());
        let partial = square_y(false);
        assert!(fiber_homotopy_maps(&partial, &[0], &[0, 1], 0, 1).is_err());
    }
}
