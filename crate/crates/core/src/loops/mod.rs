//! Path graphs `G^{I_n}`, loop graphs, loop concatenation and the homotopies
//! used to compare them.
//!
//! `G^I` is handled through its finite stages: a path is a word
//! `(f(0), …, f(N))` with `f(0)` the basepoint, read as constant after `N`.

mod commute;
mod concat;
mod group;
mod sequence;
mod walks;

pub use commute::{omega_exp_iso, path_exp_iso, ExpIso};
pub use concat::{
    contraction_homotopy_example, inverse_contraction, loop_concat, loop_concat_at, loop_identity, loop_inverse,
    rows_adjacent, shift_homotopy,
};
pub use group::{loop_component_group, loop_component_group_with, GroupLaws, LoopGroup};
pub use sequence::{fiber_homotopy_maps, SequenceMaps};
pub(crate) use walks::winding_of;
pub use walks::{cycle_positions, ComponentInfo, LoopComponents, LoopGraph, MAX_LOOP_WORDS};

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{exponential, make_interval, Exponential, Graph, GraphMap, PointedGraph};

/// A based path `f(0..=N)`, constant after its last entry.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TruncatedPath {
    word: Vec<usize>,
}

impl TruncatedPath {
    pub fn new(g: &PointedGraph, word: Vec<usize>) -> Result<TruncatedPath> {
        match word.first() {
            None => return Err(Error::InvalidPath("empty word".into())),
            Some(&w) if w != g.basepoint() => {
                return Err(Error::InvalidPath(format!("word starts at {} instead of the basepoint", g.graph().label(w))))
            }
            _ => {}
        }
        if let Some(&bad) = word.iter().find(|&&w| w >= g.vertex_count()) {
            return Err(Error::VertexOutOfRange { index: bad, count: g.vertex_count() });
        }
        Ok(TruncatedPath { word })
    }

    pub fn from_labels(g: &PointedGraph, labels: &[&str]) -> Result<TruncatedPath> {
        let word = labels
            .iter()
            .map(|l| g.graph().index_of(l).ok_or_else(|| Error::UnknownVertex(l.to_string())))
            .collect::<Result<_>>()?;
        TruncatedPath::new(g, word)
    }

    pub(crate) fn from_word(word: Vec<usize>) -> TruncatedPath {
        debug_assert!(!word.is_empty());
        TruncatedPath { word }
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// Last index of the stored word.
    pub fn bound(&self) -> usize {
        self.word.len() - 1
    }

    /// `f(i)`, reading the word as constant after its end.
    pub fn at(&self, i: usize) -> usize {
        self.word[i.min(self.word.len() - 1)]
    }

    /// Least `N_f` with `f` constant from `N_f` on.
    pub fn stabilization_index(&self) -> usize {
        stabilization_index(&self.word)
    }

    /// The word extended (or checked) to `bound`.
    pub fn padded(&self, bound: usize) -> Result<TruncatedPath> {
        if self.stabilization_index() > bound {
            return Err(Error::WindowExceeded { needed: self.stabilization_index(), bound });
        }
        Ok(TruncatedPath {
            word: (0..=bound).map(|i| self.at(i)).collect(),
        })
    }

    pub fn is_loop(&self, g: &PointedGraph) -> bool {
        *self.word.last().unwrap() == g.basepoint()
    }

    pub fn display(&self, g: &Graph) -> String {
        let parts: Vec<&str> = self.word.iter().map(|&w| g.label(w)).collect();
        format!("({})", parts.join(","))
    }
}

impl fmt::Debug for TruncatedPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.word)
    }
}

pub(crate) fn stabilization_index(word: &[usize]) -> usize {
    let last = word[word.len() - 1];
    word.iter().rposition(|&w| w != last).map_or(0, |p| p + 1)
}

/// Adjacency of paths: `f(i) ~ g(j)` whenever `|i - j| <= 1`, both words read
/// as constant beyond their ends.
pub fn paths_adjacent(g: &Graph, f: &[usize], h: &[usize]) -> bool {
    let len = f.len().max(h.len());
    let at = |w: &[usize], i: usize| w[i.min(w.len() - 1)];
    (0..len).all(|i| {
        let a = at(f, i);
        g.is_adjacent(a, at(h, i)) && (i + 1 >= len || (g.is_adjacent(a, at(h, i + 1)) && g.is_adjacent(at(f, i + 1), at(h, i))))
    })
}

/// `G^{I_n}`: vertices are words `(x, f(1), …, f(n))` in lexicographic order.
pub fn path_graph(g: &PointedGraph, n: usize) -> Result<Exponential> {
    exponential(g, &make_interval(n))
}

/// `j_n: G^{I_n} → G^{I_{n+1}}`, repeating the last entry.
pub fn stabilization_map(g: &PointedGraph, n: usize) -> Result<GraphMap> {
    let small = path_graph(g, n)?;
    let big = path_graph(g, n + 1)?;
    let assignment = (0..small.space.len())
        .map(|k| {
            let mut w = small.space.decode(k);
            w.push(w[n]);
            big.space.encode(&w).expect("extended word is pointed")
        })
        .collect();
    GraphMap::new_pointed(&small.graph, &big.graph, assignment)
}

/// `φ_n: G^{I_n} → G`, `f ↦ f(n)`.
pub fn endpoint_map(g: &PointedGraph, n: usize) -> Result<GraphMap> {
    let p = path_graph(g, n)?;
    let assignment = (0..p.space.len()).map(|k| p.space.value(k, n)).collect();
    GraphMap::new_pointed(&p.graph, g, assignment)
}

/// The finite stage `Ω_N G` with every word as a vertex: the subgraph of
/// `G^{I_N}` induced by words ending at the basepoint.
#[derive(Clone, Debug)]
pub struct LoopStage {
    pub graph: PointedGraph,
    pub words: Vec<Vec<usize>>,
}

pub fn loop_stage(g: &PointedGraph, n: usize) -> Result<LoopStage> {
    let p = path_graph(g, n)?;
    let keep: Vec<usize> = (0..p.space.len()).filter(|&k| p.space.value(k, n) == g.basepoint()).collect();
    let words = keep.iter().map(|&k| p.space.decode(k)).collect();
    let graph = p.graph.induced_subgraph(&keep)?;
    Ok(LoopStage { graph, words })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::{one_star, reflexive_cycle, square_y};
    use crate::graph::is_graph_map;

    fn small_graphs() -> Vec<PointedGraph> {
        vec![one_star(), make_interval(1), square_y(false), square_y(true), reflexive_cycle(5)]
    }

    #[test]
    fn truncated_paths() {
        let g = square_y(false);
        let f = TruncatedPath::from_labels(&g, &["y", "1", "2", "3", "y", "y"]).unwrap();
        assert_eq!(f.stabilization_index(), 4);
        assert!(f.is_loop(&g));
        assert_eq!(f.padded(7).unwrap().word().len(), 8);
        assert!(f.padded(3).is_err());
        assert!(TruncatedPath::from_labels(&g, &["1", "y"]).is_err());
        assert_eq!(TruncatedPath::from_labels(&g, &["y"]).unwrap().stabilization_index(), 0);
    }

    #[test]
    fn path_graph_sizes_and_stage_zero() {
        for g in small_graphs() {
            for n in 0..=3 {
                let p = path_graph(&g, n).unwrap();
                assert_eq!(p.graph.vertex_count(), g.vertex_count().pow(n as u32));
            }
            let p0 = path_graph(&g, 0).unwrap();
            assert!(p0.graph.graph().is_looped(0));
            // n = 1: (x, a) ~ (x, b) iff a ~ b and both a, b lie in N(x).
            let p1 = path_graph(&g, 1).unwrap();
            let gr = g.graph();
            let x = g.basepoint();
            for a in 0..gr.vertex_count() {
                for b in 0..gr.vertex_count() {
                    let (ia, ib) = (p1.space.encode(&[x, a]).unwrap(), p1.space.encode(&[x, b]).unwrap());
                    let expected = gr.is_adjacent(a, b) && gr.is_adjacent(x, a) && gr.is_adjacent(x, b);
                    assert_eq!(p1.graph.graph().is_adjacent(ia, ib), expected);
                }
            }
        }
    }

    #[test]
    fn stabilization_and_endpoint_compatible() {
        for g in small_graphs().into_iter().filter(|g| g.vertex_count() <= 4) {
            for n in 0..=2 {
                let j = stabilization_map(&g, n).unwrap();
                let distinct: std::collections::HashSet<_> = j.assignment().iter().collect();
                assert_eq!(distinct.len(), j.source_size(), "j_n injective");
                let lhs = j.then(&endpoint_map(&g, n + 1).unwrap());
                assert_eq!(lhs, endpoint_map(&g, n).unwrap());
            }
        }
    }

    #[test]
    fn endpoint_surjective_on_reachable_looped_vertices() {
        // BFS through looped vertices from the basepoint, up to n steps.
        for g in small_graphs() {
            let gr = g.graph();
            for n in 1..=3 {
                let phi = endpoint_map(&g, n).unwrap();
                let p = path_graph(&g, n).unwrap();
                let mut reach = vec![g.basepoint()];
                for _ in 0..n {
                    let mut next = reach.clone();
                    for &a in &reach {
                        next.extend(gr.neighbors(a).filter(|&b| gr.is_looped(b)));
                    }
                    next.sort_unstable();
                    next.dedup();
                    reach = next;
                }
                let mut hit: Vec<usize> = (0..p.graph.vertex_count())
                    .filter(|&k| p.graph.graph().is_looped(k))
                    .map(|k| phi.apply(k))
                    .collect();
                hit.sort_unstable();
                hit.dedup();
                assert_eq!(hit, reach);
                // On all set maps the endpoint is onto.
                let mut all: Vec<usize> = phi.assignment().to_vec();
                all.sort_unstable();
                all.dedup();
                assert_eq!(all.len(), g.vertex_count());
            }
        }
    }

    #[test]
    fn adjacency_rule_matches_exponential() {
        let g = square_y(true);
        let p = path_graph(&g, 3).unwrap();
        for a in 0..p.graph.vertex_count() {
            for b in 0..p.graph.vertex_count() {
                let (fa, fb) = (p.space.decode(a), p.space.decode(b));
                assert_eq!(paths_adjacent(g.graph(), &fa, &fb), p.graph.graph().is_adjacent(a, b));
            }
        }
        let stage = loop_stage(&g, 3).unwrap();
        assert_eq!(stage.graph.vertex_count(), 16);
        assert!(stage.words.iter().all(|w| w[3] == g.basepoint()));
        let id = GraphMap::identity(stage.graph.graph());
        assert!(is_graph_map(stage.graph.graph(), stage.graph.graph(), id.assignment()));
    }
}
