//! Finite graphs with loops and pointed graphs.
//!
//! Adjacency is a dense symmetric bit matrix; a loop at `v` is the diagonal
//! entry `(v, v)`. Vertices are positional (`0..n`) and carry a unique label
//! recording where they came from (`"(a,b)"` for product vertices, `"[(a,b)]"`
//! for smash classes and so on).

mod exponential;
mod fold;
mod homs;
mod iso;
mod json;
pub mod named;
mod products;

pub use exponential::{exponential, Adjunction, Exponential, MapSpace};
pub use fold::{apply_fold, dismantle, find_fold, unfold_inclusion, Dismantling, Fold};
pub use homs::{enumerate_homs, enumerate_pointed_homs};
pub use iso::{canonical_code, find_isomorphism, find_pointed_isomorphism};
pub use json::GraphFile;
pub use named::{add_disjoint_basepoint, make_interval, one_star};
pub use products::{cartesian_product, categorical_product, smash_product, SmashProduct};

use std::collections::HashSet;
use std::fmt;

use crate::bits::BitMatrix;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    labels: Vec<String>,
    adj: BitMatrix,
}

impl Graph {
    /// Graph on `labels` with no edges.
    pub fn empty(labels: Vec<String>) -> Result<Graph> {
        let mut seen = HashSet::with_capacity(labels.len());
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        let adj = BitMatrix::new(labels.len());
        Ok(Graph { labels, adj })
    }

    /// Graph on `n` vertices labelled `"0"`, `"1"`, ...
    pub fn with_vertices(n: usize) -> Graph {
        let labels = (0..n).map(|i| i.to_string()).collect();
        Graph {
            labels,
            adj: BitMatrix::new(n),
        }
    }

    pub fn from_edges(labels: Vec<String>, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(labels)?;
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            g.set_edge(u, v);
        }
        Ok(g)
    }

    /// Build a graph from a symmetric predicate evaluated on pairs `i <= j`.
    pub(crate) fn from_fn(labels: Vec<String>, mut adjacent: impl FnMut(usize, usize) -> bool) -> Graph {
        let n = labels.len();
        let mut adj = BitMatrix::new(n);
        for i in 0..n {
            for j in i..n {
                if adjacent(i, j) {
                    adj.set(i, j);
                    adj.set(j, i);
                }
            }
        }
        Graph { labels, adj }
    }

    pub(crate) fn set_edge(&mut self, u: usize, v: usize) {
        self.adj.set(u, v);
        self.adj.set(v, u);
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.vertex_count() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                index: v,
                count: self.vertex_count(),
            })
        }
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    #[inline]
    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        self.adj.get(u, v)
    }

    #[inline]
    pub fn is_looped(&self, v: usize) -> bool {
        self.adj.get(v, v)
    }

    pub fn is_reflexive(&self) -> bool {
        (0..self.vertex_count()).all(|v| self.is_looped(v))
    }

    /// N(v), including `v` itself when looped.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj.row_ones(v)
    }

    /// Neighbourhood as a bit mask; only valid for graphs with at most 64 vertices.
    #[inline]
    pub(crate) fn neighbor_mask(&self, v: usize) -> u64 {
        debug_assert!(self.vertex_count() <= 64);
        self.adj.row_word(v)
    }

    pub(crate) fn neighbor_words(&self, v: usize) -> &[u64] {
        self.adj.row(v)
    }

    pub(crate) fn looped_mask(&self) -> u64 {
        debug_assert!(self.vertex_count() <= 64);
        (0..self.vertex_count())
            .filter(|&v| self.is_looped(v))
            .fold(0, |m, v| m | 1 << v)
    }

    /// Whether N(v) ⊆ N(u).
    pub fn neighborhood_contained(&self, v: usize, u: usize) -> bool {
        self.adj.row_is_subset(v, u)
    }

    /// Number of neighbours, a loop counting once.
    pub fn degree(&self, v: usize) -> usize {
        self.adj.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Undirected edges `(u, v)` with `u <= v`, loops included, in row-major order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.vertex_count()).flat_map(move |u| self.neighbors(u).filter(move |&v| v >= u).map(move |v| (u, v)))
    }

    /// Number of undirected edges, each loop counted once.
    pub fn edge_count(&self) -> usize {
        self.edges().count()
    }

    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let labels = vertices.iter().map(|&v| self.labels[v].clone()).collect();
        Graph::from_fn(labels, |i, j| self.is_adjacent(vertices[i], vertices[j]))
    }

    /// G \ v, with the remaining vertices keeping their relative order.
    pub fn remove_vertex(&self, v: usize) -> Graph {
        let keep: Vec<usize> = (0..self.vertex_count()).filter(|&w| w != v).collect();
        self.induced_subgraph(&keep)
    }

    pub fn relabel(&self, labels: Vec<String>) -> Result<Graph> {
        assert_eq!(labels.len(), self.vertex_count());
        let mut g = Graph::empty(labels)?;
        g.adj = self.adj.clone();
        Ok(g)
    }

    /// Connected components of the underlying graph, labelled by first appearance.
    pub fn components(&self) -> (Vec<usize>, usize) {
        let mut uf = crate::unionfind::UnionFind::new(self.vertex_count());
        for (u, v) in self.edges() {
            uf.union(u, v);
        }
        uf.labels()
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count() > 0 && self.components().1 == 1
    }

    /// Apply a vertex permutation: vertex `v` of `self` becomes `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        let n = self.vertex_count();
        let mut inv = vec![0; n];
        for (v, &p) in perm.iter().enumerate() {
            inv[p] = v;
        }
        let labels = inv.iter().map(|&v| self.labels[v].clone()).collect();
        Graph::from_fn(labels, |i, j| self.is_adjacent(inv[i], inv[j]))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self
            .edges()
            .map(|(u, v)| format!("{}-{}", self.labels[u], self.labels[v]))
            .collect();
        f.debug_struct("Graph")
            .field("vertices", &self.labels)
            .field("edges", &edges)
            .finish()
    }
}

/// A graph with a distinguished looped vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PointedGraph {
    graph: Graph,
    basepoint: usize,
}

impl PointedGraph {
    pub fn new(graph: Graph, basepoint: usize) -> Result<PointedGraph> {
        graph.check_vertex(basepoint)?;
        if !graph.is_looped(basepoint) {
            return Err(Error::BasepointNotLooped(graph.label(basepoint).to_string()));
        }
        Ok(PointedGraph { graph, basepoint })
    }

    #[inline]
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    #[inline]
    pub fn basepoint(&self) -> usize {
        self.basepoint
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    /// Induced pointed subgraph; `vertices` must contain the basepoint.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<PointedGraph> {
        let base = vertices
            .iter()
            .position(|&v| v == self.basepoint)
            .ok_or(Error::MissingBasepoint)?;
        PointedGraph::new(self.graph.induced_subgraph(vertices), base)
    }

    /// G \ v for a non-basepoint vertex `v`.
    pub fn remove_vertex(&self, v: usize) -> Result<PointedGraph> {
        if v == self.basepoint {
            return Err(Error::InvalidFold {
                vertex: self.graph.label(v).to_string(),
                onto: String::new(),
                reason: "cannot delete the basepoint",
            });
        }
        let base = if v < self.basepoint { self.basepoint - 1 } else { self.basepoint };
        PointedGraph::new(self.graph.remove_vertex(v), base)
    }

    pub fn permute(&self, perm: &[usize]) -> PointedGraph {
        PointedGraph {
            graph: self.graph.permute(perm),
            basepoint: perm[self.basepoint],
        }
    }
}

/// A vertex map between two graphs, validated against both on construction.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GraphMap {
    assignment: Vec<usize>,
    target_size: usize,
}

impl GraphMap {
    pub fn new(source: &Graph, target: &Graph, assignment: Vec<usize>) -> Result<GraphMap> {
        if assignment.len() != source.vertex_count() {
            return Err(Error::NotAGraphMap(format!(
                "assignment has {} entries for {} source vertices",
                assignment.len(),
                source.vertex_count()
            )));
        }
        if let Some(&t) = assignment.iter().find(|&&t| t >= target.vertex_count()) {
            return Err(Error::VertexOutOfRange {
                index: t,
                count: target.vertex_count(),
            });
        }
        if let Some((u, v)) = source
            .edges()
            .find(|&(u, v)| !target.is_adjacent(assignment[u], assignment[v]))
        {
            return Err(Error::NotAGraphMap(format!(
                "edge {}-{} maps to non-adjacent {}, {}",
                source.label(u),
                source.label(v),
                target.label(assignment[u]),
                target.label(assignment[v])
            )));
        }
        Ok(GraphMap {
            assignment,
            target_size: target.vertex_count(),
        })
    }

    pub fn new_pointed(source: &PointedGraph, target: &PointedGraph, assignment: Vec<usize>) -> Result<GraphMap> {
        let map = GraphMap::new(source.graph(), target.graph(), assignment)?;
        if map.apply(source.basepoint()) != target.basepoint() {
            return Err(Error::NotAGraphMap("basepoint is not preserved".into()));
        }
        Ok(map)
    }

    /// Skip validation; callers guarantee the map is a graph map.
    pub(crate) fn unchecked(assignment: Vec<usize>, target_size: usize) -> GraphMap {
        GraphMap {
            assignment,
            target_size,
        }
    }

    pub fn identity(g: &Graph) -> GraphMap {
        GraphMap::unchecked((0..g.vertex_count()).collect(), g.vertex_count())
    }

    #[inline]
    pub fn apply(&self, v: usize) -> usize {
        self.assignment[v]
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    pub fn source_size(&self) -> usize {
        self.assignment.len()
    }

    pub fn target_size(&self) -> usize {
        self.target_size
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &GraphMap) -> GraphMap {
        assert_eq!(self.target_size, other.source_size());
        GraphMap {
            assignment: self.assignment.iter().map(|&v| other.apply(v)).collect(),
            target_size: other.target_size,
        }
    }
}

/// Whether `assignment` preserves adjacency from `source` to `target`.
pub fn is_graph_map(source: &Graph, target: &Graph, assignment: &[usize]) -> bool {
    assignment.len() == source.vertex_count()
        && source
            .edges()
            .all(|(u, v)| target.is_adjacent(assignment[u], assignment[v]))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k2() -> Graph {
        Graph::from_edges(vec!["a".into(), "b".into()], &[(0, 1)]).unwrap()
    }

    #[test]
    fn adjacency_is_symmetric() {
        let g = Graph::from_edges(vec!["a".into(), "b".into(), "c".into()], &[(0, 1), (2, 2)]).unwrap();
        assert!(g.is_adjacent(1, 0));
        assert!(g.is_looped(2));
        assert!(!g.is_looped(0));
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (2, 2)]);
    }

    #[test]
    fn duplicate_labels_rejected() {
        assert!(matches!(
            Graph::empty(vec!["a".into(), "a".into()]),
            Err(Error::DuplicateLabel(_))
        ));
    }

    #[test]
    fn basepoint_must_be_looped() {
        assert!(matches!(PointedGraph::new(k2(), 0), Err(Error::BasepointNotLooped(_))));
    }

    #[test]
    fn graph_map_validation() {
        let g = k2();
        assert!(GraphMap::new(&g, &g, vec![1, 0]).is_ok());
        assert!(GraphMap::new(&g, &g, vec![0, 0]).is_err());
        assert!(GraphMap::new(&g, &g, vec![0]).is_err());
    }

    #[test]
    fn remove_vertex_shifts_basepoint() {
        let g = Graph::from_edges(vec!["a".into(), "x".into()], &[(1, 1), (0, 1)]).unwrap();
        let p = PointedGraph::new(g, 1).unwrap();
        let q = p.remove_vertex(0).unwrap();
        assert_eq!(q.basepoint(), 0);
        assert_eq!(q.graph().label(0), "x");
        assert!(p.remove_vertex(1).is_err());
    }
}
