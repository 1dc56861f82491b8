//! Two-dimensional cell complexes given by oriented edges and boundary words.

use std::collections::VecDeque;

use super::group::{AbelianInvariants, GroupPresentation};
use super::snf::{smith, to_u64};
use crate::error::{Error, Result};
use crate::unionfind::UnionFind;

/// An edge traversed forwards (`tail → head`) or backwards.
pub type Step = (usize, bool);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoComplex {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    faces: Vec<Vec<Step>>,
}

impl TwoComplex {
    /// `edges[e] = (tail, head)`; each face is a closed edge walk.
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>, faces: Vec<Vec<Step>>) -> Result<TwoComplex> {
        for &(u, v) in &edges {
            for x in [u, v] {
                if x >= vertex_count {
                    return Err(Error::VertexOutOfRange { index: x, count: vertex_count });
                }
            }
        }
        let c = TwoComplex { vertex_count, edges, faces };
        for f in &c.faces {
            if !c.is_closed_walk(f) {
                return Err(Error::InvalidPath(format!("face boundary {f:?} is not a closed walk")));
            }
        }
        Ok(c)
    }

    pub(crate) fn new_unchecked(vertex_count: usize, edges: Vec<(usize, usize)>, faces: Vec<Vec<Step>>) -> TwoComplex {
        let c = TwoComplex { vertex_count, edges, faces };
        debug_assert!(c.faces.iter().all(|f| c.is_closed_walk(f)));
        c
    }

    fn ends(&self, (e, fwd): Step) -> (usize, usize) {
        let (u, v) = self.edges[e];
        if fwd {
            (u, v)
        } else {
            (v, u)
        }
    }

    fn is_closed_walk(&self, f: &[Step]) -> bool {
        if f.iter().any(|s| s.0 >= self.edges.len()) {
            return false;
        }
        let Some(&first) = f.first() else {
            return false;
        };
        let start = self.ends(first).0;
        let mut at = start;
        for &s in f {
            let (a, b) = self.ends(s);
            if a != at {
                return false;
            }
            at = b;
        }
        at == start
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count as i64 - self.edges.len() as i64 + self.faces.len() as i64
    }

    /// Component label per vertex (first-appearance order) and the count.
    pub fn components(&self) -> (Vec<usize>, usize) {
        let mut uf = UnionFind::new(self.vertex_count);
        for &(u, v) in &self.edges {
            uf.union(u, v);
        }
        uf.labels()
    }

    /// First homology, from the Smith form of the face boundary matrix.
    pub fn h1(&self) -> AbelianInvariants {
        let pi0 = self.components().1;
        let rank_d1 = self.vertex_count - pi0;
        let rows = self
            .faces
            .iter()
            .map(|f| f.iter().map(|&(e, fwd)| (e, if fwd { 1 } else { -1 })).collect())
            .collect();
        let s = smith(self.edges.len(), rows);
        AbelianInvariants {
            free_rank: self.edges.len() - rank_d1 - s.rank,
            torsion: s.torsion.iter().map(to_u64).collect(),
        }
    }

    /// Edge-path group presentation of the component of `base`: a breadth-first
    /// spanning tree (neighbours in increasing order) is contracted, the
    /// remaining edges are generators, and the faces give the relators.
    pub fn pi1_presentation(&self, base: usize) -> Result<GroupPresentation> {
        if base >= self.vertex_count {
            return Err(Error::VertexOutOfRange { index: base, count: self.vertex_count });
        }
        let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); self.vertex_count];
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            adj[u].push((v, e));
            adj[v].push((u, e));
        }
        for a in adj.iter_mut() {
            a.sort_unstable();
        }
        let mut seen = vec![false; self.vertex_count];
        let mut tree = vec![false; self.edges.len()];
        let mut queue = VecDeque::from([base]);
        seen[base] = true;
        while let Some(u) = queue.pop_front() {
            for &(v, e) in &adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    tree[e] = true;
                    queue.push_back(v);
                }
            }
        }
        let mut generator = vec![0i32; self.edges.len()];
        let mut count = 0;
        for (e, &(u, _)) in self.edges.iter().enumerate() {
            if seen[u] && !tree[e] {
                count += 1;
                generator[e] = count;
            }
        }
        let relators = self
            .faces
            .iter()
            .filter(|f| seen[self.ends(f[0]).0])
            .map(|f| {
                f.iter()
                    .filter(|s| generator[s.0] != 0)
                    .map(|&(e, fwd)| if fwd { generator[e] } else { -generator[e] })
                    .collect()
            })
            .collect();
        GroupPresentation::new(count as usize, relators)
    }
}
