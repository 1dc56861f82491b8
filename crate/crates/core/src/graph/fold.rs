//! Folds (retractions onto a dominating vertex) and dismantling.

use super::{GraphMap, PointedGraph};
use crate::error::{Error, Result};

/// Folding of `vertex` onto `onto`, valid when `N(vertex) ⊆ N(onto)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Fold {
    pub vertex: usize,
    pub onto: usize,
}

impl Fold {
    pub fn validate(&self, g: &PointedGraph) -> Result<()> {
        let n = g.vertex_count();
        for x in [self.vertex, self.onto] {
            if x >= n {
                return Err(Error::VertexOutOfRange { index: x, count: n });
            }
        }
        let err = |reason| Error::InvalidFold {
            vertex: g.graph().label(self.vertex).to_string(),
            onto: g.graph().label(self.onto).to_string(),
            reason,
        };
        if self.vertex == g.basepoint() {
            return Err(err("the basepoint cannot be folded"));
        }
        if self.vertex == self.onto {
            return Err(err("a vertex cannot fold onto itself"));
        }
        if !g.graph().neighborhood_contained(self.vertex, self.onto) {
            return Err(err("neighbourhood is not contained"));
        }
        Ok(())
    }
}

/// Index of `w` in `G \ v`.
#[inline]
fn shift(w: usize, v: usize) -> usize {
    if w > v {
        w - 1
    } else {
        w
    }
}

/// First fold in lexicographic order of `(vertex, onto)`.
pub fn find_fold(g: &PointedGraph) -> Option<Fold> {
    let n = g.vertex_count();
    (0..n).filter(|&v| v != g.basepoint()).find_map(|v| {
        (0..n)
            .find(|&u| u != v && g.graph().neighborhood_contained(v, u))
            .map(|u| Fold { vertex: v, onto: u })
    })
}

/// `G \ v` and the folding map `G → G \ v` sending `v` to `u`.
pub fn apply_fold(g: &PointedGraph, fold: Fold) -> Result<(PointedGraph, GraphMap)> {
    fold.validate(g)?;
    let smaller = g.remove_vertex(fold.vertex)?;
    let assignment = (0..g.vertex_count())
        .map(|w| shift(if w == fold.vertex { fold.onto } else { w }, fold.vertex))
        .collect();
    let map = GraphMap::new_pointed(g, &smaller, assignment)?;
    Ok((smaller, map))
}

/// The unfolding `G \ v → G`.
pub fn unfold_inclusion(g: &PointedGraph, v: usize) -> Result<GraphMap> {
    let smaller = g.remove_vertex(v)?;
    let assignment = (0..smaller.vertex_count()).map(|w| if w >= v { w + 1 } else { w }).collect();
    GraphMap::new_pointed(&smaller, g, assignment)
}

/// Result of folding greedily until no fold applies.
#[derive(Clone, Debug)]
pub struct Dismantling {
    /// `(vertex, onto)` labels in the order applied.
    pub folds: Vec<(String, String)>,
    pub core: PointedGraph,
    /// Composite of all folds, `G → core`.
    pub retraction: GraphMap,
}

pub fn dismantle(g: &PointedGraph) -> Dismantling {
    let mut current = g.clone();
    let mut retraction = GraphMap::identity(g.graph());
    let mut folds = Vec::new();
    while let Some(fold) = find_fold(&current) {
        folds.push((
            current.graph().label(fold.vertex).to_string(),
            current.graph().label(fold.onto).to_string(),
        ));
        let (next, map) = apply_fold(&current, fold).expect("find_fold returns valid folds");
        retraction = retraction.then(&map);
        current = next;
    }
    Dismantling {
        folds,
        core: current,
        retraction,
    }
}
