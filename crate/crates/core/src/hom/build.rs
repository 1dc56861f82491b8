//! Enumeration of multihomomorphisms by per-vertex backtracking.

use super::HomPoset;
use crate::bits::mask_ones;
use crate::error::{Error, Result};
use crate::graph::{Graph, PointedGraph};
use crate::par::Execution;

pub fn build_hom_star(g: &PointedGraph, h: &PointedGraph) -> Result<HomPoset> {
    build_hom_star_with(g, h, Execution::default())
}

pub fn build_hom(g: &Graph, h: &Graph) -> Result<HomPoset> {
    build_hom_with(g, h, Execution::default())
}

pub fn build_hom_star_with(g: &PointedGraph, h: &PointedGraph, exec: Execution) -> Result<HomPoset> {
    let flat = enumerate(g.graph(), h.graph(), Some((g.basepoint(), h.basepoint())), exec)?;
    let mut base = vec![1u64 << h.basepoint(); g.vertex_count()];
    if g.vertex_count() == 0 {
        base.clear();
    }
    Ok(HomPoset::from_flat(
        g.graph().labels().to_vec(),
        h.graph().labels().to_vec(),
        flat,
        Some(&base),
    ))
}

pub fn build_hom_with(g: &Graph, h: &Graph, exec: Execution) -> Result<HomPoset> {
    let flat = enumerate(g, h, None, exec)?;
    Ok(HomPoset::from_flat(g.labels().to_vec(), h.labels().to_vec(), flat, None))
}

struct Search<'a> {
    g: &'a Graph,
    order: Vec<usize>,
    /// Neighbour masks in the target.
    nbr: Vec<u64>,
    looped: u64,
    all: u64,
}

impl Search<'_> {
    /// Targets allowed at `v` given the sets already chosen for its neighbours.
    fn allowed(&self, v: usize, common: &[u64], assigned: &[bool]) -> u64 {
        let mut a = self.all;
        for w in self.g.neighbors(v) {
            if w != v && assigned[w] {
                a &= common[w];
            }
        }
        if self.g.is_looped(v) {
            a &= self.looped;
        }
        a
    }

    /// Every admissible nonempty set inside `allowed` for vertex `v`.
    fn candidates(&self, v: usize, allowed: u64) -> Vec<u64> {
        let mut out = Vec::new();
        if self.g.is_looped(v) {
            // Cliques of looped targets.
            fn grow(nbr: &[u64], current: u64, pool: u64, out: &mut Vec<u64>) {
                for t in mask_ones(pool) {
                    let next = current | (1 << t);
                    out.push(next);
                    // Only larger indices, to list each clique once.
                    let higher = if t == 63 { 0 } else { !((1u64 << (t + 1)) - 1) };
                    grow(nbr, next, pool & nbr[t] & higher, out);
                }
            }
            grow(&self.nbr, 0, allowed, &mut out);
        } else {
            let mut s = allowed;
            while s != 0 {
                out.push(s);
                s = (s - 1) & allowed;
            }
        }
        out
    }

    fn common(&self, set: u64) -> u64 {
        mask_ones(set).fold(self.all, |acc, t| acc & self.nbr[t])
    }

    fn run(&self, depth: usize, sets: &mut [u64], common: &mut [u64], assigned: &mut [bool], out: &mut Vec<u64>) {
        let Some(&v) = self.order.get(depth) else {
            out.extend_from_slice(sets);
            return;
        };
        let allowed = self.allowed(v, common, assigned);
        if allowed == 0 {
            return;
        }
        assigned[v] = true;
        for s in self.candidates(v, allowed) {
            sets[v] = s;
            common[v] = self.common(s);
            self.run(depth + 1, sets, common, assigned, out);
        }
        assigned[v] = false;
    }
}

/// Flat list of element masks (unsorted), `g.vertex_count()` words each.
fn enumerate(g: &Graph, h: &Graph, fixed: Option<(usize, usize)>, exec: Execution) -> Result<Vec<u64>> {
    let m = h.vertex_count();
    if m > 64 {
        return Err(Error::TargetTooLarge(m));
    }
    let n = g.vertex_count();
    if n == 0 {
        return Ok(Vec::new());
    }
    let all = if m == 64 { u64::MAX } else { (1u64 << m) - 1 };
    let nbr: Vec<u64> = (0..m).map(|t| h.neighbor_mask(t)).collect();
    let mut rest: Vec<usize> = (0..n).filter(|&v| Some(v) != fixed.map(|f| f.0)).collect();
    rest.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let order: Vec<usize> = fixed.map(|f| f.0).into_iter().chain(rest).collect();
    let search = Search { g, order, nbr, looped: h.looped_mask(), all };

    let mut sets = vec![0u64; n];
    let mut common = vec![0u64; n];
    let mut assigned = vec![false; n];
    let mut depth = 0;
    if let Some((x, y)) = fixed {
        if search.allowed(x, &common, &assigned) & (1 << y) == 0 {
            return Ok(Vec::new());
        }
        sets[x] = 1 << y;
        common[x] = search.common(1 << y);
        assigned[x] = true;
        depth = 1;
    }
    // Split on the first free vertex so branches can run independently.
    let Some(&v) = search.order.get(depth) else {
        return Ok(sets);
    };
    let allowed = search.allowed(v, &common, &assigned);
    let firsts = search.candidates(v, allowed);
    let branches = exec.map(&firsts, |&s| {
        let mut sets = sets.clone();
        let mut common = common.clone();
        let mut assigned = assigned.clone();
        sets[v] = s;
        common[v] = search.common(s);
        assigned[v] = true;
        let mut out = Vec::new();
        search.run(depth + 1, &mut sets, &mut common, &mut assigned, &mut out);
        out
    });
    Ok(branches.concat())
}
