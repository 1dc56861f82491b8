//! The isomorphisms `(Ω_N G)^T ≅ Ω_N(G^T)` and `(G^{I_N})^T ≅ (G^T)^{I_N}`
//! obtained by swapping the two arguments of a map.

use std::collections::HashMap;

use super::{loop_stage, path_graph};
use crate::error::Result;
use crate::graph::{exponential, GraphMap, PointedGraph};

#[derive(Clone, Debug)]
pub struct ExpIso {
    /// `(Ω_N G)^T`, or `(G^{I_N})^T`.
    pub left: PointedGraph,
    /// `Ω_N(G^T)`, or `(G^T)^{I_N}`.
    pub right: PointedGraph,
    /// `α(f)(i)(t) = f(t)(i)`.
    pub alpha: GraphMap,
    /// `β(g)(t)(i) = g(i)(t)`.
    pub beta: GraphMap,
}

impl ExpIso {
    pub fn is_inverse_pair(&self) -> bool {
        let ab = self.alpha.then(&self.beta);
        let ba = self.beta.then(&self.alpha);
        ab == GraphMap::identity(self.left.graph()) && ba == GraphMap::identity(self.right.graph())
    }
}

/// A finite stage in `G^I` with its words.
fn stage(g: &PointedGraph, n: usize, loops_only: bool) -> Result<(PointedGraph, Vec<Vec<usize>>)> {
    if loops_only {
        let s = loop_stage(g, n)?;
        Ok((s.graph, s.words))
    } else {
        let p = path_graph(g, n)?;
        let words = (0..p.space.len()).map(|k| p.space.decode(k)).collect();
        Ok((p.graph, words))
    }
}

fn swap_iso(g: &PointedGraph, t: &PointedGraph, n: usize, loops_only: bool) -> Result<ExpIso> {
    let (inner, inner_words) = stage(g, n, loops_only)?;
    let left = exponential(&inner, t)?;
    let gt = exponential(g, t)?;
    let (right, right_words) = stage(&gt.graph, n, loops_only)?;
    let right_index: HashMap<&[usize], usize> = right_words.iter().enumerate().map(|(i, w)| (&w[..], i)).collect();
    let inner_index: HashMap<&[usize], usize> = inner_words.iter().enumerate().map(|(i, w)| (&w[..], i)).collect();
    let tn = t.vertex_count();

    let alpha = (0..left.space.len())
        .map(|k| {
            // f(t) as a word, for every t.
            let f: Vec<&Vec<usize>> = left.space.decode(k).into_iter().map(|s| &inner_words[s]).collect();
            let word: Vec<usize> = (0..=n)
                .map(|i| {
                    let images: Vec<usize> = (0..tn).map(|s| f[s][i]).collect();
                    gt.space.encode(&images).expect("f(y_T) is the constant word")
                })
                .collect();
            right_index[&word[..]]
        })
        .collect();
    let beta = right_words
        .iter()
        .map(|w| {
            let images: Vec<usize> = (0..tn)
                .map(|s| {
                    let word: Vec<usize> = w.iter().map(|&e| gt.space.value(e, s)).collect();
                    inner_index[&word[..]]
                })
                .collect();
            left.space.encode(&images).expect("g(i)(y_T) is the basepoint")
        })
        .collect();
    Ok(ExpIso {
        alpha: GraphMap::new_pointed(&left.graph, &right, alpha)?,
        beta: GraphMap::new_pointed(&right, &left.graph, beta)?,
        left: left.graph,
        right,
    })
}

/// `(Ω_N G)^T ≅ Ω_N(G^T)` at stage `n`, both graph maps checked.
pub fn omega_exp_iso(g: &PointedGraph, t: &PointedGraph, n: usize) -> Result<ExpIso> {
    swap_iso(g, t, n, true)
}

/// `(G^{I_N})^T ≅ (G^T)^{I_N}` at stage `n`, both graph maps checked.
pub fn path_exp_iso(g: &PointedGraph, t: &PointedGraph, n: usize) -> Result<ExpIso> {
    swap_iso(g, t, n, false)
}
