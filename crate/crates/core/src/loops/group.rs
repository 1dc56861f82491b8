//! The group structure on components of `Ω_N G` induced by concatenation,
//! as far as the window `N` allows.

use super::concat::{loop_concat, loop_concat_at, loop_inverse};
use super::walks::{ComponentInfo, LoopComponents, LoopGraph};
use super::TruncatedPath;
use crate::error::Result;
use crate::graph::PointedGraph;
use crate::par::Execution;

/// Outcome of checking the group laws on the computed table.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GroupLaws {
    pub identity: bool,
    pub inverses: bool,
    pub inverse_pairs_checked: usize,
    pub associative: bool,
    pub triples_checked: usize,
    /// Products do not depend on the chosen representatives.
    pub representative_independent: bool,
    pub representative_pairs_checked: usize,
    /// `f ·_{n+1} g` and `f ·_n g` lie in the same component.
    pub shift_independent: bool,
    pub shift_pairs_checked: usize,
}

impl GroupLaws {
    pub fn holds(&self) -> bool {
        self.identity && self.inverses && self.associative && self.representative_independent && self.shift_independent
    }
}

#[derive(Clone, Debug)]
pub struct LoopGroup {
    pub bound: usize,
    pub loop_vertices: usize,
    pub components: Vec<ComponentInfo>,
    pub identity: usize,
    /// `(a, b, c)` with `[a]·[b] = [c]`.
    pub products: Vec<(usize, usize, usize)>,
    /// Pairs whose representatives do not fit together in the window.
    pub undefined: Vec<(usize, usize)>,
    pub inverses: Vec<usize>,
    pub laws: GroupLaws,
}

impl LoopGroup {
    pub fn product(&self, a: usize, b: usize) -> Option<usize> {
        self.products.iter().find(|p| p.0 == a && p.1 == b).map(|p| p.2)
    }
}

struct Lookup<'a> {
    lg: &'a LoopGraph,
    comps: &'a LoopComponents,
}

impl Lookup<'_> {
    fn component(&self, p: &TruncatedPath) -> usize {
        let i = self.lg.index_of(p.word()).expect("concatenated loops are closed walks");
        self.comps.component(i).expect("concatenated looped walks are looped")
    }
}

pub fn loop_component_group(g: &PointedGraph, bound: usize) -> Result<LoopGroup> {
    loop_component_group_with(g, bound, Execution::default())
}

pub fn loop_component_group_with(g: &PointedGraph, bound: usize, exec: Execution) -> Result<LoopGroup> {
    let lg = LoopGraph::with_execution(g, bound, exec)?;
    let comps = lg.components_with(exec);
    let look = Lookup { lg: &lg, comps: &comps };
    let k = comps.count();
    let reps: Vec<&TruncatedPath> = comps.components.iter().map(|c| &c.representative).collect();

    let mut table = vec![None; k * k];
    let mut products = Vec::new();
    let mut undefined = Vec::new();
    for a in 0..k {
        for b in 0..k {
            match loop_concat(reps[a], reps[b], bound) {
                Ok(p) => {
                    let c = look.component(&p);
                    table[a * k + b] = Some(c);
                    products.push((a, b, c));
                }
                Err(_) => undefined.push((a, b)),
            }
        }
    }
    let prod = |a: usize, b: usize| table[a * k + b];

    let mut laws = GroupLaws {
        identity: (0..k).all(|a| prod(0, a) == Some(a) && prod(a, 0) == Some(a)),
        inverses: true,
        associative: true,
        representative_independent: true,
        shift_independent: true,
        ..GroupLaws::default()
    };

    let inverses: Vec<usize> = reps.iter().map(|r| look.component(&loop_inverse(r, bound).expect("fits"))).collect();
    for a in 0..k {
        for (x, y) in [(a, inverses[a]), (inverses[a], a)] {
            if let Some(c) = prod(x, y) {
                laws.inverse_pairs_checked += 1;
                laws.inverses &= c == 0;
            }
        }
    }

    for a in 0..k {
        for b in 0..k {
            for c in 0..k {
                let left = prod(a, b).and_then(|ab| prod(ab, c));
                let right = prod(b, c).and_then(|bc| prod(a, bc));
                if let (Some(l), Some(r)) = (left, right) {
                    laws.triples_checked += 1;
                    laws.associative &= l == r;
                }
            }
        }
    }

    // Second representative of each component: its lexicographically last member.
    let mut alternative: Vec<Option<usize>> = vec![None; k];
    for i in 0..lg.len() {
        if let Some(c) = comps.component(i) {
            alternative[c] = Some(i);
        }
    }
    let alts: Vec<TruncatedPath> = alternative.iter().map(|i| lg.path(i.expect("components are nonempty"))).collect();
    for a in 0..k {
        for b in 0..k {
            for (f, h) in [(&alts[a], reps[b]), (reps[a], &alts[b]), (&alts[a], &alts[b])] {
                if let Ok(p) = loop_concat(f, h, bound) {
                    laws.representative_pairs_checked += 1;
                    laws.representative_independent &= Some(look.component(&p)) == prod(a, b);
                }
            }
            let n = reps[b].stabilization_index();
            if let (Ok(p), Some(c)) = (loop_concat_at(reps[a], reps[b], n + 1, bound), prod(a, b)) {
                laws.shift_pairs_checked += 1;
                laws.shift_independent &= look.component(&p) == c;
            }
        }
    }

    Ok(LoopGroup {
        bound,
        loop_vertices: lg.len(),
        components: comps.components.clone(),
        identity: comps.identity(),
        products,
        undefined,
        inverses,
        laws,
    })
}
