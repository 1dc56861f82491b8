//! Loop graphs `Ω_N G` materialised by closed-walk enumeration.
//!
//! Only closed walks from the basepoint are stored. A word is a looped vertex
//! exactly when every entry is looped in `G`. Components of the looped part
//! are generated by single-coordinate moves: if `f ~ g` are looped words, the
//! interpolations `(g(0..k), f(k..))` are looped and consecutive ones differ
//! in one coordinate, so nothing is lost by using only those moves.

use super::{paths_adjacent, stabilization_index, TruncatedPath};
use crate::error::{Error, Result};
use crate::graph::{Graph, PointedGraph};
use crate::par::Execution;
use crate::unionfind::UnionFind;

/// Refuse to enumerate more closed walks than this.
pub const MAX_LOOP_WORDS: usize = 4_000_000;

#[derive(Clone, Debug)]
pub struct LoopGraph {
    ambient: PointedGraph,
    bound: usize,
    /// Words of length `bound + 1`, concatenated, in lexicographic order.
    flat: Vec<u16>,
    looped: Vec<bool>,
    positions: Option<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentInfo {
    pub id: usize,
    pub size: usize,
    /// Member with the least stabilization index, ties broken lexicographically.
    pub representative: TruncatedPath,
    pub stabilization: usize,
    pub winding: Option<i64>,
}

/// Components of the looped part of a loop graph. Component `0` holds the
/// constant loop; the rest are ordered by their representatives.
#[derive(Clone, Debug)]
pub struct LoopComponents {
    component_of: Vec<Option<usize>>,
    pub components: Vec<ComponentInfo>,
}

impl LoopComponents {
    pub fn count(&self) -> usize {
        self.components.len()
    }

    /// Component of word `i`; `None` for words through unlooped vertices.
    pub fn component(&self, i: usize) -> Option<usize> {
        self.component_of[i]
    }

    pub fn identity(&self) -> usize {
        0
    }
}

/// Position of each vertex along `g` when `g` is a reflexive cycle with at
/// least four vertices, numbered from the basepoint towards its
/// smaller-indexed neighbour.
pub fn cycle_positions(g: &PointedGraph) -> Option<Vec<usize>> {
    let gr = g.graph();
    let m = gr.vertex_count();
    if m < 4 || !gr.is_reflexive() {
        return None;
    }
    let others = |v: usize| gr.neighbors(v).filter(move |&w| w != v).collect::<Vec<_>>();
    if (0..m).any(|v| others(v).len() != 2) {
        return None;
    }
    let mut pos = vec![usize::MAX; m];
    let (mut prev, mut cur) = (g.basepoint(), others(g.basepoint())[0]);
    pos[prev] = 0;
    for step in 1..m {
        if pos[cur] != usize::MAX {
            return None;
        }
        pos[cur] = step;
        let nb = others(cur);
        let next = if nb[0] == prev { nb[1] } else { nb[0] };
        prev = cur;
        cur = next;
    }
    (cur == g.basepoint()).then_some(pos)
}

impl LoopGraph {
    pub fn new(g: &PointedGraph, bound: usize) -> Result<LoopGraph> {
        LoopGraph::with_execution(g, bound, Execution::default())
    }

    pub fn with_execution(g: &PointedGraph, bound: usize, exec: Execution) -> Result<LoopGraph> {
        let gr = g.graph();
        let n = gr.vertex_count();
        if n > u16::MAX as usize {
            return Err(Error::TooLarge(format!("loop graph over {n} vertices")));
        }
        let x = g.basepoint();
        // dist[v]: steps needed to walk from v back to x.
        let mut dist = vec![usize::MAX; n];
        dist[x] = 0;
        let mut queue = std::collections::VecDeque::from([x]);
        while let Some(v) = queue.pop_front() {
            for w in gr.neighbors(v) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        // Count closed walks before enumerating them.
        let mut ways = vec![0u128; n];
        ways[x] = 1;
        for _ in 0..bound {
            ways = (0..n)
                .map(|v| gr.neighbors(v).map(|w| ways[w]).fold(0u128, |a, b| a.saturating_add(b)))
                .collect();
        }
        if ways[x] > MAX_LOOP_WORDS as u128 {
            return Err(Error::TooLarge(format!("{} closed walks of length {bound}", ways[x])));
        }

        let len = bound + 1;
        let flat = if bound == 0 {
            vec![x as u16]
        } else {
            let firsts: Vec<usize> = gr.neighbors(x).filter(|&a| dist[a] < bound).collect();
            exec.map(&firsts, |&a| {
                let mut out = Vec::new();
                let mut word = vec![x as u16, a as u16];
                extend_walks(gr, &dist, bound, &mut word, &mut out);
                out
            })
            .concat()
        };
        let looped = flat
            .chunks(len)
            .map(|w| w.iter().all(|&v| gr.is_looped(v as usize)))
            .collect();
        Ok(LoopGraph {
            positions: cycle_positions(g),
            ambient: g.clone(),
            bound,
            flat,
            looped,
        })
    }

    pub fn ambient(&self) -> &PointedGraph {
        &self.ambient
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn len(&self) -> usize {
        self.looped.len()
    }

    pub fn is_empty(&self) -> bool {
        self.looped.is_empty()
    }

    fn raw(&self, i: usize) -> &[u16] {
        let len = self.bound + 1;
        &self.flat[i * len..(i + 1) * len]
    }

    pub fn word(&self, i: usize) -> Vec<usize> {
        self.raw(i).iter().map(|&v| v as usize).collect()
    }

    pub fn path(&self, i: usize) -> TruncatedPath {
        TruncatedPath::from_word(self.word(i))
    }

    pub fn is_looped(&self, i: usize) -> bool {
        self.looped[i]
    }

    pub fn looped_count(&self) -> usize {
        self.looped.iter().filter(|&&l| l).count()
    }

    /// Index of a closed walk of length `bound`, if stored.
    pub fn index_of(&self, word: &[usize]) -> Option<usize> {
        if word.len() != self.bound + 1 || word.iter().any(|&v| v > u16::MAX as usize) {
            return None;
        }
        let key: Vec<u16> = word.iter().map(|&v| v as u16).collect();
        let (mut lo, mut hi) = (0, self.len());
        while lo < hi {
            let mid = (lo + hi) / 2;
            match self.raw(mid).cmp(&key[..]) {
                std::cmp::Ordering::Less => lo = mid + 1,
                std::cmp::Ordering::Greater => hi = mid,
                std::cmp::Ordering::Equal => return Some(mid),
            }
        }
        None
    }

    /// Index of the constant loop.
    pub fn basepoint(&self) -> usize {
        self.index_of(&vec![self.ambient.basepoint(); self.bound + 1]).expect("constant loop is a walk")
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        paths_adjacent(self.ambient.graph(), &self.word(i), &self.word(j))
    }

    /// Signed number of turns around the ambient cycle, when it is one.
    pub fn winding(&self, i: usize) -> Option<i64> {
        self.positions.as_ref().map(|pos| winding_of(pos, &self.word(i)))
    }

    /// Pairs of looped words differing in one coordinate and adjacent, each
    /// reported once with the first index smaller.
    pub fn single_moves(&self, exec: Execution) -> Vec<(usize, usize)> {
        let gr = self.ambient.graph();
        let n = gr.vertex_count();
        exec.map_range(self.len(), |i| {
            let mut out = Vec::new();
            if !self.looped[i] {
                return out;
            }
            let mut w = self.word(i);
            for k in 1..self.bound {
                let (a, b, c) = (w[k - 1], w[k], w[k + 1]);
                for d in (b + 1)..n {
                    if gr.is_looped(d) && gr.is_adjacent(d, a) && gr.is_adjacent(d, b) && gr.is_adjacent(d, c) {
                        w[k] = d;
                        let j = self.index_of(&w).expect("moved walk is a closed walk");
                        out.push((i.min(j), i.max(j)));
                    }
                }
                w[k] = b;
            }
            out
        })
        .concat()
    }

    /// Calls `visit` with every looped word adjacent to the looped word `i`,
    /// `i` itself included. Does nothing for words through unlooped vertices.
    pub fn for_each_looped_neighbor(&self, i: usize, mut visit: impl FnMut(&[usize])) {
        if !self.looped[i] {
            return;
        }
        let f = self.word(i);
        let gr = self.ambient.graph();
        let n = self.bound;
        let cand: Vec<Vec<usize>> = (0..=n)
            .map(|k| {
                if k == 0 || k == n {
                    return vec![f[k]];
                }
                (0..gr.vertex_count())
                    .filter(|&c| {
                        gr.is_looped(c) && gr.is_adjacent(c, f[k - 1]) && gr.is_adjacent(c, f[k]) && gr.is_adjacent(c, f[k + 1])
                    })
                    .collect()
            })
            .collect();
        let mut word = Vec::with_capacity(n + 1);
        fn go(gr: &Graph, cand: &[Vec<usize>], word: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize])) {
            let k = word.len();
            if k == cand.len() {
                visit(word);
                return;
            }
            for &c in &cand[k] {
                if k == 0 || gr.is_adjacent(word[k - 1], c) {
                    word.push(c);
                    go(gr, cand, word, visit);
                    word.pop();
                }
            }
        }
        go(gr, &cand, &mut word, &mut visit);
    }

    pub fn components(&self) -> LoopComponents {
        self.components_with(Execution::default())
    }

    pub fn components_with(&self, exec: Execution) -> LoopComponents {
        let mut uf = UnionFind::new(self.len());
        for (i, j) in self.single_moves(exec) {
            uf.union(i, j);
        }
        let (labels, _) = uf.labels();
        // Per class: (stabilization, index of representative, size).
        let mut classes: std::collections::BTreeMap<usize, (usize, usize, usize)> = Default::default();
        for i in (0..self.len()).filter(|&i| self.looped[i]) {
            let stab = stabilization_index(&self.word(i));
            let e = classes.entry(labels[i]).or_insert((stab, i, 0));
            // Indices increase lexicographically, so only a smaller stabilization wins.
            if stab < e.0 {
                e.0 = stab;
                e.1 = i;
            }
            e.2 += 1;
        }
        let mut order: Vec<(usize, usize, usize, usize)> =
            classes.into_iter().map(|(label, (stab, rep, size))| (stab, rep, size, label)).collect();
        order.sort_unstable();
        let mut id_of_label = std::collections::HashMap::new();
        let components = order
            .iter()
            .enumerate()
            .map(|(id, &(stab, rep, size, label))| {
                id_of_label.insert(label, id);
                ComponentInfo {
                    id,
                    size,
                    representative: self.path(rep),
                    stabilization: stab,
                    winding: self.winding(rep),
                }
            })
            .collect();
        let component_of = (0..self.len())
            .map(|i| self.looped[i].then(|| id_of_label[&labels[i]]))
            .collect();
        LoopComponents { component_of, components }
    }

    /// The subgraph on looped words, as a pointed graph with word labels.
    pub fn looped_subgraph(&self, limit: usize) -> Result<(PointedGraph, Vec<usize>)> {
        let keep: Vec<usize> = (0..self.len()).filter(|&i| self.looped[i]).collect();
        if keep.len() > limit {
            return Err(Error::TooLarge(format!("{} looped words exceed the limit {limit}", keep.len())));
        }
        let words: Vec<Vec<usize>> = keep.iter().map(|&i| self.word(i)).collect();
        let gr = self.ambient.graph();
        let labels = words.iter().map(|w| TruncatedPath::from_word(w.clone()).display(gr)).collect();
        let graph = Graph::from_fn(labels, |a, b| paths_adjacent(gr, &words[a], &words[b]));
        let base = keep.binary_search(&self.basepoint()).expect("constant loop is looped");
        Ok((PointedGraph::new(graph, base)?, keep))
    }
}

fn extend_walks(g: &Graph, dist: &[usize], bound: usize, word: &mut Vec<u16>, out: &mut Vec<u16>) {
    let i = word.len() - 1;
    if i == bound {
        out.extend_from_slice(word);
        return;
    }
    let cur = word[i] as usize;
    for w in g.neighbors(cur) {
        if dist[w] <= bound - i - 1 {
            word.push(w as u16);
            extend_walks(g, dist, bound, word, out);
            word.pop();
        }
    }
}

pub(crate) fn winding_of(pos: &[usize], word: &[usize]) -> i64 {
    let m = pos.len();
    let total: i64 = word
        .windows(2)
        .map(|p| match (pos[p[1]] + m - pos[p[0]]) % m {
            0 => 0,
            1 => 1,
            d if d == m - 1 => -1,
            _ => unreachable!("walk steps move at most one place"),
        })
        .sum();
    total.div_euclid(m as i64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::{complete, one_star, reflexive_cycle, square_y};
    use crate::graph::make_interval;

    /// All words `x, w1, …, w_{N-1}, x` that are walks, by brute force.
    fn brute_walks(g: &PointedGraph, bound: usize) -> Vec<Vec<usize>> {
        let n = g.vertex_count();
        let x = g.basepoint();
        let mut out = Vec::new();
        let inner = bound.saturating_sub(1);
        for code in 0..n.pow(inner as u32) {
            let mut w = vec![x];
            let mut c = code;
            let mut digits = vec![0; inner];
            for d in digits.iter_mut().rev() {
                *d = c % n;
                c /= n;
            }
            w.extend(digits);
            if bound > 0 {
                w.push(x);
            }
            if w.windows(2).all(|p| g.graph().is_adjacent(p[0], p[1])) {
                out.push(w);
            }
        }
        out
    }

    fn samples() -> Vec<PointedGraph> {
        vec![
            one_star(),
            make_interval(2),
            square_y(false),
            square_y(true),
            reflexive_cycle(5),
            PointedGraph::new(complete(3, true), 1).unwrap(),
            reflexive_cycle(4),
        ]
    }

    #[test]
    fn words_match_brute_force() {
        for g in samples() {
            for bound in 0..=6 {
                let lg = LoopGraph::new(&g, bound).unwrap();
                let all: Vec<Vec<usize>> = (0..lg.len()).map(|i| lg.word(i)).collect();
                assert_eq!(all, brute_walks(&g, bound), "bound {bound}");
                for i in 0..lg.len() {
                    assert_eq!(lg.index_of(&all[i]), Some(i));
                    let looped = all[i].iter().all(|&v| g.graph().is_looped(v));
                    assert_eq!(lg.is_looped(i), looped);
                    assert_eq!(lg.is_looped(i), lg.adjacent(i, i));
                }
            }
        }
    }

    #[test]
    fn modes_agree() {
        let g = reflexive_cycle(5);
        let a = LoopGraph::with_execution(&g, 8, Execution::Sequential).unwrap();
        let b = LoopGraph::with_execution(&g, 8, Execution::Parallel).unwrap();
        assert_eq!(a.flat, b.flat);
        assert_eq!(a.components_with(Execution::Sequential).components, b.components_with(Execution::Parallel).components);
    }

    #[test]
    fn components_match_full_adjacency() {
        for g in samples() {
            for bound in 0..=6 {
                let lg = LoopGraph::new(&g, bound).unwrap();
                let comps = lg.components();
                let looped: Vec<usize> = (0..lg.len()).filter(|&i| lg.is_looped(i)).collect();
                let mut uf = UnionFind::new(lg.len());
                for (a, &i) in looped.iter().enumerate() {
                    for &j in &looped[a + 1..] {
                        if lg.adjacent(i, j) {
                            uf.union(i, j);
                        }
                    }
                }
                for &i in &looped {
                    for &j in &looped {
                        assert_eq!(uf.find(i) == uf.find(j), comps.component(i) == comps.component(j));
                    }
                }
                assert_eq!(comps.component(lg.basepoint()), Some(0));
                assert_eq!(comps.components.iter().map(|c| c.size).sum::<usize>(), looped.len());
            }
        }
    }

    #[test]
    fn looped_neighbors_match_brute_force() {
        for g in samples() {
            for bound in 0..=5 {
                let lg = LoopGraph::new(&g, bound).unwrap();
                for i in (0..lg.len()).filter(|&i| lg.is_looped(i)) {
                    let mut found = Vec::new();
                    lg.for_each_looped_neighbor(i, |w| found.push(lg.index_of(w).unwrap()));
                    let expected: Vec<usize> = (0..lg.len()).filter(|&j| lg.is_looped(j) && lg.adjacent(i, j)).collect();
                    assert_eq!(found, expected);
                }
            }
        }
    }

    #[test]
    fn cycle_positions_and_winding() {
        assert!(cycle_positions(&square_y(false)).is_none());
        assert!(cycle_positions(&PointedGraph::new(complete(3, true), 0).unwrap()).is_none());
        let pos = cycle_positions(&reflexive_cycle(5)).unwrap();
        assert_eq!(pos, vec![0, 1, 2, 3, 4]);
        assert_eq!(winding_of(&pos, &[0, 1, 2, 3, 4, 0]), 1);
        assert_eq!(winding_of(&pos, &[0, 4, 3, 3, 2, 1, 0]), -1);
        assert_eq!(winding_of(&pos, &[0, 1, 0, 0]), 0);
    }

    #[test]
    fn reflexive_five_cycle_components() {
        let lg = LoopGraph::new(&reflexive_cycle(5), 12).unwrap();
        let comps = lg.components();
        let windings: Vec<Option<i64>> = comps.components.iter().map(|c| c.winding).collect();
        assert_eq!(windings, vec![Some(0), Some(1), Some(-1), Some(2), Some(-2)]);
        for i in 0..lg.len() {
            if let Some(c) = comps.component(i) {
                assert_eq!(lg.winding(i), comps.components[c].winding);
            }
        }
    }

    #[test]
    fn too_many_walks_rejected() {
        let g = PointedGraph::new(complete(6, true), 0).unwrap();
        assert!(matches!(LoopGraph::new(&g, 12), Err(Error::TooLarge(_))));
    }
}
