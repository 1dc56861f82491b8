//! Graph isomorphism by colour refinement plus backtracking.

use std::collections::HashMap;

use super::{Graph, PointedGraph};

/// Refine vertex colours of both graphs jointly so colour ids are comparable.
fn refine(g: &Graph, h: &Graph, gc: Vec<usize>, hc: Vec<usize>) -> (Vec<usize>, Vec<usize>) {
    let (mut gc, mut hc) = (gc, hc);
    let mut classes = usize::MAX;
    loop {
        let mut dict: HashMap<(usize, Vec<usize>), usize> = HashMap::new();
        let mut sig = |graph: &Graph, col: &[usize]| -> Vec<usize> {
            (0..graph.vertex_count())
                .map(|v| {
                    let mut nb: Vec<usize> = graph.neighbors(v).map(|w| col[w]).collect();
                    nb.sort_unstable();
                    let next = dict.len();
                    *dict.entry((col[v], nb)).or_insert(next)
                })
                .collect()
        };
        let ng = sig(g, &gc);
        let nh = sig(h, &hc);
        gc = ng;
        hc = nh;
        if dict.len() == classes {
            return (gc, hc);
        }
        classes = dict.len();
    }
}

fn histogram(c: &[usize]) -> Vec<usize> {
    let mut s = c.to_vec();
    s.sort_unstable();
    s
}

fn search(g: &Graph, h: &Graph, gc: Vec<usize>, hc: Vec<usize>) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    if n != h.vertex_count() || g.edge_count() != h.edge_count() {
        return None;
    }
    let (gc, hc) = refine(g, h, gc, hc);
    if histogram(&gc) != histogram(&hc) {
        return None;
    }
    let mut class_size: HashMap<usize, usize> = HashMap::new();
    for &c in &gc {
        *class_size.entry(c).or_default() += 1;
    }
    // Vertex order: start from the smallest class, then grow along edges so that
    // each new vertex is constrained by already placed neighbours.
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    while order.len() < n {
        let start = (0..n)
            .filter(|&v| !placed[v])
            .min_by_key(|&v| (class_size[&gc[v]], v))
            .unwrap();
        placed[start] = true;
        order.push(start);
        let mut head = order.len() - 1;
        while head < order.len() {
            let v = order[head];
            head += 1;
            let mut nb: Vec<usize> = g.neighbors(v).filter(|&w| !placed[w]).collect();
            nb.sort_by_key(|&w| (class_size[&gc[w]], w));
            for w in nb {
                placed[w] = true;
                order.push(w);
            }
        }
    }
    let mut by_color: HashMap<usize, Vec<usize>> = HashMap::new();
    for (v, &c) in hc.iter().enumerate() {
        by_color.entry(c).or_default().push(v);
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];

    fn extend(
        depth: usize,
        order: &[usize],
        g: &Graph,
        h: &Graph,
        gc: &[usize],
        by_color: &HashMap<usize, Vec<usize>>,
        map: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        let Some(&v) = order.get(depth) else {
            return true;
        };
        for &t in &by_color[&gc[v]] {
            if used[t] {
                continue;
            }
            let consistent = order[..depth]
                .iter()
                .all(|&u| g.is_adjacent(u, v) == h.is_adjacent(map[u], t));
            if !consistent {
                continue;
            }
            map[v] = t;
            used[t] = true;
            if extend(depth + 1, order, g, h, gc, by_color, map, used) {
                return true;
            }
            used[t] = false;
        }
        map[v] = usize::MAX;
        false
    }

    extend(0, &order, g, h, &gc, &by_color, &mut map, &mut used).then_some(map)
}

fn base_colors(g: &Graph) -> Vec<usize> {
    (0..g.vertex_count()).map(|v| g.is_looped(v) as usize).collect()
}

/// A bijection `p` with `u ~ v` in `g` iff `p[u] ~ p[v]` in `h`, labels ignored.
pub fn find_isomorphism(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    search(g, h, base_colors(g), base_colors(h))
}

/// As [`find_isomorphism`], additionally sending basepoint to basepoint.
pub fn find_pointed_isomorphism(g: &PointedGraph, h: &PointedGraph) -> Option<Vec<usize>> {
    let mark = |p: &PointedGraph| {
        let mut c = base_colors(p.graph());
        c[p.basepoint()] = 2;
        c
    };
    search(g.graph(), h.graph(), mark(g), mark(h))
}

/// Isomorphism invariant of a small pointed graph: the lexicographically least
/// upper-triangular adjacency string over all orderings that put the basepoint
/// first. Cost is factorial in the vertex count; intended for graphs of at most
/// eight vertices.
pub fn canonical_code(g: &PointedGraph) -> Vec<bool> {
    let n = g.vertex_count();
    let graph = g.graph();
    let mut best: Option<Vec<bool>> = None;
    let mut order = vec![g.basepoint()];
    let mut used = vec![false; n];
    used[g.basepoint()] = true;

    fn rec(graph: &Graph, order: &mut Vec<usize>, used: &mut [bool], best: &mut Option<Vec<bool>>) {
        let n = used.len();
        if order.len() == n {
            let mut code = Vec::with_capacity(n * (n + 1) / 2);
            for i in 0..n {
                for j in i..n {
                    code.push(graph.is_adjacent(order[i], order[j]));
                }
            }
            if best.as_ref().is_none_or(|b| code < *b) {
                *best = Some(code);
            }
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                order.push(v);
                rec(graph, order, used, best);
                order.pop();
                used[v] = false;
            }
        }
    }

    rec(graph, &mut order, &mut used, &mut best);
    best.unwrap_or_default()
}
