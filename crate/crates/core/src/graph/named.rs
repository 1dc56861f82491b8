//! Small named graphs.

use super::{Graph, PointedGraph};

/// The reflexive path I_n on `0..=n`, pointed at `0`.
pub fn make_interval(n: usize) -> PointedGraph {
    let labels = (0..=n).map(|i| i.to_string()).collect();
    let g = Graph::from_fn(labels, |i, j| j - i <= 1);
    PointedGraph::new(g, 0).expect("interval vertices are looped")
}

/// G_*: `g` plus an isolated looped basepoint labelled `*`.
pub fn add_disjoint_basepoint(g: &Graph) -> PointedGraph {
    let n = g.vertex_count();
    let mut star = String::from("*");
    while g.index_of(&star).is_some() {
        star.push('\'');
    }
    let mut labels = g.labels().to_vec();
    labels.push(star);
    let h = Graph::from_fn(labels, |i, j| {
        if j == n {
            i == n
        } else {
            g.is_adjacent(i, j)
        }
    });
    PointedGraph::new(h, n).expect("new basepoint is looped")
}

/// 1_*: two disjoint looped vertices, pointed at `*`.
pub fn one_star() -> PointedGraph {
    let pt = Graph::from_fn(vec!["1".into()], |_, _| true);
    add_disjoint_basepoint(&pt)
}

pub fn complete(n: usize, reflexive: bool) -> Graph {
    let labels = (0..n).map(|i| i.to_string()).collect();
    Graph::from_fn(labels, |i, j| i != j || reflexive)
}

/// Cycle on the given labels in order; requires at least three labels.
pub fn cycle_on(labels: Vec<String>, reflexive: bool) -> Graph {
    let m = labels.len();
    assert!(m >= 3, "a cycle needs at least three vertices");
    Graph::from_fn(labels, |i, j| {
        if i == j {
            reflexive
        } else {
            j - i == 1 || (i == 0 && j == m - 1)
        }
    })
}

pub fn cycle(m: usize, reflexive: bool) -> Graph {
    cycle_on((0..m).map(|i| i.to_string()).collect(), reflexive)
}

/// C'_m pointed at `0`: the reflexive m-cycle.
pub fn reflexive_cycle(m: usize) -> PointedGraph {
    PointedGraph::new(cycle(m, true), 0).expect("reflexive")
}

/// The 4-cycle on `y, 1, 2, 3`, pointed at `y`. With `reflexive` false only
/// `y` carries a loop.
pub fn square_y(reflexive: bool) -> PointedGraph {
    let labels = ["y", "1", "2", "3"].iter().map(|s| s.to_string()).collect();
    let mut g = cycle_on(labels, reflexive);
    g.set_edge(0, 0);
    PointedGraph::new(g, 0).expect("y is looped")
}
