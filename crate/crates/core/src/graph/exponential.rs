//! Pointed exponential graphs `H^G` and the smash/exponential adjunction.

use super::products::{smash_product, SmashProduct};
use super::{Graph, GraphMap, PointedGraph};
use crate::error::{Error, Result};

/// Largest exponential graph we materialise densely.
pub const MAX_EXPONENTIAL_VERTICES: usize = 1 << 13;

/// Indexing of the basepoint-preserving set maps `V(G) → V(H)`.
///
/// Index order is lexicographic in the images of the non-basepoint domain
/// vertices taken in increasing vertex order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapSpace {
    domain_size: usize,
    domain_base: usize,
    codomain_size: usize,
    codomain_base: usize,
    place: Vec<usize>,
    len: usize,
}

impl MapSpace {
    pub fn new(domain: &PointedGraph, codomain: &PointedGraph) -> Result<MapSpace> {
        let (n, m) = (domain.vertex_count(), codomain.vertex_count());
        let free = n - 1;
        let mut len: usize = 1;
        for _ in 0..free {
            len = len
                .checked_mul(m)
                .filter(|&l| l <= MAX_EXPONENTIAL_VERTICES)
                .ok_or_else(|| Error::TooLarge(format!("exponential with {m}^{free} vertices")))?;
        }
        let mut place = vec![0; n];
        let mut p = 1;
        for v in (0..n).rev() {
            if v != domain.basepoint() {
                place[v] = p;
                p *= m;
            }
        }
        Ok(MapSpace {
            domain_size: n,
            domain_base: domain.basepoint(),
            codomain_size: m,
            codomain_base: codomain.basepoint(),
            place,
            len,
        })
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Image of domain vertex `v` under the map with index `idx`.
    #[inline]
    pub fn value(&self, idx: usize, v: usize) -> usize {
        if v == self.domain_base {
            self.codomain_base
        } else {
            idx / self.place[v] % self.codomain_size
        }
    }

    pub fn decode(&self, idx: usize) -> Vec<usize> {
        (0..self.domain_size).map(|v| self.value(idx, v)).collect()
    }

    /// Index of a set map; `None` if it moves the basepoint or is out of range.
    pub fn encode(&self, images: &[usize]) -> Option<usize> {
        if images.len() != self.domain_size || images[self.domain_base] != self.codomain_base {
            return None;
        }
        let mut idx = 0;
        for (v, &w) in images.iter().enumerate() {
            if w >= self.codomain_size {
                return None;
            }
            if v != self.domain_base {
                idx += w * self.place[v];
            }
        }
        Some(idx)
    }

    /// Index of the constant map at the codomain basepoint.
    pub fn constant_base(&self) -> usize {
        self.encode(&vec![self.codomain_base; self.domain_size]).expect("constant map is pointed")
    }
}

/// `H^G` together with its vertex indexing.
#[derive(Clone, Debug)]
pub struct Exponential {
    pub graph: PointedGraph,
    pub space: MapSpace,
}

/// The pointed internal hom `H^G`: vertices are all basepoint-preserving set
/// maps, `f ~ g` iff `f(v) ~ g(v')` for every `v ~ v'` in `G`.
pub fn exponential(h: &PointedGraph, g: &PointedGraph) -> Result<Exponential> {
    let space = MapSpace::new(g, h)?;
    let maps: Vec<Vec<usize>> = (0..space.len()).map(|i| space.decode(i)).collect();
    let labels = maps
        .iter()
        .map(|m| {
            let parts: Vec<&str> = m.iter().map(|&w| h.graph().label(w)).collect();
            format!("({})", parts.join(","))
        })
        .collect();
    // Directed edge list of G: both orientations, loops once.
    let mut arcs: Vec<(usize, usize)> = Vec::new();
    for (u, v) in g.graph().edges() {
        arcs.push((u, v));
        if u != v {
            arcs.push((v, u));
        }
    }
    let hg = h.graph();
    let graph = Graph::from_fn(labels, |i, j| {
        let (f, k) = (&maps[i], &maps[j]);
        arcs.iter().all(|&(u, v)| hg.is_adjacent(f[u], k[v]))
    });
    let base = space.constant_base();
    Ok(Exponential {
        graph: PointedGraph::new(graph, base)?,
        space,
    })
}

/// The natural bijection `G_*(A ∧ B, C) ≅ G_*(A, C^B)`.
#[derive(Clone, Debug)]
pub struct Adjunction {
    pub a: PointedGraph,
    pub b: PointedGraph,
    pub c: PointedGraph,
    pub smash: SmashProduct,
    pub exp: Exponential,
}

impl Adjunction {
    pub fn new(a: &PointedGraph, b: &PointedGraph, c: &PointedGraph) -> Result<Adjunction> {
        Ok(Adjunction {
            a: a.clone(),
            b: b.clone(),
            c: c.clone(),
            smash: smash_product(a, b),
            exp: exponential(c, b)?,
        })
    }

    /// `φ(f)(a)(b) = f[(a,b)]`.
    pub fn forward(&self, f: &GraphMap) -> Result<GraphMap> {
        let f = GraphMap::new_pointed(&self.smash.graph, &self.c, f.assignment().to_vec())?;
        let assignment = (0..self.a.vertex_count())
            .map(|a| {
                let images: Vec<usize> = (0..self.b.vertex_count()).map(|b| f.apply(self.smash.class(a, b))).collect();
                self.exp.space.encode(&images).expect("f[(a,y)] is the basepoint")
            })
            .collect();
        GraphMap::new_pointed(&self.a, &self.exp.graph, assignment)
    }

    /// `ψ(g)[(a,b)] = g(a)(b)`.
    pub fn backward(&self, g: &GraphMap) -> Result<GraphMap> {
        let g = GraphMap::new_pointed(&self.a, &self.exp.graph, g.assignment().to_vec())?;
        let n = self.smash.graph.vertex_count();
        let mut assignment = vec![usize::MAX; n];
        for a in 0..self.a.vertex_count() {
            for b in 0..self.b.vertex_count() {
                let class = self.smash.class(a, b);
                let value = self.exp.space.value(g.apply(a), b);
                if assignment[class] == usize::MAX {
                    assignment[class] = value;
                } else if assignment[class] != value {
                    return Err(Error::NotAGraphMap("not constant on smash classes".into()));
                }
            }
        }
        GraphMap::new_pointed(&self.smash.graph, &self.c, assignment)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::{complete, one_star, square_y};
    use crate::graph::{enumerate_pointed_homs, find_pointed_isomorphism};

    #[test]
    fn exponential_from_one_star_is_target() {
        for h in [square_y(false), square_y(true)] {
            let e = exponential(&h, &one_star()).unwrap();
            assert!(find_pointed_isomorphism(&e.graph, &h).is_some());
        }
    }

    #[test]
    fn exponential_counts_and_loops() {
        let g = PointedGraph::new(complete(3, true), 0).unwrap();
        let h = square_y(false);
        let e = exponential(&h, &g).unwrap();
        assert_eq!(e.graph.vertex_count(), 4usize.pow(2));
        let homs = enumerate_pointed_homs(&g, &h);
        let looped: Vec<usize> = (0..e.space.len()).filter(|&i| e.graph.graph().is_looped(i)).collect();
        let encoded: Vec<usize> = homs.iter().map(|f| e.space.encode(f.assignment()).unwrap()).collect();
        assert_eq!(looped, encoded);
    }

    #[test]
    fn map_space_roundtrip() {
        let g = square_y(true);
        let h = PointedGraph::new(complete(3, true), 2).unwrap();
        let s = MapSpace::new(&g, &h).unwrap();
        for i in 0..s.len() {
            assert_eq!(s.encode(&s.decode(i)), Some(i));
        }
        assert_eq!(s.decode(s.constant_base()), vec![2; 4]);
        assert_eq!(s.encode(&[0, 0, 0, 0]), None);
    }

    #[test]
    fn constant_map_roundtrip() {
        let a = square_y(false);
        let b = one_star();
        let c = square_y(true);
        let adj = Adjunction::new(&a, &b, &c).unwrap();
        let n = adj.smash.graph.vertex_count();
        let constant = GraphMap::new_pointed(&adj.smash.graph, &c, vec![c.basepoint(); n]).unwrap();
        let f = adj.forward(&constant).unwrap();
        assert!(f.assignment().iter().all(|&v| v == adj.exp.graph.basepoint()));
        assert_eq!(adj.backward(&f).unwrap(), constant);
    }

    #[test]
    fn forward_rejects_non_maps() {
        let a = square_y(false);
        let b = one_star();
        let c = square_y(false);
        let adj = Adjunction::new(&a, &b, &c).unwrap();
        let n = adj.smash.graph.vertex_count();
        // Every vertex to `1`, which carries no loop.
        let bad = GraphMap::unchecked(vec![1; n], c.vertex_count());
        assert!(adj.forward(&bad).is_err());
    }
}
