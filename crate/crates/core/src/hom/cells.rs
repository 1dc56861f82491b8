//! The regular cell complex whose face poset is a Hom poset.
//!
//! Vertices are the atoms. An edge is an element with exactly one two-element
//! set `{a<b}`, oriented from its `a` end to its `b` end. Two-cells are
//! triangles (one three-element set) and squares (two two-element sets).

use super::HomPoset;
use crate::bits::mask_ones;
use crate::error::{Error, Result};
use crate::topology::{FacePoset, Invariants, Step, TwoComplex};

/// Cells of dimension at most two, indexed into the poset.
#[derive(Clone, Debug)]
pub struct CellSkeleton {
    /// Poset index of each vertex of the complex.
    pub atoms: Vec<usize>,
    /// Poset index of each edge of the complex.
    pub edges: Vec<usize>,
    pub complex: TwoComplex,
}

fn two_lowest(s: u64) -> (usize, u64) {
    let a = s.trailing_zeros() as usize;
    (a, s & !(1 << a))
}

impl HomPoset {
    fn find(&self, sets: &[u64]) -> Result<usize> {
        self.index_of(sets).ok_or(Error::NotDownClosed)
    }

    /// Euler characteristic as the alternating count of cells.
    pub fn euler_characteristic(&self) -> i64 {
        (0..self.len()).map(|i| if self.dim(i) % 2 == 0 { 1 } else { -1 }).sum()
    }

    /// The 2-skeleton of the cell complex. Requires a family closed under faces.
    pub fn cell_skeleton(&self) -> Result<CellSkeleton> {
        let n = self.len();
        let mut atom_id = vec![usize::MAX; n];
        let mut edge_id = vec![usize::MAX; n];
        let mut atoms = Vec::new();
        let mut edges = Vec::new();
        for i in 0..n {
            match self.dim(i) {
                0 => {
                    atom_id[i] = atoms.len();
                    atoms.push(i);
                }
                1 => {
                    edge_id[i] = edges.len();
                    edges.push(i);
                }
                _ => {}
            }
        }
        let mut buf = Vec::with_capacity(self.width());
        let mut ends = Vec::with_capacity(edges.len());
        for &e in &edges {
            buf.clear();
            buf.extend_from_slice(self.sets(e));
            let v = buf.iter().position(|s| s.count_ones() == 2).expect("an edge has one pair");
            let (a, rest) = two_lowest(buf[v]);
            buf[v] = 1 << a;
            let tail = atom_id[self.find(&buf)?];
            buf[v] = rest;
            let head = atom_id[self.find(&buf)?];
            ends.push((tail, head));
        }
        let mut faces: Vec<Vec<Step>> = Vec::new();
        for i in (0..n).filter(|&i| self.dim(i) == 2) {
            let sets = self.sets(i);
            let big: Vec<usize> = (0..sets.len()).filter(|&v| sets[v].count_ones() > 1).collect();
            let mut edge = |v: usize, s: u64, w: Option<(usize, u64)>| -> Result<usize> {
                buf.clear();
                buf.extend_from_slice(sets);
                buf[v] = s;
                if let Some((w, t)) = w {
                    buf[w] = t;
                }
                Ok(edge_id[self.find(&buf)?])
            };
            let face = if let [v] = big[..] {
                let [a, b, c]: [usize; 3] = mask_ones(sets[v]).collect::<Vec<_>>().try_into().expect("three targets");
                let (a, b, c) = (1u64 << a, 1u64 << b, 1u64 << c);
                vec![(edge(v, a | b, None)?, true), (edge(v, b | c, None)?, true), (edge(v, a | c, None)?, false)]
            } else {
                let [v, w] = big[..] else { unreachable!("a 2-cell has one triple or two pairs") };
                let (a, b) = two_lowest(sets[v]);
                let (c, d) = two_lowest(sets[w]);
                let (a, c) = (1u64 << a, 1u64 << c);
                let pair_v = sets[v];
                let pair_w = sets[w];
                vec![
                    (edge(v, pair_v, Some((w, c)))?, true),
                    (edge(w, pair_w, Some((v, b)))?, true),
                    (edge(v, pair_v, Some((w, d)))?, false),
                    (edge(w, pair_w, Some((v, a)))?, false),
                ]
            };
            faces.push(face);
        }
        let complex = TwoComplex::new(atoms.len(), ends, faces)?;
        Ok(CellSkeleton { atoms, edges, complex })
    }

    /// Cells with their facets, for collapse search.
    pub fn face_poset(&self) -> Result<FacePoset> {
        if !self.is_down_closed() {
            return Err(Error::NotDownClosed);
        }
        let dims = (0..self.len()).map(|i| self.dim(i)).collect();
        let down = (0..self.len()).map(|i| self.lower_covers(i)).collect();
        Ok(FacePoset::new(dims, down))
    }

    /// `π₀`, `χ`, `H₁` and, if `try_collapse`, a collapse attempt.
    pub fn invariants(&self, try_collapse: bool) -> Result<Invariants> {
        if self.is_empty() {
            return Ok(Invariants {
                pi0: 0,
                basepoint_component: None,
                euler: 0,
                h1: Default::default(),
                collapsible: Some(false),
            });
        }
        let skel = self.cell_skeleton()?;
        let (comp, pi0) = skel.complex.components();
        let basepoint_component = self
            .basepoint()
            .and_then(|b| skel.atoms.binary_search(&b).ok())
            .map(|a| comp[a]);
        let mut inv = Invariants {
            pi0,
            basepoint_component,
            euler: self.euler_characteristic(),
            h1: skel.complex.h1(),
            collapsible: None,
        };
        if !inv.looks_contractible() {
            inv.collapsible = Some(false);
        } else if try_collapse && self.face_poset()?.collapse_to_point().is_some() {
            inv.collapsible = Some(true);
        }
        Ok(inv)
    }
}

#[cfg(test)]
mod tests {
    use crate::graph::named::{complete, cycle, make_interval, one_star, reflexive_cycle, square_y};
    use crate::graph::{Graph, PointedGraph};
    use crate::hom::{build_hom, build_hom_star};
    use crate::topology::{AbelianInvariants, SimplicialComplex};

    /// Invariants of the order complex, computed without the cell model.
    fn order_invariants(p: &crate::hom::HomPoset) -> (usize, i64, AbelianInvariants) {
        let oc = p.order_complex(100_000).unwrap();
        (oc.components().1, oc.euler_characteristic(), oc.h1())
    }

    fn cell_invariants(p: &crate::hom::HomPoset) -> (usize, i64, AbelianInvariants) {
        let inv = p.invariants(false).unwrap();
        (inv.pi0, inv.euler, inv.h1)
    }

    #[test]
    fn cells_agree_with_order_complex() {
        let graphs: Vec<PointedGraph> = vec![
            one_star(),
            make_interval(2),
            square_y(false),
            square_y(true),
            reflexive_cycle(5),
            PointedGraph::new(cycle(3, true), 0).unwrap(),
        ];
        for g in &graphs {
            for h in &graphs {
                let p = build_hom_star(g, h).unwrap();
                if p.len() > 400 {
                    continue;
                }
                assert_eq!(cell_invariants(&p), order_invariants(&p), "{:?} -> {:?}", g.graph(), h.graph());
            }
        }
    }

    #[test]
    fn k2_into_k3_is_a_circle() {
        let p = build_hom(&complete(2, false), &complete(3, false)).unwrap();
        assert_eq!(cell_invariants(&p), (1, 0, AbelianInvariants::free(1)));
        assert_eq!(order_invariants(&p), (1, 0, AbelianInvariants::free(1)));
        // Three colourings of an edge into K4: a circle's worth per pair; check against the oracle.
        let q = build_hom(&complete(2, false), &complete(4, false)).unwrap();
        assert_eq!(cell_invariants(&q), order_invariants(&q));
    }

    #[test]
    fn one_star_into_five_cycle() {
        let p = build_hom_star(&one_star(), &reflexive_cycle(5)).unwrap();
        let inv = p.invariants(true).unwrap();
        assert_eq!((inv.pi0, inv.euler), (1, 0));
        assert_eq!(inv.h1, AbelianInvariants::free(1));
        assert_eq!(inv.collapsible, Some(false));
        // Face poset of the clique complex on the looped vertices.
        let cc = SimplicialComplex::clique_complex(reflexive_cycle(5).graph());
        assert_eq!(cc.faces(1000).unwrap().len(), p.len());
    }

    #[test]
    fn interval_source_collapses() {
        let h = PointedGraph::new(Graph::from_fn((0..4).map(|i| i.to_string()).collect(), |i, j| i == j || (i + j) % 2 == 1), 0).unwrap();
        for n in 0..=3 {
            let p = build_hom_star(&make_interval(n), &h).unwrap();
            let inv = p.invariants(true).unwrap();
            assert_eq!(inv.collapsible, Some(true), "n = {n}");
            let fp = p.face_poset().unwrap();
            assert!(fp.verify(&fp.collapse_to_point().unwrap()));
        }
    }
}
