//! Closure operators realizing the adjunction and fold homotopy equivalences.

use std::cell::RefCell;
use std::collections::HashMap;

use serde::Serialize;

use super::maps::{induced_map_source, induced_map_target, PosetMap};
use super::{build_hom_star, HomPoset, Multihom};
use crate::bits::mask_ones;
use crate::error::Result;
use crate::graph::{
    apply_fold, exponential, smash_product, unfold_inclusion, Fold, GraphMap, MapSpace, PointedGraph, SmashProduct,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ClosureKind {
    /// `c(p) ≥ p`.
    Closure,
    /// `c(p) ≤ p`.
    Kernel,
}

/// An idempotent monotone self-map of a subfamily of a Hom poset, stored by
/// ambient indices.
#[derive(Clone, Debug)]
pub struct ClosureOperator {
    pub name: &'static str,
    pub kind: ClosureKind,
    domain: Vec<usize>,
    images: Vec<usize>,
}

impl ClosureOperator {
    /// `domain` must be sorted; `images[k]` is the image of `domain[k]`.
    pub fn new(name: &'static str, kind: ClosureKind, domain: Vec<usize>, images: Vec<usize>) -> ClosureOperator {
        assert_eq!(domain.len(), images.len());
        debug_assert!(domain.windows(2).all(|w| w[0] < w[1]));
        ClosureOperator { name, kind, domain, images }
    }

    fn build(
        name: &'static str,
        kind: ClosureKind,
        poset: &HomPoset,
        domain: Vec<usize>,
        f: impl Fn(&[u64]) -> Vec<u64>,
    ) -> std::result::Result<ClosureOperator, String> {
        let images = domain
            .iter()
            .map(|&i| {
                poset
                    .index_of(&f(poset.sets(i)))
                    .ok_or_else(|| format!("{name}: image of {} is not an element", poset.label(i)))
            })
            .collect::<std::result::Result<_, _>>()?;
        Ok(ClosureOperator::new(name, kind, domain, images))
    }

    pub fn domain(&self) -> &[usize] {
        &self.domain
    }

    pub fn apply(&self, i: usize) -> Option<usize> {
        if self.domain.len().checked_sub(1).is_some_and(|n| self.domain[n] == n) {
            // Sorted and distinct, so the domain is exactly 0..len.
            return self.images.get(i).copied();
        }
        self.domain.binary_search(&i).ok().map(|k| self.images[k])
    }

    pub fn image(&self) -> Vec<usize> {
        let mut v = self.images.clone();
        v.sort_unstable();
        v.dedup();
        v
    }

    /// Checks the operator maps its domain to itself and is inflationary (or
    /// deflationary), idempotent and monotone. Monotonicity is tested on pairs
    /// differing by one target at one vertex, which generate the order on every
    /// domain used here.
    pub fn check(&self, poset: &HomPoset) -> std::result::Result<(), String> {
        let name = self.name;
        for (&p, &c) in self.domain.iter().zip(&self.images) {
            let Some(cc) = self.apply(c) else {
                return Err(format!("{name}: image {} of {} leaves the domain", poset.label(c), poset.label(p)));
            };
            let ordered = match self.kind {
                ClosureKind::Closure => poset.le(p, c),
                ClosureKind::Kernel => poset.le(c, p),
            };
            if !ordered {
                return Err(format!("{name}: {} and its image {} are not comparable as required", poset.label(p), poset.label(c)));
            }
            if cc != c {
                return Err(format!("{name}: not idempotent at {}", poset.label(p)));
            }
            let mut broken = None;
            poset.for_each_upper_cover(p, |q| {
                if broken.is_none() && self.apply(q).is_some_and(|cq| !poset.le(c, cq)) {
                    broken = Some(q);
                }
            });
            if let Some(q) = broken {
                return Err(format!("{name}: not monotone on {} < {}", poset.label(p), poset.label(q)));
            }
        }
        Ok(())
    }
}

fn sorted_eq(mut a: Vec<usize>, mut b: Vec<usize>) -> bool {
    a.sort_unstable();
    a.dedup();
    b.sort_unstable();
    b.dedup();
    a == b
}

/// `P = Hom_*(A∧B, C)` included in `Q = Hom_*(A, C^B)` by `j`, with the closure
/// `c` on `Q` whose image is `j(P)`.
#[derive(Clone, Debug)]
pub struct AdjunctionClosure {
    pub smash: SmashProduct,
    /// Vertices of `C^B`.
    pub maps: MapSpace,
    pub p: HomPoset,
    pub q: HomPoset,
    pub j: PosetMap,
    pub c: ClosureOperator,
}

/// `{f ∈ C^B : f(b) ∈ allowed[b] for all b}`.
fn product_mask(decoded: &[Vec<usize>], allowed: &[u64]) -> u64 {
    decoded
        .iter()
        .enumerate()
        .filter(|(_, f)| f.iter().zip(allowed).all(|(&fb, &s)| s >> fb & 1 == 1))
        .fold(0, |acc, (k, _)| acc | 1 << k)
}

pub fn adjunction_closure(a: &PointedGraph, b: &PointedGraph, c: &PointedGraph) -> Result<AdjunctionClosure> {
    let smash = smash_product(a, b);
    let exp = exponential(c, b)?;
    let p = build_hom_star(&smash.graph, c)?;
    let q = build_hom_star(a, &exp.graph)?;
    let decoded: Vec<Vec<usize>> = (0..exp.space.len()).map(|k| exp.space.decode(k)).collect();
    let nb = b.vertex_count();
    let j = PosetMap::from_fn(&p, &q, |alpha| {
        Multihom::new(
            (0..a.vertex_count())
                .map(|x| {
                    let allowed: Vec<u64> = (0..nb).map(|y| alpha.set(smash.class(x, y))).collect();
                    product_mask(&decoded, &allowed)
                })
                .collect(),
        )
    })?;
    // Each vertex set closes independently; distinct sets are few, so memoize.
    let memo = RefCell::new(HashMap::new());
    let closure = |gamma: &[u64]| -> Vec<u64> {
        gamma
            .iter()
            .map(|&s| {
                *memo.borrow_mut().entry(s).or_insert_with(|| {
                    let spans: Vec<u64> = (0..nb)
                        .map(|y| mask_ones(s).fold(0u64, |acc, f| acc | 1 << decoded[f][y]))
                        .collect();
                    product_mask(&decoded, &spans)
                })
            })
            .collect()
    };
    let c_op = ClosureOperator::build("c", ClosureKind::Closure, &q, (0..q.len()).collect(), closure)
        .map_err(crate::error::Error::InvalidMultihom)?;
    Ok(AdjunctionClosure {
        smash,
        maps: exp.space,
        p,
        q,
        j,
        c: c_op,
    })
}

impl AdjunctionClosure {
    /// `j` injective and monotone, `c` a closure operator, and `j(P) = c(Q)`.
    pub fn check(&self) -> std::result::Result<(), String> {
        if !self.j.is_injective() {
            return Err("j is not injective".into());
        }
        if !self.j.is_monotone(&self.p, &self.q) {
            return Err("j is not monotone".into());
        }
        self.c.check(&self.q)?;
        if !sorted_eq(self.j.image(), self.c.image()) {
            return Err(format!(
                "j(P) has {} elements but c(Q) has {}",
                self.j.image().len(),
                self.c.image().len()
            ));
        }
        Ok(())
    }
}

/// The four closure maps attached to a fold of `G` at `v` onto `u`.
#[derive(Clone, Debug)]
pub struct FoldClosures {
    pub fold: Fold,
    pub folded: PointedGraph,
    /// `Hom_*(G,H)` and `Hom_*(G\v,H)`.
    pub from_g: HomPoset,
    pub from_folded: HomPoset,
    /// `Hom_*(H,G)` and `Hom_*(H,G\v)`.
    pub into_g: HomPoset,
    pub into_folded: HomPoset,
    /// Restriction along the unfolding, `i^H`.
    pub restriction: PosetMap,
    /// Composition with the fold, `f_H`.
    pub push: PosetMap,
    pub phi: ClosureOperator,
    pub psi: ClosureOperator,
    pub rho: ClosureOperator,
    pub sigma: ClosureOperator,
}

pub fn fold_closures(g: &PointedGraph, fold: Fold, h: &PointedGraph) -> Result<FoldClosures> {
    fold.validate(g)?;
    let (u, v) = (fold.onto, fold.vertex);
    let (folded, f) = apply_fold(g, fold)?;
    let inclusion = unfold_inclusion(g, v)?;
    let from_g = build_hom_star(g, h)?;
    let from_folded = build_hom_star(&folded, h)?;
    let into_g = build_hom_star(h, g)?;
    let into_folded = build_hom_star(h, &folded)?;
    let restriction = induced_map_source(&inclusion, &from_g, &from_folded)?;
    let push = induced_map_target(&f, &into_g, &into_folded)?;
    let err = crate::error::Error::InvalidMultihom;

    let x: Vec<usize> = (0..from_g.len())
        .filter(|&i| from_g.sets(i)[u] & !from_g.sets(i)[v] == 0)
        .collect();
    let phi = ClosureOperator::build("phi", ClosureKind::Closure, &from_g, (0..from_g.len()).collect(), |s| {
        let mut t = s.to_vec();
        t[v] |= s[u];
        t
    })
    .map_err(err)?;
    let psi = ClosureOperator::build("psi", ClosureKind::Kernel, &from_g, x, |s| {
        let mut t = s.to_vec();
        t[v] = s[u];
        t
    })
    .map_err(err)?;

    let (bu, bv) = (1u64 << u, 1u64 << v);
    let y: Vec<usize> = (0..into_g.len())
        .filter(|&i| into_g.sets(i).iter().all(|&s| s & bv == 0 || s & bu != 0))
        .collect();
    let rho = ClosureOperator::build("rho", ClosureKind::Closure, &into_g, (0..into_g.len()).collect(), |s| {
        s.iter().map(|&t| if t & bv != 0 { t | bu } else { t }).collect()
    })
    .map_err(err)?;
    let sigma = ClosureOperator::build("sigma", ClosureKind::Kernel, &into_g, y, |s| {
        s.iter().map(|&t| t & !bv).collect()
    })
    .map_err(err)?;
    Ok(FoldClosures {
        fold,
        folded,
        from_g,
        from_folded,
        into_g,
        into_folded,
        restriction,
        push,
        phi,
        psi,
        rho,
        sigma,
    })
}

impl FoldClosures {
    /// `Hom_*(G\v,H)` as the elements of `Hom_*(G,H)` with `α(v) = α(u)`.
    fn extend(&self, sets: &[u64]) -> Vec<u64> {
        let (u, v) = (self.fold.onto, self.fold.vertex);
        let shift = |w: usize| if w > v { w - 1 } else { w };
        (0..sets.len() + 1)
            .map(|w| if w == v { sets[shift(u)] } else { sets[shift(w)] })
            .collect()
    }

    /// Target masks over `G\v` rewritten over `G`.
    fn embed(&self, sets: &[u64]) -> Vec<u64> {
        let v = self.fold.vertex;
        sets.iter()
            .map(|&s| mask_ones(s).fold(0u64, |acc, t| acc | 1 << if t >= v { t + 1 } else { t }))
            .collect()
    }

    /// The closure axioms, the factorizations `i^H = ψφ` and `f_H = σρ`, and
    /// the image identities.
    pub fn check(&self) -> std::result::Result<(), String> {
        for (op, poset) in [
            (&self.phi, &self.from_g),
            (&self.psi, &self.from_g),
            (&self.rho, &self.into_g),
            (&self.sigma, &self.into_g),
        ] {
            op.check(poset)?;
        }
        if self.phi.image() != self.psi.domain() {
            return Err("image of phi differs from X".into());
        }
        if self.rho.image() != self.sigma.domain() {
            return Err("image of rho differs from Y".into());
        }
        for i in 0..self.from_g.len() {
            let via = self.psi.apply(self.phi.apply(i).expect("phi is total")).expect("phi lands in X");
            let direct = self.extend(self.from_folded.sets(self.restriction.apply(i)));
            if self.from_g.sets(via) != direct.as_slice() {
                return Err(format!("restriction differs from psi phi at {}", self.from_g.label(i)));
            }
        }
        if self.restriction.image().len() != self.from_folded.len() {
            return Err("restriction is not onto Hom_*(G\\v,H)".into());
        }
        let extended: Vec<usize> = (0..self.from_folded.len())
            .map(|k| self.from_g.index_of(&self.extend(self.from_folded.sets(k))).expect("extension is an element"))
            .collect();
        if !sorted_eq(self.psi.image(), extended) {
            return Err("image of psi differs from Hom_*(G\\v,H)".into());
        }
        for i in 0..self.into_g.len() {
            let via = self.sigma.apply(self.rho.apply(i).expect("rho is total")).expect("rho lands in Y");
            let direct = self.embed(self.into_folded.sets(self.push.apply(i)));
            if self.into_g.sets(via) != direct.as_slice() {
                return Err(format!("fold push-forward differs from sigma rho at {}", self.into_g.label(i)));
            }
        }
        if self.push.image().len() != self.into_folded.len() {
            return Err("push-forward is not onto Hom_*(H,G\\v)".into());
        }
        let embedded: Vec<usize> = (0..self.into_folded.len())
            .map(|k| self.into_g.index_of(&self.embed(self.into_folded.sets(k))).expect("embedding is an element"))
            .collect();
        if !sorted_eq(self.sigma.image(), embedded) {
            return Err("image of sigma differs from Hom_*(H,G\\v)".into());
        }
        Ok(())
    }
}

/// The fold retraction composed with the unfolding, as a map `G → G`.
pub fn fold_round_trip(g: &PointedGraph, fold: Fold) -> Result<GraphMap> {
    let (_, f) = apply_fold(g, fold)?;
    Ok(f.then(&unfold_inclusion(g, fold.vertex)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::{complete, make_interval, one_star, square_y};
    use crate::graph::{find_fold, Graph};

    #[test]
    fn adjunction_small() {
        let graphs = [one_star(), make_interval(1), square_y(false), PointedGraph::new(complete(3, true), 0).unwrap()];
        for a in &graphs[..3] {
            for b in &graphs[..2] {
                for c in &graphs {
                    let adj = adjunction_closure(a, b, c).unwrap();
                    adj.check().unwrap();
                    let ip = adj.p.invariants(false).unwrap();
                    let iq = adj.q.invariants(false).unwrap();
                    assert_eq!(ip.signature(), iq.signature());
                }
            }
        }
    }

    #[test]
    fn folds_small() {
        let g = PointedGraph::new(complete(3, true), 0).unwrap();
        let fold = find_fold(&g).unwrap();
        for h in [one_star(), make_interval(2), square_y(false), square_y(true)] {
            let fc = fold_closures(&g, fold, &h).unwrap();
            fc.check().unwrap();
            assert_eq!(
                fc.from_g.invariants(false).unwrap().signature(),
                fc.from_folded.invariants(false).unwrap().signature()
            );
            assert_eq!(
                fc.into_g.invariants(false).unwrap().signature(),
                fc.into_folded.invariants(false).unwrap().signature()
            );
        }
        let bad = Fold { vertex: 0, onto: 1 };
        assert!(fold_closures(&g, bad, &one_star()).is_err());
    }

    #[test]
    fn round_trip_is_homotopic_to_identity() {
        // The composite G → G\v → G and the identity lie in one component of
        // the endomorphism Hom poset.
        let g = PointedGraph::new(
            Graph::from_fn((0..4).map(|i| i.to_string()).collect(), |i, j| i == j || (i + j) % 2 == 1 || (i, j) == (0, 2)),
            0,
        )
        .unwrap();
        let fold = find_fold(&g).unwrap();
        let rt = fold_round_trip(&g, fold).unwrap();
        let endo = build_hom_star(&g, &g).unwrap();
        let skel = endo.cell_skeleton().unwrap();
        let (comp, _) = skel.complex.components();
        let at = |m: &GraphMap| {
            let i = endo.index_of(Multihom::from_map(m).sets()).unwrap();
            comp[skel.atoms.binary_search(&i).unwrap()]
        };
        assert_eq!(at(&rt), at(&GraphMap::identity(g.graph())));
    }
}
