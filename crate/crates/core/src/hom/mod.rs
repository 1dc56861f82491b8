//! Posets of multihomomorphisms `Hom(G,H)` and `Hom_*(G,H)`.
//!
//! An element sends each source vertex to a nonempty set of target vertices
//! (a bitmask, so targets have at most 64 vertices) such that every pair of
//! choices along a source edge is a target edge. Elements are kept sorted
//! lexicographically by their masks in source-vertex order, and the order
//! relation is evaluated from the masks on demand.
//!
//! Because a face of an element (shrink some of its sets) is again an element,
//! each element `η` is a product of simplices `∏_v Δ^{|η(v)|-1}` and the poset
//! is the face poset of a regular cell complex whose barycentric subdivision is
//! the order complex. Invariants are computed on those cells.

mod build;
mod cells;
mod closure;
mod maps;

pub use build::{build_hom, build_hom_star, build_hom_star_with, build_hom_with};
pub use cells::CellSkeleton;
pub use closure::{adjunction_closure, fold_closures, fold_round_trip, AdjunctionClosure, ClosureKind, ClosureOperator, FoldClosures};
pub use maps::{
    atom_hom_graph, induced_map_source, induced_map_target, quillen_fiber, x_homotopy_classes, PosetMap,
    XHomotopyClasses,
};

use std::cmp::Ordering;
use std::fmt;

use crate::bits::mask_ones;
use crate::error::{Error, Result};
use crate::graph::{Graph, GraphMap, PointedGraph};
use crate::topology::SimplicialComplex;

/// A map from source vertices to nonempty target vertex sets.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Multihom {
    sets: Vec<u64>,
}

impl Multihom {
    pub fn new(sets: Vec<u64>) -> Multihom {
        Multihom { sets }
    }

    pub fn from_map(map: &GraphMap) -> Multihom {
        Multihom {
            sets: map.assignment().iter().map(|&t| 1u64 << t).collect(),
        }
    }

    pub fn sets(&self) -> &[u64] {
        &self.sets
    }

    pub fn set(&self, v: usize) -> u64 {
        self.sets[v]
    }

    pub fn le(&self, other: &Multihom) -> bool {
        subsets(&self.sets, &other.sets)
    }

    pub fn is_atom(&self) -> bool {
        self.sets.iter().all(|s| s.count_ones() == 1)
    }

    /// The underlying vertex map of an atom.
    pub fn as_map(&self) -> Option<Vec<usize>> {
        self.is_atom()
            .then(|| self.sets.iter().map(|s| s.trailing_zeros() as usize).collect())
    }

    /// Dimension of the product of simplices this element spans.
    pub fn dim(&self) -> usize {
        dim(&self.sets)
    }

    /// Direct check of the defining conditions against `g` and `h`.
    pub fn is_valid(&self, g: &Graph, h: &Graph) -> bool {
        let n = h.vertex_count();
        if self.sets.len() != g.vertex_count() || n > 64 {
            return false;
        }
        if self.sets.iter().any(|&s| s == 0 || (n < 64 && s >> n != 0)) {
            return false;
        }
        g.edges().all(|(v, w)| {
            mask_ones(self.sets[v]).all(|a| mask_ones(self.sets[w]).all(|b| h.is_adjacent(a, b)))
        })
    }

    pub fn is_valid_pointed(&self, g: &PointedGraph, h: &PointedGraph) -> bool {
        self.is_valid(g.graph(), h.graph()) && self.sets[g.basepoint()] == 1 << h.basepoint()
    }

    pub fn display(&self, target: &Graph) -> String {
        format_sets(&self.sets, target.labels())
    }
}

fn subsets(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x & !y == 0)
}

fn dim(sets: &[u64]) -> usize {
    sets.iter().map(|s| s.count_ones() as usize - 1).sum()
}

fn format_sets(sets: &[u64], labels: &[String]) -> String {
    let parts: Vec<String> = sets
        .iter()
        .map(|&s| {
            let names: Vec<&str> = mask_ones(s).map(|t| labels[t].as_str()).collect();
            format!("{{{}}}", names.join(","))
        })
        .collect();
    format!("({})", parts.join(","))
}

/// A family of multihomomorphisms ordered by containment.
#[derive(Clone, PartialEq, Eq)]
pub struct HomPoset {
    source_labels: Vec<String>,
    target_labels: Vec<String>,
    width: usize,
    masks: Vec<u64>,
    dense: Option<DenseIndex>,
    basepoint: Option<usize>,
}

/// Element lookup through a table indexed by the mixed-radix tuple of
/// per-vertex set ranks. Built only when the table is not much larger than
/// the poset.
#[derive(Clone, Debug, PartialEq, Eq)]
struct DenseIndex {
    /// Sorted distinct sets occurring at each vertex.
    values: Vec<Vec<u64>>,
    strides: Vec<usize>,
    table: Vec<u32>,
    /// Target count, and per vertex the rank of `values[r] ^ (1 << t)` at
    /// `r * bits + t` (`u32::MAX` when absent).
    bits: usize,
    flips: Vec<Vec<u32>>,
}

impl DenseIndex {
    fn build(flat: &[u64], width: usize, bits: usize) -> Option<DenseIndex> {
        let len = flat.len() / width;
        let values: Vec<Vec<u64>> = (0..width)
            .map(|v| {
                let mut col: Vec<u64> = flat.iter().skip(v).step_by(width).copied().collect();
                col.sort_unstable();
                col.dedup();
                col
            })
            .collect();
        let cap = 8 * len + 4096;
        let mut strides = vec![0; width];
        let mut size = 1usize;
        for v in (0..width).rev() {
            strides[v] = size;
            size = size.checked_mul(values[v].len()).filter(|&n| n <= cap)?;
        }
        if len >= u32::MAX as usize {
            return None;
        }
        let mut table = vec![u32::MAX; size];
        for (i, row) in flat.chunks(width).enumerate() {
            let slot: usize = (0..width)
                .map(|v| values[v].binary_search(&row[v]).expect("own value") * strides[v])
                .sum();
            table[slot] = i as u32;
        }
        let flips = values
            .iter()
            .map(|col| {
                col.iter()
                    .flat_map(|&s| {
                        (0..bits).map(move |t| col.binary_search(&(s ^ (1 << t))).map_or(u32::MAX, |r| r as u32))
                    })
                    .collect()
            })
            .collect();
        Some(DenseIndex { values, strides, table, bits, flips })
    }

    fn find(&self, sets: &[u64]) -> Option<usize> {
        let mut slot = 0;
        for (v, s) in sets.iter().enumerate() {
            slot += self.values[v].binary_search(s).ok()? * self.strides[v];
        }
        match self.table[slot] {
            u32::MAX => None,
            i => Some(i as usize),
        }
    }
}

impl HomPoset {
    /// Poset on the given elements (deduplicated and sorted). `base` is the
    /// distinguished element, if it is among them.
    pub fn from_elements(
        source_labels: Vec<String>,
        target_labels: Vec<String>,
        elements: Vec<Multihom>,
        base: Option<&Multihom>,
    ) -> Result<HomPoset> {
        let width = source_labels.len();
        if target_labels.len() > 64 {
            return Err(Error::TargetTooLarge(target_labels.len()));
        }
        let mut flat = Vec::with_capacity(elements.len() * width);
        for e in &elements {
            if e.sets.len() != width {
                return Err(Error::InvalidMultihom(format!("expected {width} sets, got {}", e.sets.len())));
            }
            flat.extend_from_slice(&e.sets);
        }
        Ok(HomPoset::from_flat(source_labels, target_labels, flat, base.map(|b| b.sets.as_slice())))
    }

    pub(crate) fn from_flat(
        source_labels: Vec<String>,
        target_labels: Vec<String>,
        mut flat: Vec<u64>,
        base: Option<&[u64]>,
    ) -> HomPoset {
        let width = source_labels.len();
        if width > 0 {
            let mut rows: Vec<&[u64]> = flat.chunks(width).collect();
            rows.sort_unstable();
            rows.dedup();
            flat = rows.concat();
        } else {
            // Maps out of the empty graph: at most the empty function.
            flat.clear();
        }
        let dense = if width > 0 { DenseIndex::build(&flat, width, target_labels.len()) } else { None };
        let mut p = HomPoset {
            source_labels,
            target_labels,
            width,
            masks: flat,
            dense,
            basepoint: None,
        };
        p.basepoint = base.and_then(|b| p.index_of(b));
        p
    }

    pub fn len(&self) -> usize {
        if self.width == 0 {
            0
        } else {
            self.masks.len() / self.width
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn source_labels(&self) -> &[String] {
        &self.source_labels
    }

    pub fn target_labels(&self) -> &[String] {
        &self.target_labels
    }

    /// Number of source vertices.
    pub fn width(&self) -> usize {
        self.width
    }

    pub fn sets(&self, i: usize) -> &[u64] {
        &self.masks[i * self.width..(i + 1) * self.width]
    }

    pub fn element(&self, i: usize) -> Multihom {
        Multihom::new(self.sets(i).to_vec())
    }

    pub fn elements(&self) -> impl Iterator<Item = &[u64]> + '_ {
        self.masks.chunks(self.width.max(1))
    }

    pub fn label(&self, i: usize) -> String {
        format_sets(self.sets(i), &self.target_labels)
    }

    /// Index of the distinguished element (constant at the target basepoint).
    pub fn basepoint(&self) -> Option<usize> {
        self.basepoint
    }

    pub fn index_of(&self, sets: &[u64]) -> Option<usize> {
        if sets.len() != self.width {
            return None;
        }
        if let Some(d) = &self.dense {
            return d.find(sets);
        }
        let (mut lo, mut hi) = (0, self.len());
        while lo < hi {
            let mid = (lo + hi) / 2;
            match self.sets(mid).cmp(sets) {
                Ordering::Less => lo = mid + 1,
                Ordering::Greater => hi = mid,
                Ordering::Equal => return Some(mid),
            }
        }
        None
    }

    pub fn contains(&self, m: &Multihom) -> bool {
        self.index_of(&m.sets).is_some()
    }

    /// `i ≤ j`: every set of `i` is contained in the matching set of `j`.
    pub fn le(&self, i: usize, j: usize) -> bool {
        subsets(self.sets(i), self.sets(j))
    }

    pub fn dim(&self, i: usize) -> usize {
        dim(self.sets(i))
    }

    pub fn is_atom(&self, i: usize) -> bool {
        self.sets(i).iter().all(|s| s.count_ones() == 1)
    }

    pub fn atoms(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.is_atom(i)).collect()
    }

    /// Elements obtained from `i` by removing one target from one vertex set.
    /// For families closed under faces these are exactly the lower covers.
    pub fn lower_covers(&self, i: usize) -> Vec<usize> {
        let mut out = Vec::new();
        self.for_each_single_change(i, |s| if s.count_ones() < 2 { 0 } else { s }, |k| out.push(k));
        out
    }

    /// Elements obtained from `i` by adding one target to one vertex set.
    pub fn upper_covers(&self, i: usize) -> Vec<usize> {
        let mut out = Vec::new();
        self.for_each_upper_cover(i, |k| out.push(k));
        out
    }

    /// Same as [`HomPoset::upper_covers`] without collecting.
    pub fn for_each_upper_cover(&self, i: usize, visit: impl FnMut(usize)) {
        let all = if self.target_labels.len() == 64 {
            u64::MAX
        } else {
            (1u64 << self.target_labels.len()) - 1
        };
        self.for_each_single_change(i, |s| all & !s, visit)
    }

    /// Elements differing from `i` by toggling one bit of `flips(s)` in one set `s`.
    fn for_each_single_change(&self, i: usize, flips: impl Fn(u64) -> u64, mut visit: impl FnMut(usize)) {
        let sets = self.sets(i);
        if let Some(d) = &self.dense {
            let rank = |v: usize| d.values[v].binary_search(&sets[v]).expect("own value");
            let base: usize = (0..self.width).map(|v| rank(v) * d.strides[v]).sum();
            for v in 0..self.width {
                let r = rank(v);
                let rest = base - r * d.strides[v];
                for t in mask_ones(flips(sets[v])) {
                    let r2 = d.flips[v][r * d.bits + t];
                    if r2 != u32::MAX {
                        let k = d.table[rest + r2 as usize * d.strides[v]];
                        if k != u32::MAX {
                            visit(k as usize);
                        }
                    }
                }
            }
            return;
        }
        let mut buf = sets.to_vec();
        for v in 0..self.width {
            let s = buf[v];
            for t in mask_ones(flips(s)) {
                buf[v] = s ^ (1 << t);
                if let Some(k) = self.index_of(&buf) {
                    visit(k);
                }
            }
            buf[v] = s;
        }
    }

    /// Number of edges of the Hasse diagram of a family closed under faces.
    pub fn cover_count(&self) -> usize {
        (0..self.len()).map(|i| self.lower_covers(i).len()).sum()
    }

    /// Every face of every element is present, so the cell model applies.
    pub fn is_down_closed(&self) -> bool {
        (0..self.len()).all(|i| {
            let expected: usize = self
                .sets(i)
                .iter()
                .map(|s| if s.count_ones() >= 2 { s.count_ones() as usize } else { 0 })
                .sum();
            self.lower_covers(i).len() == expected
        })
    }

    /// Maximal elements of a family closed under faces.
    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.upper_covers(i).is_empty()).collect()
    }

    /// Covering pairs `(i, j)`, `i ⋖ j`, computed from the order relation
    /// itself, so also valid for families that are not closed under faces.
    /// Quadratic in the size; fails beyond `limit` elements.
    pub fn hasse_diagram(&self, limit: usize) -> Result<Vec<(usize, usize)>> {
        if self.len() > limit {
            return Err(Error::TooLarge(format!("poset has {} elements, limit {limit}", self.len())));
        }
        let mut pairs = Vec::new();
        for i in 0..self.len() {
            let above: Vec<usize> = (0..self.len()).filter(|&j| j != i && self.le(i, j)).collect();
            for &j in &above {
                if !above.iter().any(|&k| k != j && self.le(k, j)) {
                    pairs.push((i, j));
                }
            }
        }
        Ok(pairs)
    }

    /// Chains of the poset as a simplicial complex on the elements. Fails with
    /// [`Error::TooLarge`] beyond `limit` elements or maximal chains.
    pub fn order_complex(&self, limit: usize) -> Result<SimplicialComplex> {
        let mut up = vec![Vec::new(); self.len()];
        let mut has_lower = vec![false; self.len()];
        for (i, j) in self.hasse_diagram(limit)? {
            up[i].push(j);
            has_lower[j] = true;
        }
        let mut facets = Vec::new();
        let mut chain = Vec::new();
        fn extend(i: usize, up: &[Vec<usize>], chain: &mut Vec<usize>, facets: &mut Vec<Vec<usize>>, limit: usize) -> bool {
            chain.push(i);
            let ok = if up[i].is_empty() {
                let mut f = chain.clone();
                f.sort_unstable();
                facets.push(f);
                facets.len() <= limit
            } else {
                up[i].iter().all(|&j| extend(j, up, chain, facets, limit))
            };
            chain.pop();
            ok
        }
        for i in (0..self.len()).filter(|&i| !has_lower[i]) {
            if !extend(i, &up, &mut chain, &mut facets, limit) {
                return Err(Error::TooLarge(format!("order complex has more than {limit} maximal chains")));
            }
        }
        let labels = (0..self.len()).map(|i| self.label(i)).collect();
        SimplicialComplex::new(labels, facets)
    }
}

impl fmt::Debug for HomPoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("HomPoset")
            .field("elements", &self.len())
            .field("basepoint", &self.basepoint)
            .finish()
    }
}
