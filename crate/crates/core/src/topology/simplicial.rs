//! Finite abstract simplicial complexes stored by their facets.

use std::collections::{HashMap, HashSet};

use serde::Serialize;

use super::collapse::FacePoset;
use super::group::{AbelianInvariants, GroupPresentation};
use super::two_complex::TwoComplex;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::unionfind::UnionFind;

type Bits = Vec<u64>;

fn bits_of(set: &[usize], words: usize) -> Bits {
    let mut b = vec![0u64; words];
    for &v in set {
        b[v / 64] |= 1 << (v % 64);
    }
    b
}

fn ones(b: &[u64]) -> impl Iterator<Item = usize> + '_ {
    crate::bits::iter_ones(b)
}

fn subset(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x & !y == 0)
}

fn has(b: &[u64], v: usize) -> bool {
    b[v / 64] >> (v % 64) & 1 == 1
}

fn popcount(b: &[u64]) -> u32 {
    b.iter().map(|w| w.count_ones()).sum()
}

/// Keep only inclusion-maximal sets, sorted.
fn maximal(mut sets: Vec<Bits>) -> Vec<Bits> {
    sets.sort_by_key(|s| std::cmp::Reverse(popcount(s)));
    sets.dedup();
    let mut kept: Vec<Bits> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|k| subset(&s, k)) {
            kept.push(s);
        }
    }
    kept.sort();
    kept
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SimplicialComplex {
    #[serde(skip)]
    labels: Vec<String>,
    /// Sorted vertex lists, no facet contained in another.
    facets: Vec<Vec<usize>>,
}

impl SimplicialComplex {
    /// Complex generated by `facets`. Non-maximal sets are discarded and every
    /// vertex that lies in no given set becomes an isolated point.
    pub fn new(labels: Vec<String>, facets: Vec<Vec<usize>>) -> Result<SimplicialComplex> {
        let n = labels.len();
        let words = n.div_ceil(64).max(1);
        let mut covered = vec![false; n];
        let mut sets = Vec::with_capacity(facets.len() + n);
        for f in &facets {
            for &v in f {
                if v >= n {
                    return Err(Error::VertexOutOfRange { index: v, count: n });
                }
                covered[v] = true;
            }
            if !f.is_empty() {
                sets.push(bits_of(f, words));
            }
        }
        sets.extend((0..n).filter(|&v| !covered[v]).map(|v| bits_of(&[v], words)));
        Ok(SimplicialComplex::from_bits(labels, maximal(sets)))
    }

    fn from_bits(labels: Vec<String>, sets: Vec<Bits>) -> SimplicialComplex {
        let mut facets: Vec<Vec<usize>> = sets.iter().map(|s| ones(s).collect()).collect();
        facets.sort();
        SimplicialComplex { labels, facets }
    }

    /// Complex whose simplices are the sets of pairwise adjacent looped
    /// vertices of `g`. Its vertices are the looped vertices in index order.
    pub fn clique_complex(g: &Graph) -> SimplicialComplex {
        let looped: Vec<usize> = (0..g.vertex_count()).filter(|&v| g.is_looped(v)).collect();
        let n = looped.len();
        let words = n.div_ceil(64).max(1);
        let nbr: Vec<Bits> = looped
            .iter()
            .enumerate()
            .map(|(i, &v)| {
                let mut b = bits_of(
                    &looped.iter().enumerate().filter(|&(_, &w)| g.is_adjacent(v, w)).map(|(j, _)| j).collect::<Vec<_>>(),
                    words,
                );
                b[i / 64] &= !(1 << (i % 64));
                b
            })
            .collect();
        let mut cliques = Vec::new();
        let all = bits_of(&(0..n).collect::<Vec<_>>(), words);
        bron_kerbosch(&nbr, vec![0; words], all, vec![0; words], &mut cliques);
        let labels = looped.iter().map(|&v| g.label(v).to_string()).collect();
        SimplicialComplex::from_bits(labels, cliques)
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn facets(&self) -> &[Vec<usize>] {
        &self.facets
    }

    /// `None` for the empty complex.
    pub fn dimension(&self) -> Option<usize> {
        self.facets.iter().map(|f| f.len() - 1).max()
    }

    /// All nonempty faces, or `None` if there are more than `limit`.
    pub fn faces(&self, limit: usize) -> Option<Vec<Vec<usize>>> {
        let mut seen: HashSet<Vec<usize>> = HashSet::new();
        for f in &self.facets {
            if f.len() >= 64 {
                return None;
            }
            for mask in 1u64..(1 << f.len()) {
                let face: Vec<usize> = crate::bits::mask_ones(mask).map(|i| f[i]).collect();
                seen.insert(face);
                if seen.len() > limit {
                    return None;
                }
            }
        }
        let mut out: Vec<_> = seen.into_iter().collect();
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        Some(out)
    }

    /// Face counts by dimension, or `None` beyond `limit` faces.
    pub fn f_vector(&self, limit: usize) -> Option<Vec<u64>> {
        let faces = self.faces(limit)?;
        let mut f = vec![0u64; self.dimension().map_or(0, |d| d + 1)];
        for face in faces {
            f[face.len() - 1] += 1;
        }
        Some(f)
    }

    /// Euler characteristic by the link recursion
    /// `χ(K) = χ(K \ v) + 1 − χ(lk v)`, with cones short-circuited to 1.
    pub fn euler_characteristic(&self) -> i64 {
        let words = self.labels.len().div_ceil(64).max(1);
        let sets = self.facets.iter().map(|f| bits_of(f, words)).collect();
        euler_rec(sets, &mut HashMap::new())
    }

    /// Component label per vertex and the number of components.
    pub fn components(&self) -> (Vec<usize>, usize) {
        let mut uf = UnionFind::new(self.labels.len());
        for f in &self.facets {
            for w in f.windows(2) {
                uf.union(w[0], w[1]);
            }
        }
        uf.labels()
    }

    /// Vertices, edges and triangles as a cell complex. Edges are oriented
    /// from the smaller vertex; a triangle `a<b<c` has boundary `ab · bc · (ac)⁻¹`.
    pub fn two_skeleton(&self) -> TwoComplex {
        let mut edge_id: HashMap<(usize, usize), usize> = HashMap::new();
        let mut edges = Vec::new();
        let mut tris: HashSet<(usize, usize, usize)> = HashSet::new();
        for f in &self.facets {
            for (i, &a) in f.iter().enumerate() {
                for (j, &b) in f.iter().enumerate().skip(i + 1) {
                    edge_id.entry((a, b)).or_insert_with(|| {
                        edges.push((a, b));
                        edges.len() - 1
                    });
                    for &c in &f[j + 1..] {
                        tris.insert((a, b, c));
                    }
                }
            }
        }
        let mut tris: Vec<_> = tris.into_iter().collect();
        tris.sort_unstable();
        let faces = tris
            .into_iter()
            .map(|(a, b, c)| vec![(edge_id[&(a, b)], true), (edge_id[&(b, c)], true), (edge_id[&(a, c)], false)])
            .collect();
        TwoComplex::new_unchecked(self.labels.len(), edges, faces)
    }

    pub fn pi1_presentation(&self, base: usize) -> Result<GroupPresentation> {
        self.two_skeleton().pi1_presentation(base)
    }

    pub fn h1(&self) -> AbelianInvariants {
        self.two_skeleton().h1()
    }

    /// Face poset for collapse search, or `None` beyond `limit` faces.
    pub fn face_poset(&self, limit: usize) -> Option<FacePoset> {
        let faces = self.faces(limit)?;
        let index: HashMap<&[usize], usize> = faces.iter().enumerate().map(|(i, f)| (f.as_slice(), i)).collect();
        let down = faces
            .iter()
            .map(|f| {
                if f.len() == 1 {
                    return Vec::new();
                }
                (0..f.len())
                    .map(|k| {
                        let mut g = f.clone();
                        g.remove(k);
                        index[g.as_slice()]
                    })
                    .collect()
            })
            .collect();
        let dims = faces.iter().map(|f| f.len() - 1).collect();
        Some(FacePoset::new(dims, down))
    }
}

fn bron_kerbosch(nbr: &[Bits], r: Bits, mut p: Bits, mut x: Bits, out: &mut Vec<Bits>) {
    if p.iter().all(|&w| w == 0) {
        if x.iter().all(|&w| w == 0) && r.iter().any(|&w| w != 0) {
            out.push(r);
        }
        return;
    }
    let pivot = ones(&p)
        .chain(ones(&x))
        .max_by_key(|&u| p.iter().zip(&nbr[u]).map(|(a, b)| (a & b).count_ones()).sum::<u32>())
        .expect("p is nonempty");
    let candidates: Vec<usize> = ones(&p).filter(|&v| !has(&nbr[pivot], v)).collect();
    for v in candidates {
        let mut r2 = r.clone();
        r2[v / 64] |= 1 << (v % 64);
        let p2 = p.iter().zip(&nbr[v]).map(|(a, b)| a & b).collect();
        let x2 = x.iter().zip(&nbr[v]).map(|(a, b)| a & b).collect();
        bron_kerbosch(nbr, r2, p2, x2, out);
        p[v / 64] &= !(1 << (v % 64));
        x[v / 64] |= 1 << (v % 64);
    }
}

fn euler_rec(facets: Vec<Bits>, memo: &mut HashMap<Vec<Bits>, i64>) -> i64 {
    match facets.len() {
        0 => return 0,
        1 => return 1,
        _ => {}
    }
    let common: Bits = facets[1..]
        .iter()
        .fold(facets[0].clone(), |acc, f| acc.iter().zip(f).map(|(a, b)| a & b).collect());
    if common.iter().any(|&w| w != 0) {
        return 1;
    }
    if let Some(&v) = memo.get(&facets) {
        return v;
    }
    let mut freq: HashMap<usize, usize> = HashMap::new();
    for f in &facets {
        for v in ones(f) {
            *freq.entry(v).or_default() += 1;
        }
    }
    let v = freq.iter().max_by_key(|&(&v, &c)| (c, std::cmp::Reverse(v))).map(|(&v, _)| v).unwrap();
    let (with, without): (Vec<Bits>, Vec<Bits>) = facets.iter().cloned().partition(|f| has(f, v));
    let link: Vec<Bits> = with
        .iter()
        .map(|f| {
            let mut g = f.clone();
            g[v / 64] &= !(1 << (v % 64));
            g
        })
        .filter(|g| g.iter().any(|&w| w != 0))
        .collect();
    let mut deletion = without.clone();
    deletion.extend(link.iter().filter(|g| !without.iter().any(|k| subset(g, k))).cloned());
    deletion.sort();
    let mut link = link;
    link.sort();
    let chi = euler_rec(deletion, memo) + 1 - euler_rec(link, memo);
    memo.insert(facets, chi);
    chi
}
