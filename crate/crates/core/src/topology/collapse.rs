//! Elementary collapses on face posets of regular cell complexes.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use serde::Serialize;

/// Cells with their dimensions and codimension-one incidences.
#[derive(Clone, Debug)]
pub struct FacePoset {
    dims: Vec<usize>,
    down: Vec<Vec<usize>>,
    up: Vec<Vec<usize>>,
}

/// Sequence of `(free face, unique coface)` removals ending at `survivor`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CollapseCertificate {
    pub steps: Vec<(usize, usize)>,
    pub survivor: usize,
}

impl FacePoset {
    /// `down[c]` lists the facets (codimension-one faces) of cell `c`.
    pub fn new(dims: Vec<usize>, down: Vec<Vec<usize>>) -> FacePoset {
        assert_eq!(dims.len(), down.len());
        let mut up = vec![Vec::new(); dims.len()];
        for (c, ds) in down.iter().enumerate() {
            for &d in ds {
                debug_assert_eq!(dims[d] + 1, dims[c]);
                up[d].push(c);
            }
        }
        FacePoset { dims, down, up }
    }

    pub fn len(&self) -> usize {
        self.dims.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dims.is_empty()
    }

    pub fn dim(&self, c: usize) -> usize {
        self.dims[c]
    }

    pub fn down(&self, c: usize) -> &[usize] {
        &self.down[c]
    }

    pub fn up(&self, c: usize) -> &[usize] {
        &self.up[c]
    }

    /// The unique live coface of `t`, if `t` is a free face.
    fn free_pair(&self, t: usize, alive: &[bool]) -> Option<usize> {
        if !alive[t] {
            return None;
        }
        let mut live_up = self.up[t].iter().filter(|&&s| alive[s]);
        let s = *live_up.next()?;
        if live_up.next().is_some() || self.up[s].iter().any(|&r| alive[r]) {
            return None;
        }
        Some(s)
    }

    /// Greedy collapse, always removing a free face of least dimension (ties by
    /// index). Returns a certificate if exactly one vertex survives.
    pub fn collapse_to_point(&self) -> Option<CollapseCertificate> {
        let mut alive = vec![true; self.len()];
        let mut heap: BinaryHeap<Reverse<(usize, usize)>> =
            (0..self.len()).map(|c| Reverse((self.dims[c], c))).collect();
        let mut steps = Vec::new();
        while let Some(Reverse((_, t))) = heap.pop() {
            let Some(s) = self.free_pair(t, &alive) else {
                continue;
            };
            alive[t] = false;
            alive[s] = false;
            steps.push((t, s));
            let mut touched: Vec<usize> = self.down[t].clone();
            for &d in &self.down[s] {
                touched.push(d);
                touched.extend_from_slice(&self.down[d]);
            }
            for c in touched {
                if self.free_pair(c, &alive).is_some() {
                    heap.push(Reverse((self.dims[c], c)));
                }
            }
        }
        let mut live = (0..self.len()).filter(|&c| alive[c]);
        match (live.next(), live.next()) {
            (Some(v), None) if self.dims[v] == 0 => Some(CollapseCertificate { steps, survivor: v }),
            _ => None,
        }
    }

    /// Replays `cert`, checking every step is an elementary collapse.
    pub fn verify(&self, cert: &CollapseCertificate) -> bool {
        let mut alive = vec![true; self.len()];
        for &(t, s) in &cert.steps {
            if t >= self.len() || s >= self.len() || self.free_pair(t, &alive) != Some(s) {
                return false;
            }
            alive[t] = false;
            alive[s] = false;
        }
        let live: Vec<usize> = (0..self.len()).filter(|&c| alive[c]).collect();
        live == [cert.survivor] && self.dims[cert.survivor] == 0
    }
}
