//! Smith normal form of sparse integer matrices.
//!
//! A first pass eliminates unit pivots in checked `i64` arithmetic, choosing
//! pivots in short rows and sparse columns to limit fill-in. Whatever is left
//! is diagonalized densely over arbitrary-precision integers.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Rank and nontrivial invariant factors (each > 1, each dividing the next).
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Snf {
    pub rank: usize,
    pub torsion: Vec<BigInt>,
}

type Row = Vec<(usize, i64)>;

fn normalize(mut row: Row) -> Row {
    row.sort_unstable_by_key(|e| e.0);
    let mut out: Row = Vec::with_capacity(row.len());
    for (c, a) in row {
        match out.last_mut() {
            Some(last) if last.0 == c => last.1 += a,
            _ => out.push((c, a)),
        }
    }
    out.retain(|e| e.1 != 0);
    out
}

/// `target + k * pivot`, or `None` on overflow.
fn axpy(target: &Row, k: i64, pivot: &Row) -> Option<Row> {
    let mut out = Vec::with_capacity(target.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < target.len() || j < pivot.len() {
        let ci = target.get(i).map_or(usize::MAX, |e| e.0);
        let cj = pivot.get(j).map_or(usize::MAX, |e| e.0);
        if ci < cj {
            out.push(target[i]);
            i += 1;
        } else {
            let add = k.checked_mul(pivot[j].1)?;
            let v = if ci == cj {
                i += 1;
                target[i - 1].1.checked_add(add)?
            } else {
                add
            };
            if v != 0 {
                out.push((cj, v));
            }
            j += 1;
        }
    }
    Some(out)
}

pub(crate) fn smith(cols: usize, rows: Vec<Row>) -> Snf {
    smith_with(cols, rows, true)
}

pub(crate) fn smith_with(cols: usize, rows: Vec<Row>, sparse_pass: bool) -> Snf {
    let mut rows: Vec<Row> = rows.into_iter().map(normalize).collect();
    let mut rank = 0;
    if sparse_pass {
        rank = eliminate_units(cols, &mut rows);
    }
    let rest = dense_diagonal(cols, &rows);
    rank += rest.len();
    Snf {
        rank,
        torsion: divisibility_chain(rest).into_iter().filter(|d| !d.is_one()).collect(),
    }
}

/// Removes unit pivots in place, returning how many were eliminated.
fn eliminate_units(cols: usize, rows: &mut [Row]) -> usize {
    let mut col_rows: Vec<Vec<usize>> = vec![Vec::new(); cols];
    let mut col_count = vec![0usize; cols];
    let mut heap = BinaryHeap::new();
    for (r, row) in rows.iter().enumerate() {
        for &(c, _) in row {
            col_rows[c].push(r);
            col_count[c] += 1;
        }
        heap.push(Reverse((row.len(), r)));
    }
    let mut rank = 0;
    while let Some(Reverse((len, r))) = heap.pop() {
        if rows[r].len() != len || len == 0 {
            continue;
        }
        let Some(&(c, a)) = rows[r]
            .iter()
            .filter(|e| e.1.abs() == 1)
            .min_by_key(|e| (col_count[e.0], e.0))
        else {
            continue;
        };
        let pivot = std::mem::take(&mut rows[r]);
        let mut others = std::mem::take(&mut col_rows[c]);
        others.sort_unstable();
        others.dedup();
        let mut updates = Vec::new();
        for &r2 in &others {
            if r2 == r {
                continue;
            }
            let Ok(pos) = rows[r2].binary_search_by_key(&c, |e| e.0) else {
                continue;
            };
            let b = rows[r2][pos].1;
            match axpy(&rows[r2], -b * a, &pivot) {
                Some(new_row) => updates.push((r2, new_row)),
                None => {
                    // Leave everything untouched for the exact dense phase.
                    rows[r] = pivot;
                    col_rows[c] = others;
                    return rank;
                }
            }
        }
        for (r2, new_row) in updates {
            for &(cc, _) in &rows[r2] {
                col_count[cc] -= 1;
            }
            for &(cc, _) in &new_row {
                col_count[cc] += 1;
                col_rows[cc].push(r2);
            }
            heap.push(Reverse((new_row.len(), r2)));
            rows[r2] = new_row;
        }
        for &(cc, _) in &pivot {
            col_count[cc] -= 1;
        }
        rank += 1;
    }
    rank
}

/// Nonzero diagonal entries (absolute values) of a diagonalization.
fn dense_diagonal(cols: usize, rows: &[Row]) -> Vec<BigInt> {
    let live: Vec<&Row> = rows.iter().filter(|r| !r.is_empty()).collect();
    if live.is_empty() {
        return Vec::new();
    }
    let mut col_index = vec![usize::MAX; cols];
    let mut n = 0;
    for row in &live {
        for &(c, _) in row.iter() {
            if col_index[c] == usize::MAX {
                col_index[c] = n;
                n += 1;
            }
        }
    }
    let m = live.len();
    let mut a = vec![vec![BigInt::zero(); n]; m];
    for (i, row) in live.iter().enumerate() {
        for &(c, v) in row.iter() {
            a[i][col_index[c]] = BigInt::from(v);
        }
    }
    let mut diag = Vec::new();
    for t in 0..m.min(n) {
        let mut best: Option<(usize, usize)> = None;
        for (i, row) in a.iter().enumerate().skip(t) {
            for (j, v) in row.iter().enumerate().skip(t) {
                if !v.is_zero() && best.is_none_or(|(bi, bj)| v.abs() < a[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else {
            break;
        };
        a.swap(t, bi);
        for row in a.iter_mut() {
            row.swap(t, bj);
        }
        loop {
            let p = a[t][t].clone();
            for i in t + 1..m {
                if !a[i][t].is_zero() {
                    let q = a[i][t].div_floor(&p);
                    for j in t..n {
                        let d = &q * &a[t][j];
                        a[i][j] -= d;
                    }
                }
            }
            for j in t + 1..n {
                if !a[t][j].is_zero() {
                    let q = a[t][j].div_floor(&p);
                    for row in a.iter_mut().skip(t) {
                        let d = &q * &row[t];
                        row[j] -= d;
                    }
                }
            }
            // Any remainder is smaller than the pivot; move it in and repeat.
            let in_col = (t + 1..m).filter(|&i| !a[i][t].is_zero()).min_by_key(|&i| a[i][t].abs());
            let in_row = (t + 1..n).filter(|&j| !a[t][j].is_zero()).min_by_key(|&j| a[t][j].abs());
            match (in_col, in_row) {
                (None, None) => break,
                (Some(i), _) => a.swap(t, i),
                (None, Some(j)) => {
                    for row in a.iter_mut() {
                        row.swap(t, j);
                    }
                }
            }
        }
        diag.push(a[t][t].abs());
    }
    diag
}

fn divisibility_chain(mut d: Vec<BigInt>) -> Vec<BigInt> {
    for i in 0..d.len() {
        for j in i + 1..d.len() {
            let g = d[i].gcd(&d[j]);
            let l = &d[i] / &g * &d[j];
            d[i] = g;
            d[j] = l;
        }
    }
    d
}

pub(crate) fn to_u64(v: &BigInt) -> u64 {
    v.to_u64().expect("invariant factor exceeds u64")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn dense(m: &[&[i64]]) -> (usize, Vec<Row>) {
        let cols = m.first().map_or(0, |r| r.len());
        let rows = m
            .iter()
            .map(|r| r.iter().enumerate().filter(|e| *e.1 != 0).map(|(j, &v)| (j, v)).collect())
            .collect();
        (cols, rows)
    }

    fn torsion(s: &Snf) -> Vec<u64> {
        s.torsion.iter().map(to_u64).collect()
    }

    #[test]
    fn small_cases() {
        let (c, r) = dense(&[&[2, 0], &[0, 3]]);
        let s = smith(c, r);
        assert_eq!((s.rank, torsion(&s)), (2, vec![6]));
        let (c, r) = dense(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]);
        let s = smith(c, r);
        assert_eq!((s.rank, torsion(&s)), (3, vec![2, 6, 12]));
        let (c, r) = dense(&[&[1, 1], &[1, 1]]);
        assert_eq!(smith(c, r), Snf { rank: 1, torsion: vec![] });
        assert_eq!(smith(3, vec![]), Snf { rank: 0, torsion: vec![] });
    }

    #[test]
    fn overflow_falls_back_to_exact_arithmetic() {
        let big = i64::MAX / 2;
        let rows = vec![vec![(0, 1), (1, big)], vec![(0, big), (1, 1)], vec![(0, 3), (1, big)]];
        assert_eq!(smith(2, rows.clone()), smith_with(2, rows, false));
    }

    proptest! {
        // The sparse pass must not change the answer of the dense algorithm.
        #[test]
        fn sparse_pass_agrees_with_dense(
            m in prop::collection::vec(prop::collection::vec(-3i64..=3, 5), 0..7)
        ) {
            let rows: Vec<Row> = m.iter()
                .map(|r| r.iter().enumerate().filter(|e| *e.1 != 0).map(|(j, &v)| (j, v)).collect())
                .collect();
            let a = smith_with(5, rows.clone(), true);
            let b = smith_with(5, rows, false);
            prop_assert_eq!(&a, &b);
            for w in a.torsion.windows(2) {
                prop_assert!((&w[1] % &w[0]).is_zero());
            }
        }
    }
}
