//! Concatenation and inversion of loops, and the explicit homotopies between
//! concatenations.

use super::{paths_adjacent, TruncatedPath};
use crate::error::{Error, Result};
use crate::graph::named::square_y;
use crate::graph::{Graph, PointedGraph};

fn check_loop(f: &TruncatedPath) -> Result<()> {
    if f.word()[f.bound()] != f.word()[0] {
        return Err(Error::InvalidPath(format!("{f:?} does not return to its start")));
    }
    Ok(())
}

fn fits(needed: usize, bound: usize) -> Result<()> {
    if needed > bound {
        return Err(Error::WindowExceeded { needed, bound });
    }
    Ok(())
}

/// `f ·_n g`: run `g` up to index `n`, then `f`. `n` must be at least the
/// stabilization index of `g`.
pub fn loop_concat_at(f: &TruncatedPath, g: &TruncatedPath, n: usize, bound: usize) -> Result<TruncatedPath> {
    check_loop(f)?;
    check_loop(g)?;
    if f.word()[0] != g.word()[0] {
        return Err(Error::InvalidPath("loops at different basepoints".into()));
    }
    if n < g.stabilization_index() {
        return Err(Error::InvalidPath(format!(
            "split index {n} is below the stabilization index {} of the first loop",
            g.stabilization_index()
        )));
    }
    fits(n + f.stabilization_index(), bound)?;
    let word = (0..=bound).map(|i| if i < n { g.at(i) } else { f.at(i - n) }).collect();
    Ok(TruncatedPath::from_word(word))
}

/// `[f]·[g]` represented by `f ·_{N_g} g`.
pub fn loop_concat(f: &TruncatedPath, g: &TruncatedPath, bound: usize) -> Result<TruncatedPath> {
    loop_concat_at(f, g, g.stabilization_index(), bound)
}

/// `f^{-1}(i) = f(N_f - i)` up to `N_f`, then the basepoint.
pub fn loop_inverse(f: &TruncatedPath, bound: usize) -> Result<TruncatedPath> {
    check_loop(f)?;
    let nf = f.stabilization_index();
    fits(nf, bound)?;
    let word = (0..=bound).map(|i| if i <= nf { f.at(nf - i) } else { f.word()[0] }).collect();
    Ok(TruncatedPath::from_word(word))
}

pub fn loop_identity(g: &PointedGraph, bound: usize) -> TruncatedPath {
    TruncatedPath::from_word(vec![g.basepoint(); bound + 1])
}

/// The rows `h_j`, `j = 0..=N_f + 1`, moving `f ·_{n+1} g` to `f ·_n g`:
/// `h_j(i)` is `g(i)` below `n`, `f(i - n)` on `[n, n + j)` and `f(i - n - 1)`
/// from `n + j` on.
pub fn shift_homotopy(f: &TruncatedPath, g: &TruncatedPath, n: usize, bound: usize) -> Result<Vec<TruncatedPath>> {
    // Validates both loops and the split index.
    loop_concat_at(f, g, n + 1, bound)?;
    let nf = f.stabilization_index();
    let x = f.word()[0];
    let rows = (0..=nf + 1)
        .map(|j| {
            let word = (0..=bound)
                .map(|i| {
                    if i < n {
                        g.at(i)
                    } else if i < n + j {
                        f.at(i - n)
                    } else if i == n {
                        x
                    } else {
                        f.at(i - n - 1)
                    }
                })
                .collect();
            TruncatedPath::from_word(word)
        })
        .collect();
    Ok(rows)
}

/// Rows contracting `f^{-1} ·_{N_f+1} f` to the constant loop: row `r`
/// replaces positions `N_f - r + 1 ..= N_f + r` by `f(N_f - r)`.
pub fn inverse_contraction(f: &TruncatedPath, bound: usize) -> Result<Vec<TruncatedPath>> {
    let nf = f.stabilization_index();
    let start = loop_concat_at(&loop_inverse(f, bound)?, f, nf + 1, bound)?;
    let rows = (0..=nf)
        .map(|r| {
            let mut w = start.word().to_vec();
            for slot in &mut w[nf + 1 - r..=nf + r] {
                *slot = f.at(nf - r);
            }
            TruncatedPath::from_word(w)
        })
        .collect();
    Ok(rows)
}

/// Every row is a looped vertex and consecutive rows are adjacent.
pub fn rows_adjacent(g: &Graph, rows: &[TruncatedPath]) -> bool {
    rows.iter().all(|r| paths_adjacent(g, r.word(), r.word()))
        && rows.windows(2).all(|p| paths_adjacent(g, p[0].word(), p[1].word()))
}

/// The contraction of `(y,1,2,3,y)^{-1}·(y,1,2,3,y)` in the reflexive square
/// at bound 10.
pub fn contraction_homotopy_example() -> Result<(PointedGraph, Vec<TruncatedPath>)> {
    let g = square_y(true);
    let f = TruncatedPath::from_labels(&g, &["y", "1", "2", "3", "y"])?;
    let rows = inverse_contraction(&f, 10)?;
    Ok((g, rows))
}
