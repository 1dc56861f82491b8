//! Finitely presented groups and their abelianizations.

use std::collections::HashSet;
use std::fmt;

use serde::Serialize;

use super::snf::{smith, to_u64};
use crate::error::{Error, Result};

/// A letter is `±(g + 1)` for generator `g`; negative means the inverse.
pub type Word = Vec<i32>;

/// Finitely generated abelian group `Z^free_rank ⊕ Z/t_1 ⊕ … ⊕ Z/t_k`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct AbelianInvariants {
    #[serde(rename = "rank")]
    pub free_rank: usize,
    /// Each entry is > 1 and divides the next.
    pub torsion: Vec<u64>,
}

impl AbelianInvariants {
    pub fn free(rank: usize) -> AbelianInvariants {
        AbelianInvariants { free_rank: rank, torsion: Vec::new() }
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Abelian group presented by the rows of an integer matrix over `generators` columns.
    pub(crate) fn from_relations(generators: usize, rows: Vec<Vec<(usize, i64)>>) -> AbelianInvariants {
        let s = smith(generators, rows);
        AbelianInvariants {
            free_rank: generators - s.rank,
            torsion: s.torsion.iter().map(to_u64).collect(),
        }
    }
}

impl fmt::Display for AbelianInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupPresentation {
    generator_count: usize,
    relators: Vec<Word>,
}

fn inverse(w: &[i32]) -> Word {
    w.iter().rev().map(|&l| -l).collect()
}

fn free_reduce(w: &[i32]) -> Word {
    let mut out: Word = Vec::with_capacity(w.len());
    for &l in w {
        if out.last() == Some(&-l) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

fn cyclic_reduce(w: &[i32]) -> Word {
    let mut w = free_reduce(w);
    let (mut i, mut j) = (0, w.len());
    while j - i >= 2 && w[i] == -w[j - 1] {
        i += 1;
        j -= 1;
    }
    w.truncate(j);
    w.drain(..i);
    w
}

/// Least rotation of `w` or its inverse, so conjugate relators compare equal.
fn canonical(w: &[i32]) -> Word {
    let mut best: Option<Word> = None;
    for cand in [w.to_vec(), inverse(w)] {
        for k in 0..cand.len().max(1) {
            let mut r = cand[k..].to_vec();
            r.extend_from_slice(&cand[..k]);
            if best.as_ref().is_none_or(|b| r < *b) {
                best = Some(r);
            }
        }
    }
    best.unwrap_or_default()
}

impl GroupPresentation {
    pub fn new(generator_count: usize, relators: Vec<Word>) -> Result<GroupPresentation> {
        for r in &relators {
            if let Some(&bad) = r.iter().find(|&&l| l == 0 || l.unsigned_abs() as usize > generator_count) {
                return Err(Error::InvalidPath(format!("relator letter {bad} outside 1..={generator_count}")));
            }
        }
        Ok(GroupPresentation { generator_count, relators })
    }

    pub fn generator_count(&self) -> usize {
        self.generator_count
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    /// Abelianization via the Smith form of the relator exponent matrix.
    pub fn abelianize(&self) -> AbelianInvariants {
        let rows = self
            .relators
            .iter()
            .map(|r| r.iter().map(|&l| (l.unsigned_abs() as usize - 1, l.signum() as i64)).collect())
            .collect();
        AbelianInvariants::from_relations(self.generator_count, rows)
    }

    /// Tietze simplification: reduce relators, drop duplicates, and eliminate any
    /// generator that occurs exactly once in some relator.
    pub fn simplify(&self) -> GroupPresentation {
        let mut gens = self.generator_count;
        let mut rels: Vec<Word> = self.relators.clone();
        loop {
            let mut seen = HashSet::new();
            rels = rels
                .iter()
                .map(|r| cyclic_reduce(r))
                .filter(|r| !r.is_empty() && seen.insert(canonical(r)))
                .collect();
            rels.sort_by_key(|r| r.len());
            let found = rels.iter().enumerate().find_map(|(i, r)| {
                let mut count = vec![0u32; gens + 1];
                for &l in r {
                    count[l.unsigned_abs() as usize] += 1;
                }
                r.iter().position(|&l| count[l.unsigned_abs() as usize] == 1).map(|p| (i, p))
            });
            let Some((i, p)) = found else {
                break;
            };
            let r = rels.swap_remove(i);
            let letter = r[p];
            let g = letter.unsigned_abs() as i32;
            // r = u · g^s · w, so g^s = u⁻¹ w⁻¹ and g = (u⁻¹ w⁻¹)^s.
            let mut rhs = inverse(&r[..p]);
            rhs.extend(inverse(&r[p + 1..]));
            let rhs = if letter > 0 { rhs } else { inverse(&rhs) };
            let rhs_inv = inverse(&rhs);
            let last = gens as i32;
            let rename = |l: i32| if l.abs() == last { l.signum() * g } else { l };
            for rel in rels.iter_mut() {
                let mut out = Vec::with_capacity(rel.len());
                for &l in rel.iter() {
                    if l == g {
                        out.extend_from_slice(&rhs);
                    } else if l == -g {
                        out.extend_from_slice(&rhs_inv);
                    } else {
                        out.push(l);
                    }
                }
                // Move the last generator into the freed slot.
                *rel = out.into_iter().map(rename).collect();
            }
            gens -= 1;
        }
        GroupPresentation {
            generator_count: gens,
            relators: rels,
        }
    }

    /// True if [`simplify`](Self::simplify) removes every generator.
    pub fn is_evidently_trivial(&self) -> bool {
        self.simplify().generator_count == 0
    }
}

impl fmt::Display for GroupPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = (1..=self.generator_count).map(|g| format!("x{g}")).collect();
        let rels: Vec<String> = self
            .relators
            .iter()
            .map(|r| {
                r.iter()
                    .map(|&l| if l > 0 { format!("x{l}") } else { format!("x{}^-1", -l) })
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        write!(f, "< {} | {} >", gens.join(", "), rels.join(", "))
    }
}
