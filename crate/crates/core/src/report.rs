//! JSON report shapes shared by the library checks and the command line.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::graph::GraphFile;
use crate::hom::HomPoset;
use crate::loops::LoopGroup;
use crate::topology::Invariants;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PosetReport {
    pub elements: usize,
    pub atoms: usize,
    pub basepoint: Option<usize>,
    /// Number of cover relations.
    pub order_edges: usize,
}

impl PosetReport {
    pub fn of(p: &HomPoset) -> PosetReport {
        PosetReport {
            elements: p.len(),
            atoms: p.atoms().len(),
            basepoint: p.basepoint(),
            order_edges: p.cover_count(),
        }
    }
}

/// Poset statistics plus invariants; `invariants` is absent for an empty poset.
#[derive(Clone, Debug, Serialize)]
pub struct HomReport {
    pub empty: bool,
    pub poset: PosetReport,
    pub invariants: Option<Invariants>,
}

impl HomReport {
    pub fn of(p: &HomPoset, try_collapse: bool) -> Result<HomReport> {
        Ok(HomReport {
            empty: p.is_empty(),
            poset: PosetReport::of(p),
            invariants: if p.is_empty() { None } else { Some(p.invariants(try_collapse)?) },
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentReport {
    pub id: usize,
    pub size: usize,
    pub winding: Option<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LawsReport {
    pub identity: bool,
    pub inverses: bool,
    pub associative: bool,
    pub associative_triples: usize,
    pub representative_independent: bool,
    pub shift_independent: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroupReport {
    pub identity: usize,
    pub products: Vec<[usize; 3]>,
    pub undefined_pairs: Vec<[usize; 2]>,
    pub laws: LawsReport,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LoopReport {
    pub bound: usize,
    pub depth: usize,
    pub loop_vertices: usize,
    pub components: Vec<ComponentReport>,
    pub group: GroupReport,
}

impl LoopReport {
    pub fn of(group: &LoopGroup, depth: usize) -> LoopReport {
        let l = &group.laws;
        LoopReport {
            bound: group.bound,
            depth,
            loop_vertices: group.loop_vertices,
            components: group
                .components
                .iter()
                .map(|c| ComponentReport {
                    id: c.id,
                    size: c.size,
                    winding: c.winding,
                })
                .collect(),
            group: GroupReport {
                identity: group.identity,
                products: group.products.iter().map(|&(a, b, c)| [a, b, c]).collect(),
                undefined_pairs: group.undefined.iter().map(|&(a, b)| [a, b]).collect(),
                laws: LawsReport {
                    identity: l.identity,
                    inverses: l.inverses,
                    associative: l.associative,
                    associative_triples: l.triples_checked,
                    representative_independent: l.representative_independent,
                    shift_independent: l.shift_independent,
                },
            },
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
}

/// Graphs and parameters of a single check instance; enough to re-run it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Instance {
    pub graphs: Vec<GraphFile>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub check_name: String,
    pub instance: String,
    pub status: Status,
    /// Why the check failed, when it did.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub violation: Option<String>,
    /// The failing (or inconclusive) instance, re-runnable on its own.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Instance>,
    pub details: serde_json::Value,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}
