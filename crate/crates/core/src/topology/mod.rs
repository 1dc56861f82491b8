//! Invariants of finite complexes: components, Euler characteristic, edge-path
//! group presentations, first homology, and collapse certificates.

mod collapse;
mod group;
mod simplicial;
mod snf;
mod two_complex;

pub use collapse::{CollapseCertificate, FacePoset};
pub use group::{AbelianInvariants, GroupPresentation, Word};
pub use simplicial::SimplicialComplex;
pub use two_complex::{Step, TwoComplex};

use serde::Serialize;

/// Homotopy invariants of a complex as reported by the harness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Invariants {
    pub pi0: usize,
    /// Component containing the basepoint, when there is one.
    pub basepoint_component: Option<usize>,
    pub euler: i64,
    pub h1: AbelianInvariants,
    /// `Some(true)` with a certificate found, `Some(false)` when the other
    /// invariants already rule out contractibility, `None` when undecided.
    pub collapsible: Option<bool>,
}

impl Invariants {
    /// `(π₀, χ, H₁)`, the part compared across homotopy equivalences.
    pub fn signature(&self) -> (usize, i64, &AbelianInvariants) {
        (self.pi0, self.euler, &self.h1)
    }

    pub fn looks_contractible(&self) -> bool {
        self.pi0 == 1 && self.euler == 1 && self.h1.is_trivial()
    }
}
