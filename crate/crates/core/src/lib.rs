//! Pointed graph homomorphism complexes and the x-homotopy apparatus.
//!
//! The crate is organised in four layers:
//!
//! * [`graph`]: finite graphs with loops, pointed graphs, the categorical,
//!   cartesian and smash products, exponential graphs, the smash/exponential
//!   adjunction and folding.
//! * [`hom`]: the posets `Hom(G,H)` and `Hom_*(G,H)` of multihomomorphisms,
//!   their induced maps, closure operators and Quillen fibers.
//! * [`topology`]: simplicial and cellular complexes with the invariants used
//!   throughout (path components, edge-path group presentations,
//!   abelianization, Euler characteristic, collapse certificates).
//! * [`loops`]: truncated path graphs `G^{I_n}`, loop graphs, the loop
//!   concatenation group on components, and the explicit homotopies used to
//!   compare path-graph fibers.
//!
//! [`verify`] bundles named property checks over exhaustive or seeded random
//! instances; [`report`] holds the JSON report shapes shared with the CLI.

pub mod error;
pub mod graph;
pub mod hom;
pub mod loops;
pub mod par;
pub mod report;
pub mod topology;
pub mod verify;

mod bits;
mod unionfind;

pub use error::{Error, Result};
pub use graph::{Graph, GraphMap, PointedGraph};
pub use hom::{HomPoset, Multihom};
pub use par::Execution;
pub use topology::{AbelianInvariants, GroupPresentation, SimplicialComplex};
