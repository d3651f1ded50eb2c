//! Structural results: the constructive half-net iteration, ε-net and
//! centerpoint verification, and the optimality cascade checks.

mod centerpoint;
mod halfnet;
mod optimality;

pub use centerpoint::{find_centerpoint, verify_centerpoint, Centerpoint, HalfspaceCount};
pub use halfnet::{find_half_net_2d, verify_eps_net, HalfNetRun, SimplicialNet};
pub use optimality::{check_structural_optimality, OptRow, OptimalityReport};

use crate::geom::GeomError;

#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum StructureError {
    #[error(transparent)]
    Geom(#[from] GeomError),
    #[error("half-net iteration invariant broken: {0}")]
    IterationInvariant(String),
    #[error("k = {k} out of range (requires k <= floor(n/3) - 1 = {max})")]
    KOutOfRange { k: usize, max: i64 },
    #[error("centerpoint search exhausted after {candidates} candidates")]
    SearchExhausted { candidates: usize },
}

/// A closed or open halfspace witness: the d points spanning the bounding
/// hyperplane, the orientation picking the side, and the offending count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HalfspaceWitness {
    pub facet: Vec<usize>,
    pub sign: i8,
    pub count: usize,
}
