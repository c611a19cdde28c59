//! Vertices of the A2 affine building as homothety classes of O-lattices,
//! with the dominant-weight distance, adjacency, intersections and sums,
//! and random neighbors.

mod lattice;
mod weight;

pub use lattice::{residue_rank, Lattice, LatticeClass};
pub use weight::{dual_weight, steps, DominantWeight};

use thiserror::Error;

use crate::series::SeriesError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BuildingError {
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
}
