//! From growth diagrams to diskoids and back to the building.
//!
//! A diagram is shrunk to a 2-gon by local moves (U-turn removal, sharp
//! corner removal, elbow moves). Undoing the moves in reverse order glues
//! the CAT(0) diskoid together piece by piece. Independently, a polygon of
//! lattice classes realizing the diagram can be sampled and its convex
//! hull compared with that diskoid.

mod moves;
mod realize;
mod replay;

use thiserror::Error;

use crate::building::BuildingError;
use crate::growth::GrowthError;
use crate::hulls::HullError;
use crate::webs::WebError;

pub use moves::{elbow_move, find_double_elbow, find_sharp, find_uturn, is_elbow, remove_sharp, remove_uturn};
pub use realize::{complexes_match, cross_validate, realize_polygon, validate_realization, RealizedPolygon};
pub use replay::{diskoid_from_diagram, diskoid_from_log, reduce_diagram, Move, MoveLog};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SynthesisError {
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("no double elbow found although there is no U-turn or sharp corner")]
    NoDoubleElbow,
    #[error("reduction did not finish within {0} moves")]
    TooManyMoves(usize),
    #[error("replay failed: {0}")]
    Replay(String),
    #[error("no realizing polygon found in {0} attempts")]
    RealizationFailed(usize),
    #[error("distance between polygon vertices {0} and {1} does not match the diagram")]
    DistanceMismatch(usize, usize),
    #[error(transparent)]
    Growth(#[from] GrowthError),
    #[error(transparent)]
    Web(#[from] WebError),
    #[error(transparent)]
    Building(#[from] BuildingError),
    #[error(transparent)]
    Hull(#[from] HullError),
}
