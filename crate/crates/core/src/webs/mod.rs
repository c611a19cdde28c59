//! Webs, their dual diskoids, and the spider reduction engine.
//!
//! A web is a planar directed graph in a disk whose interior vertices are
//! trivalent sinks or sources and whose boundary vertices are univalent.
//! It is stored as a rotation system, so planar isotopy is built in.

mod diskoid;
mod emit;
mod reduce;
mod web;

use thiserror::Error;

pub use diskoid::Diskoid;
pub use emit::{diskoid_to_dot, diskoid_to_tikz, web_to_dot, web_to_tikz};
pub use reduce::{reduce, reduce_random, WebCombination};
pub use web::{CanonicalKey, Dart, Face, VertexKind, Web};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WebError {
    #[error("malformed web: {0}")]
    Malformed(String),
    #[error("malformed diskoid: {0}")]
    MalformedDiskoid(String),
}

/// Dual web of a diskoid.
pub fn dualize(diskoid: &Diskoid) -> Result<Web, WebError> {
    diskoid.dualize()
}

/// Basepoint shift by one boundary position.
pub fn rotate(web: &Web) -> Web {
    web.rotated()
}

/// Isomorphism preserving the marked boundary and its basepoint.
pub fn iso(a: &Web, b: &Web) -> bool {
    a.is_isomorphic(b)
}
