//! Computations around the A2 affine building and the sl3 web basis.
//!
//! Two routes to the same basis live here. The geometric route realizes a
//! closed polygon of lattice classes and takes its convex hull in the
//! building; the combinatorial route shrinks a cylindrical growth diagram by
//! local moves and replays them into a triangulated diskoid. Dualizing the
//! diskoid gives a non-elliptic web.
//!
//! Modules, bottom-up:
//! - [`series`]: Laurent polynomials, Hermite and Smith forms over O.
//! - [`building`]: lattice classes, the weight-valued distance, adjacency.
//! - [`hulls`]: min-, max- and two-sided convex hulls, induced complexes.
//! - [`growth`]: partitions, growth diagrams, promotion, enumeration.
//! - [`webs`]: diskoids, webs, dualization, the spider reduction engine.
//! - [`synthesis`]: the reduction loop, diskoid replay, polygon realization.
//! - [`io`]: JSON formats shared by the command-line tool.

pub mod building;
pub mod growth;
pub mod hulls;
pub mod io;
pub mod series;
pub mod synthesis;
pub mod webs;

pub use building::{DominantWeight, Lattice, LatticeClass};
pub use series::{Field, Fp, LaurentMatrix, LaurentScalar, Rational};
