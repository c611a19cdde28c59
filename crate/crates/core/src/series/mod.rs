//! Exact arithmetic for Laurent polynomials over an exact coefficient field,
//! with the canonical forms over the power-series ring O needed to compare
//! lattices: a Hermite-style echelon basis and Smith exponents.

mod field;
mod matrix;
mod scalar;

pub use field::{is_prime, Field, Fp, Rational, DEFAULT_PRIME};
pub use matrix::{hermite_over_o, inverse_upper_pure, smith_exponents, solve_upper_pure, LaurentMatrix};
pub use scalar::LaurentScalar;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("matrix is singular over the Laurent field")]
    SingularMatrix,
    #[error("generators do not span K^3")]
    RankDeficient,
    #[error("expected a square matrix, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("parse error: {0}")]
    Parse(String),
}
