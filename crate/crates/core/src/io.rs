//! JSON formats for scalars and lattices, used by the command-line tool.
//!
//! A scalar is a list of `{"e": exponent, "c": coefficient}` terms. A
//! lattice names its coefficient field and lists three generator columns:
//!
//! ```json
//! {"field": "Fp", "p": 10007, "columns": [[[{"e": -1, "c": "1"}], [], []], [[], [{"e": 0, "c": "1"}], []], [[], [], [{"e": 0, "c": "1"}]]]}
//! ```
//!
//! `"p"` is only present for `"Fp"`. Written lattices carry the canonical
//! basis, so a round trip through JSON is the identity on canonical forms.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::building::{BuildingError, Lattice};
use crate::series::{is_prime, Field, Fp, LaurentScalar, Rational, SeriesError, DEFAULT_PRIME};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IoError {
    #[error("invalid JSON: {0}")]
    Json(String),
    #[error("unknown field `{0}`, expected `Q` or `Fp`")]
    UnknownField(String),
    #[error("modulus {0} is not a prime")]
    NotPrime(u32),
    #[error("lattices over different fields in one file")]
    MixedFields,
    #[error("a lattice needs 3 columns of 3 entries")]
    Shape,
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Building(#[from] BuildingError),
}

impl From<serde_json::Error> for IoError {
    fn from(e: serde_json::Error) -> Self {
        IoError::Json(e.to_string())
    }
}

/// Which coefficient field a lattice lives over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldSpec {
    Rational,
    Prime(u32),
}

impl FieldSpec {
    /// The finite field of order `p`, after checking that `p` is prime.
    pub fn prime(p: u32) -> Result<Self, IoError> {
        if is_prime(p) {
            Ok(FieldSpec::Prime(p))
        } else {
            Err(IoError::NotPrime(p))
        }
    }

    pub fn default_prime() -> Self {
        FieldSpec::Prime(DEFAULT_PRIME)
    }
}

/// Fields with a name in the JSON format.
pub trait NamedField: Field {
    fn spec(ctx: &Self::Ctx) -> FieldSpec;
}

impl NamedField for Rational {
    fn spec(_: &()) -> FieldSpec {
        FieldSpec::Rational
    }
}

impl NamedField for Fp {
    fn spec(p: &u32) -> FieldSpec {
        FieldSpec::Prime(*p)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub e: i32,
    pub c: String,
}

pub fn scalar_to_json<F: Field>(s: &LaurentScalar<F>) -> Vec<TermJson> {
    s.terms().map(|(e, c)| TermJson { e, c: c.to_text() }).collect()
}

pub fn scalar_from_json<F: Field>(terms: &[TermJson], ctx: &F::Ctx) -> Result<LaurentScalar<F>, IoError> {
    let parsed = terms.iter().map(|t| Ok((t.e, F::parse(ctx, &t.c)?))).collect::<Result<Vec<_>, SeriesError>>()?;
    Ok(LaurentScalar::from_terms(parsed))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeJson {
    pub field: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<u32>,
    pub columns: Vec<Vec<Vec<TermJson>>>,
}

impl LatticeJson {
    pub fn from_lattice<F: NamedField>(lattice: &Lattice<F>) -> Self {
        let (field, p) = match F::spec(lattice.ctx()) {
            FieldSpec::Rational => ("Q".to_string(), None),
            FieldSpec::Prime(p) => ("Fp".to_string(), Some(p)),
        };
        let columns = lattice.basis().columns().iter().map(|col| col.iter().map(scalar_to_json).collect()).collect();
        LatticeJson { field, p, columns }
    }

    pub fn field_spec(&self) -> Result<FieldSpec, IoError> {
        match self.field.as_str() {
            "Q" => Ok(FieldSpec::Rational),
            "Fp" => FieldSpec::prime(self.p.unwrap_or(DEFAULT_PRIME)),
            other => Err(IoError::UnknownField(other.to_string())),
        }
    }

    /// Rebuilds the lattice; the field in the file must be the one asked for.
    pub fn to_lattice<F: NamedField>(&self, ctx: &F::Ctx) -> Result<Lattice<F>, IoError> {
        if self.field_spec()? != F::spec(ctx) {
            return Err(IoError::MixedFields);
        }
        if self.columns.len() != 3 || self.columns.iter().any(|c| c.len() != 3) {
            return Err(IoError::Shape);
        }
        let cols = self
            .columns
            .iter()
            .map(|col| col.iter().map(|e| scalar_from_json(e, ctx)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Lattice::from_columns(&cols, ctx)?)
    }
}

/// A list of lattices read from a file, tagged by field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LatticeList {
    Rational(Vec<Lattice<Rational>>),
    Prime(u32, Vec<Lattice<Fp>>),
}

impl LatticeList {
    pub fn len(&self) -> usize {
        match self {
            LatticeList::Rational(v) => v.len(),
            LatticeList::Prime(_, v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Parses a JSON array of lattices. All entries must share one field; an
/// empty array is read over the rationals.
pub fn parse_lattices(text: &str) -> Result<LatticeList, IoError> {
    let raw: Vec<LatticeJson> = serde_json::from_str(text)?;
    let spec = match raw.first() {
        Some(first) => first.field_spec()?,
        None => FieldSpec::Rational,
    };
    for l in &raw {
        if l.field_spec()? != spec {
            return Err(IoError::MixedFields);
        }
    }
    Ok(match spec {
        FieldSpec::Rational => LatticeList::Rational(raw.iter().map(|l| l.to_lattice(&())).collect::<Result<_, _>>()?),
        FieldSpec::Prime(p) => LatticeList::Prime(p, raw.iter().map(|l| l.to_lattice(&p)).collect::<Result<_, _>>()?),
    })
}

pub fn lattices_to_json<F: NamedField>(lattices: &[Lattice<F>]) -> serde_json::Value {
    serde_json::to_value(lattices.iter().map(LatticeJson::from_lattice).collect::<Vec<_>>()).expect("plain data")
}
