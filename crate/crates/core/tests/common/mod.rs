//! Helpers shared by the integration tests: text-built lattices, the
//! octagon configuration, independent membership oracles and random inputs.
#![allow(dead_code)]

use a2web::growth::PartitionRep;
use a2web::series::{Field, Fp, LaurentMatrix, LaurentScalar, Rational};
use a2web::{Lattice, LatticeClass};
use rand::Rng;

pub const P: u32 = 10007;

pub fn q(text: &str) -> LaurentScalar<Rational> {
    LaurentScalar::parse(&(), text).unwrap()
}

/// A column vector from three text entries.
pub fn qv(entries: [&str; 3]) -> Vec<LaurentScalar<Rational>> {
    entries.iter().map(|e| q(e)).collect()
}

pub fn q_class(columns: [[&str; 3]; 3]) -> LatticeClass<Rational> {
    let cols: Vec<_> = columns.iter().map(|c| qv(*c)).collect();
    LatticeClass::from_generators(&cols, &()).unwrap()
}

pub fn q_lattice(columns: [[&str; 3]; 3]) -> Lattice<Rational> {
    let cols: Vec<_> = columns.iter().map(|c| qv(*c)).collect();
    Lattice::from_columns(&cols, &()).unwrap()
}

/// Class spanned by text columns over any field.
pub fn class_in<F: Field>(ctx: &F::Ctx, columns: [[&str; 3]; 3]) -> LatticeClass<F> {
    let cols: Vec<Vec<LaurentScalar<F>>> =
        columns.iter().map(|c| c.iter().map(|e| LaurentScalar::parse(ctx, e).unwrap()).collect()).collect();
    LatticeClass::from_generators(&cols, ctx).unwrap()
}

pub const OCTAGON: [[[&str; 3]; 3]; 8] = [
    [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]],
    [["t^-1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]],
    [["t^-2", "0", "0"], ["0", "t^-1", "0"], ["0", "0", "1"]],
    [["t^-2", "0", "0"], ["0", "t^-2", "0"], ["0", "0", "1"]],
    [["t^-1", "0", "0"], ["0", "t^-2", "0"], ["0", "0", "1"]],
    [["t^-1", "0", "0"], ["0", "t^-2", "0"], ["t^-2", "0", "t^-1"]],
    [["t^-1", "0", "0"], ["0", "t^-1", "0"], ["t^-2", "t^-2", "t^-1"]],
    [["t^-1", "t^-1", "0"], ["0", "1", "0"], ["0", "0", "1"]],
];

pub const OCTAGON_CENTER: [[&str; 3]; 3] = [["t^-1", "0", "0"], ["0", "t^-1", "0"], ["0", "0", "1"]];

/// The eight lattices of the octagon example, in polygon order.
pub fn octagon() -> Vec<LatticeClass<Rational>> {
    octagon_in(&())
}

pub fn octagon_in<F: Field>(ctx: &F::Ctx) -> Vec<LatticeClass<F>> {
    OCTAGON.iter().map(|c| class_in(ctx, *c)).collect()
}

/// The center vertex `[<t^-1 e1, t^-1 e2, e3>]`.
pub fn octagon_center() -> LatticeClass<Rational> {
    class_in(&(), OCTAGON_CENTER)
}

/// Parses `"321"` style partitions; `"0"` or `""` is empty.
pub fn part(s: &str) -> PartitionRep {
    let mut parts = [0u32; 3];
    for (i, ch) in s.chars().filter(|c| *c != '0').enumerate() {
        parts[i] = ch.to_digit(10).unwrap();
    }
    PartitionRep::new(parts).unwrap()
}

pub fn parts(row: &str) -> Vec<PartitionRep> {
    row.split(',').map(|s| part(s.trim())).collect()
}

/// Independent membership oracle: `v` lies in the O-span of the columns of
/// the square matrix `b` iff every entry of `adj(b) v` has valuation at
/// least `val(det b)`. Uses neither echelon forms nor triangular solves.
pub fn in_span<F: Field>(b: &LaurentMatrix<F>, v: &[LaurentScalar<F>]) -> bool {
    let det_val = b.determinant().unwrap().val().expect("nonsingular");
    let adj = b.adjugate().unwrap();
    (0..3).all(|i| {
        let x = (0..3).fold(LaurentScalar::zero(), |acc, j| acc.add(&adj.get(i, j).mul(&v[j])));
        x.val().is_none_or(|e| e >= det_val)
    })
}

/// Module equality through the oracle, for square generator sets.
pub fn same_module<F: Field>(a: &LaurentMatrix<F>, b: &LaurentMatrix<F>) -> bool {
    a.columns().iter().all(|c| in_span(b, c)) && b.columns().iter().all(|c| in_span(a, c))
}

/// A random Laurent polynomial with exponents in `lo..=hi`.
pub fn random_scalar<F: Field, R: Rng>(ctx: &F::Ctx, rng: &mut R, lo: i32, hi: i32, density: f64) -> LaurentScalar<F> {
    let mut terms = Vec::new();
    for e in lo..=hi {
        if rng.gen_bool(density) {
            terms.push((e, F::random(ctx, rng)));
        }
    }
    LaurentScalar::from_terms(terms)
}

pub fn random_matrix<F: Field, R: Rng>(ctx: &F::Ctx, rng: &mut R, cols: usize, lo: i32, hi: i32) -> LaurentMatrix<F> {
    let columns: Vec<Vec<_>> =
        (0..cols).map(|_| (0..3).map(|_| random_scalar(ctx, rng, lo, hi, 0.5)).collect()).collect();
    LaurentMatrix::from_columns(&columns)
}

/// A random nonsingular 3x3 generator matrix.
pub fn random_full_rank<F: Field, R: Rng>(ctx: &F::Ctx, rng: &mut R, lo: i32, hi: i32) -> LaurentMatrix<F> {
    loop {
        let m = random_matrix(ctx, rng, 3, lo, hi);
        if !m.determinant().unwrap().is_zero() {
            return m;
        }
    }
}

/// A random matrix over O with unit determinant.
pub fn random_o_unit<F: Field, R: Rng>(ctx: &F::Ctx, rng: &mut R) -> LaurentMatrix<F> {
    loop {
        let m = random_matrix(ctx, rng, 3, 0, 2);
        if m.determinant().unwrap().val() == Some(0) {
            return m;
        }
    }
}

pub fn random_class<R: Rng>(rng: &mut R) -> LatticeClass<Fp> {
    let m = random_full_rank::<Fp, _>(&P, rng, -2, 2);
    Lattice::from_generators(&m, &P).unwrap().class()
}

/// A random walk from the standard vertex with the given step types.
pub fn random_walk<R: Rng>(rng: &mut R, steps: &[u8]) -> Vec<LatticeClass<Fp>> {
    use a2web::DominantWeight;
    let mut out = vec![LatticeClass::standard(&P)];
    for &s in steps {
        let w = if s == 1 { DominantWeight::OMEGA1 } else { DominantWeight::OMEGA2 };
        let next = out.last().unwrap().random_step(w, rng).unwrap();
        out.push(next);
    }
    out
}

/// First row of the octagon's growth diagram.
pub const OCTAGON_ROW: &str = "0,1,21,22,321,331,432,433,444";

pub fn octagon_diagram() -> a2web::growth::GrowthDiagram {
    a2web::growth::GrowthDiagram::complete_from_row(&parts(OCTAGON_ROW)).unwrap()
}

// Rows of the reduction-move figures: a U-turn, a sharp corner and an
// elbow move, each before and after.

pub const UTURN_ROWS: [&str; 9] = [
    "0,1,111,211,321,322,432,433,444",
    "0,11,21,32,321,431,432,443,444",
    "0,1,21,211,321,322,333,433,444",
    "0,11,111,221,222,332,432,443,444",
    "0,1,21,211,321,421,432,433,444",
    "0,11,111,221,321,332,333,443,444",
    "0,1,21,31,321,322,432,433,444",
    "0,11,21,221,222,332,333,443,444",
    "0,1,111,211,321,322,432,433,444",
];

pub const UTURN_REMOVED_ROWS: [&str; 7] = [
    "0,1,21,211,321,322,333",
    "0,11,111,221,222,332,333",
    "0,1,21,211,321,322,333",
    "0,11,111,221,222,332,333",
    "0,1,21,211,321,322,333",
    "0,11,111,221,222,332,333",
    "0,1,21,211,321,322,333",
];

pub const SHARP_ROWS: [&str; 3] = [
    "0,1,11,21,32,421,422,532,542,553,653,654,665,666",
    "0,1,2,31,411,421,531,541,552,652,653,664,665,666",
    "0,1,21,311,321,431,441,542,642,643,654,655,665,666",
];

pub const SHARP_REMOVED_ROWS: [&str; 2] = [
    "0,11,21,32,421,422,532,542,553,653,654,665,666",
    "0,1,21,311,321,431,441,542,642,643,654,655,666",
];

pub const ELBOW_ROWS: [&str; 3] = [
    "0,1,21,32,43,44,541,642,643,653,654,655,665,666",
    "0,11,22,33,43,531,632,633,643,644,654,664,665,666",
    "0,11,22,32,421,522,532,542,543,553,653,654,655,666",
];

/// The rows as printed after the elbow move. Three printed entries cannot
/// be right: column 14 of the second row and columns 11 and 14 of the
/// third. They are checked separately below.
pub const ELBOW_MOVED_ROWS: [&str; 3] = [
    "0,11,21,32,43,44,541,642,643,653,654,655,665,666",
    "0,1,21,32,33,431,532,533,543,544,554,654,665,666",
    "0,11,22,32,421,522,532,542,531,553,653,664,665,666",
];
