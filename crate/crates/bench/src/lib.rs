//! Shared inputs for the criterion benchmarks.

use a2web::growth::{enumerate_diagrams, GrowthDiagram, TypeWord};
use a2web::series::{LaurentScalar, Rational};
use a2web::LatticeClass;

/// Every diagram of a type word.
pub fn diagrams(word: &str) -> Vec<GrowthDiagram> {
    enumerate_diagrams(&word.parse::<TypeWord>().expect("valid word")).expect("enumerable word")
}

/// A closed octagon of lattice classes whose hull is a wheel around
/// `[<t^-1 e1, t^-1 e2, e3>]`.
pub fn octagon() -> Vec<LatticeClass<Rational>> {
    let rows: [[[&str; 3]; 3]; 8] = [
        [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]],
        [["t^-1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]],
        [["t^-2", "0", "0"], ["0", "t^-1", "0"], ["0", "0", "1"]],
        [["t^-2", "0", "0"], ["0", "t^-2", "0"], ["0", "0", "1"]],
        [["t^-1", "0", "0"], ["0", "t^-2", "0"], ["0", "0", "1"]],
        [["t^-1", "0", "0"], ["0", "t^-2", "0"], ["t^-2", "0", "t^-1"]],
        [["t^-1", "0", "0"], ["0", "t^-1", "0"], ["t^-2", "t^-2", "t^-1"]],
        [["t^-1", "t^-1", "0"], ["0", "1", "0"], ["0", "0", "1"]],
    ];
    rows.iter()
        .map(|cols| {
            let cols: Vec<Vec<LaurentScalar<Rational>>> = cols
                .iter()
                .map(|c| c.iter().map(|e| LaurentScalar::parse(&(), e).expect("valid entry")).collect())
                .collect();
            LatticeClass::from_generators(&cols, &()).expect("full rank")
        })
        .collect()
}
