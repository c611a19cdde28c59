mod common;

use a2web::io::{lattices_to_json, parse_lattices, FieldSpec, IoError, LatticeJson, LatticeList};
use a2web::series::Fp;
use a2web::Lattice;
use common::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn octagon_round_trips_over_the_rationals() {
    let lattices: Vec<_> = octagon().iter().map(|c| c.lattice().clone()).collect();
    let text = lattices_to_json(&lattices).to_string();
    assert_eq!(parse_lattices(&text).unwrap(), LatticeList::Rational(lattices));
}

#[test]
fn random_lattices_round_trip_over_fp() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let lattices: Vec<Lattice<Fp>> = (0..20).map(|_| random_class(&mut rng).lattice().clone()).collect();
    let text = lattices_to_json(&lattices).to_string();
    assert_eq!(parse_lattices(&text).unwrap(), LatticeList::Prime(P, lattices));
}

#[test]
fn hand_written_input_is_normalized() {
    // Generators out of order and scaled: the same class as L2 of the
    // octagon, read back in canonical form.
    let text = r#"[{"field": "Q", "columns": [
        [[], [{"e": 1, "c": "2"}], []],
        [[{"e": 0, "c": "3/3"}], [], []],
        [[], [], [{"e": 1, "c": "1"}]]
    ]}]"#;
    let LatticeList::Rational(ls) = parse_lattices(text).unwrap() else { panic!("field") };
    assert_eq!(ls[0].class(), octagon()[1]);
    let json = LatticeJson::from_lattice(&ls[0]);
    assert_eq!(json.field, "Q");
    assert_eq!(json.p, None);
}

#[test]
fn bad_input_is_rejected() {
    assert_eq!(parse_lattices("[]").unwrap(), LatticeList::Rational(vec![]));
    assert!(matches!(parse_lattices("{"), Err(IoError::Json(_))));
    let col = r#"[[{"e":0,"c":"1"}],[],[]]"#;
    let lattice = |field: &str| format!(r#"{{"field": {field}, "columns": [{col}, {col}, {col}]}}"#);
    // Three equal columns do not span.
    assert!(matches!(parse_lattices(&format!("[{}]", lattice("\"Q\""))), Err(IoError::Building(_))));
    assert_eq!(parse_lattices(&format!("[{}]", lattice("\"R\""))), Err(IoError::UnknownField("R".into())));
    let two = r#"[{"field":"Q","columns":[[[{"e":0,"c":"1"}],[],[]]]}]"#;
    assert_eq!(parse_lattices(two), Err(IoError::Shape));
    let fp = |p: u32| format!(r#"{{"field":"Fp","p":{p},"columns":[[[{{"e":0,"c":"1"}}],[],[]],[[],[{{"e":0,"c":"1"}}],[]],[[],[],[{{"e":0,"c":"1"}}]]]}}"#);
    assert_eq!(parse_lattices(&format!("[{}]", fp(12))), Err(IoError::NotPrime(12)));
    assert_eq!(parse_lattices(&format!("[{}, {}]", fp(7), fp(11))), Err(IoError::MixedFields));
    assert_eq!(FieldSpec::prime(10007).unwrap(), FieldSpec::default_prime());
}
