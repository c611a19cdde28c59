mod common;

use std::collections::BTreeSet;

use a2web::building::{dual_weight, steps, BuildingError};
use a2web::series::{Field, Fp, LaurentMatrix, Rational};
use a2web::{DominantWeight, Lattice, LatticeClass};
use common::*;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn w(a: i32, b: i32, c: i32) -> DominantWeight {
    DominantWeight::normalize([a, b, c])
}

#[test]
fn class_normalization_examples() {
    let standard = LatticeClass::<Rational>::standard(&());
    assert_eq!(q_class([["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]), standard);
    assert_eq!(q_class([["t^5", "0", "0"], ["0", "t^5", "0"], ["0", "0", "t^5"]]), standard);
    let l8 = octagon()[7].clone();
    let shifted = q_class([["1", "1", "0"], ["0", "t", "0"], ["0", "0", "t"]]);
    assert_eq!(l8, shifted);
    // The stored representative lies in O^3 but not in t O^3.
    let rep = l8.lattice();
    assert!(Lattice::standard(&()).contains(rep));
    assert!(!Lattice::standard(&()).scaled(1).contains(rep));
}

#[test]
fn octagon_distances() {
    let p = octagon();
    let x = &p[0];
    assert_eq!(x.distance(x), DominantWeight::ZERO);
    assert_eq!(x.distance(&p[2]), w(2, 1, 0));
    assert_eq!(x.distance(&p[7]), DominantWeight::OMEGA1);
    assert!(x.adjacent(&p[1]));
    assert!(!x.adjacent(&p[4]));
    assert_eq!(x.distance(&p[4]), w(2, 1, 0));
    // The first row of the octagon diagram, read as weights.
    let expected = [(0, 0), (1, 0), (1, 1), (0, 2), (1, 1), (0, 2), (1, 1), (1, 0)];
    for (j, &(a, b)) in expected.iter().enumerate() {
        assert_eq!(x.distance(&p[j]), DominantWeight::from_coefficients(a, b), "d(L1, L{})", j + 1);
    }
    for i in 0..8 {
        let j = (i + 1) % 8;
        let step = if i % 2 == 0 { DominantWeight::OMEGA1 } else { DominantWeight::OMEGA2 };
        assert_eq!(p[i].distance(&p[j]), step);
    }
}

#[test]
fn weight_duality_and_steps() {
    assert_eq!(dual_weight(DominantWeight::OMEGA1), DominantWeight::OMEGA2);
    assert_eq!(dual_weight(DominantWeight::ZERO), DominantWeight::ZERO);
    assert_eq!(dual_weight(w(2, 1, 0)), w(2, 1, 0));
    assert_eq!(steps(w(2, 1, 0)), 2);
    assert_eq!(steps(w(5, 2, 0)), 5);
}

#[test]
fn meet_of_l1_and_shifted_l4() {
    let l1 = Lattice::<Rational>::standard(&());
    let l4 = octagon()[3].lattice().clone();
    // The canonical representative of [L4] is t^2 L4; shift it to t L4.
    let t_l4 = q_lattice([["t^-1", "0", "0"], ["0", "t^-1", "0"], ["0", "0", "t"]]);
    assert_eq!(l4.class(), t_l4.class());
    let meet = l1.intersection(&t_l4);
    assert_eq!(meet, q_lattice([["1", "0", "0"], ["0", "1", "0"], ["0", "0", "t"]]));
    assert_eq!(meet.class(), octagon_center());
}

#[test]
fn meet_and_join_basics() {
    let p = octagon();
    for x in &p {
        assert_eq!(x.meet(x), *x);
        assert_eq!(x.join(x), *x);
    }
    let small = Lattice::<Rational>::standard(&()).scaled(1);
    let big = q_lattice([["t^-1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]);
    assert_eq!(small.sum(&big), big);
    assert_eq!(small.intersection(&big), small);
}

/// Every line and plane of the residue space, as neighbors of `center`.
fn all_neighbors<F: Field>(center: &LatticeClass<F>, ctx: &F::Ctx, p: i64) -> BTreeSet<LatticeClass<F>> {
    let points: Vec<[F; 3]> = (0..p * p * p)
        .map(|n| [n / (p * p), (n / p) % p, n % p])
        .filter(|v| {
            let lead = v.iter().find(|&&x| x != 0);
            lead == Some(&1)
        })
        .map(|v| v.map(|x| F::from_i64(ctx, x)))
        .collect();
    let mut out = BTreeSet::new();
    for (i, a) in points.iter().enumerate() {
        out.insert(center.neighbor_from_residues(std::slice::from_ref(a)));
        for b in &points[i + 1..] {
            out.insert(center.neighbor_from_residues(&[a.clone(), b.clone()]));
        }
    }
    out
}

#[test]
fn brute_force_neighbor_count() {
    // Over F_5 a vertex has 31 lines and 31 planes as neighbors.
    let x = LatticeClass::<Fp>::standard(&5);
    let nbrs = all_neighbors(&x, &5, 5);
    assert_eq!(nbrs.len(), 62);
    assert!(nbrs.iter().all(|y| x.adjacent(y)));
}

#[test]
fn octagon_common_neighbor_matches_brute_force() {
    let expected = q_class([["1", "0", "0"], ["0", "1", "0"], ["0", "0", "t"]]);
    let p = octagon();
    let found = LatticeClass::common_neighbor(&p[0], &p[1], &p[2]).unwrap();
    assert_eq!(found, expected);
    assert_eq!(found, octagon_center());
    for x in &p[..3] {
        assert!(found.adjacent(x));
    }

    // The same configuration over F_5, searched exhaustively around L2.
    let pf = octagon_in::<Fp>(&5);
    let candidates: Vec<_> = all_neighbors(&pf[1], &5, 5)
        .into_iter()
        .filter(|c| c != &pf[0] && c != &pf[2] && c.adjacent(&pf[0]) && c.adjacent(&pf[2]))
        .collect();
    assert_eq!(candidates.len(), 1);
    assert_eq!(LatticeClass::common_neighbor(&pf[0], &pf[1], &pf[2]).unwrap(), candidates[0]);
    assert_eq!(candidates[0], class_in::<Fp>(&5, OCTAGON_CENTER));
}

#[test]
fn common_neighbor_preconditions() {
    let p = octagon();
    let err = LatticeClass::common_neighbor(&p[0], &p[1], &p[0]).unwrap_err();
    assert!(matches!(err, BuildingError::PreconditionViolated(_)));
    // Three diagonal lattices forming a triangle have no unique fourth vertex.
    let x = Lattice::<Rational>::diagonal(&(), [0, 0, 0]).class();
    let y = Lattice::<Rational>::diagonal(&(), [1, 0, 0]).class();
    let z = Lattice::<Rational>::diagonal(&(), [1, 1, 0]).class();
    assert!(matches!(LatticeClass::common_neighbor(&x, &y, &z), Err(BuildingError::PreconditionViolated(_))));
}

#[test]
fn common_neighbor_in_the_standard_apartment() {
    let diag = |e: [i32; 3]| Lattice::<Rational>::diagonal(&(), e).class();
    let (x, y, z) = (diag([0, 0, 0]), diag([-1, 0, 0]), diag([-2, -1, 0]));
    let found = LatticeClass::common_neighbor(&x, &y, &z).unwrap();
    assert_eq!(found, diag([-1, -1, 0]));
    // Reversed orientation: w2 first, then w1.
    let found = LatticeClass::common_neighbor(&z, &y, &x).unwrap();
    assert_eq!(found, diag([-1, -1, 0]));
}

#[test]
fn random_step_is_reproducible() {
    let x = LatticeClass::<Fp>::standard(&P);
    for step in [DominantWeight::OMEGA1, DominantWeight::OMEGA2] {
        let a = x.random_step(step, &mut ChaCha8Rng::seed_from_u64(3)).unwrap();
        let b = x.random_step(step, &mut ChaCha8Rng::seed_from_u64(3)).unwrap();
        assert_eq!(a, b);
        assert_eq!(x.distance(&a), step);
        assert_eq!(a.distance(&x), dual_weight(step));
    }
    let bad = x.random_step(w(2, 1, 0), &mut ChaCha8Rng::seed_from_u64(3));
    assert!(matches!(bad, Err(BuildingError::PreconditionViolated(_))));
}

/// Membership in an intersection through the adjugate oracle on each side.
fn in_both(a: &Lattice<Fp>, b: &Lattice<Fp>, v: &[a2web::LaurentScalar<Fp>]) -> bool {
    in_span(a.basis(), v) && in_span(b.basis(), v)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn distance_is_dual_under_swap(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (x, y) = (random_class(&mut rng), random_class(&mut rng));
        prop_assert_eq!(y.distance(&x), dual_weight(x.distance(&y)));
        prop_assert_eq!(x.adjacent(&y), y.adjacent(&x));
    }

    #[test]
    fn distance_is_subadditive(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (x, y, z) = (random_class(&mut rng), random_class(&mut rng), random_class(&mut rng));
        prop_assert!(x.distance(&z).steps() <= x.distance(&y).steps() + y.distance(&z).steps());
    }

    #[test]
    fn class_ignores_generator_order_and_redundancy(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let gens = random_full_rank::<Fp, _>(&P, &mut rng, -2, 2);
        let class = Lattice::from_generators(&gens, &P).unwrap().class();
        let permuted = gens.select_columns(&[1, 2, 0]);
        prop_assert_eq!(&Lattice::from_generators(&permuted, &P).unwrap().class(), &class);
        let extra = gens.mul(&random_matrix::<Fp, _>(&P, &mut rng, 3, 0, 1));
        prop_assert_eq!(&Lattice::from_generators(&gens.hconcat(&extra), &P).unwrap().class(), &class);
        let scaled = gens.shift(4);
        prop_assert_eq!(&Lattice::from_generators(&scaled, &P).unwrap().class(), &class);
    }

    #[test]
    fn intersection_and_sum_match_membership(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_class(&mut rng).lattice().clone();
        let b = random_class(&mut rng).lattice().clone();
        let meet = a.intersection(&b);
        let sum = a.sum(&b);
        prop_assert_eq!(&meet, &b.intersection(&a));
        prop_assert_eq!(&sum, &b.sum(&a));
        prop_assert!(a.contains(&meet) && b.contains(&meet));
        prop_assert!(sum.contains(&a) && sum.contains(&b));
        for col in meet.basis().columns() {
            prop_assert!(in_both(&a, &b, &col));
        }
        // Random vectors: inside the meet exactly when inside both.
        for _ in 0..10 {
            let v = random_matrix::<Fp, _>(&P, &mut rng, 1, -1, 3).column(0);
            prop_assert_eq!(meet.contains_vector(&v), in_both(&a, &b, &v));
        }
        let c = random_class(&mut rng).lattice().clone();
        prop_assert_eq!(meet.intersection(&c), a.intersection(&b.intersection(&c)));
        prop_assert_eq!(sum.sum(&c), a.sum(&b.sum(&c)));
    }

    #[test]
    fn random_steps_have_the_requested_type(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = random_class(&mut rng);
        for step in [DominantWeight::OMEGA1, DominantWeight::OMEGA2] {
            let y = x.random_step(step, &mut rng).unwrap();
            prop_assert_eq!(x.distance(&y), step);
            prop_assert_eq!(y.distance(&x), dual_weight(step));
        }
    }

    #[test]
    fn common_neighbor_of_random_corners(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let path = random_walk(&mut rng, &[1, 2]);
        let (x, y, z) = (&path[0], &path[1], &path[2]);
        prop_assume!(x != z && !x.adjacent(z));
        let c = LatticeClass::common_neighbor(x, y, z).unwrap();
        prop_assert!(c.adjacent(x) && c.adjacent(y) && c.adjacent(z));
    }
}

#[test]
fn unimodular_basis_change_keeps_the_class() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..20 {
        let gens = random_full_rank::<Rational, _>(&(), &mut rng, -2, 2);
        let u = random_o_unit::<Rational, _>(&(), &mut rng);
        let a = Lattice::from_generators(&gens, &()).unwrap();
        let b = Lattice::from_generators(&gens.mul(&u), &()).unwrap();
        assert_eq!(a, b);
    }
    let _ = LaurentMatrix::<Rational>::identity(3, &());
}
