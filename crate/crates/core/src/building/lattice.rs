use std::fmt;

use rand::Rng;

use super::weight::DominantWeight;
use super::BuildingError;
use crate::series::{
    hermite_over_o, inverse_upper_pure, smith_exponents, solve_upper_pure, Field, LaurentMatrix,
    LaurentScalar,
};

/// An O-lattice in K^3, stored by its canonical echelon basis.
///
/// Unlike [`LatticeClass`], a `Lattice` is not rescaled: `L` and `t*L` are
/// different values. The intersection and sum operations live here.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Lattice<F: Field> {
    basis: LaurentMatrix<F>,
    ctx: F::Ctx,
}

impl<F: Field> Lattice<F> {
    /// The lattice generated by the columns of `generators`.
    pub fn from_generators(generators: &LaurentMatrix<F>, ctx: &F::Ctx) -> Result<Self, BuildingError> {
        Ok(Lattice { basis: hermite_over_o(generators, ctx)?, ctx: ctx.clone() })
    }

    pub fn from_columns(columns: &[Vec<LaurentScalar<F>>], ctx: &F::Ctx) -> Result<Self, BuildingError> {
        Self::from_generators(&LaurentMatrix::from_columns(columns), ctx)
    }

    /// `O^3`.
    pub fn standard(ctx: &F::Ctx) -> Self {
        Lattice { basis: LaurentMatrix::identity(3, ctx), ctx: ctx.clone() }
    }

    /// The lattice spanned by `t^{e_i} e_i`.
    pub fn diagonal(ctx: &F::Ctx, exps: [i32; 3]) -> Self {
        Lattice { basis: LaurentMatrix::diag_powers(ctx, &exps), ctx: ctx.clone() }
    }

    pub fn basis(&self) -> &LaurentMatrix<F> {
        &self.basis
    }

    pub fn ctx(&self) -> &F::Ctx {
        &self.ctx
    }

    /// Coordinates of `v` in the canonical basis.
    pub fn coordinates(&self, v: &[LaurentScalar<F>]) -> Vec<LaurentScalar<F>> {
        solve_upper_pure(&self.basis, v)
    }

    /// Whether the vector `v` lies in the lattice.
    pub fn contains_vector(&self, v: &[LaurentScalar<F>]) -> bool {
        self.coordinates(v).iter().all(|x| x.val().is_none_or(|e| e >= 0))
    }

    /// Whether `other` is a sublattice of `self`.
    pub fn contains(&self, other: &Lattice<F>) -> bool {
        other.basis.columns().iter().all(|c| self.contains_vector(c))
    }

    /// `t^k L`.
    pub fn scaled(&self, k: i32) -> Self {
        // Shifting keeps the echelon conditions, so no renormalization is needed.
        Lattice { basis: self.basis.shift(k), ctx: self.ctx.clone() }
    }

    /// Smallest `k` with `t^k * self` contained in `other`.
    pub fn min_shift_into(&self, other: &Lattice<F>) -> i32 {
        self.basis
            .columns()
            .iter()
            .flat_map(|c| other.coordinates(c))
            .filter_map(|x| x.val())
            .map(|v| -v)
            .max()
            .expect("a lattice basis has nonzero coordinates")
    }

    /// Dual lattice `{v : <v, L> in O}`, spanned by the columns of the
    /// inverse transpose of the basis.
    pub fn dual(&self) -> Self {
        let inv = inverse_upper_pure(&self.basis, &self.ctx);
        Self::from_generators(&inv.transpose(), &self.ctx).expect("dual of a full lattice has full rank")
    }

    /// `L1 + L2`.
    pub fn sum(&self, other: &Lattice<F>) -> Self {
        Self::from_generators(&self.basis.hconcat(&other.basis), &self.ctx).expect("sum of full lattices")
    }

    /// `L1 ∩ L2`, through `(L1 ∩ L2)* = L1* + L2*`.
    pub fn intersection(&self, other: &Lattice<F>) -> Self {
        self.dual().sum(&other.dual()).dual()
    }

    /// The homothety class.
    pub fn class(&self) -> LatticeClass<F> {
        let s = self.basis.min_val().expect("nonzero basis");
        LatticeClass { lattice: self.scaled(-s) }
    }
}

impl<F: Field> fmt::Debug for Lattice<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cols: Vec<String> = self
            .basis
            .columns()
            .iter()
            .map(|c| format!("({})", c.iter().map(|x| x.to_text()).collect::<Vec<_>>().join(", ")))
            .collect();
        write!(f, "<{}>", cols.join(", "))
    }
}

/// A vertex of the building: the homothety class of a lattice, stored by
/// its representative `L` with `L ⊆ O^3` and `L ⊄ t O^3`.
///
/// Two classes are equal exactly when their stored bases are equal.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeClass<F: Field> {
    lattice: Lattice<F>,
}

impl<F: Field> LatticeClass<F> {
    /// The class of `O^3`.
    pub fn standard(ctx: &F::Ctx) -> Self {
        Lattice::standard(ctx).class()
    }

    /// Class of the lattice spanned by the given column vectors.
    pub fn from_generators(columns: &[Vec<LaurentScalar<F>>], ctx: &F::Ctx) -> Result<Self, BuildingError> {
        Ok(Lattice::from_columns(columns, ctx)?.class())
    }

    /// Canonical representative.
    pub fn lattice(&self) -> &Lattice<F> {
        &self.lattice
    }

    pub fn basis(&self) -> &LaurentMatrix<F> {
        self.lattice.basis()
    }

    pub fn ctx(&self) -> &F::Ctx {
        self.lattice.ctx()
    }

    /// The weight-valued distance `d(self, other)`.
    pub fn distance(&self, other: &LatticeClass<F>) -> DominantWeight {
        let inv = inverse_upper_pure(self.basis(), self.ctx());
        let change = inv.mul(other.basis());
        let exps = smith_exponents(&change).expect("lattice bases are invertible");
        DominantWeight::normalize([-exps[0], -exps[1], -exps[2]])
    }

    pub fn adjacent(&self, other: &LatticeClass<F>) -> bool {
        self.distance(other).is_fundamental()
    }

    /// Class of the intersection of the canonical representatives.
    pub fn meet(&self, other: &LatticeClass<F>) -> LatticeClass<F> {
        self.lattice.intersection(&other.lattice).class()
    }

    /// Class of the sum of the canonical representatives.
    pub fn join(&self, other: &LatticeClass<F>) -> LatticeClass<F> {
        self.lattice.sum(&other.lattice).class()
    }

    /// The representative `M` of `self` with `t*L ⊆ M ⊆ L`, where `L` is the
    /// canonical representative of `around`. Exists exactly when the two
    /// classes are equal or adjacent.
    pub fn representative_between(&self, around: &LatticeClass<F>) -> Option<Lattice<F>> {
        let big = around.lattice();
        let k = self.lattice.min_shift_into(big);
        let rep = self.lattice.scaled(k);
        rep.contains(&big.scaled(1)).then_some(rep)
    }

    /// The unique vertex adjacent to `x`, `y` and `z`, where `y` is reached
    /// from `x` by a `w1` step and `z` from `y` by a `w2` step, or with both
    /// roles swapped.
    pub fn common_neighbor(x: &Self, y: &Self, z: &Self) -> Result<Self, BuildingError> {
        if x == y || y == z || x == z {
            return Err(BuildingError::PreconditionViolated("the three classes must be distinct".into()));
        }
        let (dxy, dyz) = (x.distance(y), y.distance(z));
        let use_meet = match (dxy, dyz) {
            (DominantWeight::OMEGA1, DominantWeight::OMEGA2) => true,
            (DominantWeight::OMEGA2, DominantWeight::OMEGA1) => false,
            _ => {
                return Err(BuildingError::PreconditionViolated(format!(
                    "need distances (w1, w2) or (w2, w1), got {dxy} and {dyz}"
                )))
            }
        };
        let near_x = x.representative_between(y).expect("adjacent");
        let near_z = z.representative_between(y).expect("adjacent");
        // Seen from y, x and z are two planes (or two lines) in L_y / t L_y;
        // the common neighbor is their intersection line (or spanned plane).
        let w = if use_meet { near_x.intersection(&near_z) } else { near_x.sum(&near_z) };
        let w = w.class();
        debug_assert!(w.adjacent(x) && w.adjacent(y) && w.adjacent(z));
        Ok(w)
    }

    /// The neighbor `[t L + span(sum_i c_i b_i for each c)]`, where `b_i`
    /// is the canonical basis and each `c` is a residue coordinate vector.
    /// One independent vector gives a `w1` step, two give a `w2` step.
    pub fn neighbor_from_residues(&self, residues: &[[F; 3]]) -> Self {
        let basis = self.basis();
        let mut gens = basis.shift(1).columns();
        for c in residues {
            let v: Vec<LaurentScalar<F>> = (0..3)
                .map(|i| {
                    (0..3).fold(LaurentScalar::zero(), |acc, j| {
                        acc.add(&basis.get(i, j).scale(&c[j]))
                    })
                })
                .collect();
            gens.push(v);
        }
        Lattice::from_columns(&gens, self.ctx()).expect("contains t L").class()
    }

    /// A random neighbor at distance `step` (`w1` or `w2`).
    pub fn random_step<R: Rng + ?Sized>(
        &self,
        step: DominantWeight,
        rng: &mut R,
    ) -> Result<Self, BuildingError> {
        let count = match step {
            DominantWeight::OMEGA1 => 1,
            DominantWeight::OMEGA2 => 2,
            other => {
                return Err(BuildingError::PreconditionViolated(format!(
                    "random_step needs w1 or w2, got {other}"
                )))
            }
        };
        let ctx = self.ctx().clone();
        loop {
            let residues: Vec<[F; 3]> =
                (0..count).map(|_| std::array::from_fn(|_| F::random(&ctx, rng))).collect();
            if residue_rank(&residues) != count {
                continue;
            }
            let y = self.neighbor_from_residues(&residues);
            debug_assert_eq!(self.distance(&y), step);
            return Ok(y);
        }
    }
}

/// Rank over the base field of a list of coordinate vectors.
pub fn residue_rank<F: Field>(vectors: &[[F; 3]]) -> usize {
    let mut rows: Vec<[F; 3]> = vectors.to_vec();
    let mut rank = 0;
    for col in 0..3 {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = rows[rank][col].inv().expect("nonzero");
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let f = rows[r][col].mul(&inv);
                let pivot = rows[rank].clone();
                for k in 0..3 {
                    rows[r][k] = rows[r][k].sub(&f.mul(&pivot[k]));
                }
            }
        }
        rank += 1;
    }
    rank
}

impl<F: Field> fmt::Debug for LatticeClass<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:?}]", self.lattice)
    }
}
