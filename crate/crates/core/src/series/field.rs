//! Coefficient fields for Laurent polynomials.
//!
//! A field element carries whatever it needs to combine with other elements
//! of the same field. Constants (zero, one, random draws) are built from a
//! context value: `()` for the rationals, the modulus for a prime field.

use std::fmt;
use std::hash::Hash;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;

use super::SeriesError;

/// An exact field usable as the coefficient ring of [`super::LaurentScalar`].
pub trait Field: Clone + PartialEq + Eq + Hash + Ord + fmt::Debug + Send + Sync + 'static {
    /// Data needed to manufacture constants of this field.
    type Ctx: Clone + fmt::Debug + PartialEq + Eq + Hash + Ord + Send + Sync + 'static;

    fn ctx(&self) -> Self::Ctx;
    fn zero(ctx: &Self::Ctx) -> Self;
    fn one(ctx: &Self::Ctx) -> Self;
    fn from_i64(ctx: &Self::Ctx, v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;
    /// A random element. Over the rationals the draw is a small integer.
    fn random<R: Rng + ?Sized>(ctx: &Self::Ctx, rng: &mut R) -> Self;
    /// Text form used by the Laurent text and JSON formats.
    fn to_text(&self) -> String;
    fn parse(ctx: &Self::Ctx, s: &str) -> Result<Self, SeriesError>;
    /// True when the text form needs no leading sign handling (non-negative).
    fn is_negative(&self) -> bool {
        false
    }
}

/// Exact rational numbers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rational(pub BigRational);

impl Rational {
    pub fn new(num: i64, den: i64) -> Self {
        Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

/// Range of the small integers drawn by [`Field::random`] over the rationals.
const RATIONAL_DRAW_RANGE: i64 = 6;

impl Field for Rational {
    type Ctx = ();

    fn ctx(&self) {}
    fn zero(_: &()) -> Self {
        Rational(BigRational::zero())
    }
    fn one(_: &()) -> Self {
        Rational(BigRational::one())
    }
    fn from_i64(_: &(), v: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(v)))
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn add(&self, other: &Self) -> Self {
        Rational(&self.0 + &other.0)
    }
    fn sub(&self, other: &Self) -> Self {
        Rational(&self.0 - &other.0)
    }
    fn mul(&self, other: &Self) -> Self {
        Rational(&self.0 * &other.0)
    }
    fn neg(&self) -> Self {
        Rational(-&self.0)
    }
    fn inv(&self) -> Option<Self> {
        (!self.0.is_zero()).then(|| Rational(self.0.recip()))
    }
    fn random<R: Rng + ?Sized>(_: &(), rng: &mut R) -> Self {
        Self::from_i64(&(), rng.gen_range(-RATIONAL_DRAW_RANGE..=RATIONAL_DRAW_RANGE))
    }
    fn to_text(&self) -> String {
        format!("{}/{}", self.0.numer(), self.0.denom())
    }
    fn parse(_: &(), s: &str) -> Result<Self, SeriesError> {
        let s = s.trim();
        let bad = || SeriesError::Parse(format!("bad rational coefficient `{s}`"));
        let value = match s.split_once('/') {
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().map_err(|_| bad())?;
                let d: BigInt = d.trim().parse().map_err(|_| bad())?;
                if d.is_zero() {
                    return Err(bad());
                }
                BigRational::new(n, d)
            }
            None => BigRational::from_integer(s.parse().map_err(|_| bad())?),
        };
        Ok(Rational(value))
    }
    fn is_negative(&self) -> bool {
        self.0.is_negative()
    }
}

/// Default prime for the finite-field mode.
pub const DEFAULT_PRIME: u32 = 10007;

/// An element of the prime field of order `modulus`, stored reduced.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fp {
    value: u32,
    modulus: u32,
}

impl Fp {
    pub fn new(value: i64, modulus: u32) -> Self {
        let m = modulus as i64;
        Fp { value: value.rem_euclid(m) as u32, modulus }
    }
    pub fn value(&self) -> u32 {
        self.value
    }
    pub fn modulus(&self) -> u32 {
        self.modulus
    }
    fn same(&self, other: &Self) {
        debug_assert_eq!(self.modulus, other.modulus, "mixed prime fields");
    }
}

impl fmt::Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Field for Fp {
    type Ctx = u32;

    fn ctx(&self) -> u32 {
        self.modulus
    }
    fn zero(p: &u32) -> Self {
        Fp { value: 0, modulus: *p }
    }
    fn one(p: &u32) -> Self {
        Fp::new(1, *p)
    }
    fn from_i64(p: &u32, v: i64) -> Self {
        Fp::new(v, *p)
    }
    fn is_zero(&self) -> bool {
        self.value == 0
    }
    fn add(&self, other: &Self) -> Self {
        self.same(other);
        let s = self.value as u64 + other.value as u64;
        Fp { value: (s % self.modulus as u64) as u32, modulus: self.modulus }
    }
    fn sub(&self, other: &Self) -> Self {
        self.same(other);
        let s = self.value as u64 + self.modulus as u64 - other.value as u64;
        Fp { value: (s % self.modulus as u64) as u32, modulus: self.modulus }
    }
    fn mul(&self, other: &Self) -> Self {
        self.same(other);
        let s = self.value as u64 * other.value as u64;
        Fp { value: (s % self.modulus as u64) as u32, modulus: self.modulus }
    }
    fn neg(&self) -> Self {
        Fp::new(-(self.value as i64), self.modulus)
    }
    fn inv(&self) -> Option<Self> {
        if self.value == 0 {
            return None;
        }
        // Fermat: a^(p-2)
        let p = self.modulus as u64;
        let (mut base, mut exp, mut acc) = (self.value as u64, p - 2, 1u64);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            exp >>= 1;
        }
        Some(Fp { value: acc as u32, modulus: self.modulus })
    }
    fn random<R: Rng + ?Sized>(p: &u32, rng: &mut R) -> Self {
        Fp { value: rng.gen_range(0..*p), modulus: *p }
    }
    fn to_text(&self) -> String {
        self.value.to_string()
    }
    fn parse(p: &u32, s: &str) -> Result<Self, SeriesError> {
        let s = s.trim();
        let bad = || SeriesError::Parse(format!("bad prime-field coefficient `{s}`"));
        match s.split_once('/') {
            Some((n, d)) => {
                let n: i64 = n.trim().parse().map_err(|_| bad())?;
                let d: i64 = d.trim().parse().map_err(|_| bad())?;
                let d = Fp::new(d, *p).inv().ok_or_else(bad)?;
                Ok(Fp::new(n, *p).mul(&d))
            }
            None => Ok(Fp::new(s.parse().map_err(|_| bad())?, *p)),
        }
    }
}

/// Checks that `p` is a prime small enough for `u64` products.
pub fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p as u64 {
        if (p as u64).is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fp_inverse_round_trips() {
        for v in 1..50 {
            let a = Fp::new(v, 10007);
            assert_eq!(a.mul(&a.inv().unwrap()), Fp::one(&10007));
        }
        assert!(Fp::zero(&7).inv().is_none());
    }

    #[test]
    fn rational_parse_and_print() {
        let r = Rational::parse(&(), "6/4").unwrap();
        assert_eq!(r.to_text(), "3/2");
        assert_eq!(Rational::parse(&(), "-2").unwrap(), Rational::from_i64(&(), -2));
        assert!(Rational::parse(&(), "1/0").is_err());
    }

    #[test]
    fn primality() {
        assert!(is_prime(10007));
        assert!(!is_prime(10005));
        assert!(is_prime(2));
    }
}
