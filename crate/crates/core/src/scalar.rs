//! Scalar backends.
//!
//! The default backend is exact arbitrary-precision rationals; every
//! correctness-critical computation (group relations, invariance checks, rank
//! tests) runs over it. A floating backend with the same operation surface
//! exists for performance experiments only; comparisons there take an explicit
//! tolerance, which the exact backend ignores.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, ToPrimitive, Zero};
use rand::Rng;
use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

/// Exact rational scalar, the default backend.
pub type Rat = BigRational;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from(BigInt::from(n))
}

pub trait Scalar:
    Clone
    + PartialEq
    + Debug
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn from_rat(r: &Rat) -> Self;
    fn is_zero(&self) -> bool;
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self) -> Option<Self>;
    /// Equality up to `tol`; exact backends ignore the tolerance.
    fn eq_tol(&self, other: &Self, tol: f64) -> bool;
    fn to_f64(&self) -> f64;
}

impl Scalar for Rat {
    fn zero() -> Self {
        <Rat as Zero>::zero()
    }

    fn one() -> Self {
        <Rat as One>::one()
    }

    fn from_rat(r: &Rat) -> Self {
        r.clone()
    }

    fn is_zero(&self) -> bool {
        <Rat as Zero>::is_zero(self)
    }

    fn inv(&self) -> Option<Self> {
        if <Rat as Zero>::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }

    fn eq_tol(&self, other: &Self, _tol: f64) -> bool {
        self == other
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
}

impl Scalar for f64 {
    fn zero() -> Self {
        0.0
    }

    fn one() -> Self {
        1.0
    }

    fn from_rat(r: &Rat) -> Self {
        ToPrimitive::to_f64(r).unwrap_or(f64::NAN)
    }

    fn is_zero(&self) -> bool {
        *self == 0.0
    }

    fn inv(&self) -> Option<Self> {
        if *self == 0.0 {
            None
        } else {
            Some(1.0 / *self)
        }
    }

    fn eq_tol(&self, other: &Self, tol: f64) -> bool {
        (*self - *other).abs() <= tol
    }

    fn to_f64(&self) -> f64 {
        *self
    }
}

/// Bounds for the uniform rational sampler. Numerators are drawn from
/// `[-max_num, max_num]`, denominators from `[1, max_den]`.
#[derive(Clone, Copy, Debug)]
pub struct SampleBounds {
    pub max_num: i64,
    pub max_den: i64,
}

impl Default for SampleBounds {
    fn default() -> Self {
        SampleBounds { max_num: 16, max_den: 4 }
    }
}

/// One rational, uniform over the (numerator, denominator) grid.
pub fn sample_rat<R: Rng>(rng: &mut R, bounds: &SampleBounds) -> Rat {
    let n = rng.gen_range(-bounds.max_num..=bounds.max_num);
    let d = rng.gen_range(1..=bounds.max_den);
    rat(n, d)
}

/// Serialize a rational as a `[numerator, denominator]` pair of i64.
/// Values outside i64 range are rejected; sampled data never gets there.
pub fn rat_to_pair(r: &Rat) -> Result<(i64, i64), crate::Error> {
    let n = r.numer().to_i64();
    let d = r.denom().to_i64();
    match (n, d) {
        (Some(n), Some(d)) => Ok((n, d)),
        _ => Err(crate::Error::NumericOverflow(format!(
            "rational {r} does not fit an i64 pair"
        ))),
    }
}

pub fn pair_to_rat(n: i64, d: i64) -> Result<Rat, crate::Error> {
    if d == 0 {
        return Err(crate::Error::InvalidInput("zero denominator".into()));
    }
    Ok(rat(n, d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::Signed;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn rational_basics() {
        let a = rat(1, 2);
        let b = rat(1, 3);
        assert_eq!(a.clone() + b.clone(), rat(5, 6));
        assert_eq!(a.clone() * b.clone(), rat(1, 6));
        assert_eq!(Scalar::inv(&a).unwrap(), rat_int(2));
        assert!(Scalar::inv(&<Rat as Scalar>::zero()).is_none());
    }

    #[test]
    fn sampling_respects_bounds_and_seed() {
        let bounds = SampleBounds { max_num: 3, max_den: 2 };
        let mut r1 = ChaCha8Rng::seed_from_u64(7);
        let mut r2 = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..100 {
            let x = sample_rat(&mut r1, &bounds);
            let y = sample_rat(&mut r2, &bounds);
            assert_eq!(x, y);
            assert!(x.numer().abs() <= BigInt::from(3 * 2));
        }
    }

    #[test]
    fn float_tolerance() {
        assert!(1.0f64.eq_tol(&(1.0 + 1e-12), 1e-9));
        assert!(!1.0f64.eq_tol(&1.1, 1e-9));
    }

    #[test]
    fn pair_roundtrip() {
        let r = rat(-7, 3);
        let (n, d) = rat_to_pair(&r).unwrap();
        assert_eq!(pair_to_rat(n, d).unwrap(), r);
    }
}
