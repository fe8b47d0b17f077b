//! Scalar rings the polynomial and root-finding code is generic over.
//!
//! Everything above this module is written against [`Ring`], [`Field`] and
//! [`Domain`]. Concrete instances: `BigInt`, `BigRational`, `f64`, exact
//! binary fractions ([`Dyadic`]), rounded binary floats ([`BigFloat`]),
//! Gaussian extensions ([`Cplx`]) and polynomial rings over any of these.

mod bigfloat;
mod complex;
mod dyadic;

pub use bigfloat::BigFloat;
pub use complex::Cplx;
pub use dyadic::{Dyadic, Rounding};

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Commutative ring with unit.
pub trait Ring:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn from_i64(n: i64) -> Self;

    fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }
}

/// Ring where every nonzero element is invertible (possibly approximately,
/// for floating types).
pub trait Field: Ring + Div<Output = Self> {
    fn inv(&self) -> Self {
        Self::one() / self.clone()
    }
}

/// Integral domain with exact division, enough for subresultant sequences.
pub trait Domain: Ring {
    /// `self / rhs` when the division is exact, `None` otherwise.
    fn div_exact(&self, rhs: &Self) -> Option<Self>;
}

/// Fields whose elements can be compared with zero exactly.
pub trait OrderedField: Field + PartialOrd {
    fn abs(&self) -> Self {
        if *self < Self::zero() {
            -self.clone()
        } else {
            self.clone()
        }
    }
}

impl Ring for BigInt {
    fn from_i64(n: i64) -> Self {
        BigInt::from(n)
    }
}

impl Domain for BigInt {
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(rhs);
        r.is_zero().then_some(q)
    }
}

impl Ring for BigRational {
    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
}

impl Field for BigRational {}

impl OrderedField for BigRational {
    fn abs(&self) -> Self {
        Signed::abs(self)
    }
}

impl Domain for BigRational {
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        (!rhs.is_zero()).then(|| self / rhs)
    }
}

impl Ring for f64 {
    fn from_i64(n: i64) -> Self {
        n as f64
    }
}

impl Field for f64 {}

impl OrderedField for f64 {
    fn abs(&self) -> Self {
        f64::abs(*self)
    }
}

/// Approximate real scalars used by the numerical root finders.
pub trait ApproxReal: OrderedField {
    fn from_f64_prec(x: f64, prec: u32) -> Self;
    fn to_f64(&self) -> f64;
    fn sqrt(&self) -> Self;
    /// Working precision in bits (53 for `f64`).
    fn precision(&self) -> u32;
    fn from_dyadic(d: &Dyadic, prec: u32) -> Self;
    fn to_dyadic(&self) -> Dyadic;
}

impl ApproxReal for f64 {
    fn from_f64_prec(x: f64, _prec: u32) -> Self {
        x
    }
    fn to_f64(&self) -> f64 {
        *self
    }
    fn sqrt(&self) -> Self {
        f64::sqrt(*self)
    }
    fn precision(&self) -> u32 {
        53
    }
    fn from_dyadic(d: &Dyadic, _prec: u32) -> Self {
        d.to_f64()
    }
    fn to_dyadic(&self) -> Dyadic {
        Dyadic::from_f64(*self)
    }
}

/// Rational number from a pair of machine integers.
pub fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Integer as a rational.
pub fn qi(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Nearest `f64` to a rational.
pub fn rational_to_f64(r: &BigRational) -> f64 {
    Dyadic::from_rational_round(r, 64, Rounding::Nearest).to_f64()
}
