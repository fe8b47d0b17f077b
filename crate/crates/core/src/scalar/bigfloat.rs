use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::dyadic::{Dyadic, Rounding};
use super::{ApproxReal, Field, OrderedField, Ring};

/// Binary float with a per-value working precision.
///
/// Results of arithmetic are rounded to nearest at the larger precision of the
/// operands. Precision 0 marks an exact value (integers, literals) that adopts
/// the precision of whatever it is combined with.
#[derive(Clone)]
pub struct BigFloat {
    d: Dyadic,
    prec: u32,
}

const DEFAULT_DIV_PREC: u32 = 64;

impl BigFloat {
    pub fn new(d: Dyadic, prec: u32) -> Self {
        let d = if prec == 0 { d } else { d.round(prec, Rounding::Nearest) };
        BigFloat { d, prec }
    }

    pub fn exact(d: Dyadic) -> Self {
        BigFloat { d, prec: 0 }
    }

    pub fn from_rational(r: &BigRational, prec: u32) -> Self {
        BigFloat { d: Dyadic::from_rational_round(r, prec.max(1), Rounding::Nearest), prec }
    }

    pub fn dyadic(&self) -> &Dyadic {
        &self.d
    }

    pub fn into_dyadic(self) -> Dyadic {
        self.d
    }

    pub fn with_precision(&self, prec: u32) -> Self {
        BigFloat::new(self.d.clone(), prec)
    }

    fn joint(&self, other: &Self) -> u32 {
        self.prec.max(other.prec)
    }

    fn finish(d: Dyadic, prec: u32) -> Self {
        BigFloat::new(d, prec)
    }
}

impl fmt::Debug for BigFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}@{}", self.d, self.prec)
    }
}

impl PartialEq for BigFloat {
    fn eq(&self, other: &Self) -> bool {
        self.d == other.d
    }
}

impl PartialOrd for BigFloat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.d.cmp(&other.d))
    }
}

impl Zero for BigFloat {
    fn zero() -> Self {
        BigFloat::exact(Dyadic::zero())
    }
    fn is_zero(&self) -> bool {
        self.d.is_zero()
    }
}

impl One for BigFloat {
    fn one() -> Self {
        BigFloat::exact(Dyadic::one())
    }
}

impl Add for BigFloat {
    type Output = BigFloat;
    fn add(self, rhs: BigFloat) -> BigFloat {
        let p = self.joint(&rhs);
        BigFloat::finish(&self.d + &rhs.d, p)
    }
}

impl Sub for BigFloat {
    type Output = BigFloat;
    fn sub(self, rhs: BigFloat) -> BigFloat {
        let p = self.joint(&rhs);
        BigFloat::finish(&self.d - &rhs.d, p)
    }
}

impl Mul for BigFloat {
    type Output = BigFloat;
    fn mul(self, rhs: BigFloat) -> BigFloat {
        let p = self.joint(&rhs);
        BigFloat::finish(&self.d * &rhs.d, p)
    }
}

impl Div for BigFloat {
    type Output = BigFloat;
    fn div(self, rhs: BigFloat) -> BigFloat {
        let p = match self.joint(&rhs) {
            0 => DEFAULT_DIV_PREC,
            p => p,
        };
        BigFloat { d: self.d.div_round(&rhs.d, p, Rounding::Nearest), prec: p }
    }
}

impl Neg for BigFloat {
    type Output = BigFloat;
    fn neg(self) -> BigFloat {
        BigFloat { d: -self.d, prec: self.prec }
    }
}

impl Ring for BigFloat {
    fn from_i64(n: i64) -> Self {
        BigFloat::exact(Dyadic::from_i64(n))
    }
}

impl Field for BigFloat {}

impl OrderedField for BigFloat {
    fn abs(&self) -> Self {
        BigFloat { d: self.d.abs(), prec: self.prec }
    }
}

impl ApproxReal for BigFloat {
    fn from_f64_prec(x: f64, prec: u32) -> Self {
        BigFloat::new(Dyadic::from_f64(x), prec)
    }
    fn to_f64(&self) -> f64 {
        self.d.to_f64()
    }
    fn sqrt(&self) -> Self {
        let p = if self.prec == 0 { DEFAULT_DIV_PREC } else { self.prec };
        if self.d.is_negative() {
            return BigFloat::zero();
        }
        BigFloat { d: self.d.sqrt_round(p, Rounding::Nearest), prec: p }
    }
    fn from_dyadic(d: &Dyadic, prec: u32) -> Self {
        BigFloat::new(d.clone(), prec)
    }
    fn to_dyadic(&self) -> Dyadic {
        self.d.clone()
    }
    fn precision(&self) -> u32 {
        if self.prec == 0 {
            DEFAULT_DIV_PREC
        } else {
            self.prec
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precision_propagates() {
        let a = BigFloat::from_f64_prec(1.0, 200);
        let b = BigFloat::from_i64(3);
        let c = a / b;
        assert_eq!(c.precision(), 200);
        let err = (c * BigFloat::from_i64(3) - BigFloat::one()).abs();
        assert!(err.dyadic().ilog2().unwrap_or(i64::MIN) < -195);
    }

    #[test]
    fn sqrt_matches_f64() {
        let x = BigFloat::from_f64_prec(2.0, 100);
        assert!((x.sqrt().to_f64() - 2f64.sqrt()).abs() < 1e-16);
    }
}
