use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{Domain, Ring};

/// Rounding direction for the inexact dyadic operations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rounding {
    Down,
    Up,
    Nearest,
}

/// Exact binary fraction `mant * 2^exp`.
///
/// Ring operations are exact. Division, square roots and conversion from
/// rationals round in an explicit direction, which is what the certification
/// code relies on for one-sided bounds.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Dyadic {
    mant: BigInt,
    exp: i64,
}

fn shift_round(m: &BigInt, shift: u64, mode: Rounding) -> BigInt {
    if shift == 0 {
        return m.clone();
    }
    match mode {
        Rounding::Down => m >> shift,
        Rounding::Up => -((-m) >> shift),
        Rounding::Nearest => {
            let half = BigInt::one() << (shift - 1);
            (m + half) >> shift
        }
    }
}

impl Dyadic {
    pub fn new(mant: BigInt, exp: i64) -> Self {
        let mut d = Dyadic { mant, exp };
        d.normalize();
        d
    }

    fn normalize(&mut self) {
        if self.mant.is_zero() {
            self.exp = 0;
            return;
        }
        if let Some(tz) = self.mant.trailing_zeros() {
            if tz > 0 {
                self.mant >>= tz;
                self.exp += tz as i64;
            }
        }
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mant
    }

    pub fn exponent(&self) -> i64 {
        self.exp
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Dyadic::new(n, 0)
    }

    /// Exact conversion; every finite `f64` is dyadic.
    pub fn from_f64(x: f64) -> Self {
        assert!(x.is_finite(), "non-finite float {x}");
        if x == 0.0 {
            return Dyadic::zero();
        }
        let bits = x.to_bits();
        let sign = if bits >> 63 == 1 { -1 } else { 1 };
        let exp_bits = ((bits >> 52) & 0x7ff) as i64;
        let frac = bits & ((1u64 << 52) - 1);
        let (m, e) = if exp_bits == 0 { (frac, -1074) } else { (frac | (1u64 << 52), exp_bits - 1075) };
        Dyadic::new(BigInt::from(m) * sign, e)
    }

    /// Number of significant bits of the mantissa.
    pub fn bits(&self) -> u64 {
        self.mant.bits()
    }

    /// `floor(log2 |self|)`, or `None` for zero.
    pub fn ilog2(&self) -> Option<i64> {
        (!self.mant.is_zero()).then(|| self.exp + self.mant.bits() as i64 - 1)
    }

    pub fn is_negative(&self) -> bool {
        self.mant.sign() == Sign::Minus
    }

    pub fn abs(&self) -> Self {
        Dyadic { mant: self.mant.abs(), exp: self.exp }
    }

    pub fn mul_pow2(&self, k: i64) -> Self {
        if self.mant.is_zero() {
            return self.clone();
        }
        Dyadic { mant: self.mant.clone(), exp: self.exp + k }
    }

    /// Round to `prec` significant bits.
    pub fn round(&self, prec: u32, mode: Rounding) -> Self {
        let bits = self.mant.bits();
        if bits <= prec as u64 {
            return self.clone();
        }
        let shift = bits - prec as u64;
        Dyadic::new(shift_round(&self.mant, shift, mode), self.exp + shift as i64)
    }

    /// Round to an absolute grid `2^-frac_bits`.
    pub fn round_abs(&self, frac_bits: i64, mode: Rounding) -> Self {
        if self.exp >= -frac_bits {
            return self.clone();
        }
        let shift = (-frac_bits - self.exp) as u64;
        Dyadic::new(shift_round(&self.mant, shift, mode), -frac_bits)
    }

    pub fn from_rational_round(r: &BigRational, prec: u32, mode: Rounding) -> Self {
        if r.is_zero() {
            return Dyadic::zero();
        }
        let n = r.numer();
        let d = r.denom();
        // choose k so that n * 2^k / d has about prec + 2 bits
        let k = prec as i64 + 2 + d.bits() as i64 - n.bits() as i64;
        let num = if k >= 0 { n << (k as u64) } else { n >> ((-k) as u64) };
        let exact_shift = k < 0 && (n.clone() % (BigInt::one() << ((-k) as u64))) != BigInt::zero();
        let (qt, rm) = num.div_mod_floor(d);
        let inexact = !rm.is_zero() || exact_shift;
        let mant = match mode {
            Rounding::Down => qt,
            Rounding::Up => {
                if inexact {
                    qt + 1
                } else {
                    qt
                }
            }
            Rounding::Nearest => {
                let twice = rm * 2;
                if &twice >= d {
                    qt + 1
                } else {
                    qt
                }
            }
        };
        Dyadic::new(mant, -k).round(prec, mode)
    }

    pub fn to_rational(&self) -> BigRational {
        if self.exp >= 0 {
            BigRational::from_integer(&self.mant << (self.exp as u64))
        } else {
            BigRational::new(self.mant.clone(), BigInt::one() << ((-self.exp) as u64))
        }
    }

    pub fn to_f64(&self) -> f64 {
        if self.mant.is_zero() {
            return 0.0;
        }
        let bits = self.mant.bits();
        let (m, e) = if bits > 60 {
            let s = bits - 60;
            (&self.mant >> s, self.exp + s as i64)
        } else {
            (self.mant.clone(), self.exp)
        };
        let mf = m.to_f64().unwrap_or(0.0);
        if e > 2000 {
            return mf * f64::INFINITY;
        }
        if e < -2200 {
            return 0.0;
        }
        let e = e as i32;
        // split to avoid intermediate overflow/underflow
        mf * 2f64.powi(e / 2) * 2f64.powi(e - e / 2)
    }

    /// `self / rhs` rounded to `prec` significant bits.
    pub fn div_round(&self, rhs: &Dyadic, prec: u32, mode: Rounding) -> Dyadic {
        assert!(!rhs.mant.is_zero(), "dyadic division by zero");
        if self.mant.is_zero() {
            return Dyadic::zero();
        }
        let k = prec as i64 + 2 + rhs.mant.bits() as i64 - self.mant.bits() as i64;
        let k = k.max(0) as u64;
        let num = &self.mant << k;
        let (mut qt, rm) = num.div_mod_floor(&rhs.mant);
        match mode {
            Rounding::Down => {}
            Rounding::Up => {
                if !rm.is_zero() {
                    qt += 1;
                }
            }
            Rounding::Nearest => {
                if Signed::abs(&(rm * BigInt::from(2))) >= rhs.mant.abs() {
                    qt += 1;
                }
            }
        }
        Dyadic::new(qt, self.exp - rhs.exp - k as i64).round(prec, mode)
    }

    /// Square root of a nonnegative value rounded to `prec` bits.
    pub fn sqrt_round(&self, prec: u32, mode: Rounding) -> Dyadic {
        assert!(!self.is_negative(), "sqrt of negative dyadic");
        if self.mant.is_zero() {
            return Dyadic::zero();
        }
        // mant * 2^exp = (mant << s) * 2^(exp - s), exp - s even, enough bits
        let want = 2 * prec as i64 + 4;
        let mut s = (want - self.mant.bits() as i64).max(0);
        if (self.exp - s).rem_euclid(2) != 0 {
            s += 1;
        }
        let m = &self.mant << (s as u64);
        let r = m.sqrt();
        let exact = &r * &r == m;
        let r = match mode {
            Rounding::Up if !exact => r + 1,
            Rounding::Nearest => {
                // r <= sqrt(m) < r + 1; pick nearer
                let mid = (&r * 2 + 1) * (&r * 2 + 1);
                if m * 4 >= mid {
                    r + 1
                } else {
                    r
                }
            }
            _ => r,
        };
        Dyadic::new(r, (self.exp - s) / 2).round(prec, mode)
    }
}

impl Default for Dyadic {
    fn default() -> Self {
        Dyadic::zero()
    }
}

impl fmt::Debug for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:e}", self.to_f64())
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_f64())
    }
}

impl Zero for Dyadic {
    fn zero() -> Self {
        Dyadic { mant: BigInt::zero(), exp: 0 }
    }
    fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }
}

impl One for Dyadic {
    fn one() -> Self {
        Dyadic { mant: BigInt::one(), exp: 0 }
    }
}

impl Add for Dyadic {
    type Output = Dyadic;
    fn add(self, rhs: Dyadic) -> Dyadic {
        &self + &rhs
    }
}

impl<'a> Add<&'a Dyadic> for &'a Dyadic {
    type Output = Dyadic;
    fn add(self, rhs: &Dyadic) -> Dyadic {
        if self.mant.is_zero() {
            return rhs.clone();
        }
        if rhs.mant.is_zero() {
            return self.clone();
        }
        match self.exp.cmp(&rhs.exp) {
            Ordering::Equal => Dyadic::new(&self.mant + &rhs.mant, self.exp),
            Ordering::Less => Dyadic::new(&self.mant + (&rhs.mant << ((rhs.exp - self.exp) as u64)), self.exp),
            Ordering::Greater => Dyadic::new((&self.mant << ((self.exp - rhs.exp) as u64)) + &rhs.mant, rhs.exp),
        }
    }
}

impl Sub for Dyadic {
    type Output = Dyadic;
    fn sub(self, rhs: Dyadic) -> Dyadic {
        &self - &rhs
    }
}

impl<'a> Sub<&'a Dyadic> for &'a Dyadic {
    type Output = Dyadic;
    fn sub(self, rhs: &Dyadic) -> Dyadic {
        self + &(-rhs)
    }
}

impl Mul for Dyadic {
    type Output = Dyadic;
    fn mul(self, rhs: Dyadic) -> Dyadic {
        &self * &rhs
    }
}

impl<'a> Mul<&'a Dyadic> for &'a Dyadic {
    type Output = Dyadic;
    fn mul(self, rhs: &Dyadic) -> Dyadic {
        if self.mant.is_zero() || rhs.mant.is_zero() {
            return Dyadic::zero();
        }
        // product of normalized (odd) mantissas stays odd
        Dyadic { mant: &self.mant * &rhs.mant, exp: self.exp + rhs.exp }
    }
}

impl Neg for Dyadic {
    type Output = Dyadic;
    fn neg(self) -> Dyadic {
        Dyadic { mant: -self.mant, exp: self.exp }
    }
}

impl Neg for &Dyadic {
    type Output = Dyadic;
    fn neg(self) -> Dyadic {
        Dyadic { mant: -&self.mant, exp: self.exp }
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let d = self - other;
        d.mant.sign().cmp(&Sign::NoSign)
    }
}

impl Ring for Dyadic {
    fn from_i64(n: i64) -> Self {
        Dyadic::new(BigInt::from(n), 0)
    }
}

impl Domain for Dyadic {
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        if rhs.mant.is_zero() {
            return None;
        }
        let (q, r) = self.mant.div_rem(&rhs.mant);
        r.is_zero().then(|| Dyadic::new(q, self.exp - rhs.exp))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::q;

    #[test]
    fn f64_roundtrip_is_exact() {
        for x in [0.1, -3.75, 1e-300, 123456789.125, 5e-324] {
            assert_eq!(Dyadic::from_f64(x).to_f64(), x);
        }
    }

    #[test]
    fn directed_rounding_brackets_rationals() {
        let r = q(1, 3);
        let lo = Dyadic::from_rational_round(&r, 40, Rounding::Down);
        let hi = Dyadic::from_rational_round(&r, 40, Rounding::Up);
        assert!(lo.to_rational() < r && r < hi.to_rational());
        let width = (hi - lo).to_f64();
        assert!(width > 0.0 && width < 1e-12);
    }

    #[test]
    fn sqrt_bounds() {
        let two = Dyadic::from_i64(2);
        let lo = two.sqrt_round(80, Rounding::Down);
        let hi = two.sqrt_round(80, Rounding::Up);
        assert!(&lo * &lo <= two && &hi * &hi >= two);
        assert!((hi.to_f64() - std::f64::consts::SQRT_2).abs() < 1e-15);
        let four = Dyadic::from_i64(4);
        assert_eq!(four.sqrt_round(10, Rounding::Up), Dyadic::from_i64(2));
    }

    #[test]
    fn division_rounding() {
        let a = Dyadic::from_i64(1);
        let b = Dyadic::from_i64(3);
        let lo = a.div_round(&b, 50, Rounding::Down);
        let hi = a.div_round(&b, 50, Rounding::Up);
        assert!(&lo * &b <= a && &hi * &b >= a);
        assert_eq!(Dyadic::from_i64(6).div_round(&b, 5, Rounding::Up), Dyadic::from_i64(2));
    }

    #[test]
    fn ordering_and_arithmetic() {
        let a = Dyadic::from_f64(0.75);
        let b = Dyadic::from_f64(-1.5);
        assert!(b < a);
        assert_eq!((&a + &b).to_f64(), -0.75);
        assert_eq!((&a * &b).to_f64(), -1.125);
        assert_eq!(Dyadic::from_f64(0.5).ilog2(), Some(-1));
    }
}
