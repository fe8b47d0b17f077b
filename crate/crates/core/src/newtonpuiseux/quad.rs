use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::exactpoly::{rational_squarefree_decomposition, Poly};
use crate::scalar::{rational_to_f64, Field, Ring};
use crate::QPoly;

/// Number `a + b sqrt(d)` in `Q` or a quadratic field `Q(sqrt d)`.
///
/// `d` is a squarefree integer different from 0 and 1, or 0 for plain
/// rationals. Arithmetic between two different nonzero `d` is a logic error.
#[derive(Clone, Debug)]
pub struct QuadNumber {
    pub a: BigRational,
    pub b: BigRational,
    pub d: BigInt,
}

fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl QuadNumber {
    pub fn rational(a: BigRational) -> Self {
        QuadNumber { a, b: BigRational::zero(), d: BigInt::zero() }
    }

    /// `sqrt(r)` for a rational `r` that is not a rational square, as an
    /// element of `Q(sqrt d)` with `d` squarefree.
    pub fn sqrt_of_rational(r: &BigRational) -> Self {
        if let Some(s) = rational_nth_root(r, 2) {
            return QuadNumber::rational(s);
        }
        // sqrt(n/m) = sqrt(n m) / m
        let nm = r.numer() * r.denom();
        let (s, d) = split_square(&nm);
        QuadNumber { a: BigRational::zero(), b: BigRational::new(s, r.denom().clone()), d }
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero() || self.d.is_zero()
    }

    fn joint_d(&self, other: &Self) -> BigInt {
        if self.d.is_zero() {
            other.d.clone()
        } else {
            debug_assert!(other.d.is_zero() || other.d == self.d, "mixed quadratic fields");
            self.d.clone()
        }
    }

    fn d_rat(&self) -> BigRational {
        BigRational::from_integer(self.d.clone())
    }

    pub fn conj(&self) -> Self {
        QuadNumber { a: self.a.clone(), b: -self.b.clone(), d: self.d.clone() }
    }

    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - self.d_rat() * &self.b * &self.b
    }

    /// Monic minimal polynomial over `Q`.
    pub fn minimal_polynomial(&self) -> QPoly {
        if self.is_rational() {
            Poly::new(vec![-self.a.clone(), BigRational::one()])
        } else {
            Poly::new(vec![self.norm(), -q(2) * &self.a, BigRational::one()])
        }
    }

    /// Floating point value as `(re, im)`.
    pub fn to_c64(&self) -> (f64, f64) {
        let a = rational_to_f64(&self.a);
        if self.is_rational() {
            return (a, 0.0);
        }
        let b = rational_to_f64(&self.b);
        let r = self.d.to_f64().unwrap_or(f64::NAN).abs().sqrt();
        if self.d.is_negative() {
            (a, b * r)
        } else {
            (a + b * r, 0.0)
        }
    }

    /// Disk around [`to_c64`](Self::to_c64) containing this root of the
    /// minimal polynomial and not its conjugate.
    pub fn isolating_radius(&self) -> f64 {
        let (re, im) = self.to_c64();
        let r = 1e-9 * (1.0 + re.hypot(im));
        if self.is_rational() {
            return r;
        }
        let gap = rational_to_f64(&self.b).abs() * self.d.to_f64().unwrap_or(f64::NAN).abs().sqrt();
        r.min(gap / 2.0)
    }

    /// Square root inside the same field, if there is one.
    pub fn sqrt_in_field(&self) -> Option<Self> {
        if self.is_rational() {
            if let Some(s) = rational_nth_root(&self.a, 2) {
                return Some(QuadNumber { a: s, b: BigRational::zero(), d: self.d.clone() });
            }
            if self.d.is_zero() {
                return None;
            }
            // a = d v^2
            let v = rational_nth_root(&(&self.a / self.d_rat()), 2)?;
            return Some(QuadNumber { a: BigRational::zero(), b: v, d: self.d.clone() });
        }
        // (u + v sqrt d)^2 = a + b sqrt d: u^2 = (a +- sqrt(a^2 - d b^2)) / 2
        let disc = rational_nth_root(&self.norm(), 2)?;
        for u2 in [(&self.a + &disc) / q(2), (&self.a - &disc) / q(2)] {
            if u2.is_zero() {
                continue;
            }
            if let Some(u) = rational_nth_root(&u2, 2) {
                let v = &self.b / (q(2) * &u);
                return Some(QuadNumber { a: u, b: v, d: self.d.clone() });
            }
        }
        None
    }
}

/// Rational `n`-th root when it exists (odd roots of negatives included).
pub fn rational_nth_root(r: &BigRational, n: u32) -> Option<BigRational> {
    if r.is_negative() {
        if n.is_multiple_of(2) {
            return None;
        }
        return rational_nth_root(&-r, n).map(|s| -s);
    }
    let root = |x: &BigInt| {
        let s = x.nth_root(n);
        (num_traits::pow(s.clone(), n as usize) == *x).then_some(s)
    };
    Some(BigRational::new(root(r.numer())?, root(r.denom())?))
}

/// Write `n = s^2 d` with `d` free of small square factors.
fn split_square(n: &BigInt) -> (BigInt, BigInt) {
    let mut d = n.clone();
    let mut s = BigInt::one();
    let mut p = BigInt::from(2);
    let limit = BigInt::from(100_000);
    while p <= limit && &p * &p <= d.abs() {
        let p2 = &p * &p;
        while (&d % &p2).is_zero() {
            d /= &p2;
            s *= &p;
        }
        p += 1;
    }
    (s, d)
}

impl PartialEq for QuadNumber {
    fn eq(&self, other: &Self) -> bool {
        self.a == other.a && self.b == other.b && (self.b.is_zero() || self.d == other.d)
    }
}

impl Zero for QuadNumber {
    fn zero() -> Self {
        QuadNumber::rational(BigRational::zero())
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for QuadNumber {
    fn one() -> Self {
        QuadNumber::rational(BigRational::one())
    }
}

impl Add for QuadNumber {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let d = self.joint_d(&rhs);
        QuadNumber { a: self.a + rhs.a, b: self.b + rhs.b, d }
    }
}

impl Sub for QuadNumber {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        let d = self.joint_d(&rhs);
        QuadNumber { a: self.a - rhs.a, b: self.b - rhs.b, d }
    }
}

impl Neg for QuadNumber {
    type Output = Self;
    fn neg(self) -> Self {
        QuadNumber { a: -self.a, b: -self.b, d: self.d }
    }
}

impl Mul for QuadNumber {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let d = self.joint_d(&rhs);
        let dr = BigRational::from_integer(d.clone());
        QuadNumber { a: &self.a * &rhs.a + dr * &self.b * &rhs.b, b: &self.a * &rhs.b + &self.b * &rhs.a, d }
    }
}

impl Div for QuadNumber {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        let n = rhs.norm();
        assert!(!n.is_zero(), "division by zero");
        let c = self * rhs.conj();
        QuadNumber { a: c.a / &n, b: c.b / &n, d: c.d }
    }
}

impl Ring for QuadNumber {
    fn from_i64(n: i64) -> Self {
        QuadNumber::rational(q(n))
    }
}

impl Field for QuadNumber {}

impl fmt::Display for QuadNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            return write!(f, "{}", self.a);
        }
        let root = format!("sqrt({})", self.d);
        let b = if self.b.is_one() {
            root
        } else if (-&self.b).is_one() {
            format!("-{root}")
        } else {
            format!("{}*{root}", self.b)
        };
        if self.a.is_zero() {
            write!(f, "{b}")
        } else if let Some(rest) = b.strip_prefix('-') {
            write!(f, "{} - {rest}", self.a)
        } else {
            write!(f, "{} + {b}", self.a)
        }
    }
}

/// Exact algebraic number given by its minimal polynomial and a disk
/// isolating it from the other roots.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AlgebraicNumber {
    pub minimal_polynomial: Vec<String>,
    pub center: (f64, f64),
    pub radius: f64,
    pub exact: String,
}

impl From<&QuadNumber> for AlgebraicNumber {
    fn from(z: &QuadNumber) -> Self {
        AlgebraicNumber {
            minimal_polynomial: z.minimal_polynomial().coeffs().iter().map(|c| c.to_string()).collect(),
            center: z.to_c64(),
            radius: z.isolating_radius(),
            exact: z.to_string(),
        }
    }
}

/// Rational roots of a nonzero rational polynomial, with multiplicity.
pub fn rational_roots(p: &QPoly) -> Vec<(BigRational, usize)> {
    let mut out = Vec::new();
    for (g, k) in rational_squarefree_decomposition(p) {
        if g.deg() == 0 {
            continue;
        }
        let z = crate::exactpoly::primitive_integer_part(&g);
        let lc = BigRational::from_integer(z.lc().abs());
        let bound = cauchy_bound(&g);
        let Ok(roots) = crate::numroots::real_roots_in_interval(&g, &-bound.clone(), &bound) else { continue };
        for r in roots {
            // a rational root k/lc' has lc' | lc, so lc * root is an integer
            let width = BigRational::new(BigInt::one(), BigInt::from(4)) / &lc;
            let r = crate::numroots::refine_real_root(&g, &r, &width);
            let lo = (&r.lo * &lc).ceil();
            let hi = (&r.hi * &lc).floor();
            let mut c = lo;
            while c <= hi {
                let cand = &c / &lc;
                if g.eval(&cand).is_zero() {
                    out.push((cand, k));
                    break;
                }
                c += BigRational::one();
            }
        }
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

fn cauchy_bound(p: &QPoly) -> BigRational {
    let lc = p.lc().abs();
    let m = p.coeffs().iter().map(|c| c.abs()).max().unwrap_or_else(BigRational::zero);
    BigRational::one() + m / lc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn field_arithmetic() {
        let s = QuadNumber::sqrt_of_rational(&r(24, 1));
        assert_eq!(s.d, BigInt::from(6));
        assert_eq!(s.b, r(2, 1));
        let sq = s.clone() * s.clone();
        assert_eq!(sq, QuadNumber::rational(r(24, 1)));
        let x = QuadNumber::rational(r(3, 1)) + s.clone();
        let y = x.clone() / x.clone();
        assert!(y.is_one());
        assert_eq!(x.minimal_polynomial(), Poly::new(vec![r(-15, 1), r(-6, 1), r(1, 1)]));
    }

    #[test]
    fn square_roots() {
        let i5 = QuadNumber::sqrt_of_rational(&r(-5, 100));
        assert_eq!((i5.b.clone(), i5.d.clone()), (r(1, 10), BigInt::from(-5)));
        let (re, im) = i5.to_c64();
        assert!(re.abs() < 1e-15 && (im - 0.2236067977).abs() < 1e-9);
        // (1 + sqrt 2)^2 = 3 + 2 sqrt 2
        let t = QuadNumber { a: r(3, 1), b: r(2, 1), d: BigInt::from(2) };
        let s = t.sqrt_in_field().unwrap();
        assert_eq!(s.clone() * s, t);
        assert!(QuadNumber::rational(r(2, 1)).sqrt_in_field().is_none());
        assert_eq!(rational_nth_root(&r(-27, 8), 3), Some(r(-3, 2)));
    }

    #[test]
    fn rational_root_finding() {
        // (2x - 3)^2 (x + 5) (x^2 - 2)
        let p = Poly::new(vec![r(9, 1), r(-12, 1), r(4, 1)]);
        let p = &(&p * &Poly::new(vec![r(5, 1), r(1, 1)])) * &Poly::new(vec![r(-2, 1), r(0, 1), r(1, 1)]);
        assert_eq!(rational_roots(&p), vec![(r(-5, 1), 1), (r(3, 2), 2)]);
    }
}
