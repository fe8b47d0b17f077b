use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{ApproxReal, Domain, Field, Ring};

/// `re + i*im` over an arbitrary ring, so Gaussian rationals, dyadic and
/// floating complexes all share one implementation.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Cplx<T> {
    pub re: T,
    pub im: T,
}

impl<T: Ring> Cplx<T> {
    pub fn new(re: T, im: T) -> Self {
        Cplx { re, im }
    }

    pub fn real(re: T) -> Self {
        Cplx { re, im: T::zero() }
    }

    pub fn i() -> Self {
        Cplx { re: T::zero(), im: T::one() }
    }

    pub fn conj(&self) -> Self {
        Cplx { re: self.re.clone(), im: -self.im.clone() }
    }

    pub fn norm_sqr(&self) -> T {
        self.re.clone() * self.re.clone() + self.im.clone() * self.im.clone()
    }

    pub fn scale(&self, k: &T) -> Self {
        Cplx { re: self.re.clone() * k.clone(), im: self.im.clone() * k.clone() }
    }

    pub fn map<U, F: Fn(&T) -> U>(&self, f: F) -> Cplx<U> {
        Cplx { re: f(&self.re), im: f(&self.im) }
    }
}

impl<T: ApproxReal> Cplx<T> {
    pub fn abs(&self) -> T {
        self.norm_sqr().sqrt()
    }

    pub fn to_c64(&self) -> (f64, f64) {
        (self.re.to_f64(), self.im.to_f64())
    }

    pub fn from_c64(re: f64, im: f64, prec: u32) -> Self {
        Cplx { re: T::from_f64_prec(re, prec), im: T::from_f64_prec(im, prec) }
    }
}

impl<T: fmt::Debug> fmt::Debug for Cplx<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?} + {:?}i)", self.re, self.im)
    }
}

impl<T: Ring> Zero for Cplx<T> {
    fn zero() -> Self {
        Cplx { re: T::zero(), im: T::zero() }
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl<T: Ring> One for Cplx<T> {
    fn one() -> Self {
        Cplx { re: T::one(), im: T::zero() }
    }
}

impl<T: Ring> Add for Cplx<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Cplx { re: self.re + rhs.re, im: self.im + rhs.im }
    }
}

impl<T: Ring> Sub for Cplx<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Cplx { re: self.re - rhs.re, im: self.im - rhs.im }
    }
}

impl<T: Ring> Mul for Cplx<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Cplx {
            re: self.re.clone() * rhs.re.clone() - self.im.clone() * rhs.im.clone(),
            im: self.re * rhs.im + self.im * rhs.re,
        }
    }
}

impl<T: Ring> Neg for Cplx<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Cplx { re: -self.re, im: -self.im }
    }
}

impl<T: Field> Div for Cplx<T> {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        let n = rhs.norm_sqr();
        let num = self * rhs.conj();
        Cplx { re: num.re / n.clone(), im: num.im / n }
    }
}

impl<T: Ring> Ring for Cplx<T> {
    fn from_i64(n: i64) -> Self {
        Cplx::real(T::from_i64(n))
    }
}

impl<T: Field> Field for Cplx<T> {}

impl<T: Field> Domain for Cplx<T> {
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        (!rhs.is_zero()).then(|| self.clone() / rhs.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::qi;

    #[test]
    fn gaussian_division_is_exact() {
        let a = Cplx::new(qi(3), qi(4));
        let b = Cplx::new(qi(1), qi(-2));
        let c = a.clone() / b.clone();
        assert_eq!(c * b, a);
        assert_eq!(Cplx::<num_rational::BigRational>::i().pow(2), Cplx::from_i64(-1));
    }
}
