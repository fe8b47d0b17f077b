use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::univariate::Poly;
use crate::scalar::Ring;

/// Sparse polynomial in an outer variable `x` and an inner variable `y`.
///
/// Keys are exponent pairs `(i, j)` for `x^i y^j`; zero coefficients are
/// never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BiPoly<T> {
    terms: BTreeMap<(u32, u32), T>,
}

impl<T: Ring> BiPoly<T> {
    pub fn from_terms<I: IntoIterator<Item = ((u32, u32), T)>>(it: I) -> Self {
        let mut p = BiPoly::zero();
        for (k, c) in it {
            p.add_term(k, c);
        }
        p
    }

    pub fn x() -> Self {
        BiPoly::from_terms([((1, 0), T::one())])
    }

    pub fn y() -> Self {
        BiPoly::from_terms([((0, 1), T::one())])
    }

    pub fn constant(c: T) -> Self {
        BiPoly::from_terms([((0, 0), c)])
    }

    pub fn add_term(&mut self, k: (u32, u32), c: T) {
        if c.is_zero() {
            return;
        }
        let new = match self.terms.remove(&k) {
            Some(old) => old + c,
            None => c,
        };
        if !new.is_zero() {
            self.terms.insert(k, new);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &T)> {
        self.terms.iter()
    }

    pub fn coeff(&self, i: u32, j: u32) -> T {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(T::zero)
    }

    pub fn nterms(&self) -> usize {
        self.terms.len()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|(i, j)| i + j).max().unwrap_or(0)
    }

    pub fn deg_x(&self) -> u32 {
        self.terms.keys().map(|k| k.0).max().unwrap_or(0)
    }

    pub fn deg_y(&self) -> u32 {
        self.terms.keys().map(|k| k.1).max().unwrap_or(0)
    }

    pub fn map<U: Ring, F: Fn(&T) -> U>(&self, f: F) -> BiPoly<U> {
        BiPoly::from_terms(self.terms.iter().map(|(k, c)| (*k, f(c))))
    }

    pub fn diff_x(&self) -> Self {
        BiPoly::from_terms(
            self.terms
                .iter()
                .filter(|((i, _), _)| *i > 0)
                .map(|((i, j), c)| ((i - 1, *j), c.clone() * T::from_i64(*i as i64))),
        )
    }

    pub fn diff_y(&self) -> Self {
        BiPoly::from_terms(
            self.terms
                .iter()
                .filter(|((_, j), _)| *j > 0)
                .map(|((i, j), c)| ((*i, j - 1), c.clone() * T::from_i64(*j as i64))),
        )
    }

    /// View as a polynomial in `y` whose coefficients are polynomials in `x`.
    pub fn to_y_poly(&self) -> Poly<Poly<T>> {
        let mut rows: Vec<Vec<T>> = vec![Vec::new(); self.deg_y() as usize + 1];
        for ((i, j), c) in &self.terms {
            let row = &mut rows[*j as usize];
            if row.len() <= *i as usize {
                row.resize(*i as usize + 1, T::zero());
            }
            row[*i as usize] = c.clone();
        }
        if self.is_zero() {
            return Poly::zero();
        }
        Poly::new(rows.into_iter().map(Poly::new).collect())
    }

    pub fn from_y_poly(p: &Poly<Poly<T>>) -> Self {
        BiPoly::from_terms(
            p.coeffs().iter().enumerate().flat_map(|(j, cx)| {
                cx.coeffs().iter().enumerate().map(move |(i, c)| ((i as u32, j as u32), c.clone()))
            }),
        )
    }

    /// View as a polynomial in `x` with coefficients in `y`.
    pub fn to_x_poly(&self) -> Poly<Poly<T>> {
        self.swap_vars().to_y_poly()
    }

    pub fn swap_vars(&self) -> Self {
        BiPoly::from_terms(self.terms.iter().map(|((i, j), c)| ((*j, *i), c.clone())))
    }

    /// `p(x0, y)` for `x0` in the coefficient ring.
    pub fn eval_x(&self, x0: &T) -> Poly<T> {
        self.eval_x_with(x0, |c| c.clone())
    }

    /// `p(x0, y)` for `x0` in an extension ring `U` (e.g. Gaussian rationals).
    pub fn eval_x_with<U: Ring, F: Fn(&T) -> U>(&self, x0: &U, embed: F) -> Poly<U> {
        let mut powers: Vec<U> = vec![U::one()];
        for _ in 0..self.deg_x() {
            let next = powers.last().unwrap().clone() * x0.clone();
            powers.push(next);
        }
        let mut out = vec![U::zero(); self.deg_y() as usize + 1];
        for ((i, j), c) in &self.terms {
            out[*j as usize] = out[*j as usize].clone() + embed(c) * powers[*i as usize].clone();
        }
        Poly::new(out)
    }

    pub fn eval(&self, x0: &T, y0: &T) -> T {
        self.eval_x(x0).eval(y0)
    }

    /// Substitute `x -> x + a*y` (an exact shear of the coordinates).
    pub fn shear(&self, a: &T) -> Self {
        let xs = BiPoly::x() + BiPoly::y().scale(a);
        let mut out = BiPoly::zero();
        for ((i, j), c) in &self.terms {
            let term = xs.pow(*i) * BiPoly::from_terms([((0, *j), c.clone())]);
            out = out + term;
        }
        out
    }

    /// Translate so that `(a, b)` moves to the origin: `p(x + a, y + b)`.
    pub fn translate(&self, a: &T, b: &T) -> Self {
        let xs = BiPoly::x() + BiPoly::constant(a.clone());
        let ys = BiPoly::y() + BiPoly::constant(b.clone());
        let mut out = BiPoly::zero();
        for ((i, j), c) in &self.terms {
            out = out + (xs.pow(*i) * ys.pow(*j)).scale(c);
        }
        out
    }

    pub fn scale(&self, k: &T) -> Self {
        BiPoly::from_terms(self.terms.iter().map(|(e, c)| (*e, c.clone() * k.clone())))
    }
}

impl<T: Ring> Zero for BiPoly<T> {
    fn zero() -> Self {
        BiPoly { terms: BTreeMap::new() }
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<T: Ring> One for BiPoly<T> {
    fn one() -> Self {
        BiPoly::constant(T::one())
    }
}

impl<T: Ring> Add for BiPoly<T> {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        for (k, c) in rhs.terms {
            self.add_term(k, c);
        }
        self
    }
}

impl<T: Ring> Sub for BiPoly<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<T: Ring> Neg for BiPoly<T> {
    type Output = Self;
    fn neg(self) -> Self {
        BiPoly { terms: self.terms.into_iter().map(|(k, c)| (k, -c)).collect() }
    }
}

impl<T: Ring> Mul for BiPoly<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let mut out = BiPoly::zero();
        for ((i1, j1), a) in &self.terms {
            for ((i2, j2), b) in &rhs.terms {
                out.add_term((i1 + i2, j1 + j2), a.clone() * b.clone());
            }
        }
        out
    }
}

impl<T: Ring> Ring for BiPoly<T> {
    fn from_i64(n: i64) -> Self {
        BiPoly::constant(T::from_i64(n))
    }
}

impl<T: fmt::Debug> fmt::Debug for BiPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::qi;
    use num_rational::BigRational;

    fn parabola() -> BiPoly<BigRational> {
        BiPoly::y().pow(2) - BiPoly::x()
    }

    #[test]
    fn evaluate_partial_substitutes() {
        let p = parabola().eval_x(&qi(4));
        assert_eq!(p, Poly::new(vec![qi(-4), qi(0), qi(1)]));
    }

    #[test]
    fn y_poly_roundtrip() {
        let p = parabola() * BiPoly::x() + BiPoly::constant(qi(3));
        assert_eq!(BiPoly::from_y_poly(&p.to_y_poly()), p);
    }

    #[test]
    fn shear_and_translate() {
        let p = parabola();
        let s = p.shear(&qi(1));
        assert_eq!(s.eval(&qi(2), &qi(3)), p.eval(&qi(5), &qi(3)));
        let t = p.translate(&qi(1), &qi(1));
        assert_eq!(t.coeff(0, 0), qi(0));
    }
}
