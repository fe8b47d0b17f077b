//! Exact polynomial arithmetic over the rationals and their extensions.
//!
//! [`Poly`] is a dense univariate polynomial over any [`Ring`](crate::scalar::Ring);
//! nesting it gives multivariate polynomials in recursive form, which is how
//! resultants in one variable over coefficient rings in the others are
//! computed. [`BiPoly`] is the sparse bivariate type curves are stored in.

mod bivariate;
mod split;
mod univariate;

pub use bivariate::BiPoly;
pub use split::{at_v_zero, pseudo_remainder_in_v, real_imag_split, TriPoly, UxPoly, VRemainder};
pub use univariate::{
    content, denominator_lcm, discriminant, integer_gcd, integer_squarefree_decomposition, integer_squarefree_part,
    normalize_up_to_constant, primitive_integer_part, primitive_part, rational_squarefree_decomposition, resultant,
    to_rational, Poly,
};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::scalar::{Cplx, Ring};
use crate::Error;

/// `p(x0, y)` at a rational or Gaussian-rational `x0`.
pub fn evaluate_partial(p: &BiPoly<BigRational>, x0: &Cplx<BigRational>) -> Poly<Cplx<BigRational>> {
    p.eval_x_with(x0, |c| Cplx::real(c.clone()))
}

/// `Res_y(p, q)` as a polynomial in `x`.
pub fn resultant_y(p: &BiPoly<BigRational>, q: &BiPoly<BigRational>) -> Result<Poly<BigRational>, Error> {
    if p.is_zero() && q.is_zero() {
        return Err(Error::InvalidInput("resultant of two zero polynomials".into()));
    }
    let (pz, cp) = integer_y_poly(p);
    let (qz, cq) = integer_y_poly(q);
    let r = resultant(&pz, &qz);
    // Res(P / cp, Q / cq) = Res(P, Q) / (cp^deg Q * cq^deg P)
    let scale = cp.pow(q.deg_y()) * cq.pow(p.deg_y());
    Ok(to_rational(&r).map(|c| c / BigRational::from_integer(scale.clone())))
}

/// `(P, c)` with `P` integral and `p = P / c`.
fn integer_y_poly(p: &BiPoly<BigRational>) -> (Poly<Poly<BigInt>>, BigInt) {
    let rows = p.to_y_poly();
    let c = rows.coeffs().iter().fold(BigInt::one(), |acc, row| acc.lcm(&denominator_lcm(row)));
    let ints = rows.map(|row| row.map(|a| (a * BigRational::from_integer(c.clone())).to_integer()));
    (ints, c)
}

/// `Res_y(p, dp/dy)` normalized to a primitive integer polynomial with
/// positive leading coefficient.
pub fn discriminant_y(p: &BiPoly<BigRational>) -> Result<Poly<BigRational>, Error> {
    if p.deg_y() == 0 {
        return Err(Error::InvalidInput("polynomial is constant in y".into()));
    }
    let r = resultant_y(p, &p.diff_y())?;
    Ok(normalize_up_to_constant(&r))
}

/// Whether `a = c * b` for some nonzero rational `c`.
pub fn equal_up_to_constant(a: &Poly<BigRational>, b: &Poly<BigRational>) -> bool {
    if a.is_zero() || b.is_zero() {
        return a.is_zero() && b.is_zero();
    }
    normalize_up_to_constant(a) == normalize_up_to_constant(b)
}

/// Product of `(factor, exponent)` pairs.
pub fn product_of_powers(factors: &[(Poly<BigRational>, u32)]) -> Poly<BigRational> {
    factors.iter().fold(Poly::constant(crate::scalar::qi(1)), |acc, (f, k)| acc * f.pow(*k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{q, qi};

    fn qp(c: &[i64]) -> Poly<BigRational> {
        Poly::new(c.iter().map(|&v| qi(v)).collect())
    }

    #[test]
    fn discriminant_of_parabola_is_x() {
        let p = BiPoly::y().pow(2) - BiPoly::x();
        assert_eq!(discriminant_y(&p).unwrap(), qp(&[0, 1]));
    }

    #[test]
    fn resultant_with_linear() {
        let p = BiPoly::y().pow(2) - BiPoly::x();
        let r = resultant_y(&p, &BiPoly::y()).unwrap();
        assert!(equal_up_to_constant(&r, &qp(&[0, 1])));
        let quad = BiPoly::y().pow(2) + BiPoly::y() + BiPoly::x();
        let lin = BiPoly::y().scale(&qi(2)) + BiPoly::constant(qi(1));
        let r = resultant_y(&quad, &lin).unwrap();
        assert!(equal_up_to_constant(&r, &qp(&[-1, 4])));
    }

    #[test]
    fn constant_in_y_is_rejected() {
        assert!(discriminant_y(&BiPoly::x()).is_err());
        assert!(resultant_y(&BiPoly::zero(), &BiPoly::zero()).is_err());
    }

    #[test]
    fn evaluate_at_gaussian_point() {
        let p = BiPoly::y().pow(2) - BiPoly::x();
        let e = evaluate_partial(&p, &Cplx::new(qi(0), q(1, 2)));
        assert_eq!(e.coeff(0), Cplx::new(qi(0), q(-1, 2)));
    }
}
