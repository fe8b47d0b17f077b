use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::bivariate::BiPoly;
use super::univariate::Poly;
use crate::scalar::{Domain, Ring};
use crate::Error;

/// Polynomial in `(x, u, v)` stored as a polynomial in `v` over `Q[x][u]`.
pub type TriPoly<T> = Poly<Poly<Poly<T>>>;

/// Polynomial in `u` with coefficients in `Q[x]`.
pub type UxPoly<T> = Poly<Poly<T>>;

fn binomial(n: u32, k: u32) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| acc * BigInt::from(n - i) / BigInt::from(i + 1))
}

fn tri_from_map<T: Ring>(m: &BTreeMap<(u32, u32, u32), T>) -> TriPoly<T> {
    let dv = m.keys().map(|k| k.0).max().unwrap_or(0) as usize;
    let mut v_coeffs: Vec<BTreeMap<(u32, u32), T>> = vec![BTreeMap::new(); dv + 1];
    for ((kv, ku, kx), c) in m {
        v_coeffs[*kv as usize].insert((*kx, *ku), c.clone());
    }
    Poly::new(v_coeffs.into_iter().map(|t| BiPoly::from_terms(t).to_y_poly()).collect())
}

/// Split `h(x,u,v) = p(x, u + i v)` into its real part `f_e` and the
/// imaginary part divided by `v`, `f_oo = f_o / v`.
pub fn real_imag_split(p: &BiPoly<BigRational>) -> (TriPoly<BigRational>, TriPoly<BigRational>) {
    let mut re: BTreeMap<(u32, u32, u32), BigRational> = BTreeMap::new();
    let mut im: BTreeMap<(u32, u32, u32), BigRational> = BTreeMap::new();
    for ((i, j), c) in p.terms() {
        for k in 0..=*j {
            let b = BigRational::from_integer(binomial(*j, k)) * c;
            let sign = if (k / 2) % 2 == 0 { b } else { -b };
            if k % 2 == 0 {
                let e = re.entry((k, j - k, *i)).or_insert_with(BigRational::zero);
                *e += sign;
            } else {
                let e = im.entry((k - 1, j - k, *i)).or_insert_with(BigRational::zero);
                *e += sign;
            }
        }
    }
    re.retain(|_, c| !c.is_zero());
    im.retain(|_, c| !c.is_zero());
    (tri_from_map(&re), tri_from_map(&im))
}

/// Remainder of `f_e` by `f_oo` as polynomials in `v`, written as
/// `R = (r2_num / r2_den) v^2 + (r0_num / r0_den)`.
///
/// The denominators are powers of `lc_v(f_oo)`; common powers are cancelled
/// by exact division. No further multivariate gcd is attempted.
#[derive(Clone, Debug)]
pub struct VRemainder {
    pub r2_num: UxPoly<BigRational>,
    pub r2_den: UxPoly<BigRational>,
    pub r0_num: UxPoly<BigRational>,
    pub r0_den: UxPoly<BigRational>,
    /// `lc_v(f_oo)`.
    pub lead: UxPoly<BigRational>,
    /// Exponent `e` in `lead^e * f_e = quotient * f_oo + remainder`.
    pub lead_power: u32,
    pub quotient: TriPoly<BigRational>,
    pub remainder: TriPoly<BigRational>,
}

impl VRemainder {
    /// Check the pseudo-division identity and the reduced-fraction form
    /// `r2_den * r0_den * f_e - q * f_oo - (r0_den * r2_num v^2 + r2_den * r0_num) = 0`.
    ///
    /// Returns the quotient `q` of the reduced identity when it is a polynomial.
    pub fn validate(&self, f_e: &TriPoly<BigRational>, f_oo: &TriPoly<BigRational>) -> Option<TriPoly<BigRational>> {
        let lhs = f_e.scale(&self.lead.pow(self.lead_power));
        if lhs != &(&self.quotient * f_oo) + &self.remainder {
            return None;
        }
        let dd = &self.r2_den * &self.r0_den;
        let r = Poly::new(vec![&self.r2_den * &self.r0_num, Poly::zero(), &self.r0_den * &self.r2_num]);
        let num = f_e.scale(&dd) - r;
        num.div_exact(f_oo)
    }
}

fn strip_lead(mut p: UxPoly<BigRational>, lead: &UxPoly<BigRational>, max: u32) -> (UxPoly<BigRational>, u32) {
    let mut k = 0;
    while k < max && !p.is_zero() {
        match p.div_exact(lead) {
            Some(q) => {
                p = q;
                k += 1;
            }
            None => break,
        }
    }
    (p, k)
}

pub fn pseudo_remainder_in_v(f_e: &TriPoly<BigRational>, f_oo: &TriPoly<BigRational>) -> Result<VRemainder, Error> {
    let df = f_oo.degree().ok_or_else(|| Error::Degenerate("f_oo is zero".into()))?;
    let de = f_e.deg();
    if de < df {
        return Err(Error::Degenerate(format!("deg_v f_e = {de} is smaller than deg_v f_oo = {df}")));
    }
    let lead = f_oo.lc();
    let lead_power = (de - df + 1) as u32;
    let (quotient, remainder) = f_e.pseudo_div_rem(f_oo);
    for (k, c) in remainder.coeffs().iter().enumerate() {
        if k != 0 && k != 2 && !c.is_zero() {
            return Err(Error::Degenerate(format!("remainder has a v^{k} term; expected only v^2 and v^0")));
        }
    }
    let (r2_num, k2) = strip_lead(remainder.coeff(2), &lead, lead_power);
    let (r0_num, k0) = strip_lead(remainder.coeff(0), &lead, lead_power);
    Ok(VRemainder {
        r2_den: lead.pow(lead_power - k2),
        r0_den: lead.pow(lead_power - k0),
        r2_num,
        r0_num,
        lead,
        lead_power,
        quotient,
        remainder,
    })
}

/// Substitute `v = 0`, giving a polynomial in `x` and `u` (as `x`,`y`).
pub fn at_v_zero<T: Ring>(p: &TriPoly<T>) -> BiPoly<T> {
    BiPoly::from_y_poly(&p.coeff(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::qi;

    fn uxpoly_from(b: &BiPoly<BigRational>) -> UxPoly<BigRational> {
        b.to_y_poly()
    }

    #[test]
    fn split_of_parabola() {
        let p = BiPoly::y().pow(2) - BiPoly::x();
        let (fe, foo) = real_imag_split(&p);
        // f_e = u^2 - v^2 - x
        assert_eq!(fe.deg(), 2);
        assert_eq!(fe.coeff(2), Poly::constant(Poly::constant(qi(-1))));
        let u2_minus_x = uxpoly_from(&(BiPoly::y().pow(2) - BiPoly::x()));
        assert_eq!(fe.coeff(0), u2_minus_x);
        // f_oo = 2u
        assert_eq!(foo, Poly::constant(uxpoly_from(&BiPoly::y().scale(&qi(2)))));
    }

    #[test]
    fn split_of_cube() {
        let (_, foo) = real_imag_split(&BiPoly::y().pow(3));
        // 3u^2 - v^2
        assert_eq!(foo.coeff(0), uxpoly_from(&BiPoly::y().pow(2).scale(&qi(3))));
        assert_eq!(foo.coeff(2), Poly::constant(Poly::constant(qi(-1))));
    }

    #[test]
    fn trivial_remainder() {
        let v = Poly::<UxPoly<BigRational>>::x();
        let rem = pseudo_remainder_in_v(&(v.clone() * v.clone()), &v).unwrap();
        assert!(rem.r2_num.is_zero() && rem.r0_num.is_zero());
    }
}
