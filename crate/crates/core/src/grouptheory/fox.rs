//! Fox free differential calculus and Alexander polynomials.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::snf::invariant_factors;
use super::word::{FreeWord, GroupPresentation};
use crate::exactpoly::{primitive_integer_part, Poly};
use crate::{Error, QPoly, ZPoly};

/// Element of the integral group ring of the free group.
pub type GroupRingElement = BTreeMap<FreeWord, i64>;

fn add_term(e: &mut GroupRingElement, w: FreeWord, c: i64) {
    let v = e.entry(w.clone()).or_insert(0);
    *v += c;
    if *v == 0 {
        e.remove(&w);
    }
}

/// Fox derivative `d w / d x_j` in the free group ring.
pub fn fox_derivative(w: &FreeWord, j: usize) -> GroupRingElement {
    let mut out = GroupRingElement::new();
    let mut prefix = FreeWord::identity();
    for &l in w.letters() {
        if l.unsigned_abs() as usize == j {
            if l > 0 {
                add_term(&mut out, prefix.clone(), 1);
            } else {
                let mut p = prefix.clone();
                p.push(l);
                add_term(&mut out, p, -1);
            }
        }
        prefix.push(l);
    }
    out
}

/// Product in the group ring.
pub fn ring_mul(a: &GroupRingElement, b: &GroupRingElement) -> GroupRingElement {
    let mut out = GroupRingElement::new();
    for (u, c) in a {
        for (v, d) in b {
            add_term(&mut out, u.mul(v), c * d);
        }
    }
    out
}

/// Check `sum_j (d r / d x_j)(x_j - 1) = r - 1`.
pub fn fundamental_identity_holds(r: &FreeWord, generators: usize) -> bool {
    let mut lhs = GroupRingElement::new();
    for j in 1..=generators {
        let mut xm1 = GroupRingElement::new();
        add_term(&mut xm1, FreeWord::generator(j), 1);
        add_term(&mut xm1, FreeWord::identity(), -1);
        for (w, c) in ring_mul(&fox_derivative(r, j), &xm1) {
            add_term(&mut lhs, w, c);
        }
    }
    let mut rhs = GroupRingElement::new();
    add_term(&mut rhs, r.clone(), 1);
    add_term(&mut rhs, FreeWord::identity(), -1);
    lhs == rhs
}

/// Laurent polynomial in `t` as exponent -> coefficient.
type Laurent = BTreeMap<i64, i64>;

/// Fox derivative pushed to `Z[t, t^-1]` by `x_k -> t^{deg[k]}`.
fn abelian_fox(w: &FreeWord, j: usize, deg: &[i64]) -> Laurent {
    let mut out = Laurent::new();
    let mut e = 0i64;
    for &l in w.letters() {
        let k = l.unsigned_abs() as usize;
        if l < 0 {
            e -= deg[k - 1];
        }
        if k == j {
            *out.entry(e).or_insert(0) += l.signum() as i64;
        }
        if l > 0 {
            e += deg[k - 1];
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

fn laurent_to_poly(l: &Laurent, shift: i64) -> QPoly {
    let top = l.keys().next_back().map_or(0, |&e| e - shift);
    let mut c = vec![BigRational::zero(); top as usize + 1];
    for (&e, &v) in l {
        c[(e - shift) as usize] = BigRational::from_integer(BigInt::from(v));
    }
    Poly::new(c)
}

/// Alexander polynomial of the presentation for the degree map
/// `x_k -> t^{deg[k]}`: the gcd of the `(n-1)`-minors of the abelianized Fox
/// matrix, as an integer polynomial with positive leading coefficient,
/// content removed and no factor `t`. The zero polynomial is returned when
/// all those minors vanish.
pub fn alexander_polynomial(p: &GroupPresentation, deg: &[i64]) -> Result<ZPoly, Error> {
    let n = p.generators;
    if deg.len() != n {
        return Err(Error::InvalidInput(format!("degree map has {} entries for {n} generators", deg.len())));
    }
    for r in &p.relators {
        let s: i64 = r.exponent_sums(n).iter().zip(deg).map(|(a, b)| a * b).sum();
        if s != 0 {
            return Err(Error::InvalidInput(format!("relator {r} has degree {s}, not a homomorphism")));
        }
    }
    if n == 0 {
        return Ok(Poly::constant(BigInt::one()));
    }
    // rows of Laurent entries, each row shifted by a unit to be polynomial
    let rows: Vec<Vec<QPoly>> = p
        .relators
        .iter()
        .map(|r| {
            let entries: Vec<Laurent> = (1..=n).map(|j| abelian_fox(r, j, deg)).collect();
            let shift = entries.iter().filter_map(|l| l.keys().next().copied()).min().unwrap_or(0);
            entries.iter().map(|l| laurent_to_poly(l, shift)).collect()
        })
        .collect();
    let mut g: Option<QPoly> = None;
    for skip in 0..n {
        let m: Vec<Vec<QPoly>> = rows
            .iter()
            .map(|r| r.iter().enumerate().filter(|(j, _)| *j != skip).map(|(_, x)| x.clone()).collect())
            .collect();
        let minor = if n == 1 {
            Poly::constant(BigRational::one())
        } else {
            let d = invariant_factors(&m);
            if d.len() < n - 1 {
                Poly::zero()
            } else {
                d.iter().fold(Poly::constant(BigRational::one()), |a, x| &a * x)
            }
        };
        g = Some(match g {
            None => minor,
            Some(acc) if acc.is_zero() => minor,
            Some(acc) if minor.is_zero() => acc,
            Some(acc) => acc.gcd(&minor),
        });
    }
    let g = g.unwrap();
    if g.is_zero() {
        return Ok(Poly::zero());
    }
    let z = primitive_integer_part(&g);
    let v = z.valuation().unwrap_or(0);
    let z = Poly::new(z.coeffs()[v..].to_vec());
    Ok(if z.lc().is_negative() { z.map(|c| -c) } else { z })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zp(c: &[i64]) -> ZPoly {
        Poly::new(c.iter().map(|&v| BigInt::from(v)).collect())
    }

    #[test]
    fn trefoil() {
        // x y x = y x y
        let p = GroupPresentation::from_lists(2, &[&[1, 2, 1, -2, -1, -2]]);
        assert_eq!(alexander_polynomial(&p, &[1, 1]).unwrap(), zp(&[1, -1, 1]));
    }

    #[test]
    fn free_cyclic_is_trivial() {
        let p = GroupPresentation::new(1, vec![]);
        assert_eq!(alexander_polynomial(&p, &[1]).unwrap(), zp(&[1]));
    }

    #[test]
    fn non_homomorphism_rejected() {
        let p = GroupPresentation::from_lists(1, &[&[1, 1]]);
        assert!(alexander_polynomial(&p, &[1]).is_err());
    }

    #[test]
    fn fundamental_identity() {
        for r in [vec![1, 2, -1, -2], vec![1, 1, 2, -1, 2, 2, -2], vec![-3, 1, 2, 3]] {
            assert!(fundamental_identity_holds(&FreeWord::new(r), 3));
        }
    }
}
