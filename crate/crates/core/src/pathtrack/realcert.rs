//! Algebraic certificate for vertical alignments of non-real fiber roots
//! over a real segment.
//!
//! With `y = u + i v`, split `f(x, u + i v) = f_e + i v f_oo`. Four non-real
//! roots share a real part `u0` at `x0` only if `f_oo(x0, u0, .)` divides
//! `f_e(x0, u0, .)`, i.e. the remainder `R = R2 v^2 + R0` vanishes
//! identically there. Candidates are the real roots of `Res_u(R2, R0)` on the
//! segment; each is kept when it has a real partner `u0` and
//! `f_oo(x0, u0, v)` has at least four real nonzero roots.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::exactpoly::{
    discriminant_y, pseudo_remainder_in_v, real_imag_split, resultant_y, BiPoly, Poly, TriPoly, UxPoly,
};
use crate::numroots::{real_roots_in_interval, refine_real_root, RealRoot};
use crate::scalar::rational_to_f64;
use crate::{Error, QBiPoly, QPoly};

/// One real root `x0` of the resultant and what it turned out to be.
#[derive(Clone, Debug, Serialize)]
pub struct AlignmentCandidate {
    pub x0: f64,
    #[serde(serialize_with = "interval_as_strings")]
    pub x0_interval: (BigRational, BigRational),
    /// Real partner `u0` with `R2(x0, u0) = R0(x0, u0) = 0`, if any.
    pub u0: Option<f64>,
    /// Real nonzero `v` with `f_oo(x0, u0, v) = 0`.
    pub aligned_roots: usize,
}

impl AlignmentCandidate {
    pub fn is_alignment(&self) -> bool {
        self.aligned_roots >= 4
    }
}

fn interval_as_strings<S: serde::Serializer>(v: &(BigRational, BigRational), s: S) -> Result<S::Ok, S::Error> {
    (v.0.to_string(), v.1.to_string()).serialize(s)
}

/// Outcome of [`certify_real_segment`].
#[derive(Clone, Debug, Serialize)]
pub struct RealSegmentCertificate {
    pub interval: (f64, f64),
    pub resultant_degree: usize,
    pub candidates: Vec<AlignmentCandidate>,
}

impl RealSegmentCertificate {
    /// Candidates that are genuine alignments of four or more roots.
    pub fn events(&self) -> Vec<&AlignmentCandidate> {
        self.candidates.iter().filter(|c| c.is_alignment()).collect()
    }
}

fn pow2(k: i32) -> BigRational {
    let p = BigRational::from_integer(BigInt::one() << k.unsigned_abs());
    if k >= 0 {
        p
    } else {
        p.recip()
    }
}

fn midpoint(r: &RealRoot) -> BigRational {
    (&r.lo + &r.hi) / BigRational::from_integer(2.into())
}

/// `p(x0, u)` for `p` in `Q[x][u]`.
fn at_x(p: &UxPoly<BigRational>, x0: &BigRational) -> QPoly {
    Poly::new(p.coeffs().iter().map(|c| c.eval(x0)).collect())
}

/// `p(x0, u0, v)` for `p` in `Q[x][u][v]`.
fn at_xu(p: &TriPoly<BigRational>, x0: &BigRational, u0: &BigRational) -> QPoly {
    Poly::new(p.coeffs().iter().map(|c| at_x(c, x0).eval(u0)).collect())
}

fn cauchy_bound(p: &QPoly) -> BigRational {
    let lc = p.lc().abs();
    BigRational::one() + p.coeffs().iter().map(|c| c.abs()).max().unwrap_or_else(BigRational::zero) / lc
}

/// Real roots of a nonzero polynomial refined to `width`.
fn all_real_roots(p: &QPoly, width: &BigRational) -> Vec<BigRational> {
    if p.deg() == 0 {
        return Vec::new();
    }
    let b = cauchy_bound(p);
    real_roots_in_interval(p, &-b.clone(), &b)
        .map(|rs| rs.iter().map(|r| midpoint(&refine_real_root(p, r, width))).collect())
        .unwrap_or_default()
}

/// Run the alignment certificate on `[a, b]`.
pub fn certify_real_segment(
    curve: &QBiPoly,
    a: &BigRational,
    b: &BigRational,
) -> Result<RealSegmentCertificate, Error> {
    if a >= b {
        return Err(Error::InvalidInput("empty segment".into()));
    }
    let disc = discriminant_y(curve)?;
    if !real_roots_in_interval(&disc, a, b)?.is_empty() {
        return Err(Error::InvalidInput("segment contains a discriminant root".into()));
    }
    let interval = (rational_to_f64(a), rational_to_f64(b));
    match curve.deg_y() {
        0..=3 => return Ok(RealSegmentCertificate { interval, resultant_degree: 0, candidates: Vec::new() }),
        5 | 6 => {}
        d => return Err(Error::Unsupported(format!("alignment certificate needs degree 5 or 6 in y, got {d}"))),
    }
    let (fe, f_oo) = real_imag_split(curve);
    let rem = pseudo_remainder_in_v(&fe, &f_oo)?;
    if rem.r2_num.is_zero() && rem.r0_num.is_zero() {
        return Err(Error::Degenerate("remainder vanishes identically; manual analysis needed".into()));
    }
    let res = resultant_y(&BiPoly::from_y_poly(&rem.r2_num), &BiPoly::from_y_poly(&rem.r0_num))?;
    if res.is_zero() {
        return Err(Error::Degenerate("Res_u(R2, R0) vanishes identically; manual analysis needed".into()));
    }
    let mut candidates = Vec::new();
    for root in real_roots_in_interval(&res, a, b)? {
        let root = refine_real_root(&res, &root, &pow2(-64));
        let xm = midpoint(&root);
        let fine = pow2(-48);
        let p2 = at_x(&rem.r2_num, &xm);
        let p0 = at_x(&rem.r0_num, &xm);
        let u2 = if p2.is_zero() { Vec::new() } else { all_real_roots(&p2, &fine) };
        let u0s = if p0.is_zero() { Vec::new() } else { all_real_roots(&p0, &fine) };
        let tol = |u: &BigRational| pow2(-20) * (BigRational::one() + u.abs());
        let partner = u2.iter().find(|u| u0s.iter().any(|w| (*u - w).abs() < tol(u))).cloned();
        let aligned = match &partner {
            Some(u0) => {
                let g = at_xu(&f_oo, &xm, u0);
                if g.is_zero() {
                    0
                } else {
                    all_real_roots(&g, &fine).iter().filter(|v| !v.is_zero()).count()
                }
            }
            None => 0,
        };
        candidates.push(AlignmentCandidate {
            x0: rational_to_f64(&xm),
            x0_interval: (root.lo.clone(), root.hi.clone()),
            u0: partner.as_ref().map(rational_to_f64),
            aligned_roots: aligned,
        });
    }
    Ok(RealSegmentCertificate { interval, resultant_degree: res.deg(), candidates })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pipeline::parse_curve;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn parabola_has_no_events() {
        let c = certify_real_segment(&parse_curve("y^2 - x").unwrap(), &q(1), &q(2)).unwrap();
        assert!(c.candidates.is_empty());
    }

    #[test]
    fn discriminant_root_rejected() {
        assert!(certify_real_segment(&parse_curve("y^2 - x").unwrap(), &q(-1), &q(1)).is_err());
    }

    #[test]
    fn two_pairs_with_equal_real_part() {
        // at x = 0 the roots +-i, +-2i share real part 0; the x y term moves
        // the two pairs apart in opposite directions
        let f = parse_curve("(y^2 + 1)*(y^2 + 4)*(y - 3)*(y + 5) + x*y").unwrap();
        let c = certify_real_segment(&f, &(q(-1) / q(8)), &(q(1) / q(8))).unwrap();
        let ev = c.events();
        assert_eq!(ev.len(), 1);
        assert!(ev[0].x0.abs() < 1e-12);
        assert_eq!(ev[0].aligned_roots, 4);
        assert!(ev[0].u0.unwrap().abs() < 1e-12);
    }

    #[test]
    fn quartic_unsupported() {
        let f = parse_curve("(y^2 + 1)*(y^2 + 4) + x*y").unwrap();
        assert!(certify_real_segment(&f, &(q(-1) / q(8)), &(q(1) / q(8))).is_err());
    }
}
