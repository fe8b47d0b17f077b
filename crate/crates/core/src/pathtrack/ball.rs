//! Midpoint-radius complex balls over `f64` with outward-inflated radii.
//!
//! Every operation adds the rounding error of the midpoint to the radius and
//! inflates the radius computation itself, so the ball always contains the
//! exact result of the same operations on any members of the operand balls.

use crate::scalar::{Cplx, Dyadic};

const U: f64 = f64::EPSILON * 0.5;
const INFLATE: f64 = 1.0 + 8.0 * f64::EPSILON;
const TINY: f64 = 4.0 * f64::MIN_POSITIVE;

#[derive(Clone, Copy, Debug, PartialEq)]
pub(crate) struct CBall {
    pub re: f64,
    pub im: f64,
    pub rad: f64,
}

fn up(x: f64) -> f64 {
    x * INFLATE + TINY
}

impl CBall {
    pub const ZERO: CBall = CBall { re: 0.0, im: 0.0, rad: 0.0 };

    /// Ball around the nearest `f64` pair, containing the exact value.
    pub fn from_dyadic(z: &Cplx<Dyadic>) -> CBall {
        let (re, im) = (z.re.to_f64(), z.im.to_f64());
        let exact = Dyadic::from_f64(re) == z.re && Dyadic::from_f64(im) == z.im;
        let rad = if exact { 0.0 } else { up((re.abs() + im.abs()) * U * 2.0) };
        CBall { re, im, rad }
    }

    fn mag(&self) -> f64 {
        self.re.abs() + self.im.abs()
    }

    pub fn add(&self, o: &CBall) -> CBall {
        let re = self.re + o.re;
        let im = self.im + o.im;
        let err = (re.abs() + im.abs()) * U;
        CBall { re, im, rad: up(self.rad + o.rad + err) }
    }

    pub fn mul(&self, o: &CBall) -> CBall {
        let (a, b, c, d) = (self.re, self.im, o.re, o.im);
        let (ac, bd, ad, bc) = (a * c, b * d, a * d, b * c);
        let re = ac - bd;
        let im = ad + bc;
        // two products and one sum per component
        let err = (ac.abs() + bd.abs() + ad.abs() + bc.abs()) * 3.0 * U;
        let rad = self.mag() * o.rad + o.mag() * self.rad + self.rad * o.rad;
        CBall { re, im, rad: up(rad + err) }
    }

    /// Upper bound on `|re| + |im|` over the ball, hence on the modulus.
    pub fn mag_upper(&self) -> f64 {
        up(self.mag() + 2.0 * self.rad)
    }

    pub fn is_finite(&self) -> bool {
        self.re.is_finite() && self.im.is_finite() && self.rad.is_finite()
    }
}

/// Ball polynomial product, coefficients lowest degree first.
pub(crate) fn poly_mul(a: &[CBall], b: &[CBall]) -> Vec<CBall> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![CBall::ZERO; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = out[i + j].add(&x.mul(y));
        }
    }
    out
}

pub(crate) fn poly_add(a: &[CBall], b: &[CBall]) -> Vec<CBall> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|k| match (a.get(k), b.get(k)) {
            (Some(x), Some(y)) => x.add(y),
            (Some(x), None) | (None, Some(x)) => *x,
            (None, None) => CBall::ZERO,
        })
        .collect()
}
