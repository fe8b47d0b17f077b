//! Singular values of the vertical pencil: the roots of the discriminant in
//! `y`, each with multiplicity and a certified real/non-real verdict.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::exactpoly::{discriminant_y, rational_squarefree_decomposition};
use crate::numroots::{
    isolate_real_poly, real_roots_in_interval, real_to_gaussian, refine_real_root, refine_root, ComplexDisk,
    PrecisionPolicy,
};
use crate::pathtrack::{sort_singular_values, SingularValue};
use crate::scalar::{Cplx, Dyadic, Rounding};
use crate::{Error, QBiPoly, QPoly};

/// Discriminant with its squarefree decomposition and singular values.
#[derive(Clone, Debug)]
pub struct DiscriminantData {
    pub discriminant: QPoly,
    /// Squarefree decomposition `(g, k)`: `g` collects the roots of
    /// multiplicity exactly `k`.
    pub factors: Vec<(QPoly, u32)>,
    /// Sorted by real part, then imaginary part.
    pub values: Vec<SingularValue>,
}

const TARGET_LOG2: i64 = -60;

fn cauchy_bound(p: &QPoly) -> BigRational {
    let lc = p.lc().abs();
    let m = p.coeffs().iter().fold(BigRational::zero(), |m, c| m.max(c.abs() / &lc));
    m + BigRational::one()
}

fn values_of_factor(g: &QPoly, k: u32, policy: &PrecisionPolicy) -> Result<Vec<SingularValue>, Error> {
    let b = cauchy_bound(g);
    let width = BigRational::new(1.into(), num_bigint::BigInt::one() << (-TARGET_LOG2) as usize);
    let mut out = Vec::new();
    let reals = real_roots_in_interval(g, &(-b.clone()), &b)?;
    for r in &reals {
        let r = refine_real_root(g, r, &width);
        let mid = (&r.lo + &r.hi) / BigRational::from_integer(2.into());
        let center = Dyadic::from_rational_round(&mid, 128, Rounding::Nearest);
        let spread = (&r.hi - &r.lo) + (mid - center.to_rational()).abs();
        out.push(SingularValue {
            disk: ComplexDisk {
                center: Cplx::new(center, Dyadic::zero()),
                radius: Dyadic::from_rational_round(&spread, 32, Rounding::Up),
            },
            real: true,
            multiplicity: k,
        });
    }
    let n_complex = g.deg() - reals.len();
    if n_complex == 0 {
        return Ok(out);
    }
    let gp = real_to_gaussian(g);
    let conf = isolate_real_poly(g, policy.start_bits)?;
    let mut target = Dyadic::one().mul_pow2(-8);
    let floor = Dyadic::one().mul_pow2(TARGET_LOG2);
    let mut disks: Vec<ComplexDisk> = conf.disks.clone();
    loop {
        let off: Vec<&ComplexDisk> = disks.iter().filter(|d| !d.is_real_candidate()).collect();
        if off.len() == n_complex {
            for d in off {
                let d = refine_root(&gp, d, &floor, policy.ceiling_bits)?;
                out.push(SingularValue { disk: d, real: false, multiplicity: k });
            }
            return Ok(out);
        }
        if target < floor {
            return Err(Error::CertificationFailed {
                ceiling: policy.ceiling_bits,
                detail: "could not separate non-real discriminant roots from the real axis".into(),
            });
        }
        disks =
            disks
                .iter()
                .map(|d| {
                    if d.is_real_candidate() {
                        refine_root(&gp, d, &target, policy.ceiling_bits)
                    } else {
                        Ok(d.clone())
                    }
                })
                .collect::<Result<_, _>>()?;
        target = target.mul_pow2(-4);
    }
}

/// Discriminant of `curve` in `y` and its certified roots.
pub fn singular_values(curve: &QBiPoly, policy: &PrecisionPolicy) -> Result<DiscriminantData, Error> {
    let disc = discriminant_y(curve)?;
    if disc.is_zero() {
        return Err(Error::Degenerate("the curve has a multiple component".into()));
    }
    let factors: Vec<(QPoly, u32)> =
        rational_squarefree_decomposition(&disc).into_iter().map(|(g, k)| (g, k as u32)).collect();
    let mut values = Vec::new();
    for (g, k) in &factors {
        if g.deg() > 0 {
            values.extend(values_of_factor(g, *k, policy)?);
        }
    }
    sort_singular_values(&mut values);
    Ok(DiscriminantData { discriminant: disc, factors, values })
}
