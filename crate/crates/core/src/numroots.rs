//! Certified isolation of complex and real roots of exact univariate
//! polynomials.
//!
//! Complex roots are approximated with the Aberth–Ehrlich iteration and then
//! certified with Smith's inclusion disks evaluated in exact dyadic
//! arithmetic with directed rounding: if the disks are pairwise disjoint, each
//! contains exactly one root. Real roots are counted exactly with Sturm
//! sequences over the integers.

use std::f64::consts::PI;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::exactpoly::{
    integer_squarefree_decomposition, integer_squarefree_part, primitive_integer_part, primitive_part, Poly,
};
use crate::scalar::{ApproxReal, BigFloat, Cplx, Dyadic, Field, Ring, Rounding};
use crate::{Error, GaussianPoly, GaussianRational, QPoly, ZPoly};

/// Working precision schedule: start, double on failure, stop at the ceiling.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrecisionPolicy {
    pub start_bits: u32,
    pub ceiling_bits: u32,
}

impl Default for PrecisionPolicy {
    fn default() -> Self {
        PrecisionPolicy { start_bits: 64, ceiling_bits: 4096 }
    }
}

impl PrecisionPolicy {
    pub fn schedule(&self) -> impl Iterator<Item = u32> {
        let ceiling = self.ceiling_bits;
        std::iter::successors(Some(self.start_bits.max(16)), |p| p.checked_mul(2)).take_while(move |p| *p <= ceiling)
    }
}

/// Closed disk with exact dyadic center and radius.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexDisk {
    pub center: Cplx<Dyadic>,
    pub radius: Dyadic,
}

impl ComplexDisk {
    pub fn center_f64(&self) -> (f64, f64) {
        (self.center.re.to_f64(), self.center.im.to_f64())
    }

    pub fn radius_f64(&self) -> f64 {
        self.radius.to_f64()
    }

    /// Certified: the disks have no point in common.
    pub fn disjoint_from(&self, other: &ComplexDisk) -> bool {
        let d = distance_lower(&self.center, &other.center);
        d > &self.radius + &other.radius
    }

    pub fn contains(&self, z: &Cplx<Dyadic>) -> bool {
        let d = (z.clone() - self.center.clone()).norm_sqr();
        d <= &self.radius * &self.radius
    }

    pub fn contains_c64(&self, re: f64, im: f64) -> bool {
        self.contains(&Cplx::new(Dyadic::from_f64(re), Dyadic::from_f64(im)))
    }

    pub fn is_real_candidate(&self) -> bool {
        self.center.im.abs() <= self.radius
    }
}

/// Certified disjoint disks for the distinct roots of a polynomial, with
/// multiplicities, ordered lexicographically by (real part, imaginary part).
#[derive(Clone, Debug)]
pub struct RootConfiguration {
    pub disks: Vec<ComplexDisk>,
    pub multiplicities: Vec<usize>,
    pub source: Option<GaussianRational>,
    pub precision_bits: u32,
}

impl RootConfiguration {
    pub fn len(&self) -> usize {
        self.disks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.disks.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.multiplicities.iter().sum()
    }

    pub fn centers_f64(&self) -> Vec<(f64, f64)> {
        self.disks.iter().map(|d| d.center_f64()).collect()
    }
}

/// Serializable view of a disk.
#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct DiskRecord {
    pub re: f64,
    pub im: f64,
    pub radius: f64,
    pub multiplicity: usize,
}

impl RootConfiguration {
    pub fn records(&self) -> Vec<DiskRecord> {
        self.disks
            .iter()
            .zip(&self.multiplicities)
            .map(|(d, m)| {
                let (re, im) = d.center_f64();
                DiskRecord { re, im, radius: d.radius_f64(), multiplicity: *m }
            })
            .collect()
    }
}

pub(crate) fn abs_upper(z: &Cplx<Dyadic>) -> Dyadic {
    z.norm_sqr().sqrt_round(64, Rounding::Up)
}

pub(crate) fn abs_lower(z: &Cplx<Dyadic>) -> Dyadic {
    z.norm_sqr().sqrt_round(64, Rounding::Down)
}

fn distance_lower(a: &Cplx<Dyadic>, b: &Cplx<Dyadic>) -> Dyadic {
    abs_lower(&(a.clone() - b.clone()))
}

/// Integer-scaled copy of a Gaussian-rational polynomial with dyadic
/// coefficients (same roots).
pub fn to_dyadic_poly(p: &GaussianPoly) -> Poly<Cplx<Dyadic>> {
    let l = p.coeffs().iter().fold(BigInt::one(), |acc, c| {
        let a = num_integer::Integer::lcm(&acc, c.re.denom());
        num_integer::Integer::lcm(&a, c.im.denom())
    });
    let lq = BigRational::from_integer(l);
    p.map(|c| {
        let re = (&c.re * &lq).to_integer();
        let im = (&c.im * &lq).to_integer();
        Cplx::new(Dyadic::from_bigint(re), Dyadic::from_bigint(im))
    })
}

pub fn real_to_gaussian(p: &QPoly) -> GaussianPoly {
    p.map(|c| Cplx::real(c.clone()))
}

/// Upper bounds on Smith's inclusion radii
/// `deg * |p(z_i)| / (|lc| * prod_{j != i} |z_i - z_j|)`,
/// or `None` when two centers coincide.
pub fn smith_radii(p: &Poly<Cplx<Dyadic>>, z: &[Cplx<Dyadic>]) -> Option<Vec<Dyadic>> {
    let d = p.deg();
    debug_assert_eq!(d, z.len());
    let lc = abs_lower(&p.lc());
    let deg = Dyadic::from_i64(d as i64);
    let mut out = Vec::with_capacity(d);
    for (i, zi) in z.iter().enumerate() {
        let num = &abs_upper(&p.eval(zi)) * &deg;
        let mut den = lc.clone();
        for (j, zj) in z.iter().enumerate() {
            if i != j {
                den = (&den * &distance_lower(zi, zj)).round(64, Rounding::Down);
            }
        }
        if den.is_zero() {
            return None;
        }
        out.push(num.div_round(&den, 64, Rounding::Up));
    }
    Some(out)
}

fn pairwise_disjoint(disks: &[ComplexDisk]) -> bool {
    for i in 0..disks.len() {
        for j in i + 1..disks.len() {
            if !disks[i].disjoint_from(&disks[j]) {
                return false;
            }
        }
    }
    true
}

/// Root radius upper bound `2 * max |a_k / a_n|^(1/(n-k))`, as a power of two.
fn root_bound_log2(p: &Poly<Cplx<Dyadic>>) -> i64 {
    let n = p.deg();
    let mag = |c: &Cplx<Dyadic>| -> Option<i64> {
        let a = c.re.abs().max(c.im.abs());
        a.ilog2()
    };
    let ln = mag(&p.lc()).unwrap_or(0);
    let mut best = i64::MIN;
    for (k, c) in p.coeffs().iter().enumerate().take(n) {
        if let Some(lk) = mag(c) {
            let e = (lk + 2 - ln).div_euclid((n - k) as i64) + 1;
            best = best.max(e);
        }
    }
    if best == i64::MIN {
        0
    } else {
        best + 1
    }
}

/// Aberth–Ehrlich simultaneous iteration for all roots of `p`.
///
/// Generic over the real scalar so the same code runs in `f64` and in
/// arbitrary precision. Stops when every correction is below `2^-tol_bits`
/// relative to the root size, or after `max_iter` sweeps.
pub fn aberth<T: ApproxReal>(p: &Poly<Cplx<T>>, init: Vec<Cplx<T>>, tol_bits: u32, max_iter: usize) -> Vec<Cplx<T>> {
    let n = p.deg();
    let dp = p.derivative();
    let mut z = init;
    assert_eq!(z.len(), n);
    let tol = T::from_f64_prec(2f64.powi(-(tol_bits.min(1000) as i32)), z[0].re.precision());
    let tiny = T::from_f64_prec(1e-300, z[0].re.precision());
    let mut done = vec![false; n];
    for _ in 0..max_iter {
        let mut all_small = true;
        for k in 0..n {
            if done[k] {
                continue;
            }
            let zk = z[k].clone();
            let pv = p.eval(&zk);
            if pv.is_zero() {
                done[k] = true;
                continue;
            }
            let dv = dp.eval(&zk);
            let mut s = Cplx::<T>::zero();
            for (j, zj) in z.iter().enumerate() {
                if j != k {
                    let diff = zk.clone() - zj.clone();
                    if !diff.is_zero() {
                        s = s + diff.inv();
                    }
                }
            }
            let w = if dv.is_zero() { pv.clone() } else { pv.clone() / dv };
            let denom = Cplx::<T>::one() - w.clone() * s;
            let step = if denom.is_zero() { w } else { w / denom };
            let size = zk.norm_sqr().sqrt();
            let scale = if size > tiny.clone() { size } else { T::one() };
            if step.norm_sqr().sqrt() > tol.clone() * scale {
                all_small = false;
            } else {
                done[k] = true;
            }
            z[k] = zk - step;
        }
        if all_small {
            break;
        }
    }
    z
}

fn initial_circle<T: ApproxReal>(n: usize, log2_radius: i64, prec: u32) -> Vec<Cplx<T>> {
    let r = 2f64.powi(log2_radius.clamp(-1000, 1000) as i32);
    (0..n)
        .map(|k| {
            let a = 2.0 * PI * k as f64 / n as f64 + 0.4;
            Cplx::from_c64(r * a.cos(), r * a.sin(), prec)
        })
        .collect()
}

fn to_bigfloat_poly(p: &Poly<Cplx<Dyadic>>, prec: u32) -> Poly<Cplx<BigFloat>> {
    p.map(|c| c.map(|d| BigFloat::new(d.clone(), prec)))
}

fn round_center(z: &Cplx<BigFloat>, prec: u32) -> Cplx<Dyadic> {
    z.map(|x| x.dyadic().round(prec, Rounding::Nearest))
}

/// Certified disks for the roots of a squarefree polynomial, escalating
/// precision as needed. Disks come back in the order the iteration produced
/// them.
pub fn isolate_squarefree(p: &Poly<Cplx<Dyadic>>, policy: &PrecisionPolicy) -> Result<(Vec<ComplexDisk>, u32), Error> {
    let n = p.degree().ok_or_else(|| Error::InvalidInput("zero polynomial".into()))?;
    if n == 0 {
        return Ok((Vec::new(), policy.start_bits));
    }
    if n == 1 {
        let c = p.coeff(0);
        let l = p.coeff(1);
        let prec = policy.start_bits;
        let z = (-c).map(|d| BigFloat::new(d.clone(), 0)) / l.map(|d| BigFloat::new(d.clone(), 0));
        let z = Cplx::new(z.re.with_precision(prec), z.im.with_precision(prec));
        let center = round_center(&z, prec);
        let r = smith_radii(p, std::slice::from_ref(&center)).unwrap();
        return Ok((vec![ComplexDisk { center, radius: r[0].clone() }], prec));
    }
    let mut approx: Option<Vec<Cplx<BigFloat>>> = None;
    for prec in policy.schedule() {
        let pp = to_bigfloat_poly(p, prec);
        let init = match approx.take() {
            Some(prev) => {
                prev.into_iter().map(|z| Cplx::new(z.re.with_precision(prec), z.im.with_precision(prec))).collect()
            }
            None => initial_circle::<BigFloat>(n, root_bound_log2(p), prec),
        };
        let z = aberth(&pp, init, prec.saturating_sub(8), 60 + 4 * n + prec as usize / 4);
        let centers: Vec<Cplx<Dyadic>> = z.iter().map(|c| round_center(c, prec)).collect();
        if let Some(radii) = smith_radii(p, &centers) {
            let disks: Vec<ComplexDisk> =
                centers.into_iter().zip(radii).map(|(center, radius)| ComplexDisk { center, radius }).collect();
            if pairwise_disjoint(&disks) {
                return Ok((disks, prec));
            }
        }
        approx = Some(z);
    }
    Err(Error::CertificationFailed {
        ceiling: policy.ceiling_bits,
        detail: format!("could not separate the roots of a degree-{n} polynomial"),
    })
}

fn lex_order(a: &ComplexDisk, b: &ComplexDisk) -> std::cmp::Ordering {
    a.center.re.cmp(&b.center.re).then_with(|| a.center.im.cmp(&b.center.im))
}

/// All distinct roots of `p` with multiplicities, as certified disjoint disks.
///
/// `p` is first split by exact squarefree decomposition; disks of different
/// factors are refined until they are disjoint as well.
pub fn isolate_complex_roots_with(p: &GaussianPoly, policy: &PrecisionPolicy) -> Result<RootConfiguration, Error> {
    if p.is_zero() {
        return Err(Error::InvalidInput("zero polynomial has no isolated roots".into()));
    }
    let factors = p.squarefree_decomposition();
    let mut prec = policy.start_bits;
    loop {
        let pol = PrecisionPolicy { start_bits: prec, ceiling_bits: policy.ceiling_bits };
        let mut disks = Vec::new();
        let mut mults = Vec::new();
        let mut used = prec;
        for (g, k) in &factors {
            let (ds, pr) = isolate_squarefree(&to_dyadic_poly(g), &pol)?;
            used = used.max(pr);
            mults.extend(std::iter::repeat_n(*k, ds.len()));
            disks.extend(ds);
        }
        if pairwise_disjoint(&disks) {
            let mut idx: Vec<usize> = (0..disks.len()).collect();
            idx.sort_by(|&a, &b| lex_order(&disks[a], &disks[b]));
            return Ok(RootConfiguration {
                disks: idx.iter().map(|&i| disks[i].clone()).collect(),
                multiplicities: idx.iter().map(|&i| mults[i]).collect(),
                source: None,
                precision_bits: used,
            });
        }
        prec = used.checked_mul(2).filter(|p| *p <= policy.ceiling_bits).ok_or_else(|| Error::CertificationFailed {
            ceiling: policy.ceiling_bits,
            detail: "roots of distinct squarefree factors not separated".into(),
        })?;
    }
}

/// [`isolate_complex_roots_with`] starting at `precision` bits with the
/// default ceiling.
pub fn isolate_complex_roots(p: &GaussianPoly, precision: u32) -> Result<RootConfiguration, Error> {
    let policy = PrecisionPolicy { start_bits: precision, ..PrecisionPolicy::default() };
    isolate_complex_roots_with(p, &policy)
}

pub fn isolate_real_poly(p: &QPoly, precision: u32) -> Result<RootConfiguration, Error> {
    isolate_complex_roots(&real_to_gaussian(p), precision)
}

/// Shrink `disk` (certified for a root of `p`) until its radius is at most
/// `target_radius`, raising precision as needed.
pub fn refine_root(
    p: &GaussianPoly,
    disk: &ComplexDisk,
    target_radius: &Dyadic,
    ceiling_bits: u32,
) -> Result<ComplexDisk, Error> {
    let sq = p.squarefree_part();
    let dp = to_dyadic_poly(&sq);
    let mut prec = 64;
    while prec <= ceiling_bits {
        let policy = PrecisionPolicy { start_bits: prec, ceiling_bits };
        let (disks, used) = isolate_squarefree(&dp, &policy)?;
        let hits: Vec<&ComplexDisk> = disks.iter().filter(|d| !d.disjoint_from(disk)).collect();
        if hits.len() == 1 && hits[0].radius <= *target_radius {
            return Ok(hits[0].clone());
        }
        prec = used * 2;
    }
    Err(Error::CertificationFailed {
        ceiling: ceiling_bits,
        detail: format!("could not refine root to radius {}", target_radius.to_f64()),
    })
}

// ---------------------------------------------------------------------------
// Real roots
// ---------------------------------------------------------------------------

/// Isolating interval `[lo, hi]` for one real root; `lo == hi` for an exact
/// rational root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealRoot {
    pub lo: BigRational,
    pub hi: BigRational,
    pub multiplicity: usize,
}

impl RealRoot {
    pub fn midpoint_f64(&self) -> f64 {
        crate::scalar::rational_to_f64(&((&self.lo + &self.hi) / BigRational::from_integer(2.into())))
    }
}

/// Sturm sequence of a squarefree integer polynomial, each term made
/// primitive (positive multiples do not change sign counts).
pub fn sturm_sequence(p: &ZPoly) -> Vec<ZPoly> {
    let mut seq = vec![p.clone()];
    let dp = primitive_part(&p.derivative());
    if dp.is_zero() {
        return seq;
    }
    seq.push(dp);
    loop {
        let n = seq.len();
        let (a, b) = (&seq[n - 2], &seq[n - 1]);
        let delta = a.deg() - b.deg();
        let mut r = a.pseudo_rem(b);
        if r.is_zero() {
            break;
        }
        if b.lc().is_negative() && (delta + 1) % 2 == 1 {
            r = -r;
        }
        seq.push(-primitive_part(&r));
    }
    seq
}

/// Sign of `p(a)` for rational `a`, from the homogenized form
/// `sum c_k n^k d^(deg-k)` with `a = n/d`, `d > 0`.
pub fn sign_at(p: &ZPoly, a: &BigRational) -> i32 {
    let n = a.numer();
    let d = a.denom();
    let mut val = BigInt::zero();
    let mut npow = BigInt::one();
    let deg = p.deg();
    let dpows: Vec<BigInt> = std::iter::successors(Some(BigInt::one()), |x| Some(x * d)).take(deg + 1).collect();
    for (k, c) in p.coeffs().iter().enumerate() {
        val += c * &npow * &dpows[deg - k];
        npow *= n;
    }
    match val.sign() {
        num_bigint::Sign::Minus => -1,
        num_bigint::Sign::NoSign => 0,
        num_bigint::Sign::Plus => 1,
    }
}

fn variations(seq: &[ZPoly], a: &BigRational) -> usize {
    let mut last = 0;
    let mut count = 0;
    for s in seq {
        let v = sign_at(s, a);
        if v != 0 {
            if last != 0 && v != last {
                count += 1;
            }
            last = v;
        }
    }
    count
}

/// Number of roots in the open interval `(a, b)` of a squarefree `p` that
/// vanishes at neither endpoint.
fn sturm_count(seq: &[ZPoly], a: &BigRational, b: &BigRational) -> usize {
    variations(seq, a) - variations(seq, b)
}

fn nudge_off_roots(p: &ZPoly, m: BigRational, width: &BigRational) -> BigRational {
    let mut k = 7u32;
    let mut m2 = m;
    while sign_at(p, &m2) == 0 {
        let eps = width / BigRational::from_integer(BigInt::from(2).pow(k));
        m2 += eps;
        k += 1;
    }
    m2
}

fn isolate_open(p: &ZPoly, seq: &[ZPoly], a: BigRational, b: BigRational, out: &mut Vec<(BigRational, BigRational)>) {
    let mut stack = vec![(a, b)];
    while let Some((lo, hi)) = stack.pop() {
        match sturm_count(seq, &lo, &hi) {
            0 => {}
            1 => out.push((lo, hi)),
            _ => {
                let width = &hi - &lo;
                let mid = (&lo + &hi) / BigRational::from_integer(2.into());
                let mid = nudge_off_roots(p, mid, &width);
                stack.push((mid.clone(), hi));
                stack.push((lo, mid));
            }
        }
    }
}

fn linear_root_factor(r: &BigRational) -> ZPoly {
    Poly::new(vec![-r.numer().clone(), r.denom().clone()])
}

/// Isolating intervals with rational endpoints for the real roots of a
/// squarefree integer polynomial in `[a, b]`. Each interval is paired with
/// the polynomial it isolates a root of; for open intervals that polynomial
/// does not vanish at the endpoints.
fn isolate_squarefree_real(p: &ZPoly, a: &BigRational, b: &BigRational) -> Vec<(ZPoly, BigRational, BigRational)> {
    let mut out = Vec::new();
    let mut p = p.clone();
    for e in [a, b] {
        if sign_at(&p, e) == 0 {
            out.push((p.clone(), e.clone(), e.clone()));
            p = crate::scalar::Domain::div_exact(&p, &linear_root_factor(e)).expect("rational root divides");
        }
    }
    if a == b || p.deg() == 0 {
        return out;
    }
    let seq = sturm_sequence(&p);
    let mut open = Vec::new();
    isolate_open(&p, &seq, a.clone(), b.clone(), &mut open);
    out.extend(open.into_iter().map(|(lo, hi)| (p.clone(), lo, hi)));
    out
}

/// Bisect an isolating interval of a squarefree `p` until narrower than `width`.
pub fn refine_real_interval(
    p: &ZPoly,
    lo: &BigRational,
    hi: &BigRational,
    width: &BigRational,
) -> (BigRational, BigRational) {
    let (mut lo, mut hi) = (lo.clone(), hi.clone());
    if lo == hi {
        return (lo, hi);
    }
    let mut slo = sign_at(p, &lo);
    let two = BigRational::from_integer(2.into());
    if slo == 0 || sign_at(p, &hi) == 0 {
        // endpoint root: isolating intervals from the Sturm pass never do this
        return (lo, hi);
    }
    while &hi - &lo > *width {
        let mid = (&lo + &hi) / &two;
        let s = sign_at(p, &mid);
        if s == 0 {
            return (mid.clone(), mid);
        }
        if s == slo {
            lo = mid;
            slo = s;
        } else {
            hi = mid;
        }
    }
    (lo, hi)
}

/// Real roots of `p` in `[a, b]` with multiplicities, by Sturm sequences on
/// the squarefree factors. Intervals are pairwise disjoint and sorted.
pub fn real_roots_in_interval(p: &QPoly, a: &BigRational, b: &BigRational) -> Result<Vec<RealRoot>, Error> {
    if a > b {
        return Err(Error::InvalidInput("interval endpoints out of order".into()));
    }
    if p.is_zero() {
        return Err(Error::InvalidInput("zero polynomial".into()));
    }
    let mut found: Vec<(ZPoly, BigRational, BigRational, usize)> = Vec::new();
    for (z, k) in integer_squarefree_decomposition(&primitive_integer_part(p)) {
        for (zz, lo, hi) in isolate_squarefree_real(&z, a, b) {
            found.push((zz, lo, hi, k));
        }
    }
    // separate intervals coming from different factors
    loop {
        found.sort_by(|x, y| x.1.cmp(&y.1));
        let mut clash = None;
        // roots lie strictly inside open intervals, so touching endpoints are fine
        for i in 1..found.len() {
            let (x, y) = (&found[i - 1], &found[i]);
            if x.1 < y.2 && y.1 < x.2 {
                clash = Some(i);
                break;
            }
        }
        let Some(i) = clash else { break };
        for j in [i - 1, i] {
            let (z, lo, hi, _) = &found[j];
            let w = (hi - lo) / BigRational::from_integer(4.into());
            let (l2, h2) = refine_real_interval(z, lo, hi, &w);
            found[j].1 = l2;
            found[j].2 = h2;
        }
    }
    Ok(found.into_iter().map(|(_, lo, hi, multiplicity)| RealRoot { lo, hi, multiplicity }).collect())
}

/// Number of distinct real roots of `p` in `[a, b]`.
pub fn count_real_roots(p: &QPoly, a: &BigRational, b: &BigRational) -> Result<usize, Error> {
    Ok(real_roots_in_interval(p, a, b)?.len())
}

/// Refine a real root to an interval narrower than `width` and return the
/// interval.
pub fn refine_real_root(p: &QPoly, root: &RealRoot, width: &BigRational) -> RealRoot {
    let sq = integer_squarefree_part(p);
    let (lo, hi) = refine_real_interval(&sq, &root.lo, &root.hi, width);
    RealRoot { lo, hi, multiplicity: root.multiplicity }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{q, qi};

    fn qp(c: &[i64]) -> QPoly {
        Poly::new(c.iter().map(|&v| qi(v)).collect())
    }

    #[test]
    fn unit_circle_pair() {
        let conf = isolate_real_poly(&qp(&[1, 0, 1]), 64).unwrap();
        assert_eq!(conf.len(), 2);
        assert!(conf.disks[0].contains_c64(0.0, -1.0));
        assert!(conf.disks[1].contains_c64(0.0, 1.0));
        assert_eq!(conf.multiplicities, vec![1, 1]);
    }

    #[test]
    fn double_root_keeps_multiplicity() {
        let conf = isolate_real_poly(&qp(&[4, -4, 1]), 64).unwrap();
        assert_eq!(conf.len(), 1);
        assert_eq!(conf.multiplicities, vec![2]);
        assert!(conf.disks[0].contains_c64(2.0, 0.0));
    }

    #[test]
    fn aberth_in_f64() {
        let p: Poly<Cplx<f64>> =
            Poly::new(vec![Cplx::new(-6.0, 0.0), Cplx::new(11.0, 0.0), Cplx::new(-6.0, 0.0), Cplx::new(1.0, 0.0)]);
        let init = initial_circle::<f64>(3, 3, 53);
        let mut z: Vec<f64> = aberth(&p, init, 45, 200).iter().map(|c| c.re).collect();
        z.sort_by(|a, b| a.partial_cmp(b).unwrap());
        for (a, b) in z.iter().zip([1.0, 2.0, 3.0]) {
            assert!((a - b).abs() < 1e-10);
        }
    }

    #[test]
    fn refine_sqrt2() {
        let p = real_to_gaussian(&qp(&[-2, 0, 1]));
        let conf = isolate_complex_roots(&p, 64).unwrap();
        let target = Dyadic::from_f64(1e-30);
        let d = refine_root(&p, &conf.disks[1], &target, 4096).unwrap();
        assert!(d.radius <= target);
        let c = d.center.re.clone();
        let two = Dyadic::from_i64(2);
        let lo = &c - &d.radius;
        let hi = &c + &d.radius;
        assert!(&lo * &lo <= two && &hi * &hi >= two);
    }

    #[test]
    fn sturm_counts() {
        assert_eq!(count_real_roots(&qp(&[-2, 0, 1]), &qi(0), &qi(2)).unwrap(), 1);
        let r = real_roots_in_interval(&qp(&[1, -2, 1]), &qi(0), &qi(2)).unwrap();
        assert_eq!(r.len(), 1);
        assert_eq!(r[0].multiplicity, 2);
        assert!(r[0].lo <= qi(1) && qi(1) <= r[0].hi);
        let cubic = qp(&[0, -1, 0, 1]);
        assert_eq!(count_real_roots(&cubic, &qi(-1), &qi(1)).unwrap(), 3);
        assert_eq!(count_real_roots(&cubic, &q(1, 2), &qi(3)).unwrap(), 1);
        assert!(real_roots_in_interval(&cubic, &qi(1), &qi(0)).is_err());
    }

    #[test]
    fn sign_evaluation() {
        let p = primitive_integer_part(&qp(&[-2, 0, 1]));
        assert_eq!(sign_at(&p, &q(3, 2)), 1);
        assert_eq!(sign_at(&p, &q(7, 5)), -1);
    }
}
