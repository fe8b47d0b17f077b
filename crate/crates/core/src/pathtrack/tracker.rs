//! Certified continuation of the fiber roots of `F(x, y) = 0` along straight
//! segments in the `x`-plane.
//!
//! A step `x = x0 + t h`, `t` in `[0, 1]`, is accepted when
//!
//! * every root branch has a Taylor predictor `z_i(t)` whose residual
//!   `Q_i(t) = G(t, z_i(t))` is computed exactly and bounded on the whole step,
//! * the resulting Smith radii, uniform in `t`, give pairwise disjoint disks
//!   for every `t` (so each disk tube contains exactly one root branch),
//! * each new start disk meets only its own disk from the previous step, and
//! * every pair of strands either keeps its order in the projection
//!   `kappa = Re(y (1 - i tau))` or keeps its order in `omega = Im(y (1 - i tau))`.
//!
//! The last condition turns the step into braid letters: when a pair swaps
//! its `kappa` order, the sign of `omega` says which strand passes below.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::ball::{poly_add, poly_mul, CBall};
use super::series::root_series;
use crate::exactpoly::{BiPoly, Poly};
use crate::numroots::{abs_lower, isolate_squarefree, PrecisionPolicy};
use crate::scalar::{ApproxReal, BigFloat, Cplx, Dyadic, Ring, Rounding};
use crate::{Error, QBiPoly};

type CD = Cplx<Dyadic>;

/// Tuning knobs of the tracker. Every choice here only affects speed and the
/// chance of success; accepted steps are certified regardless.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrackerConfig {
    pub policy: PrecisionPolicy,
    /// Number of Taylor terms in the root predictors.
    pub series_order: usize,
    /// First step is `2^-initial_step_log2` of the segment.
    pub initial_step_log2: u32,
    /// Give up at this precision when steps shrink below `2^-min_step_log2`.
    pub min_step_log2: u32,
    /// Projection tilt `tau = 2^-tilt_log2`.
    pub tilt_log2: u32,
    /// Keep per-step samples for trajectory dumps.
    pub record_samples: bool,
}

impl Default for TrackerConfig {
    fn default() -> Self {
        TrackerConfig {
            policy: PrecisionPolicy::default(),
            series_order: 10,
            initial_step_log2: 4,
            min_step_log2: 36,
            tilt_log2: 8,
            record_samples: false,
        }
    }
}

/// The fiber family `y -> F(x, y)` with integer coefficients.
#[derive(Clone, Debug)]
pub struct FiberFamily {
    /// `rows[j]` is the coefficient of `y^j`, a polynomial in `x`.
    rows: Vec<Poly<Dyadic>>,
}

impl FiberFamily {
    /// Requires `deg_y F = deg F`, so the leading coefficient in `y` is a
    /// nonzero constant and no root escapes to infinity.
    pub fn new(curve: &QBiPoly) -> Result<Self, Error> {
        let d = curve.deg_y();
        if d == 0 || d != curve.total_degree() {
            return Err(Error::Degenerate(format!(
                "the vertical pencil is not generic: deg_y = {d}, degree = {}",
                curve.total_degree()
            )));
        }
        let l = curve.terms().fold(num_bigint::BigInt::one(), |acc, (_, c)| num_integer::Integer::lcm(&acc, c.denom()));
        let scaled: BiPoly<Dyadic> =
            curve.map(|c| Dyadic::from_bigint((c * num_rational::BigRational::from_integer(l.clone())).to_integer()));
        let rows = scaled.to_y_poly().into_coeffs();
        Ok(FiberFamily { rows })
    }

    pub fn degree(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn leading(&self) -> Dyadic {
        self.rows.last().unwrap().coeff(0)
    }

    /// `F(x0, y)`.
    pub fn at(&self, x0: &CD) -> Poly<CD> {
        Poly::new(self.rows.iter().map(|r| r.eval_with(x0, |c| Cplx::real(c.clone()))).collect())
    }

    /// `G_j(t)` with `F(x0 + t h, y) = sum_j G_j(t) y^j`.
    pub fn shifted(&self, x0: &CD, h: &CD) -> Vec<Poly<CD>> {
        let lin = Poly::new(vec![x0.clone(), h.clone()]);
        self.rows
            .iter()
            .map(|r| {
                r.coeffs()
                    .iter()
                    .rev()
                    .fold(Poly::zero(), |acc: Poly<CD>, c| &acc * &lin + Poly::constant(Cplx::real(c.clone())))
            })
            .collect()
    }
}

/// Braid letter event found inside one certified step.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CrossingEvent {
    /// Labels of the two strands (indices into the start configuration).
    pub strands: (usize, usize),
    /// 1-based position of the left strand before the swap; the letter acts
    /// on positions `position` and `position + 1`.
    pub position: usize,
    /// +1 when the strand coming from the left passes below.
    pub sign: i32,
    /// Parameter interval on the segment containing the swap.
    pub s_range: (f64, f64),
}

impl CrossingEvent {
    pub fn letter(&self) -> i32 {
        self.sign * self.position as i32
    }
}

/// One recorded step end: parameter and root centers.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Sample {
    pub s: f64,
    pub centers: Vec<(f64, f64)>,
    pub radii: Vec<f64>,
}

/// Certified tracking of all fiber roots along one segment.
#[derive(Clone, Debug)]
pub struct SegmentTrack {
    pub start: CD,
    pub end: CD,
    pub events: Vec<CrossingEvent>,
    /// Root labels sorted by the projection at the start and at the end.
    pub start_order: Vec<usize>,
    pub end_order: Vec<usize>,
    pub samples: Vec<Sample>,
    pub steps: usize,
    pub precision_bits: u32,
}

impl SegmentTrack {
    pub fn letters(&self) -> Vec<i32> {
        self.events.iter().map(|e| e.letter()).collect()
    }

    /// `perm[p] = q`: the strand at start position `p` ends at position `q`.
    pub fn position_permutation(&self) -> Vec<usize> {
        let mut end_pos = vec![0; self.end_order.len()];
        for (q, &lab) in self.end_order.iter().enumerate() {
            end_pos[lab] = q;
        }
        self.start_order.iter().map(|&lab| end_pos[lab]).collect()
    }
}

fn abs_upper_l1(z: &CD) -> Dyadic {
    &z.re.abs() + &z.im.abs()
}

/// `kappa` and `omega` of `z (1 - i tau)`, exact.
fn project(z: &CD, tau: &Dyadic) -> (Dyadic, Dyadic) {
    let k = &z.re + &(&z.im * tau);
    let w = &z.im - &(&z.re * tau);
    (k, w)
}

fn sign_of(d: &Dyadic) -> i32 {
    if d.is_zero() {
        0
    } else if d.is_negative() {
        -1
    } else {
        1
    }
}

struct StepOutcome {
    series: Vec<Vec<CD>>,
    radii: Vec<Dyadic>,
    ends: Vec<CD>,
    start_order: Vec<usize>,
    swaps: Vec<(usize, usize, i32)>,
}

enum StepFailure {
    Refine,
}

struct Stepper<'a> {
    fam: &'a FiberFamily,
    cfg: &'a TrackerConfig,
    prec: u32,
    tau: Dyadic,
    lc_lower: Dyadic,
}

impl<'a> Stepper<'a> {
    fn fast(&self) -> bool {
        self.prec <= 64
    }

    fn predictors(&self, g: &[Poly<CD>], centers: &[CD]) -> Vec<Vec<CD>> {
        if self.fast() {
            let gf: Vec<Vec<Cplx<f64>>> =
                g.iter().map(|p| p.coeffs().iter().map(|c| c.map(|d| d.to_f64())).collect()).collect();
            return centers
                .iter()
                .map(|c| {
                    root_series(&gf, c.map(|d| d.to_f64()), self.cfg.series_order)
                        .into_iter()
                        .map(|z| z.map(|&x| Dyadic::from_f64(x)))
                        .collect()
                })
                .collect();
        }
        self.predictors_with::<BigFloat>(g, centers)
    }

    fn predictors_with<T: ApproxReal>(&self, g: &[Poly<CD>], centers: &[CD]) -> Vec<Vec<CD>> {
        let gf: Vec<Vec<Cplx<T>>> =
            g.iter().map(|p| p.coeffs().iter().map(|c| c.map(|d| T::from_dyadic(d, self.prec))).collect()).collect();
        centers
            .iter()
            .map(|c| {
                let y0 = c.map(|d| T::from_dyadic(d, self.prec));
                root_series(&gf, y0, self.cfg.series_order)
                    .into_iter()
                    .map(|z| z.map(|x| x.to_dyadic().round(self.prec, Rounding::Nearest)))
                    .collect()
            })
            .collect()
    }

    /// Upper bound on `sup_t |G(t, z(t))|` over `t` in `[0, 1]`, or `None`
    /// when the floating-point enclosure overflows.
    fn residual_bound(&self, g: &[Poly<CD>], z: &[CD]) -> Option<Dyadic> {
        if self.fast() {
            let zb: Vec<CBall> = z.iter().map(CBall::from_dyadic).collect();
            let gb = |p: &Poly<CD>| -> Vec<CBall> { p.coeffs().iter().map(CBall::from_dyadic).collect() };
            let mut acc = gb(g.last().unwrap());
            for gj in g.iter().rev().skip(1) {
                acc = poly_add(&poly_mul(&acc, &zb), &gb(gj));
            }
            let total = acc.iter().fold(0.0, |s, c| (s + c.mag_upper()) * (1.0 + 4.0 * f64::EPSILON));
            return acc.iter().all(CBall::is_finite).then(|| Dyadic::from_f64(total)).filter(|_| total.is_finite());
        }
        let zp = Poly::new(z.to_vec());
        let mut acc = g.last().unwrap().clone();
        for gj in g.iter().rev().skip(1) {
            acc = &acc * &zp + gj.clone();
        }
        Some(acc.coeffs().iter().fold(Dyadic::zero(), |s, c| &s + &abs_upper_l1(c)))
    }

    fn step(
        &self,
        x0: &CD,
        h: &CD,
        centers: &[CD],
        old: Option<(&[CD], &[Dyadic])>,
    ) -> Result<StepOutcome, StepFailure> {
        let d = centers.len();
        let g = self.fam.shifted(x0, h);
        let series = self.predictors(&g, centers);
        let mut inf_dist = vec![vec![Dyadic::zero(); d]; d];
        for i in 0..d {
            for j in i + 1..d {
                let d0 = series[i][0].clone() - series[j][0].clone();
                let mut rest = Dyadic::zero();
                for k in 1..series[i].len() {
                    rest = &rest + &abs_upper_l1(&(series[i][k].clone() - series[j][k].clone()));
                }
                let lo = &abs_lower(&d0) - &rest;
                if lo <= Dyadic::zero() {
                    return Err(StepFailure::Refine);
                }
                inf_dist[i][j] = lo.clone();
                inf_dist[j][i] = lo;
            }
        }
        let deg = Dyadic::from_i64(d as i64);
        let mut radii = Vec::with_capacity(d);
        for i in 0..d {
            let Some(res) = self.residual_bound(&g, &series[i]) else {
                return Err(StepFailure::Refine);
            };
            let num = &res * &deg;
            let mut den = self.lc_lower.clone();
            for (j, dist) in inf_dist[i].iter().enumerate() {
                if j != i {
                    den = (&den * dist).round(64, Rounding::Down);
                }
            }
            radii.push(num.div_round(&den, 64, Rounding::Up));
        }
        for i in 0..d {
            for j in i + 1..d {
                if &radii[i] + &radii[j] >= inf_dist[i][j] {
                    return Err(StepFailure::Refine);
                }
            }
        }
        if let Some((old_c, old_r)) = old {
            for i in 0..d {
                for k in 0..d {
                    if i != k {
                        let dist = abs_lower(&(series[i][0].clone() - old_c[k].clone()));
                        if dist <= &radii[i] + &old_r[k] {
                            return Err(StepFailure::Refine);
                        }
                    }
                }
            }
        }
        let ends: Vec<CD> = series.iter().map(|s| s.iter().fold(CD::zero(), |a, c| a + c.clone())).collect();

        // projection analysis
        let slack = &Dyadic::one() + &self.tau;
        let mut start_cmp = vec![vec![0i32; d]; d];
        let mut swaps = Vec::new();
        let mut busy = vec![false; d];
        for i in 0..d {
            for j in i + 1..d {
                let e = &(&radii[i] + &radii[j]) * &slack;
                let mut kap = Vec::with_capacity(series[i].len());
                let mut omg = Vec::with_capacity(series[i].len());
                for k in 0..series[i].len() {
                    let (a, b) = project(&(series[i][k].clone() - series[j][k].clone()), &self.tau);
                    kap.push(a);
                    omg.push(b);
                }
                let k_rest = kap[1..].iter().fold(Dyadic::zero(), |s, c| &s + &c.abs());
                let k_end = kap.iter().fold(Dyadic::zero(), |s, c| &s + c);
                if kap[0].abs() <= e || k_end.abs() <= e {
                    return Err(StepFailure::Refine);
                }
                let s0 = sign_of(&kap[0]);
                let s1 = sign_of(&k_end);
                start_cmp[i][j] = s0;
                start_cmp[j][i] = -s0;
                if kap[0].abs() > &k_rest + &e {
                    continue;
                }
                let w_rest = omg[1..].iter().fold(Dyadic::zero(), |s, c| &s + &c.abs());
                if omg[0].abs() <= &w_rest + &e {
                    return Err(StepFailure::Refine);
                }
                if busy[i] || busy[j] {
                    return Err(StepFailure::Refine);
                }
                busy[i] = true;
                busy[j] = true;
                if s0 != s1 {
                    // left strand is the one with smaller kappa at the start
                    let (left, right) = if s0 < 0 { (i, j) } else { (j, i) };
                    let w_sign = if left == i { sign_of(&omg[0]) } else { -sign_of(&omg[0]) };
                    let sign = if w_sign < 0 { 1 } else { -1 };
                    swaps.push((left, right, sign));
                }
            }
        }
        let mut start_order: Vec<usize> = (0..d).collect();
        start_order.sort_by(|&a, &b| {
            if a == b {
                std::cmp::Ordering::Equal
            } else if start_cmp[a][b] < 0 {
                std::cmp::Ordering::Less
            } else {
                std::cmp::Ordering::Greater
            }
        });
        Ok(StepOutcome { series, radii, ends, start_order, swaps })
    }
}

enum AttemptError {
    TooSmall(f64),
    Fatal(Error),
}

fn lerp(a: &CD, delta: &CD, s: &Dyadic) -> CD {
    a.clone() + delta.scale(s)
}

fn attempt(fam: &FiberFamily, a: &CD, b: &CD, prec: u32, cfg: &TrackerConfig) -> Result<SegmentTrack, AttemptError> {
    let d = fam.degree();
    let start_poly = fam.at(a);
    let policy = PrecisionPolicy { start_bits: prec, ceiling_bits: cfg.policy.ceiling_bits };
    let (disks, _) = isolate_squarefree(&start_poly, &policy).map_err(AttemptError::Fatal)?;
    if disks.len() != d {
        return Err(AttemptError::Fatal(Error::Degenerate("fiber is not squarefree".into())));
    }
    let stepper =
        Stepper { fam, cfg, prec, tau: Dyadic::one().mul_pow2(-(cfg.tilt_log2 as i64)), lc_lower: fam.leading().abs() };
    let delta = b.clone() - a.clone();
    let mut centers: Vec<CD> = disks.iter().map(|k| k.center.clone()).collect();
    let mut old_radii: Vec<Dyadic> = disks.iter().map(|k| k.radius.clone()).collect();
    let mut old_centers = centers.clone();
    let mut s = Dyadic::zero();
    let mut ds = Dyadic::one().mul_pow2(-(cfg.initial_step_log2 as i64));
    let min = Dyadic::one().mul_pow2(-(cfg.min_step_log2 as i64));
    let max = Dyadic::one().mul_pow2(-2);
    let one = Dyadic::one();
    let mut events = Vec::new();
    let mut samples = Vec::new();
    let mut steps = 0;
    let mut order: Vec<usize> = Vec::new();
    let mut first_order: Option<Vec<usize>> = None;
    while s < one {
        if &s + &ds > one {
            ds = &one - &s;
        }
        let x0 = lerp(a, &delta, &s);
        let h = delta.scale(&ds);
        match stepper.step(&x0, &h, &centers, Some((&old_centers, &old_radii))) {
            Ok(out) => {
                if first_order.is_none() {
                    first_order = Some(out.start_order.clone());
                }
                order = out.start_order.clone();
                let mut pos = vec![0; d];
                for (p, &lab) in order.iter().enumerate() {
                    pos[lab] = p;
                }
                let mut swaps = out.swaps.clone();
                swaps.sort_by_key(|(l, _, _)| pos[*l]);
                let s_lo = s.to_f64();
                let s_hi = (&s + &ds).to_f64();
                for (left, right, sign) in swaps {
                    let p = pos[left];
                    debug_assert_eq!(order[p + 1], right);
                    events.push(CrossingEvent { strands: (left, right), position: p + 1, sign, s_range: (s_lo, s_hi) });
                    order.swap(p, p + 1);
                }
                s = &s + &ds;
                steps += 1;
                if cfg.record_samples {
                    samples.push(Sample {
                        s: s.to_f64(),
                        centers: out.ends.iter().map(|z| (z.re.to_f64(), z.im.to_f64())).collect(),
                        radii: out.radii.iter().map(|r| r.to_f64()).collect(),
                    });
                }
                let _ = &out.series;
                old_centers = out.ends.clone();
                old_radii = out.radii;
                centers = out.ends;
                if ds < max {
                    ds = ds.mul_pow2(1);
                }
            }
            Err(StepFailure::Refine) => {
                ds = ds.mul_pow2(-1);
                if ds < min {
                    return Err(AttemptError::TooSmall(lerp(a, &delta, &s).re.to_f64()));
                }
            }
        }
    }
    let start_order = first_order.unwrap_or_else(|| (0..d).collect());
    let end_order = if steps == 0 { start_order.clone() } else { order };
    Ok(SegmentTrack {
        start: a.clone(),
        end: b.clone(),
        events,
        start_order,
        end_order,
        samples,
        steps,
        precision_bits: prec,
    })
}

/// Fiber roots over `x0` in the order braid letters refer to, i.e. sorted by
/// the tilted projection `kappa`.
pub fn fiber_positions(fam: &FiberFamily, x0: &CD, cfg: &TrackerConfig) -> Result<Vec<(f64, f64)>, Error> {
    let (disks, _) = isolate_squarefree(&fam.at(x0), &cfg.policy)?;
    if disks.len() != fam.degree() {
        return Err(Error::Degenerate("fiber is not squarefree".into()));
    }
    let tau = Dyadic::one().mul_pow2(-(cfg.tilt_log2 as i64));
    let mut keyed: Vec<(Dyadic, (f64, f64))> = disks
        .iter()
        .map(|k| (&k.center.re + &(&k.center.im * &tau), (k.center.re.to_f64(), k.center.im.to_f64())))
        .collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(keyed.into_iter().map(|(_, z)| z).collect())
}

/// Track all fiber roots along the segment from `a` to `b`, raising the
/// working precision whenever the step size collapses.
pub fn track_segment(fam: &FiberFamily, a: &CD, b: &CD, cfg: &TrackerConfig) -> Result<SegmentTrack, Error> {
    let mut last = 0.0;
    for prec in cfg.policy.schedule() {
        match attempt(fam, a, b, prec, cfg) {
            Ok(t) => return Ok(t),
            Err(AttemptError::TooSmall(x)) => last = x,
            Err(AttemptError::Fatal(e)) => return Err(e),
        }
    }
    Err(Error::CertificationFailed {
        ceiling: cfg.policy.ceiling_bits,
        detail: format!(
            "non-collision not certified on segment ({:.6},{:.6}) -> ({:.6},{:.6}) near Re x = {last:.6}",
            a.re.to_f64(),
            a.im.to_f64(),
            b.re.to_f64(),
            b.im.to_f64()
        ),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pipeline::parse_curve;

    fn pt(re: f64, im: f64) -> CD {
        Cplx::new(Dyadic::from_f64(re), Dyadic::from_f64(im))
    }

    #[test]
    fn square_root_half_turn() {
        // y^2 = x around x = 0: a full circle swaps the two roots once
        let fam = FiberFamily::new(&parse_curve("y^2 - x").unwrap()).unwrap();
        let cfg = TrackerConfig::default();
        let n = 16;
        let mut letters = Vec::new();
        let mut perm: Vec<usize> = vec![0, 1];
        for k in 0..n {
            let a0 = 2.0 * std::f64::consts::PI * k as f64 / n as f64;
            let a1 = 2.0 * std::f64::consts::PI * (k + 1) as f64 / n as f64;
            let t = track_segment(&fam, &pt(a0.cos(), a0.sin()), &pt(a1.cos(), a1.sin()), &cfg).unwrap();
            letters.extend(t.letters());
            let p = t.position_permutation();
            perm = perm.iter().map(|&q| p[q]).collect();
        }
        assert_eq!(letters, vec![1]);
        assert_eq!(perm, vec![1, 0]);
    }

    #[test]
    fn constant_segment_is_identity() {
        let fam = FiberFamily::new(&parse_curve("y^2 - x").unwrap()).unwrap();
        let t = track_segment(&fam, &pt(1.0, 0.0), &pt(2.0, 0.0), &TrackerConfig::default()).unwrap();
        assert!(t.events.is_empty());
        assert_eq!(t.position_permutation(), vec![0, 1]);
    }

    #[test]
    fn non_generic_pencil_rejected() {
        assert!(FiberFamily::new(&parse_curve("x*y - 1").unwrap()).is_err());
    }
}
