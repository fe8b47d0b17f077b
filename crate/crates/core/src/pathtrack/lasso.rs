//! Lasso systems in the pencil-parameter plane.
//!
//! Tails run along the real axis and pass over intervening real singular
//! values on upper half circles. A non-real target is reached by walking to
//! its real part and then moving vertically. Heads are counter-clockwise
//! circles of radius `epsilon`.

use std::cmp::Ordering;

use num_traits::Zero;

use crate::numroots::ComplexDisk;
use crate::scalar::{Cplx, Dyadic, Ring, Rounding};
use crate::Error;

type CD = Cplx<Dyadic>;

/// A singular value of the pencil together with what is known about it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingularValue {
    pub disk: ComplexDisk,
    /// Certified real; the disk center then lies on the real axis.
    pub real: bool,
    pub multiplicity: u32,
}

impl SingularValue {
    pub fn position(&self) -> &Dyadic {
        &self.disk.center.re
    }

    pub fn is_upper(&self) -> bool {
        !self.real && !self.disk.center.im.is_negative()
    }
}

/// Piece of a path. Arc angles are integer multiples of a quarter turn.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PathPiece {
    Segment { start: CD, end: CD },
    Arc { center: CD, radius: Dyadic, start_quarter: i32, sweep_quarters: i32 },
}

fn quarter_point(center: &CD, radius: &Dyadic, q: i32) -> CD {
    let (c, s) = match q.rem_euclid(4) {
        0 => (1, 0),
        1 => (0, 1),
        2 => (-1, 0),
        _ => (0, -1),
    };
    Cplx::new(&center.re + &(radius * &Dyadic::from_i64(c)), &center.im + &(radius * &Dyadic::from_i64(s)))
}

impl PathPiece {
    pub fn start(&self) -> CD {
        match self {
            PathPiece::Segment { start, .. } => start.clone(),
            PathPiece::Arc { center, radius, start_quarter, .. } => quarter_point(center, radius, *start_quarter),
        }
    }

    pub fn end(&self) -> CD {
        match self {
            PathPiece::Segment { end, .. } => end.clone(),
            PathPiece::Arc { center, radius, start_quarter, sweep_quarters } => {
                quarter_point(center, radius, start_quarter + sweep_quarters)
            }
        }
    }

    pub fn reversed(&self) -> PathPiece {
        match self {
            PathPiece::Segment { start, end } => PathPiece::Segment { start: end.clone(), end: start.clone() },
            PathPiece::Arc { center, radius, start_quarter, sweep_quarters } => PathPiece::Arc {
                center: center.clone(),
                radius: radius.clone(),
                start_quarter: start_quarter + sweep_quarters,
                sweep_quarters: -sweep_quarters,
            },
        }
    }

    /// Vertices of a polygonal approximation, including both endpoints.
    /// Arcs get `chords_per_quarter` chords per quarter turn; vertices at
    /// quarter angles are exact, the others are rounded to `prec` bits.
    pub fn polygon(&self, chords_per_quarter: u32, prec: u32) -> Vec<CD> {
        match self {
            PathPiece::Segment { start, end } => vec![start.clone(), end.clone()],
            PathPiece::Arc { center, radius, start_quarter, sweep_quarters } => {
                let n = chords_per_quarter as i64;
                let total = sweep_quarters.unsigned_abs() as i64 * n;
                let dir = sweep_quarters.signum() as i64;
                let r = radius.to_f64();
                (0..=total)
                    .map(|k| {
                        let sub = *start_quarter as i64 * n + dir * k;
                        if sub % n == 0 {
                            quarter_point(center, radius, (sub / n) as i32)
                        } else {
                            let a = std::f64::consts::FRAC_PI_2 * sub as f64 / n as f64;
                            let off = |v: f64| Dyadic::from_f64(r * v);
                            Cplx::new(
                                (&center.re + &off(a.cos())).round(prec, Rounding::Nearest),
                                (&center.im + &off(a.sin())).round(prec, Rounding::Nearest),
                            )
                        }
                    })
                    .collect()
            }
        }
    }
}

/// Closed path from the basepoint: tail, one counter-clockwise circle around
/// the target, tail backwards.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LassoPath {
    pub basepoint: CD,
    /// Index of the target in the singular value list.
    pub target: usize,
    pub pieces: Vec<PathPiece>,
    /// `pieces[head]` is the circle around the target.
    pub head: usize,
}

impl LassoPath {
    fn from_tail(basepoint: CD, target: usize, tail: Vec<PathPiece>, head: PathPiece) -> Self {
        let mut pieces = tail.clone();
        let h = pieces.len();
        pieces.push(head);
        pieces.extend(tail.iter().rev().map(PathPiece::reversed));
        LassoPath { basepoint, target, pieces, head: h }
    }

    /// Vertex list of the polygonal approximation, deduplicated at joints.
    pub fn polygon(&self, chords_per_quarter: u32, prec: u32) -> Vec<CD> {
        let mut out: Vec<CD> = vec![self.basepoint.clone()];
        for p in &self.pieces {
            for v in p.polygon(chords_per_quarter, prec) {
                if out.last() != Some(&v) {
                    out.push(v);
                }
            }
        }
        out
    }

    pub fn is_closed(&self) -> bool {
        let mut at = self.basepoint.clone();
        for p in &self.pieces {
            if p.start() != at {
                return false;
            }
            at = p.end();
        }
        at == self.basepoint
    }
}

/// Walk along the real axis from `from` to `to`, passing over every real
/// singular value strictly between them (and any at distance `eps` from the
/// start) on an upper half circle.
fn walk_real(from: &Dyadic, to: &Dyadic, reals: &[Dyadic], eps: &Dyadic) -> Vec<PathPiece> {
    let zero = Dyadic::zero();
    let pt = |x: &Dyadic| Cplx::new(x.clone(), zero.clone());
    let mut pieces = Vec::new();
    let mut at = from.clone();
    let right = to > from;
    let mut obstacles: Vec<&Dyadic> =
        reals.iter().filter(|s| if right { *s > from && *s < to } else { *s < from && *s > to }).collect();
    obstacles.sort();
    if !right {
        obstacles.reverse();
    }
    for s in obstacles {
        let (near, far, q0, sweep) = if right { (s - eps, s + eps, 2, -2) } else { (s + eps, s - eps, 0, 2) };
        if near != at {
            pieces.push(PathPiece::Segment { start: pt(&at), end: pt(&near) });
        }
        pieces.push(PathPiece::Arc { center: pt(s), radius: eps.clone(), start_quarter: q0, sweep_quarters: sweep });
        at = far;
    }
    if &at != to {
        pieces.push(PathPiece::Segment { start: pt(&at), end: pt(to) });
    }
    pieces
}

fn min_pairwise_distance(points: &[(f64, f64)]) -> f64 {
    let mut m = f64::INFINITY;
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            m = m.min(((points[i].0 - points[j].0).powi(2) + (points[i].1 - points[j].1).powi(2)).sqrt());
        }
    }
    m
}

/// A default radius: a quarter of the minimal distance between singular
/// values, rounded down to four significant bits.
pub fn default_epsilon(values: &[SingularValue]) -> Dyadic {
    let pts: Vec<(f64, f64)> = values.iter().map(|v| v.disk.center_f64()).collect();
    let m = min_pairwise_distance(&pts);
    let m = if m.is_finite() { m } else { 4.0 };
    Dyadic::from_f64(m / 4.0).round(4, Rounding::Down)
}

fn point_segment_distance(p: (f64, f64), a: (f64, f64), b: (f64, f64)) -> f64 {
    let (dx, dy) = (b.0 - a.0, b.1 - a.1);
    let len2 = dx * dx + dy * dy;
    let t = if len2 == 0.0 { 0.0 } else { (((p.0 - a.0) * dx + (p.1 - a.1) * dy) / len2).clamp(0.0, 1.0) };
    let (qx, qy) = (a.0 + t * dx, a.1 + t * dy);
    ((p.0 - qx).powi(2) + (p.1 - qy).powi(2)).sqrt()
}

fn c64(z: &CD) -> (f64, f64) {
    (z.re.to_f64(), z.im.to_f64())
}

/// The lasso system for a real basepoint, ordered so that the product of the
/// lassos in list order is a loop around all singular values.
pub fn build_lasso_system(values: &[SingularValue], basepoint: &Dyadic, eps: &Dyadic) -> Result<Vec<LassoPath>, Error> {
    if values.is_empty() {
        return Ok(Vec::new());
    }
    if eps <= &Dyadic::zero() {
        return Err(Error::InvalidInput("epsilon must be positive".into()));
    }
    let pts: Vec<(f64, f64)> = values.iter().map(|v| v.disk.center_f64()).collect();
    let e = eps.to_f64();
    if 2.0 * e >= min_pairwise_distance(&pts) {
        return Err(Error::InvalidInput(format!(
            "epsilon {e} is not below half the minimal distance between singular values"
        )));
    }
    let b = basepoint.to_f64();
    for p in &pts {
        let d = ((p.0 - b).powi(2) + p.1.powi(2)).sqrt();
        if d < e * (1.0 - 1e-9) {
            return Err(Error::InvalidInput("basepoint lies within epsilon of a singular value".into()));
        }
    }
    let reals: Vec<Dyadic> = values.iter().filter(|v| v.real).map(|v| v.position().clone()).collect();
    let zero = Dyadic::zero();
    let base = Cplx::new(basepoint.clone(), zero.clone());
    let mut lassos = Vec::with_capacity(values.len());
    for (k, v) in values.iter().enumerate() {
        let pos = v.position();
        if !v.real {
            for r in &reals {
                if (r - pos).abs() <= *eps {
                    return Err(Error::InvalidInput(
                        "a non-real singular value lies above a real one; pick a smaller epsilon".into(),
                    ));
                }
            }
        }
        let right = pos > basepoint;
        let (tail, head) = if v.real {
            let entry = if right { pos - eps } else { pos + eps };
            let tail = walk_real(basepoint, &entry, &reals, eps);
            let q0 = if right { 2 } else { 0 };
            (
                tail,
                PathPiece::Arc {
                    center: v.disk.center.clone(),
                    radius: eps.clone(),
                    start_quarter: q0,
                    sweep_quarters: 4,
                },
            )
        } else {
            let mut tail = walk_real(basepoint, pos, &reals, eps);
            let im = &v.disk.center.im;
            let up = !im.is_negative();
            let stop = if up { im - eps } else { im + eps };
            tail.push(PathPiece::Segment {
                start: Cplx::new(pos.clone(), zero.clone()),
                end: Cplx::new(pos.clone(), stop),
            });
            let q0 = if up { -1 } else { 1 };
            (
                tail,
                PathPiece::Arc {
                    center: v.disk.center.clone(),
                    radius: eps.clone(),
                    start_quarter: q0,
                    sweep_quarters: 4,
                },
            )
        };
        let lasso = LassoPath::from_tail(base.clone(), k, tail, head);
        debug_assert!(lasso.is_closed());
        check_clearance(&lasso, values, e)?;
        lassos.push(lasso);
    }
    let key = |l: &LassoPath| -> (u8, Dyadic) {
        let v = &values[l.target];
        let p = v.position().clone();
        let right = &p > basepoint;
        match (right, v.is_upper()) {
            (true, false) => (0, p),
            (true, true) => (1, -p),
            (false, true) => (2, -p),
            (false, false) => (3, p),
        }
    };
    lassos.sort_by(|a, b| {
        let (ka, kb) = (key(a), key(b));
        ka.cmp(&kb).then_with(|| values[a.target].disk.center.im.cmp(&values[b.target].disk.center.im).reverse())
    });
    Ok(lassos)
}

fn check_clearance(lasso: &LassoPath, values: &[SingularValue], eps: f64) -> Result<(), Error> {
    let poly = lasso.polygon(4, 64);
    for (j, v) in values.iter().enumerate() {
        let p = v.disk.center_f64();
        let need = if j == lasso.target { eps * 0.5 } else { eps * 0.9 };
        for w in poly.windows(2) {
            if point_segment_distance(p, c64(&w[0]), c64(&w[1])) < need {
                return Err(Error::InvalidInput(format!(
                    "lasso around singular value {} passes too close to ({:.6}, {:.6})",
                    lasso.target, p.0, p.1
                )));
            }
        }
    }
    Ok(())
}

/// Sorting helper for singular values: by real part, then imaginary part.
pub fn sort_singular_values(values: &mut [SingularValue]) {
    values.sort_by(|a, b| match a.disk.center.re.cmp(&b.disk.center.re) {
        Ordering::Equal => a.disk.center.im.cmp(&b.disk.center.im),
        o => o,
    });
}

/// The largest-multiplicity real singular value, ties to the rightmost.
pub fn principal_real_value(values: &[SingularValue]) -> Option<usize> {
    values
        .iter()
        .enumerate()
        .filter(|(_, v)| v.real)
        .max_by(|(_, a), (_, b)| a.multiplicity.cmp(&b.multiplicity).then(a.position().cmp(b.position())))
        .map(|(i, _)| i)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn real(x: f64) -> SingularValue {
        SingularValue {
            disk: ComplexDisk { center: Cplx::new(Dyadic::from_f64(x), Dyadic::zero()), radius: Dyadic::zero() },
            real: true,
            multiplicity: 1,
        }
    }

    fn cplx(re: f64, im: f64) -> SingularValue {
        SingularValue {
            disk: ComplexDisk { center: Cplx::new(Dyadic::from_f64(re), Dyadic::from_f64(im)), radius: Dyadic::zero() },
            real: false,
            multiplicity: 1,
        }
    }

    #[test]
    fn single_value_far_basepoint() {
        let eps = Dyadic::from_f64(0.25);
        let l = build_lasso_system(&[real(0.0)], &Dyadic::from_f64(1.0), &eps).unwrap();
        assert_eq!(l.len(), 1);
        assert_eq!(l[0].pieces.len(), 3);
        assert!(l[0].is_closed());
        assert_eq!(l[0].pieces[0].end(), Cplx::new(eps.clone(), Dyadic::zero()));
    }

    #[test]
    fn detours_and_vertical_rise() {
        let vals = vec![real(0.0), real(1.0), real(2.0), cplx(2.5, 1.0), cplx(2.5, -1.0)];
        let eps = Dyadic::from_f64(0.125);
        let base = Dyadic::from_f64(0.125);
        let ls = build_lasso_system(&vals, &base, &eps).unwrap();
        assert!(ls.iter().all(|l| l.is_closed()));
        let up = ls.iter().find(|l| l.target == 3).unwrap();
        let arcs = up.pieces[..up.head].iter().filter(|p| matches!(p, PathPiece::Arc { .. })).count();
        assert_eq!(arcs, 2);
        let order: Vec<usize> = ls.iter().map(|l| l.target).collect();
        assert_eq!(order, vec![1, 2, 4, 3, 0]);
    }

    #[test]
    fn epsilon_too_large_rejected() {
        let vals = vec![real(0.0), real(1.0)];
        assert!(build_lasso_system(&vals, &Dyadic::from_f64(0.5), &Dyadic::from_f64(0.5)).is_err());
    }

    #[test]
    fn arc_polygon_endpoints_exact() {
        let arc = PathPiece::Arc {
            center: Cplx::new(Dyadic::one(), Dyadic::zero()),
            radius: Dyadic::from_f64(0.25),
            start_quarter: 2,
            sweep_quarters: -2,
        };
        let v = arc.polygon(4, 60);
        assert_eq!(v.len(), 9);
        assert_eq!(v[0], arc.start());
        assert_eq!(v[8], arc.end());
        assert_eq!(v[4], Cplx::new(Dyadic::one(), Dyadic::from_f64(0.25)));
    }
}
