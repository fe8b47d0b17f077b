use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use super::quad::{rational_nth_root, rational_roots, AlgebraicNumber, QuadNumber};
use crate::exactpoly::{rational_squarefree_decomposition, BiPoly, Poly};
use crate::scalar::Ring;
use crate::{Error, QBiPoly};

/// Largest `x`-order explored while waiting for branches to separate.
const SEPARATION_LIMIT: u32 = 64;

/// One local branch `x = x0 + t^e`, `y = y0 + sum c_k t^k`.
#[derive(Clone, Debug, PartialEq)]
pub struct PuiseuxBranch {
    pub point: (BigRational, BigRational),
    pub ramification: u32,
    /// Nonzero terms `(k, c_k)` in increasing `k`.
    pub terms: Vec<(u32, QuadNumber)>,
    /// The series is exact modulo `t^truncation`.
    pub truncation: u32,
    /// The branch is the curve itself beyond the listed terms.
    pub terminates: bool,
}

impl PuiseuxBranch {
    pub fn coefficient(&self, k: u32) -> QuadNumber {
        self.terms.iter().find(|(e, _)| *e == k).map_or_else(QuadNumber::zero, |(_, c)| c.clone())
    }

    /// Coefficients as exact algebraic numbers.
    pub fn coefficients(&self) -> Vec<(u32, AlgebraicNumber)> {
        self.terms.iter().map(|(k, c)| (*k, AlgebraicNumber::from(c))).collect()
    }

    /// `t`-adic valuation of `f(x0 + t^e, y0 + y(t))`, computed modulo
    /// `t^bound`; `None` when the residual vanishes to that order.
    pub fn residual_valuation(&self, f: &QBiPoly, bound: u32) -> Option<u32> {
        let n = bound as usize;
        let trunc = |p: Poly<QuadNumber>| {
            let mut c = p.into_coeffs();
            c.truncate(n);
            Poly::new(c)
        };
        let lift = |c: &BigRational| QuadNumber::rational(c.clone());
        let x =
            trunc(Poly::constant(lift(&self.point.0)) + Poly::monomial(QuadNumber::one(), self.ramification as usize));
        let mut y = Poly::constant(lift(&self.point.1));
        for (k, c) in &self.terms {
            y = y + Poly::monomial(c.clone(), *k as usize);
        }
        let y = trunc(y);
        let mut acc: Poly<QuadNumber> = Poly::zero();
        for ((i, j), c) in f.terms() {
            let mut m = Poly::constant(lift(c));
            for _ in 0..*i {
                m = trunc(&m * &x);
            }
            for _ in 0..*j {
                m = trunc(&m * &y);
            }
            acc = acc + m;
        }
        acc.valuation().map(|v| v as u32)
    }

    /// Terms as `(exponent in x, coefficient)`.
    pub fn x_exponents(&self) -> Vec<(BigRational, QuadNumber)> {
        let e = BigInt::from(self.ramification);
        self.terms.iter().map(|(k, c)| (BigRational::new(BigInt::from(*k), e.clone()), c.clone())).collect()
    }
}

impl Serialize for PuiseuxBranch {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("PuiseuxBranch", 5)?;
        st.serialize_field("point", &(self.point.0.to_string(), self.point.1.to_string()))?;
        st.serialize_field("ramification", &self.ramification)?;
        st.serialize_field("terms", &self.coefficients())?;
        st.serialize_field("truncation", &self.truncation)?;
        st.serialize_field("terminates", &self.terminates)?;
        st.end()
    }
}

/// Local polynomial `g(s, w)` with `x - x0 = s^e`, `y - y0 = series(s) + w`.
#[derive(Clone)]
struct State {
    g: BiPoly<QuadNumber>,
    e: u32,
    series: Vec<(u32, QuadNumber)>,
    /// Exponent of the last series term; `w` has larger valuation.
    last: u32,
    /// Number of branches (as roots `w`) this state accounts for.
    mult: u32,
    /// Radicand of the coefficient field, 0 for `Q`.
    d: BigInt,
}

fn ramify(g: &BiPoly<QuadNumber>, q: u32) -> BiPoly<QuadNumber> {
    BiPoly::from_terms(g.terms().map(|((i, j), c)| ((i * q, *j), c.clone())))
}

/// `g(s, c s^p + w)`.
fn substitute(g: &BiPoly<QuadNumber>, c: &QuadNumber, p: u32) -> BiPoly<QuadNumber> {
    let mut acc: BTreeMap<(u32, u32), QuadNumber> = BTreeMap::new();
    let maxj = g.deg_y();
    let cpow: Vec<QuadNumber> = (0..=maxj).map(|k| c.pow(k)).collect();
    let binom = |n: u32, k: u32| -> BigRational {
        let mut b = BigInt::one();
        for t in 0..k {
            b = b * BigInt::from(n - t) / BigInt::from(t + 1);
        }
        BigRational::from_integer(b)
    };
    for ((i, j), a) in g.terms() {
        for k in 0..=*j {
            let coef = a.clone() * cpow[(j - k) as usize].clone() * QuadNumber::rational(binom(*j, k));
            let key = (i + p * (j - k), k);
            let v = acc.remove(&key).map_or(coef.clone(), |old| old + coef);
            if !v.is_zero() {
                acc.insert(key, v);
            }
        }
    }
    BiPoly::from_terms(acc)
}

/// Edges `(j1, i1, j2, i2)` of the lower Newton polygon with `j1 < j2`,
/// `i1 > i2`.
fn newton_edges(g: &BiPoly<QuadNumber>) -> Vec<(u32, u32, u32, u32)> {
    let mut low: BTreeMap<u32, u32> = BTreeMap::new();
    for ((i, j), _) in g.terms() {
        let e = low.entry(*j).or_insert(*i);
        if *i < *e {
            *e = *i;
        }
    }
    let pts: Vec<(i64, i64)> = low.iter().map(|(&j, &i)| (j as i64, i as i64)).collect();
    let mut hull: Vec<(i64, i64)> = Vec::new();
    for p in pts {
        while hull.len() >= 2 {
            let (a, b) = (hull[hull.len() - 2], hull[hull.len() - 1]);
            let cross = (b.0 - a.0) * (p.1 - a.1) - (b.1 - a.1) * (p.0 - a.0);
            if cross <= 0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(p);
    }
    hull.windows(2)
        .filter(|w| w[1].1 < w[0].1)
        .map(|w| (w[0].0 as u32, w[0].1 as u32, w[1].0 as u32, w[1].1 as u32))
        .collect()
}

/// `sqrt(r)` in `Q(sqrt d)`, or in a new quadratic field when `d = 0`.
fn square_root(r: &QuadNumber, d: &BigInt) -> Result<QuadNumber, Error> {
    let r = QuadNumber { d: d.clone(), ..r.clone() };
    if let Some(s) = r.sqrt_in_field() {
        return Ok(s);
    }
    if d.is_zero() {
        return Ok(QuadNumber::sqrt_of_rational(&r.a));
    }
    Err(Error::Unsupported("square root needs a nested field extension".into()))
}

/// Roots of `psi` over `Q(sqrt d)` with multiplicities, adjoining one
/// square root to `Q` when needed.
fn edge_roots(psi: &Poly<QuadNumber>, d: &BigInt) -> Result<Vec<(QuadNumber, u32)>, Error> {
    let deg = psi.deg();
    if psi.coeffs().iter().all(|c| c.is_rational()) {
        let pq = psi.map(|c| c.a.clone());
        let mut out = Vec::new();
        let mut rest = pq.clone();
        for (r, k) in rational_roots(&pq) {
            out.push((QuadNumber::rational(r.clone()), k as u32));
            let lin = Poly::new(vec![-r, BigRational::one()]);
            for _ in 0..k {
                rest = rest.div_rem(&lin).0;
            }
        }
        if rest.deg() == 0 {
            return Ok(out);
        }
        let sq = rational_squarefree_decomposition(&rest);
        for (h, k) in sq {
            match h.deg() {
                0 => {}
                2 => {
                    let h = h.monic();
                    let (b, c) = (h.coeff(1), h.coeff(0));
                    let two = BigRational::from_integer(2.into());
                    let disc = &b * &b / BigRational::from_integer(4.into()) - c;
                    let s = square_root(&QuadNumber::rational(disc), d)?;
                    let mid = QuadNumber::rational(-b / two);
                    out.push((mid.clone() + s.clone(), k as u32));
                    out.push((mid - s, k as u32));
                }
                n => {
                    return Err(Error::Unsupported(format!("irreducible edge factor of degree {n}")));
                }
            }
        }
        return Ok(out);
    }
    // over Q(sqrt d): only powers of a linear factor
    let a = psi.lc();
    let c = -psi.coeff(deg - 1) / (QuadNumber::from_i64(deg as i64) * a.clone());
    let lin = Poly::new(vec![-c.clone(), QuadNumber::one()]);
    let mut pow = Poly::constant(a);
    for _ in 0..deg {
        pow = &pow * &lin;
    }
    if pow == *psi {
        Ok(vec![(c, deg as u32)])
    } else {
        Err(Error::Unsupported("edge polynomial needs a nested field extension".into()))
    }
}

/// `q`-th root of `r`, adjoining a square root to `Q` when `q = 2`.
fn edge_root_power(r: &QuadNumber, q: u32, d: &BigInt) -> Result<QuadNumber, Error> {
    if q == 1 {
        return Ok(r.clone());
    }
    if q == 2 {
        return square_root(r, d);
    }
    if r.is_rational() {
        if let Some(s) = rational_nth_root(&r.a, q) {
            return Ok(QuadNumber { a: s, b: BigRational::zero(), d: r.d.clone() });
        }
    }
    Err(Error::Unsupported(format!("{q}-th root outside the supported fields")))
}

/// All branches of `f` at `point`, `y` expanded in fractional powers of `x`
/// up to (excluding) `x^order`, continuing further where needed to separate
/// branches.
pub fn puiseux_expansions(
    f: &QBiPoly,
    point: (&BigRational, &BigRational),
    order: u32,
) -> Result<Vec<PuiseuxBranch>, Error> {
    let g = f.translate(point.0, point.1);
    if !g.coeff(0, 0).is_zero() {
        return Err(Error::InvalidInput("point is not on the curve".into()));
    }
    let g0 = g.eval_x(&BigRational::zero());
    let mult = match g0.valuation() {
        Some(v) => v as u32,
        None => return Err(Error::Degenerate("the vertical line through the point lies on the curve".into())),
    };
    let start = State {
        g: g.map(|c| QuadNumber::rational(c.clone())),
        e: 1,
        series: Vec::new(),
        last: 0,
        mult,
        d: BigInt::zero(),
    };
    let pt = (point.0.clone(), point.1.clone());
    let mut out = Vec::new();
    let mut stack = vec![start];
    while let Some(st) = stack.pop() {
        expand_state(st, order, &pt, &mut stack, &mut out)?;
    }
    Ok(out)
}

fn expand_state(
    mut st: State,
    order: u32,
    pt: &(BigRational, BigRational),
    stack: &mut Vec<State>,
    out: &mut Vec<PuiseuxBranch>,
) -> Result<(), Error> {
    let finish = |st: &State, terminates: bool| PuiseuxBranch {
        point: pt.clone(),
        ramification: st.e,
        terms: st.series.clone(),
        truncation: order * st.e,
        terminates,
    };
    // the term separating a branch from its siblings is always computed
    let mut force = false;
    loop {
        // exact branch w = 0
        let jmin = st.g.terms().map(|((_, j), _)| *j).min().unwrap_or(0);
        if jmin >= 2 {
            return Err(Error::Degenerate("non-reduced local branch (non-isolated singularity)".into()));
        }
        if jmin == 1 {
            out.push(finish(&st, true));
            st.g = BiPoly::from_terms(st.g.terms().map(|((i, j), c)| ((*i, j - 1), c.clone())));
            st.mult -= 1;
            if st.mult == 0 {
                return Ok(());
            }
            force = true;
        }
        let edges: Vec<_> =
            newton_edges(&st.g).into_iter().filter(|(j1, i1, j2, i2)| (i1 - i2) > st.last * (j2 - j1)).collect();
        let width: u32 = edges.iter().map(|(j1, _, j2, _)| j2 - j1).sum();
        if width != st.mult {
            return Err(Error::Degenerate(format!("Newton polygon accounts for {width} of {} branches", st.mult)));
        }
        if st.mult == 1 {
            let (j1, i1, j2, i2) = edges[0];
            let p = i1 - i2;
            debug_assert_eq!((j1, j2), (0, 1));
            if p >= order * st.e && !force {
                out.push(finish(&st, false));
                return Ok(());
            }
            let c = -(st.g.coeff(i1, 0) / st.g.coeff(i2, 1));
            st.g = substitute(&st.g, &c, p);
            st.series.push((p, c));
            st.last = p;
            force = false;
            continue;
        }
        if st.last > SEPARATION_LIMIT * st.e {
            return Err(Error::Degenerate("branches do not separate (non-isolated singularity)".into()));
        }
        for (j1, i1, j2, i2) in edges {
            let num = i1 - i2;
            let den = j2 - j1;
            let gcd = num.gcd(&den);
            let (p, q) = (num / gcd, den / gcd);
            let mut coeffs = Vec::new();
            let mut j = j1;
            while j <= j2 {
                let i = i1 - (j - j1) / q * p;
                coeffs.push(st.g.coeff(i, j));
                j += q;
            }
            let psi = Poly::new(coeffs);
            for (r, mu) in edge_roots(&psi, &st.d)? {
                let c = edge_root_power(&r, q, &st.d)?;
                let d = if c.is_rational() { st.d.clone() } else { c.d.clone() };
                let g = if q > 1 { ramify(&st.g, q) } else { st.g.clone() };
                let mut series: Vec<_> = st.series.iter().map(|(k, v)| (k * q, v.clone())).collect();
                series.push((p, c.clone()));
                let child = State { g: substitute(&g, &c, p), e: st.e * q, series, last: p, mult: mu, d };
                stack.push(child);
            }
        }
        return Ok(());
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pipeline::parse_curve;

    fn r(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn cusp() {
        let f = parse_curve("y^2 - x^3").unwrap();
        let b = puiseux_expansions(&f, (&r(0), &r(0)), 4).unwrap();
        assert_eq!(b.len(), 1);
        assert_eq!(b[0].ramification, 2);
        assert_eq!(b[0].terms, vec![(3, QuadNumber::one())]);
        assert!(b[0].terminates);
    }

    #[test]
    fn node_and_residual() {
        let f = parse_curve("y^2 - x^2 - x^3").unwrap();
        let bs = puiseux_expansions(&f, (&r(0), &r(0)), 6).unwrap();
        assert_eq!(bs.len(), 2);
        for b in &bs {
            assert_eq!(b.ramification, 1);
            assert!(b.residual_valuation(&f, b.truncation).is_none());
            assert_eq!(b.coefficient(2).a * b.coefficient(1).a.clone(), BigRational::new(1.into(), 2.into()));
        }
    }

    #[test]
    fn off_curve_rejected() {
        let f = parse_curve("y - x^2 - 1").unwrap();
        assert!(puiseux_expansions(&f, (&r(0), &r(0)), 3).is_err());
        let f = parse_curve("(y - x)^2").unwrap();
        assert!(puiseux_expansions(&f, (&r(0), &r(0)), 3).is_err());
    }
}
