use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::scalar::{Domain, Field, Ring};

/// Dense univariate polynomial, coefficients lowest degree first.
///
/// The coefficient vector never ends in a zero, so the zero polynomial is the
/// empty vector and `lc` is always nonzero for nonzero polynomials.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

impl<T: Ring> Poly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn constant(c: T) -> Self {
        Poly::new(vec![c])
    }

    pub fn monomial(c: T, k: usize) -> Self {
        let mut v = vec![T::zero(); k + 1];
        v[k] = c;
        Poly::new(v)
    }

    /// The indeterminate itself.
    pub fn x() -> Self {
        Poly::monomial(T::one(), 1)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn lc(&self) -> T {
        self.coeffs.last().cloned().unwrap_or_else(T::zero)
    }

    pub fn eval(&self, x: &T) -> T {
        self.coeffs.iter().rev().fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    /// Evaluate at a point of an extension ring.
    pub fn eval_with<U: Ring, F: Fn(&T) -> U>(&self, x: &U, embed: F) -> U {
        self.coeffs.iter().rev().fold(U::zero(), |acc, c| acc * x.clone() + embed(c))
    }

    pub fn map<U: Ring, F: Fn(&T) -> U>(&self, f: F) -> Poly<U> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    pub fn derivative(&self) -> Self {
        Poly::new(self.coeffs.iter().enumerate().skip(1).map(|(k, c)| c.clone() * T::from_i64(k as i64)).collect())
    }

    pub fn scale(&self, k: &T) -> Self {
        Poly::new(self.coeffs.iter().map(|c| c.clone() * k.clone()).collect())
    }

    /// `self(q(x))`.
    pub fn compose(&self, q: &Poly<T>) -> Self {
        self.coeffs.iter().rev().fold(Poly::zero(), |acc, c| acc * q.clone() + Poly::constant(c.clone()))
    }

    /// Multiply by `x^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut v = vec![T::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        Poly { coeffs: v }
    }

    /// Coefficients reversed: `x^deg * self(1/x)`.
    pub fn reversed(&self) -> Self {
        let mut v = self.coeffs.clone();
        v.reverse();
        Poly::new(v)
    }

    /// Largest `k` with `x^k | self`.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Pseudo-division: `lc(b)^(deg a - deg b + 1) * a = q*b + r`.
    pub fn pseudo_div_rem(&self, b: &Poly<T>) -> (Poly<T>, Poly<T>) {
        let db = b.degree().expect("pseudo-division by zero polynomial");
        let Some(da) = self.degree() else {
            return (Poly::zero(), Poly::zero());
        };
        if da < db {
            return (Poly::zero(), self.clone());
        }
        let lb = b.lc();
        let mut r = self.coeffs.clone();
        let mut q = vec![T::zero(); da - db + 1];
        for k in (0..=da - db).rev() {
            let t = r[k + db].clone();
            for c in q.iter_mut() {
                *c = c.clone() * lb.clone();
            }
            q[k] = q[k].clone() + t.clone();
            for c in r.iter_mut() {
                *c = c.clone() * lb.clone();
            }
            for (i, bc) in b.coeffs.iter().enumerate() {
                r[k + i] = r[k + i].clone() - t.clone() * bc.clone();
            }
        }
        r.truncate(db);
        (Poly::new(q), Poly::new(r))
    }

    pub fn pseudo_rem(&self, b: &Poly<T>) -> Poly<T> {
        self.pseudo_div_rem(b).1
    }
}

impl<T: Field> Poly<T> {
    pub fn div_rem(&self, b: &Poly<T>) -> (Poly<T>, Poly<T>) {
        let db = b.degree().expect("division by zero polynomial");
        let Some(da) = self.degree() else {
            return (Poly::zero(), Poly::zero());
        };
        if da < db {
            return (Poly::zero(), self.clone());
        }
        let inv = b.lc().inv();
        let mut r = self.coeffs.clone();
        let mut q = vec![T::zero(); da - db + 1];
        for k in (0..=da - db).rev() {
            let t = r[k + db].clone() * inv.clone();
            if t.is_zero() {
                continue;
            }
            for (i, bc) in b.coeffs.iter().enumerate() {
                r[k + i] = r[k + i].clone() - t.clone() * bc.clone();
            }
            q[k] = t;
        }
        r.truncate(db);
        (Poly::new(q), Poly::new(r))
    }

    pub fn monic(&self) -> Poly<T> {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.lc().inv())
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Poly<T>) -> Poly<T> {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = if r.is_zero() { r } else { r.monic() };
        }
        a.monic()
    }

    /// Yun's squarefree decomposition: `[(g_1, 1), (g_2, 2), ...]` with
    /// `self = lc * prod g_k^k` and each `g_k` monic, squarefree, pairwise
    /// coprime. Factors equal to 1 are omitted.
    pub fn squarefree_decomposition(&self) -> Vec<(Poly<T>, usize)> {
        let mut out = Vec::new();
        if self.deg() == 0 {
            return out;
        }
        let f = self.monic();
        let fp = f.derivative();
        let a0 = f.gcd(&fp);
        let mut b = f.div_rem(&a0).0;
        let mut c = fp.div_rem(&a0).0;
        let mut d = c - b.derivative();
        let mut k = 1;
        while b.deg() > 0 {
            let a = b.gcd(&d);
            if a.deg() > 0 {
                out.push((a.clone(), k));
            }
            b = b.div_rem(&a).0;
            c = d.div_rem(&a).0;
            d = c - b.derivative();
            k += 1;
        }
        out
    }

    pub fn squarefree_part(&self) -> Poly<T> {
        self.squarefree_decomposition().into_iter().fold(Poly::one(), |acc, (g, _)| acc * g)
    }
}

impl<T: Domain> Domain for Poly<T> {
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        let db = rhs.degree()?;
        let Some(da) = self.degree() else {
            return Some(Poly::zero());
        };
        if da < db {
            return None;
        }
        let lb = rhs.lc();
        let mut r = self.coeffs.clone();
        let mut q = vec![T::zero(); da - db + 1];
        for k in (0..=da - db).rev() {
            let lead = &r[k + db];
            if lead.is_zero() {
                continue;
            }
            let t = lead.div_exact(&lb)?;
            for (i, bc) in rhs.coeffs.iter().enumerate() {
                r[k + i] = r[k + i].clone() - t.clone() * bc.clone();
            }
            q[k] = t;
        }
        r.iter().all(|c| c.is_zero()).then(|| Poly::new(q))
    }
}

/// Resultant by the subresultant pseudo-remainder sequence.
///
/// Returns zero when either input is zero. All intermediate divisions are
/// exact in `T`.
pub fn resultant<T: Domain>(a: &Poly<T>, b: &Poly<T>) -> T {
    let (Some(da), Some(db)) = (a.degree(), b.degree()) else {
        return T::zero();
    };
    let (mut a, mut b, mut s) = if da < db {
        let sign = if da % 2 == 1 && db % 2 == 1 { -T::one() } else { T::one() };
        (b.clone(), a.clone(), sign)
    } else {
        (a.clone(), b.clone(), T::one())
    };
    if b.deg() == 0 {
        return s * b.lc().pow(a.deg() as u32);
    }
    let mut g = T::one();
    let mut h = T::one();
    loop {
        let (ma, mb) = (a.deg(), b.deg());
        let delta = (ma - mb) as u32;
        if ma % 2 == 1 && mb % 2 == 1 {
            s = -s;
        }
        let r = a.pseudo_rem(&b);
        if r.is_zero() {
            return T::zero();
        }
        let div = g.clone() * h.pow(delta);
        a = b;
        b = Poly::new(r.coeffs.iter().map(|c| c.div_exact(&div).expect("subresultant division not exact")).collect());
        g = a.lc();
        h = match delta {
            0 => h,
            1 => g.clone(),
            _ => g.pow(delta).div_exact(&h.pow(delta - 1)).expect("subresultant h update not exact"),
        };
        if b.deg() == 0 {
            let n = a.deg() as u32;
            let fin = if n == 1 {
                b.lc()
            } else {
                b.lc().pow(n).div_exact(&h.pow(n - 1)).expect("final subresultant step not exact")
            };
            return s * fin;
        }
    }
}

/// `Res(p, p')`, without sign or leading-coefficient normalization.
pub fn discriminant<T: Domain>(p: &Poly<T>) -> T {
    resultant(p, &p.derivative())
}

impl<T: Ring> Zero for Poly<T> {
    fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<T: Ring> One for Poly<T> {
    fn one() -> Self {
        Poly::constant(T::one())
    }
}

impl<T: Ring> Add for Poly<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let (mut long, short) =
            if self.coeffs.len() >= rhs.coeffs.len() { (self.coeffs, rhs.coeffs) } else { (rhs.coeffs, self.coeffs) };
        for (a, b) in long.iter_mut().zip(short) {
            *a = a.clone() + b;
        }
        Poly::new(long)
    }
}

impl<T: Ring> Sub for Poly<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<T: Ring> Neg for Poly<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Poly { coeffs: self.coeffs.into_iter().map(|c| -c).collect() }
    }
}

impl<T: Ring> Mul for Poly<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl<T: Ring> Mul<&Poly<T>> for &Poly<T> {
    type Output = Poly<T>;
    fn mul(self, rhs: &Poly<T>) -> Poly<T> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(out)
    }
}

impl<T: Ring> Add<&Poly<T>> for &Poly<T> {
    type Output = Poly<T>;
    fn add(self, rhs: &Poly<T>) -> Poly<T> {
        self.clone() + rhs.clone()
    }
}

impl<T: Ring> Sub<&Poly<T>> for &Poly<T> {
    type Output = Poly<T>;
    fn sub(self, rhs: &Poly<T>) -> Poly<T> {
        self.clone() - rhs.clone()
    }
}

impl<T: Field> Div for Poly<T> {
    type Output = Self;
    /// Euclidean quotient; the remainder is dropped.
    fn div(self, rhs: Self) -> Self {
        self.div_rem(&rhs).0
    }
}

impl<T: Ring> Ring for Poly<T> {
    fn from_i64(n: i64) -> Self {
        Poly::constant(T::from_i64(n))
    }
}

impl<T: Ring + fmt::Display> fmt::Display for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*x")?,
                _ => write!(f, "({c})*x^{k}")?,
            }
        }
        Ok(())
    }
}

impl<T: fmt::Debug> fmt::Debug for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.coeffs.iter()).finish()
    }
}

/// Least common multiple of the coefficient denominators.
pub fn denominator_lcm(p: &Poly<BigRational>) -> BigInt {
    p.coeffs().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
}

/// Integer polynomial proportional to `p` with content 1 and positive
/// leading coefficient.
pub fn primitive_integer_part(p: &Poly<BigRational>) -> Poly<BigInt> {
    if p.is_zero() {
        return Poly::zero();
    }
    let l = denominator_lcm(p);
    let ints: Vec<BigInt> =
        p.coeffs().iter().map(|c| (c * BigRational::from_integer(l.clone())).to_integer()).collect();
    let z = Poly::new(ints);
    let mut out = primitive_part(&z);
    if out.lc().is_negative() {
        out = -out;
    }
    out
}

pub fn content(p: &Poly<BigInt>) -> BigInt {
    p.coeffs().iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
}

pub fn primitive_part(p: &Poly<BigInt>) -> Poly<BigInt> {
    let c = content(p);
    if c.is_zero() || c.is_one() {
        return p.clone();
    }
    p.map(|a| a / &c)
}

/// Primitive gcd with positive leading coefficient, by the primitive
/// pseudo-remainder sequence.
pub fn integer_gcd(a: &Poly<BigInt>, b: &Poly<BigInt>) -> Poly<BigInt> {
    let (mut a, mut b) = (primitive_part(a), primitive_part(b));
    if a.deg() < b.deg() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_zero() {
        let r = primitive_part(&a.pseudo_rem(&b));
        a = b;
        b = r;
    }
    if a.is_zero() || a.lc().is_positive() {
        a
    } else {
        -a
    }
}

/// Yun's squarefree decomposition over `Z`, each factor primitive with
/// positive leading coefficient.
pub fn integer_squarefree_decomposition(p: &Poly<BigInt>) -> Vec<(Poly<BigInt>, usize)> {
    let mut out = Vec::new();
    if p.deg() == 0 {
        return out;
    }
    let div = |a: &Poly<BigInt>, b: &Poly<BigInt>| a.div_exact(b).expect("exact division by a primitive factor");
    let f = primitive_part(p);
    let fp = f.derivative();
    let a0 = integer_gcd(&f, &fp);
    let mut b = div(&f, &a0);
    let mut d = div(&fp, &a0) - b.derivative();
    let mut k = 1;
    while b.deg() > 0 {
        let a = integer_gcd(&b, &d);
        if a.deg() > 0 {
            out.push((a.clone(), k));
        }
        b = div(&b, &a);
        d = div(&d, &a) - b.derivative();
        k += 1;
    }
    out
}

/// [`Poly::squarefree_decomposition`] for rational polynomials, computed
/// over `Z` to keep coefficients small.
pub fn rational_squarefree_decomposition(p: &Poly<BigRational>) -> Vec<(Poly<BigRational>, usize)> {
    integer_squarefree_decomposition(&primitive_integer_part(p))
        .into_iter()
        .map(|(g, k)| (to_rational(&g).monic(), k))
        .collect()
}

/// Squarefree part of a rational polynomial as a primitive integer polynomial.
pub fn integer_squarefree_part(p: &Poly<BigRational>) -> Poly<BigInt> {
    integer_squarefree_decomposition(&primitive_integer_part(p)).into_iter().fold(Poly::one(), |acc, (g, _)| acc * g)
}

pub fn to_rational(p: &Poly<BigInt>) -> Poly<BigRational> {
    p.map(|c| BigRational::from_integer(c.clone()))
}

/// The normalization used for discriminants: primitive integer part with
/// positive leading coefficient, as a rational polynomial.
pub fn normalize_up_to_constant(p: &Poly<BigRational>) -> Poly<BigRational> {
    to_rational(&primitive_integer_part(p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{q, qi};

    fn zp(c: &[i64]) -> Poly<BigInt> {
        Poly::new(c.iter().map(|&v| BigInt::from(v)).collect())
    }

    fn qp(c: &[i64]) -> Poly<BigRational> {
        Poly::new(c.iter().map(|&v| qi(v)).collect())
    }

    /// Sylvester determinant by fraction-free Gaussian elimination.
    fn sylvester_oracle(a: &[i64], b: &[i64]) -> BigRational {
        let m = a.len() - 1;
        let n = b.len() - 1;
        let size = m + n;
        let mut mat = vec![vec![qi(0); size]; size];
        for i in 0..n {
            for (k, &c) in a.iter().rev().enumerate() {
                mat[i][i + k] = qi(c);
            }
        }
        for i in 0..m {
            for (k, &c) in b.iter().rev().enumerate() {
                mat[n + i][i + k] = qi(c);
            }
        }
        let mut det = qi(1);
        for col in 0..size {
            let Some(piv) = (col..size).find(|&r| !mat[r][col].is_zero()) else {
                return qi(0);
            };
            if piv != col {
                mat.swap(piv, col);
                det = -det;
            }
            det *= mat[col][col].clone();
            for r in col + 1..size {
                let f = &mat[r][col] / &mat[col][col];
                for c in col..size {
                    let v = &mat[col][c] * &f;
                    mat[r][c] -= v;
                }
            }
        }
        det
    }

    #[test]
    fn resultant_matches_sylvester_determinant() {
        let cases: [(&[i64], &[i64]); 5] = [
            (&[1, 0, 1], &[-2, 1]),
            (&[3, -1, 4, 1], &[5, 9, -2]),
            (&[1, 2, 3, 4, 5], &[-1, 0, 2, 1]),
            (&[2, 0, 0, 1], &[0, 1, 0, 0, 3]),
            (&[1, 1], &[1, 1, 0, 2]),
        ];
        for (a, b) in cases {
            let expect = sylvester_oracle(a, b);
            assert_eq!(BigRational::from_integer(resultant(&zp(a), &zp(b))), expect);
            assert_eq!(resultant(&qp(a), &qp(b)), expect);
        }
    }

    #[test]
    fn resultant_zero_on_common_root() {
        let a = zp(&[-1, 0, 1]);
        let b = zp(&[1, 1]);
        assert!(resultant(&a, &b).is_zero());
    }

    #[test]
    fn yun_recovers_multiplicities() {
        let f = qp(&[-2, 1]).pow(3) * qp(&[1, 0, 1]) * qp(&[5, 1]).pow(2);
        let dec = f.squarefree_decomposition();
        let ks: Vec<usize> = dec.iter().map(|(_, k)| *k).collect();
        assert_eq!(ks, vec![1, 2, 3]);
        assert_eq!(dec[2].0, qp(&[-2, 1]));
        assert_eq!(f.squarefree_part().deg(), 4);
        let g = f.map(|c| c * q(3, 7));
        assert_eq!(rational_squarefree_decomposition(&g), dec);
        assert_eq!(integer_squarefree_part(&g).deg(), 4);
    }

    #[test]
    fn integer_gcd_is_primitive() {
        let g = integer_gcd(&(zp(&[2, 4]) * zp(&[1, 0, 1])), &(zp(&[-3, -6]) * zp(&[5, 1])));
        assert_eq!(g, zp(&[1, 2]));
    }

    #[test]
    fn exact_division_over_integers() {
        let a = zp(&[1, 1]) * zp(&[3, 0, 2]);
        assert_eq!(a.div_exact(&zp(&[1, 1])), Some(zp(&[3, 0, 2])));
        assert_eq!(a.div_exact(&zp(&[1, 2])), None);
    }

    #[test]
    fn primitive_part_normalizes_sign() {
        let p = Poly::new(vec![q(-1, 2), qi(0), q(-3, 4)]);
        assert_eq!(primitive_integer_part(&p), zp(&[2, 0, 3]));
    }
}
