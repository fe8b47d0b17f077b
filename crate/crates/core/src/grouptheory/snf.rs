//! Smith normal form over Euclidean domains (integers and `Q[t]`).

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::exactpoly::Poly;
use crate::scalar::Ring;

/// Euclidean domain with a size function and unit normalization.
pub trait Euclidean: Ring {
    type Size: Ord;
    /// Euclidean size; remainders are strictly smaller than the divisor.
    fn size(&self) -> Self::Size;
    fn div_rem_e(&self, rhs: &Self) -> (Self, Self);
    /// Associate of `self` in normal form (positive, monic, ...).
    fn normalized(&self) -> Self;
}

impl Euclidean for BigInt {
    type Size = BigUint;
    fn size(&self) -> BigUint {
        self.magnitude().clone()
    }
    fn div_rem_e(&self, rhs: &Self) -> (Self, Self) {
        self.div_mod_floor(rhs)
    }
    fn normalized(&self) -> Self {
        self.abs()
    }
}

impl Euclidean for Poly<BigRational> {
    type Size = u64;
    fn size(&self) -> u64 {
        self.degree().map_or(0, |d| d as u64 + 1)
    }
    fn div_rem_e(&self, rhs: &Self) -> (Self, Self) {
        self.div_rem(rhs)
    }
    fn normalized(&self) -> Self {
        if self.is_zero() {
            self.clone()
        } else {
            self.monic()
        }
    }
}

/// Invariant factors `d_1 | d_2 | ... | d_r` (nonzero, normalized) of a
/// matrix given as rows; `r` is the rank.
pub fn invariant_factors<T: Euclidean>(rows: &[Vec<T>]) -> Vec<T> {
    let mut a: Vec<Vec<T>> = rows.iter().filter(|r| r.iter().any(|x| !x.is_zero())).cloned().collect();
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut diag = Vec::new();
    let mut t = 0;
    while t < a.len() && t < ncols {
        // pivot: nonzero entry of least size in the remaining block
        let mut best: Option<(usize, usize, T::Size)> = None;
        for (i, row) in a.iter().enumerate().skip(t) {
            for (j, x) in row.iter().enumerate().skip(t) {
                if !x.is_zero() && best.as_ref().is_none_or(|b| x.size() < b.2) {
                    best = Some((i, j, x.size()));
                }
            }
        }
        let Some((pi, pj, _)) = best else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        let mut dirty = false;
        for i in t + 1..a.len() {
            if a[i][t].is_zero() {
                continue;
            }
            let (q, r) = a[i][t].div_rem_e(&a[t][t]);
            for j in t..ncols {
                let v = a[i][j].clone() - q.clone() * a[t][j].clone();
                a[i][j] = v;
            }
            if !r.is_zero() {
                dirty = true;
            }
        }
        for j in t + 1..ncols {
            if a[t][j].is_zero() {
                continue;
            }
            let (q, r) = a[t][j].div_rem_e(&a[t][t]);
            for row in a.iter_mut().skip(t) {
                let v = row[j].clone() - q.clone() * row[t].clone();
                row[j] = v;
            }
            if !r.is_zero() {
                dirty = true;
            }
        }
        if dirty {
            continue;
        }
        // the pivot must divide the rest of the block
        let mut fix = None;
        'scan: for i in t + 1..a.len() {
            for j in t + 1..ncols {
                if !a[i][j].div_rem_e(&a[t][t]).1.is_zero() {
                    fix = Some(i);
                    break 'scan;
                }
            }
        }
        if let Some(i) = fix {
            for j in t..ncols {
                let v = a[t][j].clone() + a[i][j].clone();
                a[t][j] = v;
            }
            continue;
        }
        diag.push(a[t][t].normalized());
        t += 1;
    }
    diag
}

/// Abelian invariants of the cokernel of an integer matrix with `ncols`
/// columns: nontrivial torsion factors, then `0` per free factor.
pub fn integer_invariants(rows: &[Vec<BigInt>], ncols: usize) -> Vec<BigInt> {
    let d = invariant_factors(rows);
    let rank = d.len();
    let one = BigInt::from(1);
    let mut out: Vec<BigInt> = d.into_iter().filter(|x| x != &one).collect();
    out.extend(std::iter::repeat_n(BigInt::zero(), ncols - rank));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(v: &[&[i64]]) -> Vec<Vec<BigInt>> {
        v.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    #[test]
    fn small_integer_matrices() {
        let d = invariant_factors(&m(&[&[2, 0], &[2, -3]]));
        assert_eq!(d, vec![BigInt::from(1), BigInt::from(6)]);
        let d = invariant_factors(&m(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]));
        assert_eq!(d, vec![BigInt::from(2), BigInt::from(6), BigInt::from(12)]);
        let d = invariant_factors(&m(&[&[3], &[2]]));
        assert_eq!(d, vec![BigInt::from(1)]);
    }

    #[test]
    fn invariants_with_free_part() {
        assert_eq!(integer_invariants(&m(&[&[2, 0]]), 2), vec![BigInt::from(2), BigInt::zero()]);
        assert_eq!(integer_invariants(&[], 2), vec![BigInt::zero(), BigInt::zero()]);
    }
}
