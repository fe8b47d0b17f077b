//! Truncated power series in the step parameter `t` and Newton iteration for
//! the root branches `y_i(t)` of `G(t, y) = 0`.

use num_traits::Zero;

use crate::scalar::{ApproxReal, Cplx, Field, Ring};

pub(crate) fn mul<T: Ring>(a: &[T], b: &[T], n: usize) -> Vec<T> {
    let mut out = vec![T::zero(); n];
    for (i, x) in a.iter().enumerate().take(n) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(n - i) {
            out[i + j] = out[i + j].clone() + x.clone() * y.clone();
        }
    }
    out
}

fn add<T: Ring>(a: &[T], b: &[T], n: usize) -> Vec<T> {
    (0..n)
        .map(|k| {
            let x = a.get(k).cloned().unwrap_or_else(T::zero);
            let y = b.get(k).cloned().unwrap_or_else(T::zero);
            x + y
        })
        .collect()
}

/// `1 / a` to order `n`; requires `a[0] != 0`.
pub(crate) fn inv<T: Field>(a: &[T], n: usize) -> Vec<T> {
    let a0 = a[0].inv();
    let mut out = vec![T::zero(); n];
    out[0] = a0.clone();
    for k in 1..n {
        let mut s = T::zero();
        for j in 1..=k.min(a.len() - 1) {
            s = s + a[j].clone() * out[k - j].clone();
        }
        out[k] = -(s * a0.clone());
    }
    out
}

/// `G(t, y(t))` and `dG/dy(t, y(t))` to order `n`, where `g[j]` holds the
/// `t`-coefficients of the `y^j` part of `G`.
pub(crate) fn eval_with_derivative<T: Ring>(g: &[Vec<T>], y: &[T], n: usize) -> (Vec<T>, Vec<T>) {
    let d = g.len() - 1;
    let mut val: Vec<T> = g[d].iter().take(n).cloned().collect();
    val.resize(n, T::zero());
    let mut der = vec![T::zero(); n];
    for j in (0..d).rev() {
        der = add(&mul(&der, y, n), &val, n);
        val = add(&mul(&val, y, n), &g[j], n);
    }
    (val, der)
}

/// Taylor coefficients `y(t) = sum c_k t^k`, `k < order`, of the root branch of
/// `G(t, y) = 0` through the approximate root `y0` at `t = 0`.
///
/// Each Newton sweep roughly doubles the number of correct terms, and also
/// polishes the constant term.
pub fn root_series<T: ApproxReal>(g: &[Vec<Cplx<T>>], y0: Cplx<T>, order: usize) -> Vec<Cplx<T>> {
    let n = order.max(1);
    let mut y = vec![Cplx::<T>::zero(); n];
    y[0] = y0;
    let sweeps = 2 + (usize::BITS - n.leading_zeros()) as usize;
    for _ in 0..sweeps {
        let (val, der) = eval_with_derivative(g, &y, n);
        if der[0].is_zero() {
            break;
        }
        let corr = mul(&val, &inv(&der, n), n);
        for (a, c) in y.iter_mut().zip(corr) {
            *a = a.clone() - c;
        }
    }
    y
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> Cplx<f64> {
        Cplx::new(re, 0.0)
    }

    #[test]
    fn series_of_square_root_branch() {
        // y^2 - (1 + t): y = sqrt(1 + t) = 1 + t/2 - t^2/8 + t^3/16 - ...
        let g = vec![vec![c(-1.0), c(-1.0)], vec![], vec![c(1.0)]];
        let y = root_series(&g, c(1.01), 5);
        let expect = [1.0, 0.5, -0.125, 0.0625, -0.0390625];
        for (a, b) in y.iter().zip(expect) {
            assert!((a.re - b).abs() < 1e-12, "{a:?} vs {b}");
        }
    }

    #[test]
    fn inverse_series() {
        let a = vec![c(1.0), c(-1.0)];
        let i = inv(&a, 6);
        assert!(i.iter().all(|z| (z.re - 1.0).abs() < 1e-15));
    }
}
