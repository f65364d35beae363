//! Dense integer kernels on coefficient vectors indexed by [`index_unchecked`].

use num_bigint::BigInt;
use num_traits::Zero;

use super::index::{index_unchecked, monomial_count, monomials};

/// Multiplies a dense degree-`n` polynomial by the linear form `lin·x`.
pub fn mul_linear(p: &[BigInt], n: u32, lin: &[BigInt; 3]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); monomial_count(n + 1)];
    if p.iter().all(Zero::is_zero) {
        return out;
    }
    for (i, e) in monomials(n).into_iter().enumerate() {
        let c = &p[i];
        if c.is_zero() {
            continue;
        }
        for k in 0..3 {
            if lin[k].is_zero() {
                continue;
            }
            let mut f = e;
            f[k] += 1;
            out[index_unchecked(n + 1, f)] += c * &lin[k];
        }
    }
    out
}

fn add_scaled(acc: &mut [BigInt], other: &[BigInt], c: &BigInt) {
    if c.is_zero() {
        return;
    }
    for (a, b) in acc.iter_mut().zip(other) {
        if !b.is_zero() {
            *a += c * b;
        }
    }
}

/// Dense coefficients of `f(xN)` for `f` dense of degree `l` and integer `N`
/// (row-vector convention: `x_k` is replaced by `Σ_i x_i N[i][k]`).
pub fn substitute(f: &[BigInt], l: u32, n: &[[BigInt; 3]; 3]) -> Vec<BigInt> {
    let lin: [[BigInt; 3]; 3] =
        std::array::from_fn(|k| std::array::from_fn(|i| n[i][k].clone()));
    let coeff = |e: [u32; 3]| &f[index_unchecked(l, e)];

    let mut l3_pow = vec![vec![BigInt::from(1)]];
    for k in 0..l {
        let next = mul_linear(&l3_pow[k as usize], k, &lin[2]);
        l3_pow.push(next);
    }

    let mut acc = vec![coeff([l, 0, 0]).clone()];
    for a in (0..l).rev() {
        acc = mul_linear(&acc, l - a - 1, &lin[0]);
        let deg = l - a;
        // g_a(L2, L3) = Σ_b c(a,b,deg-b) L2^b L3^(deg-b), Horner in L2.
        let mut h = vec![coeff([a, deg, 0]).clone()];
        for b in (0..deg).rev() {
            h = mul_linear(&h, deg - b - 1, &lin[1]);
            add_scaled(&mut h, &l3_pow[(deg - b) as usize], coeff([a, b, deg - b]));
        }
        for (x, y) in acc.iter_mut().zip(&h) {
            if !y.is_zero() {
                *x += y;
            }
        }
    }
    acc
}
