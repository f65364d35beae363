//! Ordered indexing of degree-`l` monomials in three variables.
//!
//! `(l1, l2, l3) < (l1', l2', l3')` iff `l1 < l1'`, or `l1 = l1'` and `l2 < l2'`;
//! the index map is the order isomorphism onto `0..d_l`.

use crate::error::{Error, Result};

use super::Exponent;

/// Number of degree-`l` monomials, `(l+1)(l+2)/2`.
pub fn monomial_count(l: u32) -> usize {
    let l = l as usize;
    (l + 1) * (l + 2) / 2
}

/// Unchecked index; `e` must have degree `l`.
#[inline]
pub fn index_unchecked(l: u32, e: Exponent) -> usize {
    let (l, l1, l2) = (l as usize, e[0] as usize, e[1] as usize);
    l1 * (l + 1) - l1 * l1.saturating_sub(1) / 2 + l2
}

pub fn index_of(l: u32, t: (i64, i64, i64)) -> Result<usize> {
    let (a, b, c) = t;
    if a < 0 || b < 0 || c < 0 || a + b + c != l as i64 {
        return Err(Error::BadExponent { exp: t, degree: l });
    }
    Ok(index_unchecked(l, [a as u32, b as u32, c as u32]))
}

pub fn monomial_of(l: u32, m: usize) -> Result<Exponent> {
    let size = monomial_count(l);
    if m >= size {
        return Err(Error::IndexOutOfRange {
            index: m,
            degree: l,
            size,
        });
    }
    // Block of l1 starts at l1(l+1) - l1(l1-1)/2 and has l - l1 + 1 entries.
    let mut l1 = 0u32;
    while l1 < l && index_unchecked(l, [l1 + 1, 0, l - l1 - 1]) <= m {
        l1 += 1;
    }
    let l2 = (m - index_unchecked(l, [l1, 0, l - l1])) as u32;
    Ok([l1, l2, l - l1 - l2])
}

/// All degree-`l` exponents in increasing index order.
pub fn monomials(l: u32) -> Vec<Exponent> {
    let mut out = Vec::with_capacity(monomial_count(l));
    for l1 in 0..=l {
        for l2 in 0..=(l - l1) {
            out.push([l1, l2, l - l1 - l2]);
        }
    }
    out
}
