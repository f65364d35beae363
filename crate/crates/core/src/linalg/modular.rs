//! Arithmetic modulo the Mersenne prime 2^61 - 1.
//!
//! Used only to choose which rows to feed the exact engine; every result derived
//! from a modular choice is re-checked in exact arithmetic.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

pub const P: u64 = (1 << 61) - 1;

#[inline]
pub fn mul(a: u64, b: u64) -> u64 {
    let z = a as u128 * b as u128;
    let s = (z as u64 & P) + (z >> 61) as u64;
    if s >= P {
        s - P
    } else {
        s
    }
}

#[inline]
pub fn sub(a: u64, b: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + P - b
    }
}

pub fn pow(mut a: u64, mut e: u64) -> u64 {
    let mut acc = 1;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(acc, a);
        }
        a = mul(a, a);
        e >>= 1;
    }
    acc
}

pub fn inv(a: u64) -> u64 {
    debug_assert!(a != 0);
    pow(a, P - 2)
}

pub fn reduce(x: &BigInt) -> u64 {
    if let Some(small) = x.to_i128() {
        return reduce_i128(small);
    }
    x.mod_floor(&BigInt::from(P))
        .to_u64()
        .expect("residue fits in u64")
}

pub fn reduce_i128(x: i128) -> u64 {
    x.rem_euclid(P as i128) as u64
}

/// Incremental row echelon form over F_P.
pub struct Echelon {
    cols: usize,
    basis: Vec<(usize, Vec<u64>)>,
}

impl Echelon {
    pub fn new(cols: usize) -> Self {
        Echelon {
            cols,
            basis: Vec::new(),
        }
    }

    #[cfg(test)]
    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Adds `v` if it is independent of the rows inserted so far.
    pub fn insert(&mut self, mut v: Vec<u64>) -> bool {
        debug_assert_eq!(v.len(), self.cols);
        for (p, b) in &self.basis {
            let c = v[*p];
            if c != 0 {
                for (x, y) in v.iter_mut().zip(b) {
                    if *y != 0 {
                        *x = sub(*x, mul(c, *y));
                    }
                }
            }
        }
        let Some(p) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let s = inv(v[p]);
        for x in v.iter_mut() {
            *x = mul(*x, s);
        }
        self.basis.push((p, v));
        true
    }
}
