//! Integer row engine behind the rational routines.
//!
//! Rows are kept primitive (content removed) and updated by
//! `row_i <- (p/g) row_i - (a/g) row_r`, so the reduced rows are integer
//! multiples of the true reduced echelon rows; dividing by the pivot at the end
//! gives the canonical form.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{modular, RationalMatrix, Rational};

/// A matrix held as integer rows, each an arbitrary nonzero multiple of the
/// corresponding rational row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntRows {
    cols: usize,
    rows: Vec<Vec<BigInt>>,
}

impl IntRows {
    pub fn new(cols: usize, rows: Vec<Vec<BigInt>>) -> Self {
        debug_assert!(rows.iter().all(|r| r.len() == cols));
        IntRows { cols, rows }
    }

    pub fn from_rational(m: &RationalMatrix) -> Self {
        let rows = m.rows_iter().map(integer_row).collect();
        IntRows {
            cols: m.ncols(),
            rows,
        }
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    /// In-place Gauss–Jordan. Returns the pivot columns; afterwards the first
    /// `pivots.len()` rows are the pivot rows in order and the rest are zero.
    /// With `reduced = false` only entries below each pivot are cleared.
    pub fn eliminate(&mut self, reduced: bool) -> Vec<usize> {
        let n = self.rows.len();
        for row in &mut self.rows {
            make_primitive(row);
        }
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == n {
                break;
            }
            let Some(found) = (r..n).find(|&i| !self.rows[i][c].is_zero()) else {
                continue;
            };
            self.rows.swap(r, found);
            let (before, rest) = self.rows.split_at_mut(r);
            let (pivot_row, after) = rest.split_first_mut().expect("row r exists");
            for row in after.iter_mut() {
                eliminate_row(row, pivot_row, c);
            }
            if reduced {
                for row in before.iter_mut() {
                    eliminate_row(row, pivot_row, c);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    /// Divides every pivot row by its pivot; assumes `eliminate(true)` ran.
    pub fn to_normalized_rref(&self, pivots: &[usize]) -> RationalMatrix {
        let mut out = RationalMatrix::zeros(self.rows.len(), self.cols);
        for (i, &p) in pivots.iter().enumerate() {
            let lead = &self.rows[i][p];
            for j in p..self.cols {
                let x = &self.rows[i][j];
                if !x.is_zero() {
                    out[(i, j)] = Rational::new(x.clone(), lead.clone());
                }
            }
        }
        out
    }

    pub fn select_rows(&self, indices: &[usize]) -> Self {
        IntRows {
            cols: self.cols,
            rows: indices.iter().map(|&i| self.rows[i].clone()).collect(),
        }
    }

    /// Row indices of a maximal independent set modulo a large prime, chosen
    /// greedily in row order; stops once `limit` rows are found.
    pub fn independent_rows_mod_p(&self, limit: usize) -> Vec<usize> {
        let mut ech = modular::Echelon::new(self.cols);
        let mut chosen = Vec::new();
        for (i, row) in self.rows.iter().enumerate() {
            if chosen.len() >= limit {
                break;
            }
            if ech.insert(row.iter().map(modular::reduce).collect()) {
                chosen.push(i);
            }
        }
        chosen
    }

    /// Pivot columns of the full matrix when its rank is known in advance.
    ///
    /// Rows are selected mod p and only the selection is eliminated exactly.
    /// The answer is trusted only if the exact rank of the selection equals
    /// `rank`: then the selection spans the full row space and the pivots agree.
    pub fn pivots_with_known_rank(&self, rank: usize) -> Option<Vec<usize>> {
        let chosen = self.independent_rows_mod_p(rank);
        if chosen.len() != rank {
            return None;
        }
        let mut sub = self.select_rows(&chosen);
        let pivots = sub.eliminate(false);
        (pivots.len() == rank).then_some(pivots)
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.clone().eliminate(false)
    }

    /// Canonical kernel basis (see [`super::kernel_basis`]).
    ///
    /// Tall matrices first try a row subset picked mod p; its kernel is accepted
    /// only after every original row is checked to annihilate it exactly, which
    /// forces equal row spaces and therefore the same canonical vectors.
    pub fn kernel_basis(self) -> Vec<Vec<Rational>> {
        if self.rows.len() > self.cols {
            let chosen = self.independent_rows_mod_p(self.cols);
            let mut sub = self.select_rows(&chosen);
            let pivots = sub.eliminate(true);
            let kernel = sub.kernel_from_reduced(&pivots);
            if kernel.iter().all(|v| self.annihilates(v)) {
                return kernel;
            }
        }
        let mut full = self;
        let pivots = full.eliminate(true);
        full.kernel_from_reduced(&pivots)
    }

    fn kernel_from_reduced(&self, pivots: &[usize]) -> Vec<Vec<Rational>> {
        let mut is_pivot = vec![false; self.cols];
        for &p in pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = vec![Rational::zero(); self.cols];
                v[f] = Rational::one();
                for (i, &p) in pivots.iter().enumerate() {
                    let x = &self.rows[i][f];
                    if !x.is_zero() {
                        v[p] = Rational::new(-x.clone(), self.rows[i][p].clone());
                    }
                }
                v
            })
            .collect()
    }

    fn annihilates(&self, v: &[Rational]) -> bool {
        let w = integer_row(v);
        self.rows.iter().all(|row| {
            row.iter()
                .zip(&w)
                .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                .map(|(a, b)| a * b)
                .sum::<BigInt>()
                .is_zero()
        })
    }
}

/// Scales a rational row by the lcm of its denominators.
pub fn integer_row(row: &[Rational]) -> Vec<BigInt> {
    let l = row
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    row.iter()
        .map(|x| x.numer() * (&l / x.denom()))
        .collect()
}

pub fn make_primitive(row: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for x in row.iter() {
        if !x.is_zero() {
            g = g.gcd(x);
            if g.is_one() {
                return;
            }
        }
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    for x in row.iter_mut() {
        if !x.is_zero() {
            *x /= &g;
        }
    }
}

fn eliminate_row(row: &mut [BigInt], pivot_row: &[BigInt], c: usize) {
    if row[c].is_zero() {
        return;
    }
    let p = &pivot_row[c];
    let a = row[c].clone();
    let g = p.gcd(&a);
    let mut fp = p / &g;
    let mut fa = &a / &g;
    if fp.is_negative() {
        fp = -fp;
        fa = -fa;
    }
    for (x, y) in row.iter_mut().zip(pivot_row) {
        if !fp.is_one() && !x.is_zero() {
            *x *= &fp;
        }
        if !y.is_zero() {
            *x -= &fa * y;
        }
    }
    make_primitive(row);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{kernel_from_rref, rat, rref};

    fn rows(data: &[&[i64]]) -> IntRows {
        IntRows::new(
            data[0].len(),
            data.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    #[test]
    fn known_rank_pivots_match_full() {
        let m = rows(&[&[0, 2, 4, 1], &[0, 1, 2, 0], &[0, 3, 6, 1], &[0, 0, 0, 5]]);
        assert_eq!(m.pivots(), vec![1, 3]);
        assert_eq!(m.pivots_with_known_rank(2), Some(vec![1, 3]));
        assert_eq!(m.pivots_with_known_rank(3), None);
    }

    #[test]
    fn tall_kernel_equals_direct() {
        let m = rows(&[&[1, 1, 0], &[2, 2, 0], &[0, 0, 0], &[3, 3, 0], &[1, 1, 0]]);
        let rm = RationalMatrix::from_fn(5, 3, |i, j| Rational::from_integer(m.rows()[i][j].clone()));
        let r = rref(&rm);
        let direct = kernel_from_rref(&r.reduced, &r.pivots);
        assert_eq!(m.kernel_basis(), direct);
        assert_eq!(direct[0], vec![rat(-1), rat(1), rat(0)]);
    }

    #[test]
    fn integer_row_clears_denominators() {
        let r = integer_row(&[Rational::new(1.into(), 2.into()), Rational::new(2.into(), 3.into())]);
        assert_eq!(r, vec![BigInt::from(3), BigInt::from(4)]);
    }
}
