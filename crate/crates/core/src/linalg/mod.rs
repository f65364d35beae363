//! Exact linear algebra over the rationals.
//!
//! Every routine here is deterministic: the reduced row echelon form is unique,
//! pivots are chosen as the first nonzero entry in column order, and kernel
//! vectors come out in the parameterized form read off from that echelon form.
//! Internally the elimination runs on integer rows (each row scaled by the lcm of
//! its denominators, content removed after every update), which keeps the
//! intermediate numbers small without changing the result.

pub(crate) mod integer;
pub(crate) mod modular;

use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub use integer::IntRows;

/// Serde helper storing one rational as an `"a/b"` string.
pub mod rational_string {
    use serde::{Deserialize, Deserializer, Serializer};

    use super::Rational;

    pub fn serialize<S: Serializer>(v: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        crate::poly::parse_rational(&s).map_err(serde::de::Error::custom)
    }
}

/// Serde helpers storing rationals as `"a/b"` strings.
pub mod rational_strings {
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    use super::Rational;

    pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
        v.iter().map(|x| x.to_string()).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
        Vec::<String>::deserialize(d)?
            .iter()
            .map(|x| crate::poly::parse_rational(x).map_err(serde::de::Error::custom))
            .collect()
    }
}

/// Arbitrary-precision rational, always stored in lowest terms with positive denominator.
pub type Rational = BigRational;

/// Shorthand for an integer-valued [`Rational`].
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for `num/den`, reduced.
pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Dense row-major matrix of rationals with fixed dimensions.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        RationalMatrix { rows, cols, entries }
    }

    /// Builds a matrix from row vectors; all rows must have length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Rational>>) -> Result<Self> {
        let nrows = rows.len();
        let mut entries = Vec::with_capacity(nrows * cols);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != cols {
                return Err(Error::Dimension(format!(
                    "row {i} has length {}, expected {cols}",
                    row.len()
                )));
            }
            entries.extend(row);
        }
        Ok(RationalMatrix {
            rows: nrows,
            cols,
            entries,
        })
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows(
            cols,
            rows.iter()
                .map(|r| r.iter().map(|&x| rat(x)).collect())
                .collect(),
        )
    }

    /// Builds a matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<Rational>]) -> Result<Self> {
        if let Some(bad) = columns.iter().position(|c| c.len() != rows) {
            return Err(Error::Dimension(format!(
                "column {bad} has length {}, expected {rows}",
                columns[bad].len()
            )));
        }
        Ok(Self::from_fn(rows, columns.len(), |i, j| columns[j][i].clone()))
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn rows_iter(&self) -> impl Iterator<Item = &[Rational]> {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn select_columns(&self, indices: &[usize]) -> Self {
        Self::from_fn(self.rows, indices.len(), |i, j| self[(i, indices[j])].clone())
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn trace(&self) -> Rational {
        (0..self.rows.min(self.cols))
            .map(|i| self[(i, i)].clone())
            .sum()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|x| x * c).collect(),
        }
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::Dimension(format!(
                "cannot add {}x{} and {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if v.len() != self.cols {
            return Err(Error::Dimension(format!(
                "vector of length {} against {} columns",
                v.len(),
                self.cols
            )));
        }
        Ok(self
            .rows_iter()
            .map(|row| {
                row.iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect())
    }

    /// Coefficients `c_0, …, c_n` (constant term first, monic) of `det(tI - M)`.
    ///
    /// Faddeev–LeVerrier recursion; fine for the small Hecke matrices it is used on.
    pub fn characteristic_polynomial(&self) -> Result<Vec<Rational>> {
        if !self.is_square() {
            return Err(Error::Dimension("characteristic polynomial of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut coeffs = vec![Rational::zero(); n + 1];
        coeffs[n] = Rational::one();
        let mut m = Self::zeros(n, n);
        for k in 1..=n {
            let mut next = self.mul(&m)?;
            for i in 0..n {
                next[(i, i)] += &coeffs[n - k + 1];
            }
            let t = self.mul(&next)?.trace();
            coeffs[n - k] = -t / rat(k as i64);
            m = next;
        }
        Ok(coeffs)
    }

}

impl Index<(usize, usize)> for RationalMatrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of bounds");
        &self.entries[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for RationalMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of bounds");
        &mut self.entries[i * self.cols + j]
    }
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RationalMatrix {}x{} [", self.rows, self.cols)?;
        for row in self.rows_iter() {
            let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub reduced: RationalMatrix,
    pub pivots: Vec<usize>,
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

/// Indices and original columns spanning the column space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColumnImage {
    pub indices: Vec<usize>,
    pub columns: Vec<Vec<Rational>>,
}

pub fn rref(m: &RationalMatrix) -> Rref {
    let mut rows = IntRows::from_rational(m);
    let pivots = rows.eliminate(true);
    Rref {
        reduced: rows.to_normalized_rref(&pivots),
        pivots,
    }
}

pub fn rank(m: &RationalMatrix) -> usize {
    let mut rows = IntRows::from_rational(m);
    rows.eliminate(false).len()
}

/// Kernel vectors read off the reduced echelon form: one per free column, in
/// increasing column order, with that free variable set to 1 and the other free
/// variables set to 0.
pub fn kernel_basis(m: &RationalMatrix) -> Vec<Vec<Rational>> {
    let rows = IntRows::from_rational(m);
    rows.kernel_basis()
}

pub fn column_image_basis(m: &RationalMatrix) -> ColumnImage {
    let mut rows = IntRows::from_rational(m);
    let indices = rows.eliminate(false);
    let columns = indices.iter().map(|&j| m.column(j)).collect();
    ColumnImage { indices, columns }
}

/// Kernel vectors from a reduced echelon form (the form [`kernel_basis`] documents).
pub fn kernel_from_rref(reduced: &RationalMatrix, pivots: &[usize]) -> Vec<Vec<Rational>> {
    let cols = reduced.ncols();
    let mut is_pivot = vec![false; cols];
    for &p in pivots {
        is_pivot[p] = true;
    }
    (0..cols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![Rational::zero(); cols];
            v[f] = Rational::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -reduced[(i, f)].clone();
            }
            v
        })
        .collect()
}
