//! Homogeneous polynomials in three variables.
//!
//! A [`HomogeneousPoly`] carries a frame tag: `X` for the coordinates attached to
//! the b-basis of the trace-zero lattice, `Y` for the orthonormal coordinates
//! `y1 i + y2 j + y3 ij`, and `E` for polynomials in the weighted generators
//! `e1, e2, e3` (weights 2, 4, 6). Terms with zero coefficient are never stored.

mod dense;
mod index;
mod json;
mod text;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{frac, rat, Rational};
use crate::quaternion::{RotationFrame, RotationMatrix};

pub use text::parse_rational;
pub use index::{index_of, index_unchecked, monomial_count, monomial_of, monomials};
pub use json::PolyJson;

/// Exponent triple `(l1, l2, l3)`.
pub type Exponent = [u32; 3];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Frame {
    #[serde(rename = "x")]
    X,
    #[serde(rename = "y")]
    Y,
    #[serde(rename = "e")]
    E,
}

impl Frame {
    pub fn weights(self) -> [u32; 3] {
        match self {
            Frame::X | Frame::Y => [1, 1, 1],
            Frame::E => [2, 4, 6],
        }
    }

    pub fn variable(self) -> char {
        match self {
            Frame::X => 'x',
            Frame::Y => 'y',
            Frame::E => 'e',
        }
    }

    pub fn degree_of(self, e: Exponent) -> u32 {
        let w = self.weights();
        w[0] * e[0] + w[1] * e[1] + w[2] * e[2]
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct HomogeneousPoly {
    degree: u32,
    frame: Frame,
    terms: BTreeMap<Exponent, Rational>,
}

impl HomogeneousPoly {
    pub fn zero(degree: u32, frame: Frame) -> Self {
        HomogeneousPoly {
            degree,
            frame,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(frame: Frame, c: Rational) -> Self {
        Self::monomial(frame, [0, 0, 0], c)
    }

    pub fn one(frame: Frame) -> Self {
        Self::constant(frame, Rational::one())
    }

    pub fn monomial(frame: Frame, e: Exponent, c: Rational) -> Self {
        let mut p = Self::zero(frame.degree_of(e), frame);
        if !c.is_zero() {
            p.terms.insert(e, c);
        }
        p
    }

    /// Sums repeated exponents and drops zeros.
    pub fn from_terms(
        degree: u32,
        frame: Frame,
        terms: impl IntoIterator<Item = (Exponent, Rational)>,
    ) -> Result<Self> {
        let mut p = Self::zero(degree, frame);
        for (e, c) in terms {
            if frame.degree_of(e) != degree {
                return Err(Error::BadExponent {
                    exp: (e[0] as i64, e[1] as i64, e[2] as i64),
                    degree,
                });
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    /// Degree-`l` polynomial from a coefficient vector in index order (X/Y frames).
    pub fn from_dense(degree: u32, frame: Frame, v: &[Rational]) -> Result<Self> {
        if frame == Frame::E {
            return Err(Error::FrameMismatch {
                expected: Frame::X,
                found: frame,
            });
        }
        if v.len() != monomial_count(degree) {
            return Err(Error::Dimension(format!(
                "dense vector of length {} for degree {degree}",
                v.len()
            )));
        }
        let terms = monomials(degree)
            .into_iter()
            .zip(v)
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| (e, c.clone()))
            .collect();
        Ok(HomogeneousPoly {
            degree,
            frame,
            terms,
        })
    }

    pub(crate) fn from_dense_int(degree: u32, frame: Frame, v: &[BigInt], den: &BigInt) -> Self {
        let terms = monomials(degree)
            .into_iter()
            .zip(v)
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| (e, Rational::new(c.clone(), den.clone())))
            .collect();
        HomogeneousPoly {
            degree,
            frame,
            terms,
        }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn frame(&self) -> Frame {
        self.frame
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: Exponent) -> Rational {
        self.terms.get(&e).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms_map(&self) -> &BTreeMap<Exponent, Rational> {
        &self.terms
    }

    /// Terms in canonical display order: descending index for X/Y; for E,
    /// ascending power of `e3`, then ascending power of `e2`.
    pub fn terms(&self) -> Vec<(Exponent, &Rational)> {
        let mut out: Vec<_> = self.terms.iter().rev().map(|(e, c)| (*e, c)).collect();
        if self.frame == Frame::E {
            out.sort_by_key(|(e, _)| (e[2], e[1]));
        }
        out
    }

    pub fn leading(&self) -> Option<(Exponent, &Rational)> {
        match self.frame {
            Frame::E => self.terms().into_iter().next(),
            _ => self.terms.iter().next_back().map(|(e, c)| (*e, c)),
        }
    }

    pub fn to_dense(&self) -> Vec<Rational> {
        debug_assert!(self.frame != Frame::E);
        let mut v = vec![Rational::zero(); monomial_count(self.degree)];
        for (e, c) in &self.terms {
            v[index_unchecked(self.degree, *e)] = c.clone();
        }
        v
    }

    /// Integer coefficient vector `v` and positive `den` with `self = v / den`.
    pub(crate) fn to_dense_int(&self) -> (Vec<BigInt>, BigInt) {
        let den = self.common_denominator();
        let mut v = vec![BigInt::zero(); monomial_count(self.degree)];
        for (e, c) in &self.terms {
            v[index_unchecked(self.degree, *e)] = c.numer() * (&den / c.denom());
        }
        (v, den)
    }

    pub fn common_denominator(&self) -> BigInt {
        self.terms
            .values()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    pub(crate) fn add_term(&mut self, e: Exponent, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_same_space(&self, other: &Self) -> Result<()> {
        if self.frame != other.frame {
            return Err(Error::FrameMismatch {
                expected: self.frame,
                found: other.frame,
            });
        }
        if self.degree != other.degree && !self.is_zero() && !other.is_zero() {
            return Err(Error::Dimension(format!(
                "degrees {} and {} differ",
                self.degree, other.degree
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_space(other)?;
        let mut out = if self.is_zero() { other.clone() } else { self.clone() };
        let src = if self.is_zero() { &self.terms } else { &other.terms };
        for (e, c) in src {
            out.add_term(*e, c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rational::one())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.degree, self.frame);
        }
        HomogeneousPoly {
            degree: self.degree,
            frame: self.frame,
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.frame != other.frame {
            return Err(Error::FrameMismatch {
                expected: self.frame,
                found: other.frame,
            });
        }
        let mut out = Self::zero(self.degree + other.degree, self.frame);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                out.add_term([a[0] + b[0], a[1] + b[1], a[2] + b[2]], x * y);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.frame);
        for _ in 0..k {
            acc = acc.mul(self).expect("same frame");
        }
        acc
    }

    pub fn eval(&self, p: &[Rational; 3]) -> Rational {
        let mut pows: [Vec<Rational>; 3] = Default::default();
        for (k, pk) in pows.iter_mut().enumerate() {
            pk.push(Rational::one());
            let top = self.terms.keys().map(|e| e[k]).max().unwrap_or(0);
            for _ in 0..top {
                let next = pk.last().unwrap() * &p[k];
                pk.push(next);
            }
        }
        self.terms
            .iter()
            .map(|(e, c)| {
                c * &pows[0][e[0] as usize] * &pows[1][e[1] as usize] * &pows[2][e[2] as usize]
            })
            .sum()
    }

    /// Partial derivative in variable `k` (degree drops by the variable's weight).
    pub fn derivative(&self, k: usize) -> Self {
        let w = self.frame.weights()[k];
        let mut out = Self::zero(self.degree.saturating_sub(w), self.frame);
        for (e, c) in &self.terms {
            if e[k] > 0 {
                let mut f = *e;
                f[k] -= 1;
                out.add_term(f, c * rat(e[k] as i64));
            }
        }
        out
    }

    /// `Δ_Q = (1/2)(Σ ∂ii + ∂12 + ∂13 + ∂23)`, the Laplacian of the form with
    /// Gram matrix `[[3,-1,-1],[-1,3,-1],[-1,-1,3]]`.
    pub fn laplacian(&self) -> Result<Self> {
        self.expect_frame(Frame::X)?;
        Ok(self.second_order(&[[2, 1, 1], [1, 2, 1], [1, 1, 2]], frac(1, 4)))
    }

    /// Euclidean Laplacian in the Y frame.
    pub fn laplacian_y(&self) -> Result<Self> {
        self.expect_frame(Frame::Y)?;
        Ok(self.second_order(&[[1, 0, 0], [0, 1, 0], [0, 0, 1]], Rational::one()))
    }

    /// `scale · Σ_{ij} a_ij ∂_i ∂_j` for symmetric integer `a`.
    fn second_order(&self, a: &[[i64; 3]; 3], scale: Rational) -> Self {
        let mut out = Self::zero(self.degree.saturating_sub(2), self.frame);
        if self.degree < 2 {
            return out;
        }
        for (e, c) in &self.terms {
            for i in 0..3 {
                for j in 0..3 {
                    if a[i][j] == 0 {
                        continue;
                    }
                    let mut f = *e;
                    let m1 = f[i] as i64;
                    if m1 == 0 {
                        continue;
                    }
                    f[i] -= 1;
                    let m2 = f[j] as i64;
                    if m2 == 0 {
                        continue;
                    }
                    f[j] -= 1;
                    out.add_term(f, c * rat(a[i][j] * m1 * m2) * &scale);
                }
            }
        }
        out
    }

    fn expect_frame(&self, frame: Frame) -> Result<()> {
        if self.frame != frame {
            return Err(Error::FrameMismatch {
                expected: frame,
                found: self.frame,
            });
        }
        Ok(())
    }

    /// `f(x g)` for the row vector `x`; frame is kept.
    pub fn substitute(&self, g: &[[Rational; 3]; 3]) -> Result<Self> {
        if self.frame == Frame::E {
            return Err(Error::FrameMismatch {
                expected: Frame::X,
                found: Frame::E,
            });
        }
        let gden = g
            .iter()
            .flatten()
            .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let n: [[BigInt; 3]; 3] = std::array::from_fn(|i| {
            std::array::from_fn(|j| g[i][j].numer() * (&gden / g[i][j].denom()))
        });
        Ok(self.substitute_int(&n, &gden))
    }

    /// `f(x N / den)` for an integer matrix `N`.
    pub(crate) fn substitute_int(&self, n: &[[BigInt; 3]; 3], den: &BigInt) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let (v, fden) = self.to_dense_int();
        let image = dense::substitute(&v, self.degree, n);
        let total = fden * num_traits::pow(den.clone(), self.degree as usize);
        Self::from_dense_int(self.degree, self.frame, &image, &total)
    }

    /// The linear change of variables between X and Y:
    /// `y1 = -x1+x2+x3, y2 = x1-x2+x3, y3 = x1+x2-x3` and
    /// `x1 = (y2+y3)/2, x2 = (y1+y3)/2, x3 = (y1+y2)/2`.
    pub fn change_frame_xy(&self) -> Result<Self> {
        let (target, g) = match self.frame {
            Frame::X => (Frame::Y, x_from_y()),
            Frame::Y => (Frame::X, y_from_x()),
            Frame::E => {
                return Err(Error::FrameMismatch {
                    expected: Frame::X,
                    found: Frame::E,
                })
            }
        };
        let mut out = self.substitute(&g)?;
        out.frame = target;
        Ok(out)
    }

    /// Returns `(p, s)` with `self = s·p`, `p` integral with coprime
    /// coefficients and positive leading coefficient.
    pub fn primitive_normalize(&self) -> Result<(Self, Rational)> {
        let (_, lead) = self.leading().ok_or(Error::ZeroPolynomial)?;
        let den = self.common_denominator();
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = g.gcd(&(c.numer() * (&den / c.denom())));
        }
        let mut scale = Rational::new(g, den);
        if lead.is_negative() {
            scale = -scale;
        }
        let p = self.scale(&scale.recip());
        Ok((p, scale))
    }

    /// Keeps exactly the exponents with odd coefficient, each with coefficient 1.
    pub fn mod2_reduce(&self) -> Result<Self> {
        if !self.is_integral() {
            return Err(Error::NonInteger);
        }
        let two = BigInt::from(2);
        Ok(HomogeneousPoly {
            degree: self.degree,
            frame: self.frame,
            terms: self
                .terms
                .iter()
                .filter(|(_, c)| c.numer().is_odd() || c.numer().mod_floor(&two).is_one())
                .map(|(e, _)| (*e, Rational::one()))
                .collect(),
        })
    }


    pub fn parse(frame: Frame, degree: Option<u32>, s: &str) -> Result<Self> {
        text::parse(frame, degree, s)
    }
}

/// Matrix `G` with `x = y G` (row vectors).
pub fn x_from_y() -> [[Rational; 3]; 3] {
    let h = frac(1, 2);
    let z = Rational::zero();
    [
        [z.clone(), h.clone(), h.clone()],
        [h.clone(), z.clone(), h.clone()],
        [h.clone(), h, z],
    ]
}

/// Matrix `M` with `y = x M` (row vectors).
pub fn y_from_x() -> [[Rational; 3]; 3] {
    [
        [rat(-1), rat(1), rat(1)],
        [rat(1), rat(-1), rat(1)],
        [rat(1), rat(1), rat(-1)],
    ]
}

/// `Nm(x) = 3Σx_i² − 2Σ_{i<j} x_i x_j` in the X frame.
pub fn norm_form_x() -> HomogeneousPoly {
    HomogeneousPoly::from_terms(
        2,
        Frame::X,
        [
            ([2, 0, 0], rat(3)),
            ([0, 2, 0], rat(3)),
            ([0, 0, 2], rat(3)),
            ([1, 1, 0], rat(-2)),
            ([1, 0, 1], rat(-2)),
            ([0, 1, 1], rat(-2)),
        ],
    )
    .expect("degree 2 terms")
}

/// `y1² + y2² + y3²`.
pub fn norm_form_y() -> HomogeneousPoly {
    HomogeneousPoly::from_terms(
        2,
        Frame::Y,
        [([2, 0, 0], rat(1)), ([0, 2, 0], rat(1)), ([0, 0, 2], rat(1))],
    )
    .expect("degree 2 terms")
}

pub fn laplacian(f: &HomogeneousPoly) -> Result<HomogeneousPoly> {
    f.laplacian()
}

pub fn laplacian_y(f: &HomogeneousPoly) -> Result<HomogeneousPoly> {
    f.laplacian_y()
}

/// `(g·f)(x) = f(x g)`; Q-frame matrices act on X, Euclidean ones on Y.
pub fn act(g: &RotationMatrix, f: &HomogeneousPoly) -> Result<HomogeneousPoly> {
    let expected = match g.frame() {
        RotationFrame::Q => Frame::X,
        RotationFrame::Euclidean => Frame::Y,
    };
    if f.frame() != expected {
        return Err(Error::FrameMismatch {
            expected,
            found: f.frame(),
        });
    }
    f.substitute(g.entries())
}

pub fn mul(f: &HomogeneousPoly, g: &HomogeneousPoly) -> Result<HomogeneousPoly> {
    f.mul(g)
}

pub fn eval(f: &HomogeneousPoly, p: &[Rational; 3]) -> Rational {
    f.eval(p)
}

pub fn mod2_reduce(f: &HomogeneousPoly) -> Result<HomogeneousPoly> {
    f.mod2_reduce()
}

pub fn change_frame_xy(f: &HomogeneousPoly) -> Result<HomogeneousPoly> {
    f.change_frame_xy()
}

pub fn primitive_normalize(f: &HomogeneousPoly) -> Result<(HomogeneousPoly, Rational)> {
    f.primitive_normalize()
}

/// Laplacian matrix `D` (rows: degree `l-2` monomials, columns: degree `l`).
pub fn laplacian_matrix(l: u32) -> crate::linalg::RationalMatrix {
    let rows = if l >= 2 { monomial_count(l - 2) } else { 0 };
    let mut d = crate::linalg::RationalMatrix::zeros(rows, monomial_count(l));
    if l < 2 {
        return d;
    }
    for (j, e) in monomials(l).into_iter().enumerate() {
        let image = HomogeneousPoly::monomial(Frame::X, e, Rational::one())
            .laplacian()
            .expect("x frame");
        for (f, c) in image.terms_map() {
            d[(index_unchecked(l - 2, *f), j)] = c.clone();
        }
    }
    d
}

impl fmt::Display for HomogeneousPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let var = self.frame.variable();
        for (n, (e, c)) in self.terms().into_iter().enumerate() {
            let mono: Vec<String> = (0..3)
                .filter(|&k| e[k] > 0)
                .map(|k| match e[k] {
                    1 => format!("{var}{}", k + 1),
                    p => format!("{var}{}^{p}", k + 1),
                })
                .collect();
            let neg = c.is_negative();
            let abs = c.abs();
            match (n, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if mono.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{abs}*{}", mono.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for HomogeneousPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:?} deg {}] {}", self.frame, self.degree, self)
    }
}
