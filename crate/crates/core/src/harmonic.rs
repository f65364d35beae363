//! Bases of Γ-invariant harmonic polynomials.
//!
//! For degree `l` the averaging matrix `A` (sum of the 12 elements of Γ, or the
//! signed 24-element sum for the two Atkin–Lehner eigenspaces) is built in the
//! monomial index basis. A column basis `B` of `A` spans the invariants; the
//! kernel of `D·B`, with `D` the Laplacian matrix, cuts out the harmonic ones.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::hecke::apply_t_p;
use crate::linalg::{rref, IntRows, Rational, RationalMatrix};
use crate::poly::{index_unchecked, monomial_count, monomials, Frame, HomogeneousPoly};
use crate::quaternion::{gamma_gamma2_list, gamma_list, RotationMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    Gamma,
    Plus,
    Minus,
}

impl Variant {
    /// Required eigenvalue of `T_2` in degree `l` (none for the full space).
    pub fn t2_sign(self, l: u32) -> Option<i32> {
        let parity = if l.is_multiple_of(2) { 1 } else { -1 };
        match self {
            Variant::Gamma => None,
            Variant::Plus => Some(parity),
            Variant::Minus => Some(-parity),
        }
    }
}

impl std::str::FromStr for Variant {
    type Err = crate::Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "gamma" | "all" => Ok(Variant::Gamma),
            "plus" | "+" => Ok(Variant::Plus),
            "minus" | "-" => Ok(Variant::Minus),
            _ => Err(crate::Error::Parse(format!("unknown variant {s:?}"))),
        }
    }
}

impl std::fmt::Display for Variant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Variant::Gamma => "gamma",
            Variant::Plus => "plus",
            Variant::Minus => "minus",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisResult {
    pub degree: u32,
    pub variant: Variant,
    /// Primitive integral polynomials, positive leading coefficient.
    pub basis: Vec<HomogeneousPoly>,
    /// `scales[k] · basis[k]` is the k-th row of the reduced echelon form of the span.
    #[serde(with = "crate::linalg::rational_strings")]
    pub scales: Vec<Rational>,
}

impl BasisResult {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// Fixed-width arithmetic first, arbitrary precision on overflow.
trait Coef: Clone {
    fn zero() -> Self;
    fn from_i64(x: i64) -> Self;
    fn is_zero(&self) -> bool;
    /// `self += a * b`; false on overflow.
    fn fma(&mut self, a: &Self, b: &Self) -> bool;
}

impl Coef for i128 {
    fn zero() -> Self {
        0
    }
    fn from_i64(x: i64) -> Self {
        x as i128
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn fma(&mut self, a: &Self, b: &Self) -> bool {
        match a.checked_mul(*b).and_then(|p| self.checked_add(p)) {
            Some(v) => {
                *self = v;
                true
            }
            None => false,
        }
    }
}

impl Coef for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn from_i64(x: i64) -> Self {
        BigInt::from(x)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn fma(&mut self, a: &Self, b: &Self) -> bool {
        *self += a * b;
        true
    }
}

fn integer_entries(g: &RotationMatrix) -> [[i64; 3]; 3] {
    g.entries().clone().map(|r| {
        r.map(|x| {
            assert!(x.is_integer(), "unit group matrices are integral");
            x.to_integer().to_i64().expect("small entry")
        })
    })
}

/// Column sums `Σ_g image_g(x^m)` for all degree-`l` monomials `m`.
fn summed_images<T: Coef>(l: u32, group: &[[[i64; 3]; 3]]) -> Option<Vec<Vec<T>>> {
    let d = monomial_count(l);
    let mut total = vec![vec![T::zero(); d]; d];
    let exps: Vec<_> = (0..=l).map(monomials).collect();
    for g in group {
        let lin: [[T; 3]; 3] =
            std::array::from_fn(|k| std::array::from_fn(|i| T::from_i64(g[i][k])));
        let mut layer: Vec<Vec<T>> = vec![vec![T::from_i64(1)]];
        for n in 0..l {
            let next_exps = &exps[n as usize + 1];
            let mut next = Vec::with_capacity(next_exps.len());
            for e in next_exps {
                let k = (0..3).find(|&k| e[k] > 0).expect("positive degree");
                let mut parent = *e;
                parent[k] -= 1;
                let src = &layer[index_unchecked(n, parent)];
                let mut out = vec![T::zero(); monomial_count(n + 1)];
                for (i, s) in exps[n as usize].iter().enumerate() {
                    let c = &src[i];
                    if c.is_zero() {
                        continue;
                    }
                    for v in 0..3 {
                        if lin[k][v].is_zero() {
                            continue;
                        }
                        let mut t = *s;
                        t[v] += 1;
                        if !out[index_unchecked(n + 1, t)].fma(c, &lin[k][v]) {
                            return None;
                        }
                    }
                }
                next.push(out);
            }
            layer = next;
        }
        for (col, img) in total.iter_mut().zip(&layer) {
            for (a, b) in col.iter_mut().zip(img) {
                if !a.fma(b, &T::from_i64(1)) {
                    return None;
                }
            }
        }
    }
    Some(total)
}

/// Columns of `Σ_g g·` over `group`, as exact integers.
fn averaging_columns(l: u32, group: &[RotationMatrix]) -> Vec<Vec<BigInt>> {
    let g: Vec<_> = group.iter().map(integer_entries).collect();
    let widen = |v: Vec<Vec<i128>>| -> Vec<Vec<BigInt>> {
        v.into_iter()
            .map(|c| c.into_iter().map(BigInt::from).collect())
            .collect()
    };
    match summed_images::<i128>(l, &g) {
        Some(v) => widen(v),
        None => summed_images::<BigInt>(l, &g).expect("no overflow"),
    }
}

/// Rows of the averaging matrix for `variant`, as integer rows.
fn averaging_rows(l: u32, variant: Variant) -> IntRows {
    let d = monomial_count(l);
    let s1 = averaging_columns(l, &gamma_list());
    // The coefficient of Σ_{Γγ2} is the T_2 eigenvalue of the variant.
    let rows = match variant.t2_sign(l) {
        None => (0..d)
            .map(|i| (0..d).map(|m| s1[m][i].clone()).collect())
            .collect(),
        Some(sign) => {
            let s2 = averaging_columns(l, &gamma_gamma2_list());
            (0..d)
                .map(|i| {
                    (0..d)
                        .map(|m| {
                            if sign > 0 {
                                &s1[m][i] + &s2[m][i]
                            } else {
                                &s1[m][i] - &s2[m][i]
                            }
                        })
                        .collect()
                })
                .collect()
        }
    };
    IntRows::new(d, rows)
}

/// Matrix of `Σ_{γ∈Γ} γ·` (variant Γ) or `Σ_Γ γ· ± (−1)^l Σ_{Γγ2} γ·` in the
/// monomial index basis; column `m` is the image of the `m`-th monomial.
pub fn average_matrix(l: u32, variant: Variant) -> RationalMatrix {
    let rows = averaging_rows(l, variant);
    let d = rows.ncols();
    RationalMatrix::from_fn(d, d, |i, j| Rational::from_integer(rows.rows()[i][j].clone()))
}

fn group_order(variant: Variant) -> usize {
    match variant {
        Variant::Gamma => 12,
        _ => 24,
    }
}

/// Integer matrix `2D` applied to the columns `cols` (each dense of degree `l`).
fn laplacian_times(l: u32, cols: &[Vec<BigInt>]) -> IntRows {
    let r = cols.len();
    if l < 2 {
        return IntRows::new(r, Vec::new());
    }
    let rows = monomials(l - 2)
        .into_iter()
        .map(|t| {
            let mut out = vec![<BigInt as Zero>::zero(); r];
            for i in 0..3 {
                for j in i..3 {
                    let mut s = t;
                    s[i] += 1;
                    s[j] += 1;
                    let w = if i == j {
                        (t[i] as i64 + 2) * (t[i] as i64 + 1)
                    } else {
                        (t[i] as i64 + 1) * (t[j] as i64 + 1)
                    };
                    let w = BigInt::from(w);
                    let src = index_unchecked(l, s);
                    for (o, c) in out.iter_mut().zip(cols) {
                        if !Zero::is_zero(&c[src]) {
                            *o += &w * &c[src];
                        }
                    }
                }
            }
            out
        })
        .collect();
    IntRows::new(r, rows)
}

/// Dense coefficient vectors spanning the invariant harmonic space, in the order
/// produced by the kernel of `D·B`.
pub fn pipeline_vectors(l: u32, variant: Variant) -> Vec<Vec<Rational>> {
    let a = averaging_rows(l, variant);
    let d = a.ncols();
    let trace: BigInt = (0..d).map(|i| a.rows()[i][i].clone()).sum();
    let rank = (trace / BigInt::from(group_order(variant)))
        .to_usize()
        .expect("rank fits");
    let pivots = a.pivots_with_known_rank(rank).unwrap_or_else(|| a.pivots());
    let b: Vec<Vec<BigInt>> = pivots
        .iter()
        .map(|&j| a.rows().iter().map(|row| row[j].clone()).collect())
        .collect();
    let db = laplacian_times(l, &b);
    db.kernel_basis()
        .into_iter()
        .map(|v| {
            (0..d)
                .map(|i| {
                    b.iter()
                        .zip(&v)
                        .filter(|(col, c)| !Zero::is_zero(&col[i]) && !Zero::is_zero(*c))
                        .map(|(col, c)| c * Rational::from_integer(col[i].clone()))
                        .sum()
                })
                .collect()
        })
        .collect()
}

/// Reduced echelon basis of the span of `polys` (all X or Y frame, one degree),
/// with pivots chosen from the leading monomial down.
pub fn span_echelon(degree: u32, frame: Frame, polys: &[HomogeneousPoly]) -> Vec<HomogeneousPoly> {
    let d = monomial_count(degree);
    let rows: Vec<Vec<Rational>> = polys
        .iter()
        .map(|p| {
            let mut v = p.to_dense();
            v.reverse();
            v
        })
        .collect();
    echelon_rows(d, rows)
        .into_iter()
        .map(|mut v| {
            v.reverse();
            HomogeneousPoly::from_dense(degree, frame, &v).expect("X/Y frame")
        })
        .collect()
}

fn echelon_rows(cols: usize, rows: Vec<Vec<Rational>>) -> Vec<Vec<Rational>> {
    let m = RationalMatrix::from_rows(cols, rows).expect("uniform rows");
    let r = rref(&m);
    (0..r.rank()).map(|i| r.reduced.row(i).to_vec()).collect()
}

/// Basis of the invariant harmonic space of degree `l` for `variant`.
///
/// The span is put in reduced echelon form with columns ordered from `x1^l`
/// downward, then each row is made primitive; this makes the output independent
/// of how the span was found.
pub fn basis(l: u32, variant: Variant) -> BasisResult {
    let vectors = pipeline_vectors(l, variant);
    let polys: Vec<HomogeneousPoly> = vectors
        .iter()
        .map(|v| HomogeneousPoly::from_dense(l, Frame::X, v).expect("x frame"))
        .collect();
    from_span(l, variant, &polys)
}

/// Normalized [`BasisResult`] for the span of arbitrary X-frame polynomials.
pub fn from_span(l: u32, variant: Variant, polys: &[HomogeneousPoly]) -> BasisResult {
    let mut basis = Vec::new();
    let mut scales = Vec::new();
    for p in span_echelon(l, Frame::X, polys) {
        let (prim, s) = p.primitive_normalize().expect("echelon rows are nonzero");
        basis.push(prim);
        scales.push(s);
    }
    BasisResult {
        degree: l,
        variant,
        basis,
        scales,
    }
}

/// Whether two lists of polynomials of one degree span the same space.
pub fn same_span(degree: u32, frame: Frame, a: &[HomogeneousPoly], b: &[HomogeneousPoly]) -> bool {
    span_echelon(degree, frame, a) == span_echelon(degree, frame, b)
}

/// Whether `f` lies in the span of `polys`.
pub fn in_span(degree: u32, frame: Frame, f: &HomogeneousPoly, polys: &[HomogeneousPoly]) -> bool {
    let base = span_echelon(degree, frame, polys);
    let mut with = polys.to_vec();
    with.push(f.clone());
    span_echelon(degree, frame, &with).len() == base.len()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MembershipReport {
    pub harmonic: bool,
    pub invariant: bool,
    /// `T_2 f / f` when `f` is invariant and a `T_2` eigenvector.
    pub t2_eigenvalue: Option<i32>,
    /// Whether the `T_2` condition of the variant holds.
    pub t2_ok: bool,
}

impl MembershipReport {
    pub fn passes(&self) -> bool {
        self.harmonic && self.invariant && self.t2_ok
    }
}

pub fn is_gamma_invariant(f: &HomogeneousPoly) -> Result<bool> {
    for g in gamma_list() {
        if crate::poly::act(&g, f)? != *f {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn verify_membership(f: &HomogeneousPoly, variant: Variant) -> Result<MembershipReport> {
    let harmonic = f.laplacian()?.is_zero();
    let invariant = is_gamma_invariant(f)?;
    let t2_eigenvalue = if invariant && !f.is_zero() {
        let image = apply_t_p(2, f)?;
        if image == *f {
            Some(1)
        } else if image == f.neg() {
            Some(-1)
        } else {
            None
        }
    } else if f.is_zero() {
        Some(1)
    } else {
        None
    };
    let t2_ok = match variant.t2_sign(f.degree()) {
        None => invariant,
        Some(s) => f.is_zero() || t2_eigenvalue == Some(s),
    };
    Ok(MembershipReport {
        harmonic,
        invariant,
        t2_eigenvalue,
        t2_ok,
    })
}
