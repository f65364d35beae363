//! Hecke operators on invariant harmonic polynomials, together with the
//! character, dimension and zonal-kernel oracles.

mod dims;
mod zonal;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::harmonic::{BasisResult, Variant};
use crate::linalg::{rref, Rational, RationalMatrix};
use crate::poly::{act, HomogeneousPoly};
use crate::quaternion::{generators, hecke_coset_reps};

pub use dims::{
    dim_formula, dim_via_trace_formula, dims_from_series, generating_series_coeff, theta_character,
    trace_t2_formula, trace_t_p_formula, CharacterInput, Dims, Series,
};
pub use zonal::{
    gamma_kernel, kernel_character_identity_check, legendre, reproducing_kernel_value, sample_point,
    zonal_kernel,
};

/// `(T_p f)(x) = Σ_{γ ∈ Γ\𝔗_p} f(xγ⁻¹)`; `f` must be Γ-invariant so the sum
/// does not depend on the coset representatives.
pub fn apply_t_p(p: u64, f: &HomogeneousPoly) -> Result<HomogeneousPoly> {
    let (i, _, w) = generators();
    if act(&i, f)? != *f || act(&w, f)? != *f {
        return Err(Error::NotInvariant);
    }
    let mut out = HomogeneousPoly::zero(f.degree(), f.frame());
    for g in hecke_coset_reps(p)? {
        out = out.add(&act(&g.inverse(), f)?)?;
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeckeMatrix {
    pub p: u64,
    pub degree: u32,
    pub variant: Variant,
    /// Column `k` holds the coordinates of `T_p(basis[k])`.
    pub matrix: RationalMatrix,
}

impl HeckeMatrix {
    pub fn characteristic_polynomial(&self) -> Vec<Rational> {
        self.matrix
            .characteristic_polynomial()
            .expect("square by construction")
    }
}

/// Coordinates of `f` in the basis `polys`, or `OutsideSpan`.
pub fn coordinates(f: &HomogeneousPoly, polys: &[HomogeneousPoly]) -> Result<Vec<Rational>> {
    let degree = f.degree();
    let d = crate::poly::monomial_count(degree);
    let mut cols: Vec<Vec<Rational>> = polys.iter().map(|p| p.to_dense()).collect();
    cols.push(f.to_dense());
    let m = RationalMatrix::from_columns(d, &cols)?;
    let r = rref(&m);
    let n = polys.len();
    if r.pivots.contains(&n) || r.rank() != n {
        return Err(Error::OutsideSpan);
    }
    Ok((0..n).map(|i| r.reduced[(i, n)].clone()).collect())
}

pub fn hecke_matrix(p: u64, basis: &BasisResult) -> Result<HeckeMatrix> {
    let n = basis.basis.len();
    if n == 0 {
        return Err(Error::BadParameter("empty basis".into()));
    }
    let mut m = RationalMatrix::zeros(n, n);
    for (k, b) in basis.basis.iter().enumerate() {
        let image = apply_t_p(p, b)?;
        for (i, c) in coordinates(&image, &basis.basis)?.into_iter().enumerate() {
            m[(i, k)] = c;
        }
    }
    Ok(HeckeMatrix {
        p,
        degree: basis.degree,
        variant: basis.variant,
        matrix: m,
    })
}

/// Serializable summary of a Hecke matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HeckeRecord {
    pub p: u64,
    pub matrix: Vec<Vec<String>>,
    pub charpoly: Vec<String>,
}

impl From<&HeckeMatrix> for HeckeRecord {
    fn from(h: &HeckeMatrix) -> Self {
        HeckeRecord {
            p: h.p,
            matrix: h
                .matrix
                .rows_iter()
                .map(|r| r.iter().map(|x| x.to_string()).collect())
                .collect(),
            charpoly: h
                .characteristic_polynomial()
                .iter()
                .map(|x| x.to_string())
                .collect(),
        }
    }
}
