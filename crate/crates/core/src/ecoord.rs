//! The weighted ring `Q[e1, e2, e3]` (weights 2, 4, 6) of symmetric polynomials
//! in `y1², y2², y3²`, the transported Laplacians `Δ_{ε1,ε2}`, and the map back
//! to x-coordinates.
//!
//! Kernels here are far smaller than the degree-`l` monomial space: `|M_m|`
//! grows like `m²/48`.

use crate::error::{Error, Result};
use crate::harmonic::{from_span, BasisResult, Variant};
use crate::linalg::{frac, kernel_basis, rat, rref, RationalMatrix};
use crate::poly::{Exponent, Frame, HomogeneousPoly};

/// Elements of the weighted ring are e-frame polynomials.
pub type WeightedPoly = HomogeneousPoly;

fn check_even(m: u32) -> Result<()> {
    if m % 2 == 1 {
        return Err(Error::BadParameter(format!("weighted degree {m} is odd")));
    }
    Ok(())
}

fn check_eps(eps1: u8, eps2: u8) -> Result<()> {
    if eps1 > 1 || eps2 > 1 {
        return Err(Error::BadParameter(format!("epsilon ({eps1}, {eps2}) outside {{0, 1}}")));
    }
    Ok(())
}

/// `M_m`, ordered by ascending `j3`, then ascending `j2`.
pub fn weighted_monomials(m: u32) -> Result<Vec<Exponent>> {
    check_even(m)?;
    let mut out = Vec::new();
    for j3 in 0..=m / 6 {
        for j2 in 0..=(m - 6 * j3) / 4 {
            out.push([(m - 6 * j3 - 4 * j2) / 2, j2, j3]);
        }
    }
    Ok(out)
}

fn e_poly(s: &str) -> HomogeneousPoly {
    HomogeneousPoly::parse(Frame::E, None, s).expect("valid literal")
}

fn weighted_zero_below(f: &WeightedPoly) -> WeightedPoly {
    HomogeneousPoly::zero(f.degree().saturating_sub(2), Frame::E)
}

/// Adds `c · coef · ∂...f` into `acc`, skipping vanishing pieces.
fn accumulate(acc: &mut WeightedPoly, coef: &HomogeneousPoly, d: &WeightedPoly) -> Result<()> {
    if d.is_zero() {
        return Ok(());
    }
    *acc = acc.add(&coef.mul(d)?)?;
    Ok(())
}

/// `Δ_E F`.
pub fn delta_e(f: &WeightedPoly) -> Result<WeightedPoly> {
    if f.frame() != Frame::E {
        return Err(Error::FrameMismatch {
            expected: Frame::E,
            found: f.frame(),
        });
    }
    let mut out = weighted_zero_below(f);
    if f.degree() < 2 {
        return Ok(out);
    }
    let d = [f.derivative(0), f.derivative(1), f.derivative(2)];
    let dd = |i: usize, j: usize| d[i].derivative(j);
    accumulate(&mut out, &e_poly("4*e1"), &dd(0, 0))?;
    accumulate(&mut out, &e_poly("4*e1*e2 + 12*e3"), &dd(1, 1))?;
    accumulate(&mut out, &e_poly("4*e2*e3"), &dd(2, 2))?;
    accumulate(&mut out, &e_poly("16*e2"), &dd(0, 1))?;
    accumulate(&mut out, &e_poly("24*e3"), &dd(0, 2))?;
    accumulate(&mut out, &e_poly("16*e1*e3"), &dd(1, 2))?;
    Ok(out)
}

/// `Δ_{ε1,ε2} = Δ_E + (1+2ε1)(6∂1 + 4e1∂2 + 2e2∂3) + ε2(24∂1 + 8e1∂2)`.
pub fn delta_eps_apply(eps1: u8, eps2: u8, f: &WeightedPoly) -> Result<WeightedPoly> {
    check_eps(eps1, eps2)?;
    let mut out = delta_e(f)?;
    if f.degree() < 2 {
        return Ok(out);
    }
    let d = [f.derivative(0), f.derivative(1), f.derivative(2)];
    let a = rat(1 + 2 * eps1 as i64);
    let b = rat(eps2 as i64);
    let c1 = HomogeneousPoly::constant(Frame::E, &a * rat(6) + &b * rat(24));
    let c2 = e_poly("e1").scale(&(&a * rat(4) + &b * rat(8)));
    let c3 = e_poly("e2").scale(&(&a * rat(2)));
    accumulate(&mut out, &c1, &d[0])?;
    accumulate(&mut out, &c2, &d[1])?;
    accumulate(&mut out, &c3, &d[2])?;
    Ok(out)
}

/// Matrix of `Δ_{ε1,ε2}` from `M_m` to `M_{m-2}` (columns follow [`weighted_monomials`]).
pub fn delta_eps_matrix(m: u32, eps1: u8, eps2: u8) -> Result<RationalMatrix> {
    let cols = weighted_monomials(m)?;
    if m < 2 {
        return Ok(RationalMatrix::zeros(0, cols.len()));
    }
    let rows = weighted_monomials(m - 2)?;
    let mut a = RationalMatrix::zeros(rows.len(), cols.len());
    for (j, e) in cols.iter().enumerate() {
        let image = delta_eps_apply(eps1, eps2, &HomogeneousPoly::monomial(Frame::E, *e, rat(1)))?;
        for (i, r) in rows.iter().enumerate() {
            a[(i, j)] = image.coeff(*r);
        }
    }
    Ok(a)
}

/// Basis of `ker Δ_{ε1,ε2}` in degree `m`: the rows of the reduced echelon form
/// over `M_m`, so each element has coefficient one at its pivot monomial.
pub fn ebasis(m: u32, eps1: u8, eps2: u8) -> Result<Vec<WeightedPoly>> {
    check_eps(eps1, eps2)?;
    let monos = weighted_monomials(m)?;
    let a = delta_eps_matrix(m, eps1, eps2)?;
    let kernel = kernel_basis(&a);
    if kernel.is_empty() {
        return Ok(Vec::new());
    }
    let r = rref(&RationalMatrix::from_rows(monos.len(), kernel)?);
    Ok((0..r.rank())
        .map(|i| {
            let terms = monos.iter().zip(r.reduced.row(i)).map(|(e, c)| (*e, c.clone()));
            HomogeneousPoly::from_terms(m, Frame::E, terms).expect("weighted degree m")
        })
        .collect())
}

/// `k+1` when `m − 12k ∈ {0, 4, 6, 8, 10, 14}` for some `k ≥ 0`, else 0.
pub fn dim_eh_formula(m: u32) -> u64 {
    if m % 2 == 1 {
        return 0;
    }
    let (k, r) = (m / 12, m % 12);
    match r {
        0 | 4 | 6 | 8 | 10 => k as u64 + 1,
        2 if k >= 1 => k as u64,
        _ => 0,
    }
}

/// `e1, e2, e3` as polynomials in `y`.
pub fn e_generators_y() -> [HomogeneousPoly; 3] {
    let p = |s: &str| HomogeneousPoly::parse(Frame::Y, None, s).expect("valid literal");
    [
        p("y1^2 + y2^2 + y3^2"),
        p("y1^2*y2^2 + y1^2*y3^2 + y2^2*y3^2"),
        p("y1^2*y2^2*y3^2"),
    ]
}

/// `f_{3,+}` in y-coordinates: `−y1 y2 y3`.
pub fn f3_plus_y() -> HomogeneousPoly {
    HomogeneousPoly::parse(Frame::Y, None, "-y1*y2*y3").expect("valid literal")
}

/// `f_{6,−}` in y-coordinates: `(1/64)(y1²−y2²)(y1²−y3²)(y2²−y3²)`.
pub fn f6_minus_y() -> HomogeneousPoly {
    let p = |s: &str| HomogeneousPoly::parse(Frame::Y, None, s).expect("valid literal");
    p("y1^2 - y2^2")
        .mul(&p("y1^2 - y3^2"))
        .and_then(|a| a.mul(&p("y2^2 - y3^2")))
        .expect("y frame")
        .scale(&frac(1, 64))
}

/// Substitutes `e_k = e_k(y)`.
pub fn e_to_y(f: &WeightedPoly) -> Result<HomogeneousPoly> {
    if f.frame() != Frame::E {
        return Err(Error::FrameMismatch {
            expected: Frame::E,
            found: f.frame(),
        });
    }
    let gens = e_generators_y();
    let mut cache: [Vec<HomogeneousPoly>; 3] = std::array::from_fn(|k| vec![HomogeneousPoly::one(Frame::Y), gens[k].clone()]);
    let mut power = |k: usize, n: u32| -> HomogeneousPoly {
        while cache[k].len() <= n as usize {
            let next = cache[k].last().unwrap().mul(&gens[k]).expect("y frame");
            cache[k].push(next);
        }
        cache[k][n as usize].clone()
    };
    let mut out = HomogeneousPoly::zero(f.degree(), Frame::Y);
    for (e, c) in f.terms() {
        let term = power(0, e[0]).mul(&power(1, e[1]))?.mul(&power(2, e[2]))?.scale(c);
        out = out.add(&term)?;
    }
    Ok(out)
}

/// `f_{3,+}^{ε1} f_{6,−}^{ε2} · F(e(y))` in y-coordinates.
pub fn ecoord_to_y(eps1: u8, eps2: u8, f: &WeightedPoly) -> Result<HomogeneousPoly> {
    check_eps(eps1, eps2)?;
    let mut y = e_to_y(f)?;
    if eps1 == 1 {
        y = y.mul(&f3_plus_y())?;
    }
    if eps2 == 1 {
        y = y.mul(&f6_minus_y())?;
    }
    Ok(y)
}

/// Harmonic x-coordinate polynomial of degree `m + 3ε1 + 6ε2` attached to a
/// kernel element `F` of `Δ_{ε1,ε2}`.
pub fn ecoord_to_x(eps1: u8, eps2: u8, f: &WeightedPoly) -> Result<HomogeneousPoly> {
    if !delta_eps_apply(eps1, eps2, f)?.is_zero() {
        return Err(Error::NotHarmonic);
    }
    ecoord_to_y(eps1, eps2, f)?.change_frame_xy()
}

/// `(m, ε1, ε2)` with `m + 3ε1 + 6ε2 = l`, or `None` when `m` would be negative.
pub fn weighted_parameters(l: u32, minus: bool) -> Option<(u32, u8, u8)> {
    let eps1 = (l % 2) as u8;
    let eps2 = minus as u8;
    let shift = 3 * eps1 as u32 + 6 * eps2 as u32;
    (l >= shift).then(|| (l - shift, eps1, eps2))
}

/// X-frame spanning set of the invariant harmonic space via the weighted ring.
pub fn ecoord_polys(l: u32, variant: Variant) -> Result<Vec<HomogeneousPoly>> {
    let signs: &[bool] = match variant {
        Variant::Gamma => &[false, true],
        Variant::Plus => &[false],
        Variant::Minus => &[true],
    };
    let mut out = Vec::new();
    for &minus in signs {
        if let Some((m, e1, e2)) = weighted_parameters(l, minus) {
            for f in ebasis(m, e1, e2)? {
                out.push(ecoord_to_x(e1, e2, &f)?);
            }
        }
    }
    Ok(out)
}

/// Same normalization as [`crate::harmonic::basis`], computed through the weighted ring.
pub fn ecoord_basis(l: u32, variant: Variant) -> Result<BasisResult> {
    Ok(from_span(l, variant, &ecoord_polys(l, variant)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::laplacian_y;

    fn e(s: &str) -> WeightedPoly {
        e_poly(s)
    }

    #[test]
    fn monomial_sets() {
        assert_eq!(weighted_monomials(0).unwrap(), vec![[0, 0, 0]]);
        assert_eq!(weighted_monomials(6).unwrap(), vec![[3, 0, 0], [1, 1, 0], [0, 0, 1]]);
        assert_eq!(weighted_monomials(12).unwrap().len(), 7);
        assert!(weighted_monomials(5).is_err());
    }

    #[test]
    fn operator_examples() {
        assert_eq!(delta_eps_apply(0, 0, &e("e1")).unwrap(), HomogeneousPoly::constant(Frame::E, rat(6)));
        assert!(delta_eps_apply(0, 0, &e("e1^2 - 5*e2")).unwrap().is_zero());
        assert!(delta_eps_apply(1, 0, &e("e1^2 - 11/3*e2")).unwrap().is_zero());
        assert!(delta_eps_apply(2, 0, &e("e1")).is_err());
    }

    #[test]
    fn low_bases() {
        assert_eq!(ebasis(4, 0, 0).unwrap(), vec![e("e1^2 - 5*e2")]);
        assert_eq!(ebasis(6, 0, 0).unwrap(), vec![e("e1^3 - 21/2*e1*e2 + 231/2*e3")]);
        assert_eq!(ebasis(0, 1, 1).unwrap(), vec![HomogeneousPoly::one(Frame::E)]);
        assert!(ebasis(2, 0, 0).unwrap().is_empty());
    }

    #[test]
    fn two_dimensional_kernel() {
        let b = ebasis(12, 0, 0).unwrap();
        assert_eq!(b.len(), 2);
        assert_eq!(
            b[0],
            e("e1^6 - 39*e1^4*e2 + 4199/5*e2^3 + 2652*e1^3*e3 - 75582/5*e1*e2*e3 + 264537/5*e3^2")
        );
        assert_eq!(b[1], e("e1^2*e2^2 - 24/5*e2^3 - 8*e1^3*e3 + 222/5*e1*e2*e3 - 707/5*e3^2"));
    }

    #[test]
    fn dimension_formula_small() {
        assert_eq!(dim_eh_formula(0), 1);
        assert_eq!(dim_eh_formula(2), 0);
        assert_eq!(dim_eh_formula(12), 2);
        assert_eq!(dim_eh_formula(26), 2);
        for m in (0..=40).step_by(2) {
            for (a, b) in [(0, 0), (1, 0), (0, 1), (1, 1)] {
                assert_eq!(ebasis(m, a, b).unwrap().len() as u64, dim_eh_formula(m), "m={m}");
            }
        }
    }

    #[test]
    fn transported_laplacian_commutes() {
        let f = e("e1^3 - 2*e1*e2 + 7*e3");
        for (a, b) in [(0, 0), (1, 0), (0, 1), (1, 1)] {
            let lhs = laplacian_y(&ecoord_to_y(a, b, &f).unwrap()).unwrap();
            let rhs = ecoord_to_y(a, b, &delta_eps_apply(a, b, &f).unwrap()).unwrap();
            assert_eq!(lhs, rhs, "eps=({a},{b})");
        }
    }

    #[test]
    fn non_kernel_input_rejected() {
        assert_eq!(ecoord_to_x(0, 0, &e("e1")), Err(Error::NotHarmonic));
    }

    #[test]
    fn matches_main_pipeline_low_degree() {
        for l in 0..=12 {
            for v in [Variant::Plus, Variant::Minus] {
                let a = ecoord_basis(l, v).unwrap();
                let b = crate::harmonic::basis(l, v);
                assert_eq!(a.basis, b.basis, "l={l} {v}");
            }
        }
    }
}
