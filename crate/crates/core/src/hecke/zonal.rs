//! Legendre polynomials and the zonal kernel of the norm form.

use crate::error::Result;
use crate::linalg::{frac, rat, Rational};
use crate::poly::{act, norm_form_x, Frame, HomogeneousPoly};
use crate::quaternion::{gamma_list, gram_q, RotationMatrix};

use super::dims::theta_from_trace;

/// Coefficients of `L_l` (index = power of `t`) from
/// `L_l = ((2l−1)/l) t L_{l−1} − ((l−1)/l) L_{l−2}`.
pub fn legendre(l: u32) -> Vec<Rational> {
    let mut prev = vec![rat(1)];
    if l == 0 {
        return prev;
    }
    let mut cur = vec![rat(0), rat(1)];
    for n in 2..=l as i64 {
        let mut next = vec![rat(0); n as usize + 1];
        for (k, c) in cur.iter().enumerate() {
            next[k + 1] += c * frac(2 * n - 1, n);
        }
        for (k, c) in prev.iter().enumerate() {
            next[k] -= c * frac(n - 1, n);
        }
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// `x Q yᵀ` as a linear form in `x`.
fn pairing(y: &[Rational; 3]) -> HomogeneousPoly {
    let q = gram_q();
    let coeffs: [Rational; 3] = std::array::from_fn(|i| (0..3).map(|j| &q[i][j] * &y[j]).sum());
    HomogeneousPoly::from_terms(
        1,
        Frame::X,
        [
            ([1, 0, 0], coeffs[0].clone()),
            ([0, 1, 0], coeffs[1].clone()),
            ([0, 0, 1], coeffs[2].clone()),
        ],
    )
    .expect("degree 1")
}

/// `K_l(x, y) = Σ_k c_{l−2k} Nm(x)^k Nm(y)^k (xQyᵀ)^{l−2k}` as a polynomial in `x`,
/// where `L_l(t) = Σ_k c_{l−2k} t^{l−2k}`.
pub fn zonal_kernel(l: u32, y: &[Rational; 3]) -> HomogeneousPoly {
    let coeffs = legendre(l);
    let nx = norm_form_x();
    let ny = nx.eval(y);
    let s = pairing(y);
    let mut out = HomogeneousPoly::zero(l, Frame::X);
    for k in 0..=(l / 2) {
        let c = &coeffs[(l - 2 * k) as usize];
        let term = nx
            .pow(k)
            .mul(&s.pow(l - 2 * k))
            .expect("x frame")
            .scale(&(c * num_traits::pow(ny.clone(), k as usize)));
        out = out.add(&term).expect("same degree");
    }
    out
}

/// `(1/12) Σ_{γ∈Γ} K_l(xγ, y)`.
pub fn gamma_kernel(l: u32, y: &[Rational; 3]) -> HomogeneousPoly {
    let k = zonal_kernel(l, y);
    let mut out = HomogeneousPoly::zero(l, Frame::X);
    for g in gamma_list() {
        out = out.add(&act(&g, &k).expect("x frame")).expect("same degree");
    }
    out.scale(&frac(1, 12))
}

/// `K_l(x, y)` scaled to reproduce on the unit-mass sphere: `(2l+1) K_l(x, y)`.
pub fn reproducing_kernel_value(l: u32, x: &[Rational; 3], y: &[Rational; 3]) -> Rational {
    zonal_kernel(l, y).eval(x) * rat(2 * l as i64 + 1)
}

/// The sample point `a = (1/2, 1/2, 0)`, with `aQaᵀ = 1`.
pub fn sample_point() -> [Rational; 3] {
    [frac(1, 2), frac(1, 2), rat(0)]
}

/// Compares the reproducing kernel at `(aγ⁻¹, aδ⁻¹)` with `Θ_l(γδ⁻¹)`.
///
/// Equality holds when `γ = δ` and for `l = 0`, but not for every pair: the
/// left side depends on the angle between `aγ⁻¹` and `aδ⁻¹`, the right side only
/// on the conjugacy class of `γδ⁻¹`.
pub fn kernel_character_identity_check(l: u32, gamma: &RotationMatrix, delta: &RotationMatrix) -> Result<bool> {
    let a = sample_point();
    let u = gamma.inverse().apply_row(&a);
    let v = delta.inverse().apply_row(&a);
    let lhs = reproducing_kernel_value(l, &u, &v);
    let rhs = theta_from_trace(l, &gamma.mul(&delta.inverse())?.trace());
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quaternion::RotationFrame;

    #[test]
    fn low_legendre() {
        assert_eq!(legendre(0), vec![rat(1)]);
        assert_eq!(legendre(1), vec![rat(0), rat(1)]);
        assert_eq!(legendre(2), vec![frac(-1, 2), rat(0), frac(3, 2)]);
        assert_eq!(legendre(3), vec![rat(0), frac(-3, 2), rat(0), frac(5, 2)]);
    }

    #[test]
    fn legendre_at_one() {
        for l in 0..20 {
            let s: Rational = legendre(l).into_iter().sum();
            assert_eq!(s, rat(1));
        }
    }

    #[test]
    fn first_kernel_is_pairing() {
        let y = [rat(1), rat(-2), rat(5)];
        assert_eq!(zonal_kernel(1, &y), pairing(&y));
    }

    #[test]
    fn identity_pair() {
        let id = RotationMatrix::identity(RotationFrame::Q);
        for l in 0..=6 {
            assert!(kernel_character_identity_check(l, &id, &id).unwrap());
        }
    }

    #[test]
    fn antipodal_pair_differs() {
        // a𝖎 = −a, so the kernel gives (2l+1)(−1)^l against Θ_l(𝖎) = (−1)^l.
        let (i, _, _) = crate::quaternion::generators();
        let id = RotationMatrix::identity(RotationFrame::Q);
        assert!(kernel_character_identity_check(0, &i, &id).unwrap());
        assert!(!kernel_character_identity_check(1, &i, &id).unwrap());
    }

    #[test]
    fn gamma_kernel_degree_three_is_f3_multiple() {
        let y = [rat(1), rat(4), rat(-2)];
        let k = gamma_kernel(3, &y);
        let b = crate::harmonic::basis(3, crate::harmonic::Variant::Plus);
        assert!(crate::harmonic::in_span(3, Frame::X, &k, &b.basis));
    }

    #[test]
    fn kernel_is_harmonic() {
        let y = [rat(2), rat(-1), rat(3)];
        for l in 0..=6 {
            assert!(zonal_kernel(l, &y).laplacian().unwrap().is_zero(), "l={l}");
        }
    }
}
