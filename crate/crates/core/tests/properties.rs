use amf_core::arith::{cm_points, divides_f3, divides_f6minus, norm_ternary};
use amf_core::ecoord::{delta_eps_apply, ecoord_to_y, f3_plus_y, f6_minus_y, weighted_monomials};
use amf_core::linalg::{rat, rational_string};
use amf_core::poly::{act, laplacian_y, monomial_count, norm_form_x, PolyJson};
use amf_core::quaternion::{gamma_list, quat_mul, rho};
use amf_core::{kernel_basis, rref, Frame, HomogeneousPoly, HurwitzQuaternion, Rational, RationalMatrix, RotationFrame};
use proptest::prelude::*;

fn dense_poly(frame: Frame, max_degree: u32) -> impl Strategy<Value = HomogeneousPoly> {
    (0..=max_degree).prop_flat_map(move |d| {
        prop::collection::vec(-6i64..=6, monomial_count(d)).prop_map(move |v| {
            let coeffs: Vec<Rational> = v.into_iter().map(rat).collect();
            HomogeneousPoly::from_dense(d, frame, &coeffs).unwrap()
        })
    })
}

fn weighted_poly() -> impl Strategy<Value = HomogeneousPoly> {
    (0..=6u32).prop_flat_map(|half| {
        let m = 2 * half;
        let monos = weighted_monomials(m).unwrap();
        prop::collection::vec(-9i64..=9, monos.len()).prop_map(move |v| {
            HomogeneousPoly::from_terms(m, Frame::E, monos.iter().copied().zip(v.into_iter().map(rat))).unwrap()
        })
    })
}

fn quaternion() -> impl Strategy<Value = HurwitzQuaternion> {
    (prop::array::uniform4(-4i64..=4), any::<bool>()).prop_map(|(c, half)| {
        let c = c.map(|x| 2 * x + i64::from(half));
        HurwitzQuaternion::new(c).unwrap()
    })
}

fn nonzero_quaternion() -> impl Strategy<Value = HurwitzQuaternion> {
    quaternion().prop_filter("nonzero", |q| !q.is_zero())
}

fn int_matrix() -> impl Strategy<Value = RationalMatrix> {
    (1usize..6, 1usize..7).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop::collection::vec(-4i64..=4, c), r).prop_map(move |rows| {
            let rows = rows.into_iter().map(|row| row.into_iter().map(rat).collect()).collect();
            RationalMatrix::from_rows(c, rows).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn frame_change_round_trips(f in dense_poly(Frame::X, 6)) {
        let y = f.change_frame_xy().unwrap();
        prop_assert_eq!(y.frame(), Frame::Y);
        prop_assert_eq!(y.change_frame_xy().unwrap(), f);
    }

    #[test]
    fn text_and_json_round_trip(f in dense_poly(Frame::X, 6)) {
        let text = f.to_string();
        prop_assert_eq!(HomogeneousPoly::parse(Frame::X, Some(f.degree()), &text).unwrap(), f.clone());
        let json = serde_json::to_string(&f).unwrap();
        let back: HomogeneousPoly = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(&back, &f);
        let wire: PolyJson = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(wire.l, f.degree());
    }

    #[test]
    fn action_is_a_homomorphism(f in dense_poly(Frame::X, 5), i in 0usize..12, j in 0usize..12) {
        let gs = gamma_list();
        let (g, h) = (&gs[i], &gs[j]);
        let lhs = act(g, &act(h, &f).unwrap()).unwrap();
        let rhs = act(&g.mul(h).unwrap(), &f).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn action_commutes_with_laplacian(f in dense_poly(Frame::X, 5), i in 0usize..12) {
        let g = &gamma_list()[i];
        let a = act(g, &f.laplacian().unwrap()).unwrap();
        let b = act(g, &f).unwrap().laplacian().unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn gamma_preserves_norm_form(i in 0usize..12) {
        let nm = norm_form_x();
        prop_assert_eq!(act(&gamma_list()[i], &nm).unwrap(), nm);
    }

    #[test]
    fn quaternion_norm_is_multiplicative(a in quaternion(), b in quaternion()) {
        let ab = quat_mul(&a, &b);
        prop_assert_eq!(ab.norm(), a.norm() * b.norm());
        prop_assert_eq!(ab.conj(), quat_mul(&b.conj(), &a.conj()));
        prop_assert_eq!(a.trace(), a.doubled()[0]);
    }

    #[test]
    fn rho_is_a_homomorphism(a in nonzero_quaternion(), b in nonzero_quaternion()) {
        let lhs = rho(&quat_mul(&a, &b), RotationFrame::Q).unwrap();
        let rhs = rho(&a, RotationFrame::Q).unwrap().mul(&rho(&b, RotationFrame::Q).unwrap()).unwrap();
        prop_assert_eq!(&lhs, &rhs);
        prop_assert!(lhs.is_special_orthogonal());
    }

    #[test]
    fn kernel_and_rank(m in int_matrix()) {
        let r = rref(&m);
        let k = kernel_basis(&m);
        prop_assert_eq!(r.rank() + k.len(), m.ncols());
        for v in &k {
            prop_assert!(m.mul_vec(v).unwrap().iter().all(|x| *x == rat(0)));
        }
        prop_assert_eq!(rref(&r.reduced).reduced, r.reduced);
    }

    #[test]
    fn cayley_hamilton(rows in prop::collection::vec(prop::collection::vec(-5i64..=5, 4), 4)) {
        let rows: Vec<Vec<Rational>> = rows.into_iter().map(|r| r.into_iter().map(rat).collect()).collect();
        let m = RationalMatrix::from_rows(4, rows).unwrap();
        let coeffs = m.characteristic_polynomial().unwrap();
        prop_assert_eq!(coeffs.len(), 5);
        let mut power = RationalMatrix::identity(4);
        let mut sum = RationalMatrix::zeros(4, 4);
        for c in &coeffs {
            sum = sum.add(&power.scale(c)).unwrap();
            power = power.mul(&m).unwrap();
        }
        prop_assert!(sum.is_zero());
    }

    #[test]
    fn rational_strings_round_trip(n in -10_000i64..10_000, d in 1i64..10_000) {
        #[derive(serde::Serialize, serde::Deserialize)]
        struct W(#[serde(with = "rational_string")] Rational);
        let x = Rational::new(n.into(), d.into());
        let s = serde_json::to_string(&W(x.clone())).unwrap();
        prop_assert_eq!(serde_json::from_str::<W>(&s).unwrap().0, x);
    }

    #[test]
    fn transported_laplacian_commutes(f in weighted_poly(), e1 in 0u8..2, e2 in 0u8..2) {
        let lhs = laplacian_y(&ecoord_to_y(e1, e2, &f).unwrap()).unwrap();
        let rhs = ecoord_to_y(e1, e2, &delta_eps_apply(e1, e2, &f).unwrap()).unwrap();
        if f.degree() == 0 {
            // No degree −2 exists; both sides vanish.
            prop_assert!(lhs.is_zero() && rhs.is_zero());
        } else {
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn division_inverts_multiplication(g in dense_poly(Frame::Y, 4)) {
        prop_assume!(!g.is_zero());
        let by_f3 = f3_plus_y().mul(&g).unwrap();
        prop_assert_eq!(divides_f3(&by_f3, Frame::Y).unwrap(), g.clone());
        let x = by_f3.change_frame_xy().unwrap();
        prop_assert_eq!(divides_f3(&x, Frame::Y).unwrap(), g.clone());

        let by_f6 = f6_minus_y().mul(&g).unwrap();
        prop_assert_eq!(divides_f6minus(&by_f6, Frame::Y).unwrap(), g.clone());
        let shifted = by_f6.add(&HomogeneousPoly::monomial(Frame::Y, [by_f6.degree(), 0, 0], rat(1))).unwrap();
        prop_assert!(divides_f6minus(&shifted, Frame::Y).is_err());
    }

    #[test]
    fn cm_points_lie_on_the_form(n in 1i64..150) {
        let points = cm_points(-n).unwrap();
        for p in &points {
            prop_assert_eq!(norm_ternary(p.a), n);
            prop_assert!(points.iter().any(|q| q.a == p.a.map(|x| -x)));
            prop_assert!(points.iter().any(|q| q.a == [p.a[1], p.a[2], p.a[0]]));
        }
    }
}
