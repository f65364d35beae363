use std::collections::BTreeMap;

use amf_core::arith::{divides_f3, divides_f6minus};
use amf_core::harmonic::{basis, verify_membership};
use amf_core::hecke::{hecke_matrix, trace_t_p_formula, Dims};
use amf_core::linalg::{frac, rat};
use amf_core::quaternion::{conjugacy_classes, gamma_list, hecke_coset_reps, norm_elements, norm_rotations};
use amf_core::{Frame, HomogeneousPoly, RationalMatrix, Variant};

fn printed() -> BTreeMap<String, HomogeneousPoly> {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/../../fixtures/x_forms.json");
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    v["entries"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| {
            let name = e["name"].as_str().unwrap().to_string();
            (name, serde_json::from_value(e["poly"].clone()).unwrap())
        })
        .collect()
}

fn x(s: &str) -> HomogeneousPoly {
    HomogeneousPoly::parse(Frame::X, None, s).unwrap()
}

#[test]
fn f3_quotient_of_f7() {
    let p = printed();
    let q = divides_f3(&p["f_7+"], Frame::X).unwrap();
    let extra = x("-x1^2*x2^2 + x1^2*x2*x3 - x1^2*x3^2 + x1*x2^2*x3 + x1*x2*x3^2 - x2^2*x3^2");
    let want = p["f_4+"].add(&extra.scale(&frac(16, 3))).unwrap();
    assert_eq!(q, want);
    assert!(divides_f3(&p["f_4+"], Frame::X).is_err());
}

#[test]
fn f6_quotient_of_f9() {
    let p = printed();
    assert_eq!(divides_f6minus(&p["f_9-"], Frame::X).unwrap(), p["f_3+"]);
    assert!(divides_f6minus(&p["f_3+"], Frame::X).is_err());
}

#[test]
fn printed_entries_are_members() {
    for (name, f) in printed() {
        let v = if name.contains('-') { Variant::Minus } else { Variant::Plus };
        assert!(verify_membership(&f, v).unwrap().passes(), "{name}");
    }
}

#[test]
fn norm_element_counts() {
    assert_eq!(norm_elements(1).len(), 24);
    assert_eq!(norm_elements(2).len(), 24);
    for p in [3u64, 5, 7, 11, 13] {
        assert_eq!(norm_elements(p).len() as u64, 24 * (p + 1), "p={p}");
        assert_eq!(hecke_coset_reps(p).unwrap().len() as u64, p + 1, "p={p}");
    }
    assert_eq!(hecke_coset_reps(2).unwrap().len(), 1);
    assert!(hecke_coset_reps(9).is_err());
}

#[test]
fn group_structure() {
    let g = gamma_list();
    assert_eq!(g.len(), 12);
    for a in &g {
        for b in &g {
            assert!(g.contains(&a.mul(b).unwrap()));
        }
    }
    let mut sizes: Vec<usize> = conjugacy_classes(&g).iter().map(Vec::len).collect();
    sizes.sort();
    assert_eq!(sizes, [1, 3, 4, 4]);
    // Two classes of norm-2 rotations, one coset.
    assert_eq!(conjugacy_classes(&norm_rotations(2)).len(), 2);
}

#[test]
fn hecke_traces_match_class_sums() {
    for l in 0..=12u32 {
        let b = basis(l, Variant::Gamma);
        if b.dim() == 0 {
            continue;
        }
        for p in [2u64, 3, 5, 7] {
            let t = hecke_matrix(p, &b).unwrap().matrix.trace();
            assert_eq!(t, trace_t_p_formula(p, l).unwrap(), "l={l} p={p}");
        }
    }
}

#[test]
fn hecke_preserves_sign_spaces() {
    for l in 0..=14u32 {
        for v in [Variant::Plus, Variant::Minus] {
            let b = basis(l, v);
            if b.dim() == 0 {
                continue;
            }
            let t2 = hecke_matrix(2, &b).unwrap().matrix;
            let sign = v.t2_sign(l).unwrap();
            assert_eq!(t2, RationalMatrix::identity(b.dim()).scale(&rat(sign as i64)), "l={l} {v}");
            hecke_matrix(3, &b).unwrap();
        }
    }
}

#[test]
fn dims_split_into_signs() {
    for l in 0..=40u32 {
        let Dims { gamma, plus, minus } = amf_core::hecke::dim_formula(l);
        assert_eq!(gamma, plus + minus, "l={l}");
    }
}
