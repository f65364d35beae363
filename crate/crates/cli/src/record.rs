use amf_core::arith::CongruenceCertificate;
use amf_core::hecke::{dim_formula, HeckeRecord};
use amf_core::{BasisResult, HomogeneousPoly, Rational, Variant};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisEntry {
    /// Primitive integral form.
    pub poly: HomogeneousPoly,
    /// The echelon row is `scale · poly`.
    #[serde(with = "amf_core::linalg::rational_string")]
    pub scale: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DatabaseRecord {
    pub l: u32,
    pub variant: Variant,
    /// `main`, `ecoord`, or `main+ecoord` when both agreed.
    pub algorithm: String,
    pub dim: usize,
    pub basis: Vec<BasisEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hecke: Option<Vec<HeckeRecord>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<CongruenceCertificate>,
}

impl DatabaseRecord {
    pub fn new(result: &BasisResult, algorithm: &str) -> Self {
        DatabaseRecord {
            l: result.degree,
            variant: result.variant,
            algorithm: algorithm.to_string(),
            dim: result.dim(),
            basis: result
                .basis
                .iter()
                .zip(&result.scales)
                .map(|(p, s)| BasisEntry {
                    poly: p.clone(),
                    scale: s.clone(),
                })
                .collect(),
            hecke: None,
            certificate: None,
        }
    }

    /// Dimension agrees with the closed form and with the stored basis.
    pub fn is_consistent(&self) -> bool {
        let d = dim_formula(self.l);
        let want = match self.variant {
            Variant::Gamma => d.gamma,
            Variant::Plus => d.plus,
            Variant::Minus => d.minus,
        };
        self.dim as u64 == want && self.basis.len() == self.dim
    }

    pub fn polys(&self) -> Vec<HomogeneousPoly> {
        self.basis.iter().map(|b| b.poly.clone()).collect()
    }
}

fn sign_label(v: Variant) -> &'static str {
    match v {
        Variant::Gamma => "",
        Variant::Plus => ",+",
        Variant::Minus => ",-",
    }
}

/// Layout: one header line per degree and variant, then one line per polynomial.
pub fn render_text(r: &DatabaseRecord) -> String {
    let s = sign_label(r.variant);
    let mut out = format!("l={} : dim H_{{{}{}}} = {}  [{}]\n", r.l, r.l, s, r.dim, r.algorithm);
    for (k, b) in r.basis.iter().enumerate() {
        let tag = if r.dim > 1 { format!("^({})", k + 1) } else { String::new() };
        out.push_str(&format!("f_{{{}{}}}{} = {}\n", r.l, s, tag, b.poly));
        out.push_str(&format!("  scale = {}\n", b.scale));
    }
    out
}
