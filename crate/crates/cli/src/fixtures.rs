//! Fixture files of printed polynomials and their exact re-verification.

use std::collections::BTreeMap;
use std::path::Path;

use amf_core::ecoord::{delta_eps_apply, ebasis, ecoord_to_x};
use amf_core::harmonic::{basis, in_span, verify_membership};
use amf_core::hecke::coordinates;
use amf_core::poly::parse_rational;
use amf_core::{Frame, HomogeneousPoly, Variant};
use anyhow::{bail, Context};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DimRow {
    pub l: u32,
    pub plus: usize,
    pub minus: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct XEntry {
    pub name: String,
    pub l: u32,
    pub variant: Variant,
    pub index: usize,
    pub poly: HomogeneousPoly,
}

/// Printed x-coordinate polynomials with their dimension table.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct XFixture {
    pub description: String,
    pub dims: Vec<DimRow>,
    pub entries: Vec<XEntry>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct EEntry {
    pub m: u32,
    pub eps1: u8,
    pub eps2: u8,
    pub index: usize,
    pub poly: HomogeneousPoly,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RelationTerm {
    pub coeff: String,
    pub m: u32,
    pub eps1: u8,
    pub eps2: u8,
    pub index: usize,
}

/// `target = Σ coeff · f3^eps1 · f6^eps2 · F̂(m, eps1, eps2, index)` after frame change.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Relation {
    pub target: String,
    pub terms: Vec<RelationTerm>,
}

/// Printed weighted-ring kernel elements and their scale relations.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct EFixture {
    pub description: String,
    pub fhat: Vec<EEntry>,
    pub relations: Vec<Relation>,
}

pub enum Fixture {
    X(XFixture),
    E(EFixture),
}

pub fn load(path: &Path) -> anyhow::Result<Fixture> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let value: serde_json::Value =
        serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
    if value.get("entries").is_some() {
        Ok(Fixture::X(serde_json::from_value(value)?))
    } else if value.get("fhat").is_some() {
        Ok(Fixture::E(serde_json::from_value(value)?))
    } else {
        bail!("{}: neither an x-coordinate nor an e-coordinate fixture", path.display())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub item: String,
    pub ok: bool,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

impl Check {
    fn new(item: impl Into<String>, ok: bool, detail: impl Into<String>) -> Self {
        Check {
            item: item.into(),
            ok,
            detail: detail.into(),
        }
    }
}

/// Dimensions, membership, span containment, and equality of primitive bases as sets.
pub fn verify_x(fx: &XFixture) -> Vec<Check> {
    let mut groups: BTreeMap<(u32, Variant), Vec<&XEntry>> = BTreeMap::new();
    for row in &fx.dims {
        groups.entry((row.l, Variant::Plus)).or_default();
        groups.entry((row.l, Variant::Minus)).or_default();
    }
    for e in &fx.entries {
        groups.entry((e.l, e.variant)).or_default().push(e);
    }
    let keys: Vec<_> = groups.keys().copied().collect();
    let computed: BTreeMap<_, _> = keys.par_iter().map(|&(l, v)| ((l, v), basis(l, v))).collect();

    let mut checks = Vec::new();
    for row in &fx.dims {
        for (v, want) in [(Variant::Plus, row.plus), (Variant::Minus, row.minus)] {
            let got = computed[&(row.l, v)].dim();
            checks.push(Check::new(
                format!("dim l={} {v}", row.l),
                got == want,
                if got == want { String::new() } else { format!("computed {got}, printed {want}") },
            ));
        }
    }
    for ((l, v), entries) in &groups {
        let b = &computed[&(*l, *v)];
        let mut printed = Vec::new();
        for e in entries {
            let report = verify_membership(&e.poly, *v);
            let member = matches!(&report, Ok(r) if r.passes());
            let inside = in_span(*l, Frame::X, &e.poly, &b.basis);
            checks.push(Check::new(
                format!("{} harmonic, invariant, T2 sign", e.name),
                member,
                if member { String::new() } else { format!("{report:?}") },
            ));
            checks.push(Check::new(format!("{} in computed span", e.name), inside, ""));
            if let Ok((p, _)) = e.poly.primitive_normalize() {
                printed.push(p);
            }
        }
        if !entries.is_empty() {
            let mut a: Vec<String> = printed.iter().map(|p| p.to_string()).collect();
            let mut c: Vec<String> = b.basis.iter().map(|p| p.to_string()).collect();
            a.sort();
            c.sort();
            checks.push(Check::new(format!("primitive basis set l={l} {v}"), a == c, ""));
        }
    }
    checks
}

/// Printed kernel elements against the computed echelon basis, and the scale relations.
pub fn verify_e(fx: &EFixture, x: Option<&XFixture>) -> Vec<Check> {
    let mut checks = Vec::new();
    let computed = |m: u32, e1: u8, e2: u8, index: usize| -> Option<HomogeneousPoly> {
        ebasis(m, e1, e2).ok()?.get(index.checked_sub(1)?).cloned()
    };
    for f in &fx.fhat {
        let label = format!("Fhat m={} eps=({},{}) #{}", f.m, f.eps1, f.eps2, f.index);
        let kernel = matches!(delta_eps_apply(f.eps1, f.eps2, &f.poly), Ok(d) if d.is_zero());
        checks.push(Check::new(format!("{label} in kernel"), kernel, ""));
        let same = computed(f.m, f.eps1, f.eps2, f.index).as_ref() == Some(&f.poly);
        checks.push(Check::new(format!("{label} equals computed"), same, ""));
    }
    let Some(x) = x else {
        checks.push(Check::new("relations", false, "no x-coordinate fixture available"));
        return checks;
    };
    let targets: BTreeMap<&str, &HomogeneousPoly> = x.entries.iter().map(|e| (e.name.as_str(), &e.poly)).collect();
    for rel in &fx.relations {
        let result = (|| -> anyhow::Result<(bool, String)> {
            let target = targets
                .get(rel.target.as_str())
                .with_context(|| format!("unknown target {}", rel.target))?;
            let mut sum = HomogeneousPoly::zero(target.degree(), Frame::X);
            let mut images = Vec::new();
            for t in &rel.terms {
                let f = computed(t.m, t.eps1, t.eps2, t.index).context("missing kernel element")?;
                let image = ecoord_to_x(t.eps1, t.eps2, &f)?;
                sum = sum.add(&image.scale(&parse_rational(&t.coeff)?))?;
                images.push(image);
            }
            if &sum == *target {
                return Ok((true, String::new()));
            }
            let detail = match coordinates(target, &images) {
                Ok(c) => format!(
                    "exact coefficients are [{}]",
                    c.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
                ),
                Err(_) => "target is outside the span of the listed terms".to_string(),
            };
            Ok((false, detail))
        })();
        let (ok, detail) = result.unwrap_or_else(|e| (false, e.to_string()));
        checks.push(Check::new(format!("relation {}", rel.target), ok, detail));
    }
    checks
}
