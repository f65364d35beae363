use std::fmt::Write as _;
use std::path::Path;

use amf_core::arith::{
    certificate_from_basis, cm_points, divides_f3, divides_f6minus, odd_coordinate_sum, parity_at_cm,
    SearchBounds,
};
use amf_core::ecoord::ecoord_basis;
use amf_core::harmonic::{basis, same_span};
use amf_core::hecke::{
    dim_formula, dim_via_trace_formula, dims_from_series, hecke_matrix, HeckeMatrix, HeckeRecord,
};
use amf_core::{BasisResult, Error, Frame, HomogeneousPoly, Rational, Variant};
use anyhow::{bail, Context};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::args::*;
use crate::fixtures::{self, Check, Fixture};
use crate::record::{render_text, DatabaseRecord};

/// Result of a subcommand: both renderings and whether every check passed.
pub struct Report {
    pub text: String,
    pub json: Value,
    pub ok: bool,
}

impl Report {
    fn ok(text: String, json: Value) -> Self {
        Report { text, json, ok: true }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.text.clone(),
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).expect("serializable");
                s.push('\n');
                s
            }
        }
    }
}

/// Usage problems (exit code 2) as opposed to failed computations.
#[derive(Debug)]
pub struct UsageError(pub String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    UsageError(msg.into()).into()
}

fn algorithm_label(a: Algorithm) -> &'static str {
    match a {
        Algorithm::Main => "main",
        Algorithm::Ecoord => "ecoord",
        Algorithm::Both => "main+ecoord",
    }
}

/// One basis per (degree, variant) with the requested algorithm; `both` checks span equality.
pub fn compute_basis(l: u32, v: Variant, algorithm: Algorithm) -> anyhow::Result<BasisResult> {
    Ok(match algorithm {
        Algorithm::Main => basis(l, v),
        Algorithm::Ecoord => ecoord_basis(l, v)?,
        Algorithm::Both => {
            let a = basis(l, v);
            let b = ecoord_basis(l, v)?;
            if !same_span(l, Frame::X, &a.basis, &b.basis) {
                bail!("span mismatch between pipelines at l={l} {v}");
            }
            a
        }
    })
}

fn jobs(range: DegreeRange, variants: &[Variant]) -> Vec<(u32, Variant)> {
    range
        .iter()
        .flat_map(|l| variants.iter().map(move |&v| (l, v)))
        .collect()
}

pub fn basis_records(range: DegreeRange, variants: &[Variant], algorithm: Algorithm) -> anyhow::Result<Vec<DatabaseRecord>> {
    jobs(range, variants)
        .par_iter()
        .map(|&(l, v)| Ok(DatabaseRecord::new(&compute_basis(l, v, algorithm)?, algorithm_label(algorithm))))
        .collect()
}

pub fn cmd_basis(a: &BasisArgs) -> anyhow::Result<Report> {
    let records = basis_records(a.degrees, &a.variant.variants(), a.algorithm)?;
    let text = records.iter().map(render_text).collect::<Vec<_>>().join("\n");
    let ok = records.iter().all(DatabaseRecord::is_consistent);
    Ok(Report {
        text,
        json: serde_json::to_value(&records)?,
        ok,
    })
}

pub const DIMS_HEADER: &str = "   l  gamma   plus  minus  trace  s_gamma  s_plus  s_minus  agree";

pub fn cmd_dims(a: &DimsArgs) -> anyhow::Result<Report> {
    let mut text = String::from(DIMS_HEADER);
    text.push('\n');
    let mut rows = Vec::new();
    let mut all = true;
    for l in 0..=a.l_max {
        let d = dim_formula(l);
        let t = dim_via_trace_formula(l);
        let s = dims_from_series(l);
        let agree = d == s && t == d.gamma && d.gamma == d.plus + d.minus;
        all &= agree;
        writeln!(
            text,
            "{l:>4}  {:>5}  {:>5}  {:>5}  {t:>5}  {:>7}  {:>6}  {:>7}  {}",
            d.gamma,
            d.plus,
            d.minus,
            s.gamma,
            s.plus,
            s.minus,
            if agree { "yes" } else { "NO" }
        )?;
        rows.push(json!({
            "l": l,
            "closed_form": d,
            "trace_formula": t,
            "series": s,
            "agree": agree,
        }));
    }
    Ok(Report {
        text,
        json: Value::Array(rows),
        ok: all,
    })
}

/// `c_0 + c_1 x + ...` rendered from the highest power down.
pub fn render_charpoly(coeffs: &[Rational]) -> String {
    let zero = Rational::from_integer(0.into());
    let one = Rational::from_integer(1.into());
    let mut parts = Vec::new();
    for (k, c) in coeffs.iter().enumerate().rev() {
        if *c == zero {
            continue;
        }
        let neg = *c < zero;
        let mag = if neg { -c.clone() } else { c.clone() };
        let body = match k {
            0 => mag.to_string(),
            _ => {
                let mono = if k == 1 { "x".to_string() } else { format!("x^{k}") };
                if mag == one {
                    mono
                } else {
                    format!("{mag}*{mono}")
                }
            }
        };
        parts.push(match (parts.is_empty(), neg) {
            (true, false) => body,
            (true, true) => format!("-{body}"),
            (false, false) => format!("+ {body}"),
            (false, true) => format!("- {body}"),
        });
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" ")
    }
}

fn render_matrix(h: &HeckeMatrix) -> String {
    h.matrix
        .rows_iter()
        .map(|r| format!("  [{}]", r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")))
        .collect::<Vec<_>>()
        .join("\n")
}

fn check_primes(primes: &[u64]) -> anyhow::Result<()> {
    for &p in primes {
        if !amf_core::quaternion::is_prime(p) {
            return Err(usage(format!("{p} is not prime")));
        }
    }
    Ok(())
}

pub fn cmd_hecke(a: &HeckeArgs) -> anyhow::Result<Report> {
    check_primes(&a.primes)?;
    let items: Vec<_> = jobs(a.degrees, &a.variant.variants())
        .into_par_iter()
        .map(|(l, v)| -> anyhow::Result<_> {
            let b = basis(l, v);
            let hs = if b.dim() == 0 {
                Vec::new()
            } else {
                a.primes
                    .iter()
                    .map(|&p| hecke_matrix(p, &b))
                    .collect::<Result<Vec<_>, Error>>()?
            };
            Ok((l, v, b.dim(), hs))
        })
        .collect::<anyhow::Result<_>>()?;
    let mut text = String::new();
    let mut json_items = Vec::new();
    for (l, v, dim, hs) in &items {
        writeln!(text, "l={l} {v} dim={dim}")?;
        for h in hs {
            writeln!(text, "T_{} =\n{}", h.p, render_matrix(h))?;
            writeln!(text, "charpoly T_{}: {}", h.p, render_charpoly(&h.characteristic_polynomial()))?;
        }
        json_items.push(json!({
            "l": l,
            "variant": v,
            "dim": dim,
            "hecke": hs.iter().map(HeckeRecord::from).collect::<Vec<_>>(),
        }));
    }
    Ok(Report::ok(text, Value::Array(json_items)))
}

pub fn cmd_congruence(a: &CongruenceArgs) -> anyhow::Result<Report> {
    let degrees: Vec<u32> = a.degrees.iter().filter(|l| l % 2 == 0 && *l >= 4).collect();
    if degrees.is_empty() {
        return Err(usage("no even degree >= 4 in range"));
    }
    let bounds = SearchBounds {
        max_multiplier: a.max_multiplier,
    };
    let results: Vec<_> = degrees
        .par_iter()
        .map(|&l| (l, certificate_from_basis(l, &basis(l, Variant::Plus).basis, bounds)))
        .collect();
    let mut text = String::new();
    let mut items = Vec::new();
    let mut found = 0;
    for (l, r) in &results {
        match r {
            Ok(c) => {
                found += 1;
                writeln!(text, "{}", c.summary())?;
                items.push(serde_json::to_value(c)?);
            }
            Err(e) => {
                writeln!(text, "l={l} not found: {e}")?;
                items.push(json!({ "degree": l, "not_found": e.to_string() }));
            }
        }
    }
    writeln!(text, "certificates: {found} of {}", results.len())?;
    Ok(Report::ok(text, json!({ "found": found, "searched": results.len(), "results": items })))
}

pub fn cmd_cm_points(a: &CmArgs) -> anyhow::Result<Report> {
    if a.disc >= 0 {
        return Err(usage(format!("discriminant {} must be negative", a.disc)));
    }
    let points = cm_points(a.disc)?;
    let parities = match &a.poly {
        Some(s) => {
            let f = HomogeneousPoly::parse(Frame::X, None, s).map_err(|e| usage(e.to_string()))?;
            Some(parity_at_cm(&f, a.disc).map_err(|e| usage(e.to_string()))?)
        }
        None => None,
    };
    let mut text = format!("disc={} points={}\n", a.disc, points.len());
    let mut items = Vec::new();
    for (k, p) in points.iter().enumerate() {
        let odd = odd_coordinate_sum(p);
        let par = parities.as_ref().map(|v| v[k]);
        write!(text, "({}, {}, {}) sum_odd={odd}", p.a[0], p.a[1], p.a[2])?;
        if let Some(b) = par {
            write!(text, " f_mod2={b}")?;
        }
        text.push('\n');
        items.push(json!({ "a": p.a, "sum_odd": odd, "f_mod2": par }));
    }
    Ok(Report::ok(text, json!({ "disc": a.disc, "points": items })))
}

pub fn cmd_divide(a: &DivideArgs) -> anyhow::Result<Report> {
    let frame: Frame = a.frame.into();
    let f = HomogeneousPoly::parse(frame, None, &a.poly).map_err(|e| usage(e.to_string()))?;
    let out_frame: Frame = a.out_frame.unwrap_or(a.frame).into();
    let q = match a.by {
        Divisor::F3 => divides_f3(&f, out_frame),
        Divisor::F6minus => divides_f6minus(&f, out_frame),
    };
    match q {
        Ok(q) => Ok(Report::ok(format!("{q}\n"), json!({ "divisible": true, "quotient": q }))),
        Err(Error::NotDivisible(factor)) => Ok(Report {
            text: format!("not divisible: factor {factor}\n"),
            json: json!({ "divisible": false, "factor": factor }),
            ok: false,
        }),
        Err(e) => Err(e.into()),
    }
}

pub fn cmd_verify(a: &VerifyArgs) -> anyhow::Result<Report> {
    let mut loaded = Vec::new();
    for p in &a.fixtures {
        loaded.push((p.clone(), fixtures::load(p)?));
    }
    let sibling_x = |p: &Path| -> Option<fixtures::XFixture> {
        let candidate = p.with_file_name("x_forms.json");
        match fixtures::load(&candidate).ok()? {
            Fixture::X(x) => Some(x),
            Fixture::E(_) => None,
        }
    };
    let given_x = loaded.iter().find_map(|(_, f)| match f {
        Fixture::X(x) => Some(x.clone()),
        Fixture::E(_) => None,
    });
    let mut text = String::new();
    let mut items = Vec::new();
    let mut ok = true;
    for (path, f) in &loaded {
        let checks: Vec<Check> = match f {
            Fixture::X(x) => fixtures::verify_x(x),
            Fixture::E(e) => {
                let x = given_x.clone().or_else(|| sibling_x(path));
                fixtures::verify_e(e, x.as_ref())
            }
        };
        let passed = checks.iter().filter(|c| c.ok).count();
        writeln!(text, "{}: {passed}/{} passed", path.display(), checks.len())?;
        for c in &checks {
            write!(text, "  {} {}", if c.ok { "PASS" } else { "FAIL" }, c.item)?;
            if !c.detail.is_empty() {
                write!(text, " ({})", c.detail)?;
            }
            text.push('\n');
        }
        ok &= passed == checks.len();
        items.push(json!({ "fixture": path.display().to_string(), "checks": checks }));
    }
    writeln!(text, "{}", if ok { "pass" } else { "FAIL" })?;
    Ok(Report {
        text,
        json: json!({ "pass": ok, "fixtures": items }),
        ok,
    })
}

pub fn export_records(a: &ExportArgs) -> anyhow::Result<Vec<DatabaseRecord>> {
    check_primes(&a.hecke)?;
    let variants = [Variant::Plus, Variant::Minus];
    jobs(a.degrees, &variants)
        .par_iter()
        .map(|&(l, v)| -> anyhow::Result<DatabaseRecord> {
            let b = compute_basis(l, v, a.algorithm)?;
            let mut r = DatabaseRecord::new(&b, algorithm_label(a.algorithm));
            if !a.hecke.is_empty() && b.dim() > 0 {
                let hs = a
                    .hecke
                    .iter()
                    .map(|&p| hecke_matrix(p, &b).map(|h| HeckeRecord::from(&h)))
                    .collect::<Result<Vec<_>, Error>>()?;
                r.hecke = Some(hs);
            }
            if a.certificates && v == Variant::Plus && l % 2 == 0 && l >= 4 {
                r.certificate = certificate_from_basis(l, &b.basis, SearchBounds::default()).ok();
            }
            Ok(r)
        })
        .collect()
}

pub fn cmd_export_db(a: &ExportArgs) -> anyhow::Result<Report> {
    let records = export_records(a)?;
    let ok = records.iter().all(DatabaseRecord::is_consistent);
    let mut body = serde_json::to_string_pretty(&records)?;
    body.push('\n');
    std::fs::write(&a.output, body).with_context(|| format!("writing {}", a.output.display()))?;
    let text = format!("wrote {} records to {}\n", records.len(), a.output.display());
    Ok(Report {
        text,
        json: json!({ "records": records.len(), "path": a.output.display().to_string() }),
        ok,
    })
}
