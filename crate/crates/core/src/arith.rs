//! CM points of the ternary norm form, mod-2 congruence certificates, and
//! divisibility by `f_{3,+}` and `f_{6,−}`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::harmonic::{basis, Variant};
use crate::linalg::{frac, rat, Rational};
use crate::poly::{norm_form_x, Exponent, Frame, HomogeneousPoly};
use crate::quaternion::isqrt;

/// `3(a1²+a2²+a3²) − 2(a1a2+a2a3+a3a1)`.
pub fn norm_ternary(a: [i64; 3]) -> i64 {
    let [x, y, z] = a;
    3 * (x * x + y * y + z * z) - 2 * (x * y + y * z + z * x)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CMPoint {
    pub a: [i64; 3],
    pub disc: i64,
}

/// All lattice points with `norm_ternary(a) = −disc`, in lexicographic order.
///
/// The form is `4|a|² − (a1+a2+a3)²` with smallest eigenvalue 1, so
/// `a_i² ≤ |a|² ≤ −disc`.
pub fn cm_points(disc: i64) -> Result<Vec<CMPoint>> {
    if disc >= 0 {
        return Err(Error::BadParameter(format!("discriminant {disc} is not negative")));
    }
    let n = -disc;
    let r = isqrt(n as u64) as i64;
    let mut out = Vec::new();
    for a1 in -r..=r {
        for a2 in -r..=r {
            for a3 in -r..=r {
                if norm_ternary([a1, a2, a3]) == n {
                    out.push(CMPoint { a: [a1, a2, a3], disc });
                }
            }
        }
    }
    Ok(out)
}

fn eval_integer(f: &HomogeneousPoly, a: [i64; 3]) -> Result<BigInt> {
    if !f.is_integral() {
        return Err(Error::NonInteger);
    }
    let p = a.map(rat);
    Ok(f.eval(&p).to_integer())
}

/// `f(a) mod 2` at every CM point of `disc`.
pub fn parity_at_cm(f: &HomogeneousPoly, disc: i64) -> Result<Vec<u8>> {
    if !f.is_integral() {
        return Err(Error::NonInteger);
    }
    cm_points(disc)?
        .into_iter()
        .map(|p| Ok(u8::from(eval_integer(f, p.a)?.is_odd())))
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchBounds {
    /// Largest odd multiplier tried.
    pub max_multiplier: u32,
}

impl Default for SearchBounds {
    fn default() -> Self {
        SearchBounds { max_multiplier: 15 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Combination {
    /// `c · b_k`.
    Single { index: usize, multiplier: u32 },
    /// `(b_i + sign·c·b_j) / 2`.
    Pair {
        first: usize,
        second: usize,
        sign: i8,
        multiplier: u32,
    },
}

impl Combination {
    pub fn coefficients(&self, n: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); n];
        match *self {
            Combination::Single { index, multiplier } => v[index] = rat(multiplier as i64),
            Combination::Pair {
                first,
                second,
                sign,
                multiplier,
            } => {
                v[first] = frac(1, 2);
                v[second] = frac(sign as i64 * multiplier as i64, 2);
            }
        }
        v
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchTrace {
    pub singles_tried: usize,
    pub pairs_tried: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CongruenceCertificate {
    pub degree: u32,
    pub combination: Combination,
    /// Coefficients over the primitive plus-basis.
    #[serde(with = "crate::linalg::rational_strings")]
    pub coefficients: Vec<Rational>,
    pub polynomial: HomogeneousPoly,
    pub trace: SearchTrace,
}

impl CongruenceCertificate {
    pub fn is_pair(&self) -> bool {
        matches!(self.combination, Combination::Pair { .. })
    }

    /// One line: degree, combination, the first five terms, search counts.
    pub fn summary(&self) -> String {
        let comb = match self.combination {
            Combination::Single { index, multiplier } => format!("{multiplier}*b{}", index + 1),
            Combination::Pair {
                first,
                second,
                sign,
                multiplier,
            } => format!(
                "(b{} {} {multiplier}*b{})/2",
                first + 1,
                if sign > 0 { '+' } else { '-' },
                second + 1
            ),
        };
        let head: Vec<String> = self
            .polynomial
            .terms()
            .into_iter()
            .take(5)
            .map(|(e, c)| HomogeneousPoly::monomial(Frame::X, e, c.clone()).to_string())
            .collect();
        format!(
            "l={} {} [{} ...] singles={} pairs={}",
            self.degree,
            comb,
            head.join(", "),
            self.trace.singles_tried,
            self.trace.pairs_tried
        )
    }
}

/// Coefficient-wise comparison with `Nm^{l/2}` modulo 2 for an integral `f`.
pub fn congruent_to_norm_power(f: &HomogeneousPoly) -> Result<bool> {
    let l = f.degree();
    if l % 2 == 1 {
        return Ok(false);
    }
    let target = norm_form_x().pow(l / 2).mod2_reduce()?;
    Ok(f.mod2_reduce()? == target)
}

fn halve_if_integral(f: &HomogeneousPoly) -> Option<HomogeneousPoly> {
    let h = f.scale(&frac(1, 2));
    h.is_integral().then_some(h)
}

/// Searches single odd multiples, then half-sums of pairs, for an integral
/// element of the plus-space congruent to `Nm^{l/2}` modulo 2.
pub fn congruence_certificate(l: u32, bounds: SearchBounds) -> Result<CongruenceCertificate> {
    if l % 2 == 1 || l < 4 {
        return Err(Error::BadParameter(format!("degree {l} must be even and at least 4")));
    }
    let b = basis(l, Variant::Plus).basis;
    certificate_from_basis(l, &b, bounds)
}

/// [`congruence_certificate`] over a caller-supplied integral basis.
pub fn certificate_from_basis(
    l: u32,
    b: &[HomogeneousPoly],
    bounds: SearchBounds,
) -> Result<CongruenceCertificate> {
    let target = norm_form_x().pow(l / 2).mod2_reduce()?;
    let odd: Vec<u32> = (1..=bounds.max_multiplier).step_by(2).collect();
    let mut trace = SearchTrace::default();
    let found = |combination: Combination, polynomial: HomogeneousPoly, trace: SearchTrace| CongruenceCertificate {
        degree: l,
        combination,
        coefficients: combination.coefficients(b.len()),
        polynomial,
        trace,
    };
    for (k, p) in b.iter().enumerate() {
        for &c in &odd {
            trace.singles_tried += 1;
            let cand = p.scale(&rat(c as i64));
            if cand.is_integral() && cand.mod2_reduce()? == target {
                return Ok(found(Combination::Single { index: k, multiplier: c }, cand, trace));
            }
        }
    }
    for i in 0..b.len() {
        for j in 0..b.len() {
            if i == j {
                continue;
            }
            for sign in [-1i8, 1] {
                for &c in &odd {
                    trace.pairs_tried += 1;
                    let sum = b[i].add(&b[j].scale(&rat(sign as i64 * c as i64)))?;
                    if let Some(h) = halve_if_integral(&sum) {
                        if h.mod2_reduce()? == target {
                            let comb = Combination::Pair {
                                first: i,
                                second: j,
                                sign,
                                multiplier: c,
                            };
                            return Ok(found(comb, h, trace));
                        }
                    }
                }
            }
        }
    }
    Err(Error::NotFound(format!(
        "no certificate in degree {l} after {} singles and {} pairs",
        trace.singles_tried, trace.pairs_tried
    )))
}

fn to_y(f: &HomogeneousPoly) -> Result<HomogeneousPoly> {
    match f.frame() {
        Frame::Y => Ok(f.clone()),
        Frame::X => f.change_frame_xy(),
        Frame::E => Err(Error::FrameMismatch {
            expected: Frame::X,
            found: Frame::E,
        }),
    }
}

fn from_y(q: HomogeneousPoly, frame: Frame) -> Result<HomogeneousPoly> {
    match frame {
        Frame::Y => Ok(q),
        Frame::X => q.change_frame_xy(),
        Frame::E => Err(Error::FrameMismatch {
            expected: Frame::X,
            found: Frame::E,
        }),
    }
}

/// Quotient `q` with `f = f_{3,+}·q`, returned in `frame`.
pub fn divides_f3(f: &HomogeneousPoly, frame: Frame) -> Result<HomogeneousPoly> {
    let y = to_y(f)?;
    if y.degree() < 3 {
        return Err(Error::NotDivisible("f3+".into()));
    }
    let mut terms = Vec::with_capacity(y.len());
    for (e, c) in y.terms() {
        if e.contains(&0) {
            return Err(Error::NotDivisible("f3+".into()));
        }
        terms.push(([e[0] - 1, e[1] - 1, e[2] - 1], -c.clone()));
    }
    from_y(HomogeneousPoly::from_terms(y.degree() - 3, Frame::Y, terms)?, frame)
}

/// Exact division of a y-polynomial by `y_a − s·y_b`, or `None`.
fn divide_linear(f: &HomogeneousPoly, a: usize, b: usize, s: i64) -> Option<HomogeneousPoly> {
    if f.degree() == 0 {
        return f.is_zero().then(|| f.clone());
    }
    let mut rem = f.terms_map().clone();
    let mut quotient = HomogeneousPoly::zero(f.degree() - 1, f.frame());
    loop {
        let next = rem
            .iter()
            .filter(|(e, _)| e[a] > 0)
            .max_by_key(|(e, _)| (e[a], **e))
            .map(|(e, c)| (*e, c.clone()));
        let Some((e, c)) = next else { break };
        let mut q: Exponent = e;
        q[a] -= 1;
        quotient.add_term(q, c.clone());
        rem.remove(&e);
        // Subtract c·y^q·(−s·y_b) from the remainder.
        let mut t = q;
        t[b] += 1;
        let entry = rem.entry(t).or_insert_with(Rational::zero);
        *entry += &c * rat(s);
        if entry.is_zero() {
            rem.remove(&t);
        }
    }
    rem.is_empty().then_some(quotient)
}

/// Quotient `q` with `f = f_{6,−}·q`, returned in `frame`.
pub fn divides_f6minus(f: &HomogeneousPoly, frame: Frame) -> Result<HomogeneousPoly> {
    let mut y = to_y(f)?;
    const FACTORS: [(usize, usize, i64, &str); 6] = [
        (0, 1, 1, "y1-y2"),
        (0, 1, -1, "y1+y2"),
        (0, 2, 1, "y1-y3"),
        (0, 2, -1, "y1+y3"),
        (1, 2, 1, "y2-y3"),
        (1, 2, -1, "y2+y3"),
    ];
    for (a, b, s, name) in FACTORS {
        if y.degree() == 0 && !y.is_zero() {
            return Err(Error::NotDivisible(name.into()));
        }
        y = divide_linear(&y, a, b, s).ok_or_else(|| Error::NotDivisible(name.into()))?;
    }
    from_y(y.scale(&rat(64)), frame)
}

/// `Nm(x)^{l/2} mod 2` as a reduced polynomial; exposed for reports.
pub fn norm_power_mod2(l: u32) -> Result<HomogeneousPoly> {
    if l % 2 == 1 {
        return Err(Error::BadParameter(format!("degree {l} is odd")));
    }
    norm_form_x().pow(l / 2).mod2_reduce()
}

/// Whether `a1 + a2 + a3` is odd.
pub fn odd_coordinate_sum(p: &CMPoint) -> bool {
    (p.a[0] + p.a[1] + p.a[2]).rem_euclid(2) == 1
}

/// Content of an integral polynomial (gcd of coefficients).
pub fn content(f: &HomogeneousPoly) -> Result<BigInt> {
    if !f.is_integral() {
        return Err(Error::NonInteger);
    }
    Ok(f.terms()
        .into_iter()
        .fold(BigInt::zero(), |g, (_, c)| g.gcd(&c.to_integer()))
        .max(BigInt::one()))
}
