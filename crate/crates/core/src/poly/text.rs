//! Parser for the text rendering, e.g. `x1^3 - 4/3*x1*x2*x3 + x3^3`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::Rational;

use super::{Exponent, Frame, HomogeneousPoly};

pub fn parse(frame: Frame, degree: Option<u32>, s: &str) -> Result<HomogeneousPoly> {
    let var = frame.variable();
    let cleaned: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if cleaned.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let mut terms: Vec<(Exponent, Rational)> = Vec::new();
    for (sign, body) in split_terms(&cleaned)? {
        let (e, c) = parse_term(body, var)?;
        terms.push((e, if sign { -c } else { c }));
    }
    let degree = match degree {
        Some(d) => d,
        None => terms
            .iter()
            .find(|(_, c)| !c.is_zero())
            .or(terms.first())
            .map(|(e, _)| frame.degree_of(*e))
            .unwrap_or(0),
    };
    terms.retain(|(_, c)| !c.is_zero());
    HomogeneousPoly::from_terms(degree, frame, terms)
}

/// Splits on top-level `+`/`-`, returning (negative?, term text).
fn split_terms(s: &str) -> Result<Vec<(bool, &str)>> {
    let mut out = Vec::new();
    let bytes = s.as_bytes();
    let mut start = 0;
    let mut neg = false;
    let mut i = 0;
    if matches!(bytes.first(), Some(b'+') | Some(b'-')) {
        neg = bytes[0] == b'-';
        start = 1;
        i = 1;
    }
    while i < bytes.len() {
        let b = bytes[i];
        // a sign right after '^' belongs to no term; exponents are non-negative
        if (b == b'+' || b == b'-') && i > start {
            out.push((neg, &s[start..i]));
            neg = b == b'-';
            start = i + 1;
        }
        i += 1;
    }
    if start >= s.len() {
        return Err(Error::Parse(format!("dangling sign in {s:?}")));
    }
    out.push((neg, &s[start..]));
    Ok(out)
}

fn parse_term(t: &str, var: char) -> Result<(Exponent, Rational)> {
    let mut coeff = Rational::one();
    let mut exp: Exponent = [0, 0, 0];
    for factor in t.split('*') {
        if factor.is_empty() {
            return Err(Error::Parse(format!("empty factor in {t:?}")));
        }
        if factor.starts_with(var) {
            let rest = &factor[var.len_utf8()..];
            let (idx, power) = match rest.split_once('^') {
                Some((i, p)) => (i, p),
                None => (rest, "1"),
            };
            let k: usize = idx
                .parse()
                .ok()
                .filter(|k| (1..=3).contains(k))
                .ok_or_else(|| Error::Parse(format!("bad variable {factor:?}")))?;
            let p: u32 = power
                .parse()
                .map_err(|_| Error::Parse(format!("bad exponent in {factor:?}")))?;
            exp[k - 1] += p;
        } else {
            coeff *= parse_rational(factor)?;
        }
    }
    Ok((exp, coeff))
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::Parse(format!("bad number {s:?}"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{frac, rat};

    #[test]
    fn parses_canonical_text() {
        let p = parse(Frame::X, None, "x1^3 - 4/3*x1*x2*x3 + 2*x3^3").unwrap();
        assert_eq!(p.degree(), 3);
        assert_eq!(p.coeff([1, 1, 1]), frac(-4, 3));
        assert_eq!(p.coeff([0, 0, 3]), rat(2));
        assert_eq!(p.coeff([3, 0, 0]), rat(1));
    }

    #[test]
    fn parses_leading_sign_and_constants() {
        let p = parse(Frame::E, None, "-e1^2 + 5*e2").unwrap();
        assert_eq!(p.degree(), 4);
        assert_eq!(p.coeff([2, 0, 0]), rat(-1));
        let c = parse(Frame::X, None, "7").unwrap();
        assert_eq!(c.coeff([0, 0, 0]), rat(7));
        let z = parse(Frame::X, Some(4), "0").unwrap();
        assert!(z.is_zero() && z.degree() == 4);
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse(Frame::X, None, "").is_err());
        assert!(parse(Frame::X, None, "x4").is_err());
        assert!(parse(Frame::X, None, "y1").is_err());
        assert!(parse(Frame::X, None, "x1 + x2^2").is_err());
        assert!(parse(Frame::X, None, "x1 -").is_err());
        assert!(parse(Frame::X, None, "1/0*x1").is_err());
    }
}
