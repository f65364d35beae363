//! JSON encoding: `{"l": 3, "frame": "x", "terms": [{"exp": [3,0,0], "num": "1", "den": "1"}]}`.
//!
//! Numerators and denominators are decimal strings so no consumer loses precision.

use num_bigint::BigInt;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg::Rational;

use super::{Exponent, Frame, HomogeneousPoly};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub l: u32,
    pub frame: Frame,
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exp: Exponent,
    pub num: String,
    pub den: String,
}

impl From<&HomogeneousPoly> for PolyJson {
    fn from(p: &HomogeneousPoly) -> Self {
        PolyJson {
            l: p.degree(),
            frame: p.frame(),
            terms: p
                .terms()
                .into_iter()
                .map(|(exp, c)| TermJson {
                    exp,
                    num: c.numer().to_string(),
                    den: c.denom().to_string(),
                })
                .collect(),
        }
    }
}

impl TryFrom<PolyJson> for HomogeneousPoly {
    type Error = Error;

    fn try_from(j: PolyJson) -> Result<Self> {
        let mut terms = Vec::with_capacity(j.terms.len());
        for t in j.terms {
            let num: BigInt = t
                .num
                .parse()
                .map_err(|_| Error::Parse(format!("bad numerator {:?}", t.num)))?;
            let den: BigInt = t
                .den
                .parse()
                .map_err(|_| Error::Parse(format!("bad denominator {:?}", t.den)))?;
            if den == BigInt::from(0) {
                return Err(Error::Parse("zero denominator".into()));
            }
            terms.push((t.exp, Rational::new(num, den)));
        }
        HomogeneousPoly::from_terms(j.l, j.frame, terms)
    }
}

impl Serialize for HomogeneousPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolyJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for HomogeneousPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = PolyJson::deserialize(d)?;
        HomogeneousPoly::try_from(j).map_err(serde::de::Error::custom)
    }
}
