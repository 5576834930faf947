//! JSON wire forms.
//!
//! Polynomial: `{"degree": d, "terms": [{"k": [k1, k2, k3], "c": "p/q"}, ...]}`
//! with terms listed largest monomial first.
//! Vector field: `{"degree": d, "x": <poly>, "y": <poly>, "z": <poly>}`.

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::field::PolynomialVectorField;
use super::monomial::Monomial;
use super::polynomial::HomogeneousPolynomial;
use crate::exact::{as_string, Rational};

#[derive(Serialize, Deserialize)]
struct TermJson {
    k: [u32; 3],
    #[serde(with = "as_string")]
    c: Rational,
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    degree: u32,
    terms: Vec<TermJson>,
}

impl Serialize for HomogeneousPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        PolyJson {
            degree: self.degree(),
            terms: self
                .terms()
                .map(|(m, c)| TermJson { k: m.exps(), c: c.clone() })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for HomogeneousPolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = PolyJson::deserialize(deserializer)?;
        let mut seen = std::collections::BTreeSet::new();
        for t in &raw.terms {
            if !seen.insert(t.k) {
                return Err(serde::de::Error::custom(format!("duplicate monomial {:?}", t.k)));
            }
        }
        HomogeneousPolynomial::from_terms(
            raw.degree,
            raw.terms.into_iter().map(|t| (Monomial(t.k), t.c)),
        )
        .map_err(serde::de::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
struct FieldJson {
    degree: u32,
    x: HomogeneousPolynomial,
    y: HomogeneousPolynomial,
    z: HomogeneousPolynomial,
}

impl Serialize for PolynomialVectorField {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        FieldJson {
            degree: self.degree(),
            x: self.x().clone(),
            y: self.y().clone(),
            z: self.z().clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for PolynomialVectorField {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = FieldJson::deserialize(deserializer)?;
        if raw.x.degree() != raw.degree {
            return Err(serde::de::Error::custom("field degree does not match its components"));
        }
        PolynomialVectorField::new(raw.x, raw.y, raw.z).map_err(serde::de::Error::custom)
    }
}
