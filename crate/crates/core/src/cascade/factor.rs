use std::collections::BTreeMap;

use num_traits::Zero;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exact::{as_string, Rational};
use crate::poly::{HomogeneousPolynomial, Monomial};
use crate::single::SigmaTriple;
use crate::system::FactorTerms;

/// Truncated Taylor expansion `f_0 + f_2 + f_3 + … + f_D` of the
/// proportionality factor at a critical point (so `f_1 = 0`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedFactor {
    f0: HomogeneousPolynomial,
    components: BTreeMap<u32, HomogeneousPolynomial>,
}

impl TruncatedFactor {
    /// Components are keyed by their degree; zero components are dropped.
    pub fn new(
        f0: Rational,
        components: impl IntoIterator<Item = HomogeneousPolynomial>,
    ) -> Result<Self> {
        let mut out = TruncatedFactor {
            f0: HomogeneousPolynomial::constant(f0),
            components: BTreeMap::new(),
        };
        for p in components {
            out = out.with_component(p)?;
        }
        Ok(out)
    }

    /// `f_0 + σ1 x² + σ2 y² + σ3 z²`.
    pub fn from_sigma(f0: Rational, s: &SigmaTriple) -> Self {
        Self::new(f0, [s.quadric()]).expect("quadric has degree 2")
    }

    /// Replaces (or adds) the component of the polynomial's degree.
    pub fn with_component(mut self, p: HomogeneousPolynomial) -> Result<Self> {
        let j = p.degree();
        if j < 2 {
            return Err(Error::MalformedPolynomial(format!(
                "factor components must have degree at least 2, got {j}"
            )));
        }
        if p.is_zero() {
            self.components.remove(&j);
        } else {
            self.components.insert(j, p);
        }
        Ok(self)
    }

    pub fn without_component(mut self, j: u32) -> Self {
        self.components.remove(&j);
        self
    }

    pub fn f0(&self) -> Rational {
        self.f0.coeff(&Monomial::ONE)
    }

    pub fn component(&self, j: u32) -> Option<&HomogeneousPolynomial> {
        self.components.get(&j)
    }

    pub fn components(&self) -> impl Iterator<Item = (u32, &HomogeneousPolynomial)> {
        self.components.iter().map(|(j, p)| (*j, p))
    }

    /// Highest degree with a nonzero component (0 for a constant factor).
    pub fn max_degree(&self) -> u32 {
        self.components.keys().next_back().copied().unwrap_or(0)
    }

    /// `f_3` multiplied by `eps`.
    pub fn with_scaled_cubic(&self, eps: &Rational) -> Result<Self> {
        let f3 = self.component(3).ok_or(Error::MissingCubicTerm)?;
        let scaled = f3.scale(eps);
        let mut out = self.clone();
        if scaled.is_zero() {
            out.components.remove(&3);
        } else {
            out.components.insert(3, scaled);
        }
        Ok(out)
    }

    /// Hessian parameters of `f_2`, which must be exactly
    /// `σ1 x² + σ2 y² + σ3 z²` with every `σ_j ≠ 0`.
    pub fn sigma(&self) -> Result<SigmaTriple> {
        let f2 = self
            .component(2)
            .ok_or_else(|| Error::HessianRequired("factor has no degree-2 component".into()))?;
        let squares = [Monomial::new(2, 0, 0), Monomial::new(0, 2, 0), Monomial::new(0, 0, 2)];
        if let Some((m, _)) = f2.terms().find(|(m, _)| !squares.contains(m)) {
            return Err(Error::HessianRequired(format!("f2 has off-diagonal term {m}")));
        }
        let [a, b, c] = squares.map(|m| f2.coeff(&m));
        SigmaTriple::new(a, b, c).map_err(|e| Error::HessianRequired(e.to_string()))
    }

    pub(crate) fn terms(&self) -> FactorTerms<'_> {
        let mut out: FactorTerms = self.components.iter().map(|(j, p)| (*j, p)).collect();
        if !self.f0.is_zero() {
            out.insert(0, &self.f0);
        }
        out
    }

    /// Same factor with `f_0` and every component multiplied by `c`.
    pub fn scaled(&self, c: &Rational) -> Self {
        TruncatedFactor {
            f0: self.f0.scale(c),
            components: self
                .components
                .iter()
                .filter(|_| !c.is_zero())
                .map(|(j, p)| (*j, p.scale(c)))
                .collect(),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct FactorJson {
    #[serde(with = "as_string", default = "Rational::zero")]
    f0: Rational,
    #[serde(default)]
    components: BTreeMap<String, HomogeneousPolynomial>,
}

impl Serialize for TruncatedFactor {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        FactorJson {
            f0: self.f0(),
            components: self.components.iter().map(|(j, p)| (j.to_string(), p.clone())).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for TruncatedFactor {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = FactorJson::deserialize(deserializer)?;
        let mut out = TruncatedFactor::new(raw.f0, []).map_err(D::Error::custom)?;
        for (key, p) in raw.components {
            let j: u32 = key
                .parse()
                .map_err(|_| D::Error::custom(format!("component key {key:?} is not a degree")))?;
            if j != p.degree() {
                return Err(D::Error::custom(format!(
                    "component key {j} holds a polynomial of degree {}",
                    p.degree()
                )));
            }
            out = out.with_component(p).map_err(D::Error::custom)?;
        }
        Ok(out)
    }
}
