//! The single-degree obstruction system
//!
//! ```text
//! curl X_i = 0,   div X_i = 0,   ⟨∇(σ1 x² + σ2 y² + σ3 z²), X_i⟩ = 0
//! ```
//!
//! satisfied by the first nonvanishing Taylor term of a Beltrami field at a
//! non-degenerate critical point, together with the resonance
//! classification of the Hessian parameters that predicts when it can have
//! nonzero solutions.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{parse_rational, KernelBasis, Rational};
use crate::poly::{diagonal_quadric, CoefficientIndex, HomogeneousPolynomial, PolynomialVectorField};
use crate::system::{assemble, FactorTerms, LabeledSystem};

/// Hessian parameters: `d²f(p) = diag(2σ1, 2σ2, 2σ3)`, all nonzero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "[String; 3]", into = "[String; 3]")]
pub struct SigmaTriple {
    s: [Rational; 3],
}

impl SigmaTriple {
    pub fn new(s1: Rational, s2: Rational, s3: Rational) -> Result<Self> {
        let s = [s1, s2, s3];
        if let Some(index) = s.iter().position(Zero::is_zero) {
            return Err(Error::DegenerateHessian { index });
        }
        Ok(SigmaTriple { s })
    }

    pub fn from_ints(s1: i64, s2: i64, s3: i64) -> Result<Self> {
        let r = |v: i64| Rational::from_integer(v.into());
        Self::new(r(s1), r(s2), r(s3))
    }

    /// Parses `"1,1,-3"` or `"1/2, 2/3, -5"`.
    pub fn parse(text: &str) -> Result<Self> {
        let parts: Vec<&str> = text.split(',').collect();
        if parts.len() != 3 {
            return Err(Error::ParseRational(text.to_string()));
        }
        Self::new(
            parse_rational(parts[0])?,
            parse_rational(parts[1])?,
            parse_rational(parts[2])?,
        )
    }

    pub fn values(&self) -> &[Rational; 3] {
        &self.s
    }

    pub fn get(&self, i: usize) -> &Rational {
        &self.s[i]
    }

    pub fn scaled(&self, c: &Rational) -> Result<Self> {
        Self::new(&self.s[0] * c, &self.s[1] * c, &self.s[2] * c)
    }

    /// Entry `perm[i]` of the result is `σ_i`.
    pub fn permuted(&self, perm: [usize; 3]) -> Self {
        let mut s = self.s.clone();
        for i in 0..3 {
            s[perm[i]] = self.s[i].clone();
        }
        SigmaTriple { s }
    }

    /// `f_2 = σ1 x² + σ2 y² + σ3 z²`.
    pub fn quadric(&self) -> HomogeneousPolynomial {
        diagonal_quadric([&self.s[0], &self.s[1], &self.s[2]])
    }
}

impl TryFrom<[String; 3]> for SigmaTriple {
    type Error = Error;

    fn try_from(v: [String; 3]) -> Result<Self> {
        Self::new(parse_rational(&v[0])?, parse_rational(&v[1])?, parse_rational(&v[2])?)
    }
}

impl From<SigmaTriple> for [String; 3] {
    fn from(s: SigmaTriple) -> Self {
        s.s.map(|v| crate::exact::format_rational(&v))
    }
}

impl fmt::Display for SigmaTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c]: [String; 3] = self.clone().into();
        write!(f, "({a}, {b}, {c})")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumClassification {
    pub same_sign: bool,
    /// Some `σa + σb = 0` with `a ≠ b`.
    pub plus_minus_pair: bool,
    pub trace_zero: bool,
    /// `i ≥ 3` when the triple is `{α, α, −iα}` up to order.
    pub resonant_pair_degree: Option<u32>,
    pub risky_degrees: BTreeSet<u32>,
}

pub fn classify_spectrum(s: &SigmaTriple) -> SpectrumClassification {
    let v = s.values();
    let same_sign = v.iter().all(Signed::is_positive) || v.iter().all(Signed::is_negative);
    let pairs = [(0, 1, 2), (0, 2, 1), (1, 2, 0)];
    let plus_minus_pair = pairs.iter().any(|&(a, b, _)| (&v[a] + &v[b]).is_zero());
    let trace_zero = (&v[0] + &v[1] + &v[2]).is_zero();

    let resonant_pair_degree = pairs.iter().find_map(|&(a, b, c)| {
        if v[a] != v[b] {
            return None;
        }
        let ratio = -(&v[c] / &v[a]);
        if !ratio.is_integer() || ratio < Rational::from_integer(BigInt::from(3)) {
            return None;
        }
        u32::try_from(ratio.to_integer()).ok()
    });

    let mut risky_degrees = BTreeSet::new();
    if plus_minus_pair {
        risky_degrees.insert(1);
    }
    if trace_zero {
        risky_degrees.insert(2);
    }
    if let Some(i) = resonant_pair_degree {
        risky_degrees.insert(i);
    }
    SpectrumClassification {
        same_sign,
        plus_minus_pair,
        trace_zero,
        resonant_pair_degree,
        risky_degrees,
    }
}

/// Coefficient-matching system for `X_i` alone; rows are ordered
/// curl-x, curl-y, curl-z, div, first integral, each by descending monomial.
pub fn assemble_single(i: u32, s: &SigmaTriple) -> LabeledSystem {
    let f2 = s.quadric();
    let factor: FactorTerms = [(2, &f2)].into_iter().collect();
    assemble(&factor, i, i)
}

pub fn kernel_single(i: u32, s: &SigmaTriple) -> KernelBasis<CoefficientIndex> {
    assemble_single(i, s).kernel_basis()
}

/// Kernel vectors of a single-degree system as vector fields.
pub fn kernel_fields(i: u32, basis: &KernelBasis<CoefficientIndex>) -> Vec<PolynomialVectorField> {
    basis
        .vectors
        .iter()
        .map(|v| PolynomialVectorField::from_labeled(i, &basis.col_labels, v))
        .collect()
}

/// Integer triples `k ≠ 0` with `|k_j| ≤ bound` and `σ·k = 0`, in
/// lexicographic order.
pub fn resonance_search(s: &SigmaTriple, bound: u32) -> Vec<[i64; 3]> {
    let b = i64::from(bound);
    let v = s.values();
    let mut out = Vec::new();
    for k1 in -b..=b {
        let t1 = &v[0] * Rational::from_integer(k1.into());
        for k2 in -b..=b {
            let t2 = &t1 + &v[1] * Rational::from_integer(k2.into());
            for k3 in -b..=b {
                if k1 == 0 && k2 == 0 && k3 == 0 {
                    continue;
                }
                if (&t2 + &v[2] * Rational::from_integer(k3.into())).is_zero() {
                    out.push([k1, k2, k3]);
                }
            }
        }
    }
    out
}

/// Serialized kernel of one single-degree system.
#[derive(Clone, Debug, Serialize)]
pub struct SingleKernelReport {
    pub degree: u32,
    pub sigma: SigmaTriple,
    pub dimension: usize,
    pub basis: Vec<PolynomialVectorField>,
}

impl SingleKernelReport {
    pub fn compute(i: u32, s: &SigmaTriple) -> Self {
        let basis = kernel_single(i, s);
        SingleKernelReport {
            degree: i,
            sigma: s.clone(),
            dimension: basis.dim(),
            basis: kernel_fields(i, &basis),
        }
    }
}
