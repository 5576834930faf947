use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::monomial::{Axis, Monomial};
use crate::error::{Error, Result};
use crate::exact::{format_rational, Rational};

/// Homogeneous polynomial in `x, y, z` with rational coefficients.
///
/// The degree is explicit, so the zero polynomial of degree 4 and the zero
/// polynomial of degree 2 are different values.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HomogeneousPolynomial {
    degree: u32,
    terms: BTreeMap<Monomial, Rational>,
}

impl HomogeneousPolynomial {
    pub fn zero(degree: u32) -> Self {
        HomogeneousPolynomial { degree, terms: BTreeMap::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(c, Monomial::ONE)
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn term(c: Rational, m: Monomial) -> Self {
        let mut p = Self::zero(m.degree());
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    /// Builds a polynomial from terms; repeated monomials are summed.
    pub fn from_terms(
        degree: u32,
        terms: impl IntoIterator<Item = (Monomial, Rational)>,
    ) -> Result<Self> {
        let mut p = Self::zero(degree);
        for (m, c) in terms {
            if m.degree() != degree {
                return Err(Error::MalformedPolynomial(format!(
                    "monomial {m} has degree {} in a degree-{degree} polynomial",
                    m.degree()
                )));
            }
            p.add_term(m, c);
        }
        Ok(p)
    }

    /// Convenience constructor for tests and examples: `(coeff, [k1, k2, k3])`.
    pub fn from_ints(degree: u32, terms: &[(i64, [u32; 3])]) -> Result<Self> {
        Self::from_terms(
            degree,
            terms
                .iter()
                .map(|(c, k)| (Monomial(*k), Rational::from_integer((*c).into()))),
        )
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Rational) {
        debug_assert_eq!(m.degree(), self.degree);
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms with the largest monomial first.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter().rev()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.degree);
        }
        HomogeneousPolynomial {
            degree: self.degree,
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    /// Partial derivative; the degree drops by one (saturating at zero).
    pub fn partial(&self, axis: Axis) -> Self {
        let mut out = Self::zero(self.degree.saturating_sub(1));
        for (m, c) in &self.terms {
            if let Some(lower) = m.lowered(axis) {
                out.add_term(lower, c * Rational::from_integer(m.exp(axis).into()));
            }
        }
        out
    }

    pub fn laplacian(&self) -> Self {
        let mut out = Self::zero(self.degree.saturating_sub(2));
        for axis in Axis::ALL {
            let second = self.partial(axis).partial(axis);
            for (m, c) in second.terms {
                out.add_term(m, c);
            }
        }
        out
    }

    /// Whether no term contains `z`.
    pub fn is_z_free(&self) -> bool {
        self.terms.keys().all(|m| m.exp(Axis::Z) == 0)
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        if self.degree != other.degree {
            return Err(Error::MalformedPolynomial(format!(
                "cannot add polynomials of degree {} and {}",
                self.degree, other.degree
            )));
        }
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        Ok(out)
    }

    /// Evaluation at a rational point, used by the oracles in tests.
    pub fn eval(&self, point: [&Rational; 3]) -> Rational {
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for axis in Axis::ALL {
                for _ in 0..m.exp(axis) {
                    t *= point[axis.index()];
                }
            }
            acc += t;
        }
        acc
    }
}

impl Add for &HomogeneousPolynomial {
    type Output = HomogeneousPolynomial;

    /// # Panics
    /// If the degrees differ.
    fn add(self, rhs: Self) -> HomogeneousPolynomial {
        self.checked_add(rhs).expect("degree mismatch in polynomial sum")
    }
}

impl Sub for &HomogeneousPolynomial {
    type Output = HomogeneousPolynomial;

    fn sub(self, rhs: Self) -> HomogeneousPolynomial {
        self + &(-rhs)
    }
}

impl Neg for &HomogeneousPolynomial {
    type Output = HomogeneousPolynomial;

    fn neg(self) -> HomogeneousPolynomial {
        HomogeneousPolynomial {
            degree: self.degree,
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Mul for &HomogeneousPolynomial {
    type Output = HomogeneousPolynomial;

    fn mul(self, rhs: Self) -> HomogeneousPolynomial {
        let mut out = HomogeneousPolynomial::zero(self.degree + rhs.degree);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for HomogeneousPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms().enumerate() {
            let negative = c < &Rational::zero();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let magnitude = if negative { -c } else { c.clone() };
            if m.degree() == 0 {
                write!(f, "{}", format_rational(&magnitude))?;
            } else if magnitude.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{}*{m}", format_rational(&magnitude))?;
            }
        }
        Ok(())
    }
}
