use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::Zero;

use super::monomial::{Axis, CoefficientIndex, Monomial};
use super::polynomial::HomogeneousPolynomial;
use crate::error::{Error, Result};
use crate::exact::Rational;

/// Vector field whose three components are homogeneous of the same degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolynomialVectorField {
    degree: u32,
    components: [HomogeneousPolynomial; 3],
}

impl PolynomialVectorField {
    pub fn zero(degree: u32) -> Self {
        PolynomialVectorField {
            degree,
            components: std::array::from_fn(|_| HomogeneousPolynomial::zero(degree)),
        }
    }

    pub fn new(
        x: HomogeneousPolynomial,
        y: HomogeneousPolynomial,
        z: HomogeneousPolynomial,
    ) -> Result<Self> {
        let degree = x.degree();
        if y.degree() != degree || z.degree() != degree {
            return Err(Error::MalformedPolynomial(format!(
                "field components have degrees {}, {}, {}",
                x.degree(),
                y.degree(),
                z.degree()
            )));
        }
        Ok(PolynomialVectorField { degree, components: [x, y, z] })
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn x(&self) -> &HomogeneousPolynomial {
        &self.components[0]
    }

    pub fn y(&self) -> &HomogeneousPolynomial {
        &self.components[1]
    }

    pub fn z(&self) -> &HomogeneousPolynomial {
        &self.components[2]
    }

    pub fn component(&self, axis: Axis) -> &HomogeneousPolynomial {
        &self.components[axis.index()]
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(HomogeneousPolynomial::is_zero)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        PolynomialVectorField {
            degree: self.degree,
            components: std::array::from_fn(|i| self.components[i].scale(c)),
        }
    }

    fn map(&self, f: impl Fn(&HomogeneousPolynomial) -> HomogeneousPolynomial) -> Self {
        let components: [HomogeneousPolynomial; 3] = std::array::from_fn(|i| f(&self.components[i]));
        PolynomialVectorField { degree: components[0].degree(), components }
    }

    /// Coefficient of the unknown `idx` (its `term_degree` is ignored).
    pub fn coefficient(&self, idx: &CoefficientIndex) -> Rational {
        self.component(idx.component).coeff(&idx.monomial)
    }

    /// Flattens the field against the standard unknown ordering of its degree.
    pub fn to_coefficients(&self) -> Vec<Rational> {
        CoefficientIndex::all_of_degree(self.degree)
            .iter()
            .map(|idx| self.coefficient(idx))
            .collect()
    }

    /// Rebuilds the degree-`degree` part of a labeled coefficient vector;
    /// entries whose label has another term degree are skipped.
    pub fn from_labeled(degree: u32, labels: &[CoefficientIndex], values: &[Rational]) -> Self {
        assert_eq!(labels.len(), values.len());
        let mut field = Self::zero(degree);
        for (idx, v) in labels.iter().zip(values) {
            if idx.term_degree == degree && !v.is_zero() {
                field.components[idx.component.index()].add_term(idx.monomial, v.clone());
            }
        }
        field
    }

    /// Unit field with a single coefficient set to one.
    pub fn unit(idx: &CoefficientIndex) -> Self {
        Self::from_labeled(idx.term_degree, std::slice::from_ref(idx), &[Rational::from_integer(1.into())])
    }
}

/// `∇g`. A degree-0 input yields the zero field of degree 0.
pub fn grad(g: &HomogeneousPolynomial) -> PolynomialVectorField {
    let components: [HomogeneousPolynomial; 3] = std::array::from_fn(|i| g.partial(Axis::from_index(i)));
    PolynomialVectorField { degree: g.degree().saturating_sub(1), components }
}

/// `curl v = (∂y v_z − ∂z v_y, ∂z v_x − ∂x v_z, ∂x v_y − ∂y v_x)`.
pub fn curl(v: &PolynomialVectorField) -> PolynomialVectorField {
    let d = |comp: Axis, wrt: Axis| v.component(comp).partial(wrt);
    let components = [
        &d(Axis::Z, Axis::Y) - &d(Axis::Y, Axis::Z),
        &d(Axis::X, Axis::Z) - &d(Axis::Z, Axis::X),
        &d(Axis::Y, Axis::X) - &d(Axis::X, Axis::Y),
    ];
    PolynomialVectorField { degree: v.degree.saturating_sub(1), components }
}

pub fn div(v: &PolynomialVectorField) -> HomogeneousPolynomial {
    let parts: Vec<HomogeneousPolynomial> =
        Axis::ALL.iter().map(|&a| v.component(a).partial(a)).collect();
    &(&parts[0] + &parts[1]) + &parts[2]
}

pub fn laplacian(g: &HomogeneousPolynomial) -> HomogeneousPolynomial {
    g.laplacian()
}

/// Pointwise scalar product, of degree `deg u + deg v`.
pub fn dot(u: &PolynomialVectorField, v: &PolynomialVectorField) -> HomogeneousPolynomial {
    let mut acc = HomogeneousPolynomial::zero(u.degree + v.degree);
    for axis in Axis::ALL {
        acc = &acc + &(u.component(axis) * v.component(axis));
    }
    acc
}

/// Componentwise product `g · v`.
pub fn scale_mul(g: &HomogeneousPolynomial, v: &PolynomialVectorField) -> PolynomialVectorField {
    let components: [HomogeneousPolynomial; 3] = std::array::from_fn(|i| g * &v.components[i]);
    PolynomialVectorField { degree: g.degree() + v.degree, components }
}

impl PolynomialVectorField {
    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        if self.degree != other.degree {
            return Err(Error::MalformedPolynomial(format!(
                "cannot add fields of degree {} and {}",
                self.degree, other.degree
            )));
        }
        Ok(PolynomialVectorField {
            degree: self.degree,
            components: std::array::from_fn(|i| &self.components[i] + &other.components[i]),
        })
    }

    /// Relabels variables and components by the axis permutation `perm`
    /// (new axis `perm[i]` takes the role of old axis `i`).
    pub fn permute_axes(&self, perm: [usize; 3]) -> Self {
        let permute_poly = |p: &HomogeneousPolynomial| {
            let terms = p.terms().map(|(m, c)| {
                let mut e = [0; 3];
                for i in 0..3 {
                    e[perm[i]] = m.exps()[i];
                }
                (Monomial(e), c.clone())
            });
            HomogeneousPolynomial::from_terms(p.degree(), terms).expect("degree preserved")
        };
        let mut out = Self::zero(self.degree);
        for (i, &target) in perm.iter().enumerate() {
            out.components[target] = permute_poly(&self.components[i]);
        }
        out
    }
}

impl Add for &PolynomialVectorField {
    type Output = PolynomialVectorField;

    /// # Panics
    /// If the degrees differ.
    fn add(self, rhs: Self) -> PolynomialVectorField {
        self.checked_add(rhs).expect("degree mismatch in field sum")
    }
}

impl Sub for &PolynomialVectorField {
    type Output = PolynomialVectorField;

    fn sub(self, rhs: Self) -> PolynomialVectorField {
        self + &(-rhs)
    }
}

impl Neg for &PolynomialVectorField {
    type Output = PolynomialVectorField;

    fn neg(self) -> PolynomialVectorField {
        self.map(|p| -p)
    }
}

impl fmt::Display for PolynomialVectorField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.components[0], self.components[1], self.components[2])
    }
}
