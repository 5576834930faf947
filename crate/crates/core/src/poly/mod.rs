//! Homogeneous polynomials and polynomial vector fields in `x, y, z`, with
//! the first-order operators of the Beltrami system.

mod field;
mod json;
mod monomial;
mod polynomial;

pub use field::{curl, div, dot, grad, laplacian, scale_mul, PolynomialVectorField};
pub use monomial::{Axis, CoefficientIndex, Monomial};
pub use polynomial::HomogeneousPolynomial;

use crate::exact::Rational;

/// `s1 x^2 + s2 y^2 + s3 z^2`.
pub fn diagonal_quadric(s: [&Rational; 3]) -> HomogeneousPolynomial {
    HomogeneousPolynomial::from_terms(
        2,
        [
            (Monomial::new(2, 0, 0), s[0].clone()),
            (Monomial::new(0, 2, 0), s[1].clone()),
            (Monomial::new(0, 0, 2), s[2].clone()),
        ],
    )
    .expect("degree-2 monomials")
}
