//! Planar harmonic polynomials `Re (x + iy)^i`, `Im (x + iy)^i` and the
//! curl-free, divergence-free fields `∇(p(x, y) z)` built from them.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::poly::{grad, HomogeneousPolynomial, Monomial, PolynomialVectorField};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlanarHarmonicPair {
    pub degree: u32,
    pub re_part: HomogeneousPolynomial,
    pub im_part: HomogeneousPolynomial,
}

/// Which member of the planar pair to lift.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HarmonicPart {
    Re,
    Im,
}

impl HarmonicPart {
    /// `1` selects the real part, `2` the imaginary part.
    pub fn from_index(which: u8) -> Option<Self> {
        match which {
            1 => Some(HarmonicPart::Re),
            2 => Some(HarmonicPart::Im),
            _ => None,
        }
    }
}

/// `cos(n π / 2)` for integer `n`.
fn cos_quarter_turns(n: u32) -> i64 {
    match n % 4 {
        0 => 1,
        2 => -1,
        _ => 0,
    }
}

/// `sin(n π / 2)` for integer `n`.
fn sin_quarter_turns(n: u32) -> i64 {
    match n % 4 {
        1 => 1,
        3 => -1,
        _ => 0,
    }
}

fn binomial(n: u32, k: u32) -> BigInt {
    let mut acc = BigInt::one();
    for j in 0..k {
        acc = acc * BigInt::from(n - j) / BigInt::from(j + 1);
    }
    acc
}

pub fn planar_harmonics(i: u32) -> Result<PlanarHarmonicPair> {
    if i == 0 {
        return Err(Error::DegreeTooSmall { min: 1, got: 0 });
    }
    let build = |trig: fn(u32) -> i64| {
        let terms = (0..=i).filter_map(|k| {
            let sign = trig(i - k);
            (sign != 0).then(|| {
                (Monomial::new(k, i - k, 0), Rational::from_integer(binomial(i, k) * sign))
            })
        });
        HomogeneousPolynomial::from_terms(i, terms).expect("all monomials have degree i")
    };
    Ok(PlanarHarmonicPair {
        degree: i,
        re_part: build(cos_quarter_turns),
        im_part: build(sin_quarter_turns),
    })
}

/// `∇(p · z)` where `p` is the chosen planar harmonic of degree `i`.
pub fn lifted_field(i: u32, part: HarmonicPart) -> Result<PolynomialVectorField> {
    let pair = planar_harmonics(i)?;
    let p = match part {
        HarmonicPart::Re => pair.re_part,
        HarmonicPart::Im => pair.im_part,
    };
    let z = HomogeneousPolynomial::term(Rational::one(), Monomial::new(0, 0, 1));
    Ok(grad(&(&p * &z)))
}

/// `λ1 X_i^1 + λ2 X_i^2`.
pub fn lifted_combination(i: u32, lambda1: &Rational, lambda2: &Rational) -> Result<PolynomialVectorField> {
    let re = lifted_field(i, HarmonicPart::Re)?;
    let im = lifted_field(i, HarmonicPart::Im)?;
    Ok(&re.scale(lambda1) + &im.scale(lambda2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, SparseMatrix};
    use crate::poly::{curl, div, dot, Axis};

    fn p(degree: u32, terms: &[(i64, [u32; 3])]) -> HomogeneousPolynomial {
        HomogeneousPolynomial::from_ints(degree, terms).unwrap()
    }

    #[test]
    fn degree_zero_is_rejected() {
        assert!(planar_harmonics(0).is_err());
    }

    #[test]
    fn low_degrees() {
        let h1 = planar_harmonics(1).unwrap();
        assert_eq!(h1.re_part, p(1, &[(1, [1, 0, 0])]));
        assert_eq!(h1.im_part, p(1, &[(1, [0, 1, 0])]));
        let h2 = planar_harmonics(2).unwrap();
        assert_eq!(h2.re_part, p(2, &[(1, [2, 0, 0]), (-1, [0, 2, 0])]));
        assert_eq!(h2.im_part, p(2, &[(2, [1, 1, 0])]));
        let h3 = planar_harmonics(3).unwrap();
        assert_eq!(h3.re_part, p(3, &[(1, [3, 0, 0]), (-3, [1, 2, 0])]));
        assert_eq!(h3.im_part, p(3, &[(3, [2, 1, 0]), (-1, [0, 3, 0])]));
    }

    #[test]
    fn harmonic_and_z_free_through_degree_ten() {
        for i in 1..=10 {
            let h = planar_harmonics(i).unwrap();
            for q in [&h.re_part, &h.im_part] {
                assert!(q.is_z_free());
                assert!(q.laplacian().is_zero(), "degree {i}");
            }
        }
    }

    #[test]
    fn pair_spans_planar_harmonic_space() {
        // Unknowns p^(k, i-k); rows are the coefficients of Δp.
        for i in 1..=10u32 {
            let mut m = SparseMatrix::new(i as usize + 1);
            if i >= 2 {
                for k in 0..=i - 2 {
                    // coefficient of x^k y^(i-2-k) in Δp
                    let from_x = (k + 2, (k + 2) * (k + 1));
                    let from_y = (k, (i - k) * (i - k - 1));
                    m.push_row([
                        (from_x.0 as usize, int(from_x.1 as i64)),
                        (from_y.0 as usize, int(from_y.1 as i64)),
                    ]);
                }
            }
            assert_eq!(m.ncols() - m.rank(), 2, "degree {i}");
            let h = planar_harmonics(i).unwrap();
            let as_vec = |q: &HomogeneousPolynomial| -> Vec<Rational> {
                (0..=i).map(|k| q.coeff(&Monomial::new(k, i - k, 0))).collect()
            };
            let (re, im) = (as_vec(&h.re_part), as_vec(&h.im_part));
            assert!(m.mul_vec(&re).iter().all(num_traits::Zero::is_zero));
            assert!(m.mul_vec(&im).iter().all(num_traits::Zero::is_zero));
            assert_eq!(crate::exact::rank_of_vectors(&[re, im], i as usize + 1), 2);
        }
    }

    #[test]
    fn lifted_cubic() {
        let x31 = lifted_field(3, HarmonicPart::Re).unwrap();
        assert_eq!(x31.x(), &p(3, &[(3, [2, 0, 1]), (-3, [0, 2, 1])]));
        assert_eq!(x31.y(), &p(3, &[(-6, [1, 1, 1])]));
        assert_eq!(x31.z(), &planar_harmonics(3).unwrap().re_part);
    }

    #[test]
    fn lifted_fields_solve_the_resonant_system() {
        for i in 1..=10u32 {
            let f2 = p(2, &[(1, [2, 0, 0]), (1, [0, 2, 0]), (-(i as i64), [0, 0, 2])]);
            for part in [HarmonicPart::Re, HarmonicPart::Im] {
                let x = lifted_field(i, part).unwrap();
                assert_eq!(x.degree(), i);
                assert!(curl(&x).is_zero());
                assert!(div(&x).is_zero());
                assert!(dot(&grad(&f2), &x).is_zero(), "degree {i}");
                assert!(x.component(Axis::Z).is_z_free());
            }
        }
    }
}
