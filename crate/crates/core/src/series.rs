//! Power-series check of an explicit Beltrami field whose factor
//! `f = x² + y²` has the whole `z`-axis as critical set.
//!
//! In cylindrical coordinates the field is `X = u(r) e_φ + v(r) e_z` and the
//! equations reduce to
//!
//! ```text
//! −v′ = r² u,    u′ + u / r = r² v,
//! ```
//!
//! whose regular solution with `v(0) = 1` is a pair of Bessel functions of
//! `r³/3` (orders `2/3` for `u`, `−1/3` for `v`).

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{rat, Rational};
use crate::poly::{curl, div, dot, grad, scale_mul, Axis, HomogeneousPolynomial, PolynomialVectorField};

/// `Σ_{k ≤ order} c_k r^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RadialSeries {
    coeffs: Vec<Rational>,
}

impl RadialSeries {
    pub fn zero(order: u32) -> Self {
        RadialSeries { coeffs: vec![Rational::zero(); order as usize + 1] }
    }

    pub fn order(&self) -> u32 {
        self.coeffs.len() as u32 - 1
    }

    /// Coefficient of `r^k`; zero beyond the order.
    pub fn coeff(&self, k: u32) -> Rational {
        self.coeffs.get(k as usize).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Exponents with a nonzero coefficient.
    pub fn support(&self) -> impl Iterator<Item = u32> + '_ {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, _)| k as u32)
    }

    fn set(&mut self, k: u32, c: Rational) {
        if let Some(slot) = self.coeffs.get_mut(k as usize) {
            *slot = c;
        }
    }
}

/// `(u, v)` through `r^order`, from `u_{k+3} = v_k/(k+4)`,
/// `v_{k+3} = −u_k/(k+3)`, `v_0 = 1`, every other initial coefficient zero.
pub fn solve_cylindrical_recurrence(order: u32) -> Result<(RadialSeries, RadialSeries)> {
    if order < 3 {
        return Err(Error::DegreeTooSmall { min: 3, got: order });
    }
    let mut u = RadialSeries::zero(order);
    let mut v = RadialSeries::zero(order);
    v.set(0, Rational::one());
    for k in 0..=order - 3 {
        let next_u = v.coeff(k) / Rational::from_integer((k + 4).into());
        let next_v = -u.coeff(k) / Rational::from_integer((k + 3).into());
        u.set(k + 3, next_u);
        v.set(k + 3, next_v);
    }
    Ok((u, v))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BesselBranch {
    /// The `e_φ` component, order `2/3`.
    PlusTwoThirds,
    /// The `e_z` component, order `−1/3`.
    MinusOneThird,
}

/// Closed-form component `r Γ(2/3) J_ν(r³/3) / 6^{1/3}` expanded in `r`.
///
/// With `t = r³/3` the series of `J_ν` has term ratio
/// `−(t/2)² / ((m+1)(m+1+ν))`, i.e. `−r⁶ / (36 (m+1)(m+1+ν))`, and the Gamma
/// prefactor makes the leading coefficient `1` for `ν = −1/3` and `1/4`
/// (at `r³`) for `ν = 2/3`.
pub fn bessel_series_coefficients(branch: BesselBranch, order: u32) -> RadialSeries {
    let (lead_exp, lead, nu) = match branch {
        BesselBranch::PlusTwoThirds => (3, rat(1, 4), rat(2, 3)),
        BesselBranch::MinusOneThird => (0, Rational::one(), rat(-1, 3)),
    };
    let mut out = RadialSeries::zero(order);
    let mut c = lead;
    let mut m = 0u32;
    let mut k = lead_exp;
    while k <= order {
        out.set(k, c.clone());
        let m1 = Rational::from_integer((m + 1).into());
        c = -c / (Rational::from_integer(36.into()) * &m1 * (&m1 + &nu));
        m += 1;
        k += 6;
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeriesReport {
    pub order: u32,
    /// Recurrence solution matches the closed-form values at low order and
    /// vanishes off the expected exponents.
    pub recurrence_ok: bool,
    pub bessel_match_ok: bool,
    /// `−v′ − r² u`, `u′ + u/r − r² v` and the trivially vanishing radial
    /// curl and divergence components, coefficient by coefficient.
    pub cylindrical_ok: bool,
    /// The Cartesian field is polynomial and satisfies `curl X = (x²+y²) X`,
    /// `div X = 0` degree by degree.
    pub cartesian_ok: bool,
    /// `∇f` vanishes on the whole `z`-axis.
    pub critical_axis_ok: bool,
    pub first_integral_ok: bool,
}

impl SeriesReport {
    pub fn all_ok(&self) -> bool {
        self.recurrence_ok
            && self.bessel_match_ok
            && self.cylindrical_ok
            && self.cartesian_ok
            && self.critical_axis_ok
            && self.first_integral_ok
    }
}

fn int(k: u32) -> Rational {
    Rational::from_integer(k.into())
}

/// Coefficient of `r^e` in `−v′ − r² u`.
fn residual_axial(u: &RadialSeries, v: &RadialSeries, e: u32) -> Rational {
    let dv = int(e + 1) * v.coeff(e + 1);
    let r2u = if e >= 2 { u.coeff(e - 2) } else { Rational::zero() };
    -dv - r2u
}

/// Coefficient of `r^e` in `u′ + u/r − r² v`.
fn residual_angular(u: &RadialSeries, v: &RadialSeries, e: u32) -> Rational {
    let lhs = int(e + 2) * u.coeff(e + 1);
    let r2v = if e >= 2 { v.coeff(e - 2) } else { Rational::zero() };
    lhs - r2v
}

/// `(x² + y²)^p`.
fn planar_radius_power(p: u32) -> HomogeneousPolynomial {
    let rho = HomogeneousPolynomial::from_ints(2, &[(1, [2, 0, 0]), (1, [0, 2, 0])]).expect("quadric");
    (0..p).fold(HomogeneousPolynomial::one(), |acc, _| &acc * &rho)
}

/// Degree-`n` part of `(u(r)/r)(−y, x, 0) + v(r)(0, 0, 1)`, or `None` if a
/// needed power of `r` is odd (the lift would not be polynomial).
pub fn cartesian_term(u: &RadialSeries, v: &RadialSeries, n: u32) -> Option<PolynomialVectorField> {
    let mut out = PolynomialVectorField::zero(n);
    let un = u.coeff(n);
    if !un.is_zero() {
        if n == 0 || !(n - 1).is_multiple_of(2) {
            return None;
        }
        let rot = PolynomialVectorField::new(
            HomogeneousPolynomial::from_ints(1, &[(-1, [0, 1, 0])]).expect("linear"),
            HomogeneousPolynomial::from_ints(1, &[(1, [1, 0, 0])]).expect("linear"),
            HomogeneousPolynomial::zero(1),
        )
        .expect("degree-1 field");
        out = &out + &scale_mul(&planar_radius_power((n - 1) / 2).scale(&un), &rot);
    }
    let vn = v.coeff(n);
    if !vn.is_zero() {
        if !n.is_multiple_of(2) {
            return None;
        }
        let ez = PolynomialVectorField::new(
            HomogeneousPolynomial::zero(0),
            HomogeneousPolynomial::zero(0),
            HomogeneousPolynomial::one(),
        )
        .expect("degree-0 field");
        out = &out + &scale_mul(&planar_radius_power(n / 2).scale(&vn), &ez);
    }
    Some(out)
}

pub fn verify_beltrami_cylindrical(order: u32) -> Result<SeriesReport> {
    if order < 6 {
        return Err(Error::DegreeTooSmall { min: 6, got: order });
    }
    // Three extra orders so that no residual through `order` is an
    // artifact of truncation.
    let work = order + 3;
    let (u, v) = solve_cylindrical_recurrence(work)?;

    let recurrence_ok = u.coeff(3) == rat(1, 4)
        && v.coeff(6) == rat(-1, 24)
        && u.support().all(|k| k % 6 == 3)
        && v.support().all(|k| k % 6 == 0)
        && v.coeff(0).is_one();

    let bessel_match_ok = u == bessel_series_coefficients(BesselBranch::PlusTwoThirds, work)
        && v == bessel_series_coefficients(BesselBranch::MinusOneThird, work);

    // X^r = 0 and nothing depends on φ or z, so the radial curl component
    // (1/r)∂_φ X^z − ∂_z X^φ and the divergence (1/r)∂_φ X^φ + ∂_z X^z are
    // identically zero; the two remaining components carry the content.
    let cylindrical_ok = (0..=order)
        .all(|e| residual_axial(&u, &v, e).is_zero() && residual_angular(&u, &v, e).is_zero());

    let f = HomogeneousPolynomial::from_ints(2, &[(1, [2, 0, 0]), (1, [0, 2, 0])]).expect("quadric");
    let grad_f = grad(&f);
    let terms: Option<Vec<PolynomialVectorField>> = (0..=work).map(|n| cartesian_term(&u, &v, n)).collect();
    let (cartesian_ok, first_integral_ok) = match &terms {
        None => (false, false),
        Some(x) => {
            let equations = (0..=order).all(|m| {
                let xm = &x[m as usize];
                let mut residual = curl(xm);
                if m >= 3 {
                    residual = &residual - &scale_mul(&f, &x[m as usize - 3]);
                }
                residual.is_zero() && div(xm).is_zero()
            });
            let fi = x.iter().all(|xm| dot(&grad_f, xm).is_zero());
            (equations, fi)
        }
    };

    let critical_axis_ok = Axis::ALL.iter().all(|&a| {
        grad_f
            .component(a)
            .terms()
            .all(|(m, _)| m.exp(Axis::X) + m.exp(Axis::Y) > 0)
    });

    Ok(SeriesReport {
        order,
        recurrence_ok,
        bessel_match_ok,
        cylindrical_ok,
        cartesian_ok,
        critical_axis_ok,
        first_integral_ok,
    })
}
