//! The Bessel-type field with factor x² + y².

use beltrami_core::exact::{rat, Rational};
use beltrami_core::series::{
    bessel_series_coefficients, cartesian_term, solve_cylindrical_recurrence, verify_beltrami_cylindrical,
    BesselBranch,
};
use num_traits::{One, Zero};

/// `lead · (−1)^m / (36^m · m! · Π_{j=1..m} (j + ν))`, computed directly
/// rather than by term ratios.
fn closed_form(lead: Rational, nu: Rational, m: u32) -> Rational {
    let mut denom = Rational::one();
    for j in 1..=m {
        let jr = Rational::from_integer(j.into());
        denom *= Rational::from_integer(36.into()) * &jr * (&jr + &nu);
    }
    let sign = if m.is_multiple_of(2) { Rational::one() } else { -Rational::one() };
    lead * sign / denom
}

#[test]
fn recurrence_equals_closed_form_through_order_sixty() {
    let (u, v) = solve_cylindrical_recurrence(60).unwrap();
    for k in 0..=60u32 {
        let expected_v = if k % 6 == 0 { closed_form(Rational::one(), rat(-1, 3), k / 6) } else { Rational::zero() };
        let expected_u = if k % 6 == 3 { closed_form(rat(1, 4), rat(2, 3), k / 6) } else { Rational::zero() };
        assert_eq!(v.coeff(k), expected_v, "v_{k}");
        assert_eq!(u.coeff(k), expected_u, "u_{k}");
    }
    assert_eq!(u, bessel_series_coefficients(BesselBranch::PlusTwoThirds, 60));
    assert_eq!(v, bessel_series_coefficients(BesselBranch::MinusOneThird, 60));
}

#[test]
fn verification_report_at_several_orders() {
    for order in [6, 12, 30, 45] {
        let r = verify_beltrami_cylindrical(order).unwrap();
        assert!(r.all_ok(), "{r:?}");
    }
}

#[test]
fn cartesian_lift_is_polynomial_and_homogeneous() {
    let (u, v) = solve_cylindrical_recurrence(24).unwrap();
    for n in 0..=24 {
        let x = cartesian_term(&u, &v, n).expect("polynomial lift");
        assert_eq!(x.degree(), n);
        assert_eq!(x.is_zero(), u.coeff(n).is_zero() && v.coeff(n).is_zero());
    }
}
