//! Coupled window systems and the cascade analysis.

mod common;

use beltrami_core::cascade::{
    analyze, assemble_window, base_block_feasible, epsilon_window, satisfies_window, solve_window, window_kernel,
    CascadeOptions, TruncatedFactor, Verdict,
};
use beltrami_core::exact::{int, rank_of_vectors, Rational};
use beltrami_core::harmonic::lifted_combination;
use beltrami_core::poly::{HomogeneousPolynomial, PolynomialVectorField};
use beltrami_core::single::{kernel_single, SigmaTriple};
use beltrami_core::system::EquationKind;
use beltrami_core::Error;
use common::r;

fn sigma(a: i64, b: i64, c: i64) -> SigmaTriple {
    SigmaTriple::from_ints(a, b, c).unwrap()
}

fn poly(degree: u32, terms: &[(i64, [u32; 3])]) -> HomogeneousPolynomial {
    HomogeneousPolynomial::from_ints(degree, terms).unwrap()
}

fn field(degree: u32, x: &[(i64, [u32; 3])], y: &[(i64, [u32; 3])], z: &[(i64, [u32; 3])]) -> PolynomialVectorField {
    PolynomialVectorField::new(poly(degree, x), poly(degree, y), poly(degree, z)).unwrap()
}

fn counterexample() -> TruncatedFactor {
    TruncatedFactor::from_sigma(int(1), &sigma(1, 1, -1))
        .with_component(poly(3, &[(2, [1, 1, 1])]))
        .unwrap()
}

#[test]
fn window_assembly_matches_operator_oracle() {
    let mut g = common::rng(3);
    for trial in 0..12 {
        let s = common::mixed_sign_sigma(&mut g);
        let f0 = if trial % 2 == 0 { Rational::from_integer(0.into()) } else { common::nonzero_rational(&mut g) };
        let f = TruncatedFactor::from_sigma(f0, &s)
            .with_component(common::random_poly(&mut g, 3, 0.4))
            .unwrap()
            .with_component(common::random_poly(&mut g, 4, 0.3))
            .unwrap();
        let i = 1 + trial % 3;
        let d = trial % 4;
        let w = assemble_window(&f, i, d).unwrap();
        assert_eq!(common::rows_of(&w.system), common::operator_oracle(&f, i, i + d), "trial {trial}");
    }
}

#[test]
fn coupled_f0_zero_window_structure() {
    let i = 3;
    let f = TruncatedFactor::from_sigma(int(0), &sigma(1, 1, -3));
    let w = assemble_window(&f, i, 3).unwrap();
    let labels = w.unknowns();
    for (l, row) in w.system.row_labels().iter().zip(w.system.matrix().rows()) {
        let degrees: Vec<u32> = row.keys().map(|&c| labels[c].term_degree).collect();
        let m = l.equation.index;
        match l.equation.kind {
            // curl X_{i+3} = f2 X_i: the only block coupling two terms
            EquationKind::CurlX | EquationKind::CurlY | EquationKind::CurlZ if m == i + 3 => {
                assert!(degrees.iter().all(|&n| n == m || n == i));
            }
            _ => assert!(degrees.iter().all(|&n| n == m), "{l}"),
        }
    }
    let coupled = w
        .system
        .row_labels()
        .iter()
        .zip(w.system.matrix().rows())
        .filter(|(_, row)| {
            let ds: std::collections::BTreeSet<u32> = row.keys().map(|&c| labels[c].term_degree).collect();
            ds.len() > 1
        })
        .count();
    assert!(coupled > 0);
}

#[test]
fn coupled_f0_nonzero_window_structure() {
    let f = TruncatedFactor::from_sigma(int(1), &sigma(1, 1, -3));
    let w = assemble_window(&f, 3, 1).unwrap();
    let labels = w.unknowns();
    for (l, row) in w.system.row_labels().iter().zip(w.system.matrix().rows()) {
        let has_lower = row.keys().any(|&c| labels[c].term_degree == 3);
        let is_top_curl = l.equation.index == 4 && l.equation.kind != EquationKind::Div
            && l.equation.kind != EquationKind::FirstIntegral;
        if l.equation.index == 4 {
            assert_eq!(has_lower, is_top_curl, "{l}");
        }
    }
}

#[test]
fn cubic_couples_the_first_integral() {
    let f = counterexample();
    let w = assemble_window(&f, 1, 1).unwrap();
    let labels = w.unknowns();
    let fi2: Vec<_> = w
        .system
        .row_labels()
        .iter()
        .zip(w.system.matrix().rows())
        .filter(|(l, _)| l.equation.kind == EquationKind::FirstIntegral && l.equation.index == 2)
        .collect();
    assert!(!fi2.is_empty());
    assert!(fi2.iter().any(|(_, row)| row.keys().any(|&c| labels[c].term_degree == 1)));
}

#[test]
fn counterexample_pair() {
    let f = counterexample();
    let x1 = field(1, &[(-1, [0, 0, 1])], &[], &[(-1, [1, 0, 0])]);
    let x2 = field(2, &[(1, [1, 1, 0])], &[], &[(-1, [0, 1, 1])]);
    assert!(satisfies_window(&f, 1, &[x1.clone(), x2.clone()]));
    let w = window_kernel(&f, 1, 1).unwrap();
    assert_eq!(w.dim(), 1);
    assert_eq!(w.projection_dim(), 1);
    let found: Vec<Rational> = w.fields(0).iter().flat_map(PolynomialVectorField::to_coefficients).collect();
    let pair: Vec<Rational> = [x1, x2].iter().flat_map(PolynomialVectorField::to_coefficients).collect();
    let n = found.len();
    assert_eq!(rank_of_vectors(&[found, pair], n), 1);

    let report = analyze(&f, &CascadeOptions::default()).unwrap();
    assert_eq!(report.verdict, Verdict::ObstructionInconclusive);
    assert_eq!(report.risky.len(), 1);
    assert_eq!(report.risky[0].degree, 1);
}

#[test]
fn counterexample_does_not_depend_on_the_middle_eigenvalue() {
    for b in [r(1, 1), r(2, 1), r(-3, 1), r(1, 7)] {
        let s = SigmaTriple::new(int(1), b.clone(), int(-1)).unwrap();
        let f = TruncatedFactor::from_sigma(int(1), &s).with_component(poly(3, &[(2, [1, 1, 1])])).unwrap();
        assert_eq!(window_kernel(&f, 1, 1).unwrap().projection_dim(), 1, "σ2 = {b}");
    }
}

#[test]
fn epsilon_family() {
    let f = counterexample();
    let at = |eps: Rational| solve_window(&epsilon_window(&f, 1, 1, &eps).unwrap()).projection_dim();
    assert_eq!(
        epsilon_window(&f, 1, 1, &int(0)).unwrap().system.matrix(),
        assemble_window(&f.clone().without_component(3), 1, 1).unwrap().system.matrix()
    );
    assert_eq!(
        epsilon_window(&f, 1, 1, &int(1)).unwrap().system.matrix(),
        assemble_window(&f, 1, 1).unwrap().system.matrix()
    );
    assert_eq!(at(int(1)), 1);
    for k in 1..=4 {
        assert_eq!(at(r(1, 10i64.pow(k))), 0, "eps = 10^-{k}");
    }
    assert_eq!(at(int(0)), 0);
    // negated cubic: the mirrored pair (0, z, y), (0, xy, -xz) solves the window
    assert_eq!(at(int(-1)), 1);
    assert_eq!(at(int(2)), 0);
    let no_cubic = TruncatedFactor::from_sigma(int(1), &sigma(1, 1, -1));
    assert_eq!(epsilon_window(&no_cubic, 1, 1, &int(1)).unwrap_err(), Error::MissingCubicTerm);
}

#[test]
fn window_kernels_pass_substitution_and_project_into_single_kernel() {
    let mut g = common::rng(21);
    let cases = [
        (1, sigma(1, -1, 3), 1),
        (2, sigma(1, 1, -2), 0),
        (3, sigma(1, 1, -3), 0),
        (1, sigma(2, -2, 1), 0),
    ];
    for (i, s, f0) in cases {
        for extra in 0..3 {
            let mut f = TruncatedFactor::from_sigma(int(f0), &s);
            if extra > 0 {
                f = f.with_component(common::random_poly(&mut g, 3, 0.3)).unwrap();
            }
            for d in 0..=2 {
                let w = window_kernel(&f, i, d).unwrap();
                for k in 0..w.dim() {
                    assert!(satisfies_window(&f, i, &w.fields(k)));
                }
                let single = kernel_single(i, &s).vectors;
                let projected = w.block_vectors(i);
                let n = common::coefficient_count(i);
                let joint: Vec<Vec<Rational>> = single.iter().chain(&projected).cloned().collect();
                assert_eq!(rank_of_vectors(&joint, n), rank_of_vectors(&single, n));
            }
        }
    }
}

#[test]
fn deeper_windows_only_add_constraints() {
    let f = TruncatedFactor::from_sigma(int(0), &sigma(1, -1, 2));
    let dims: Vec<usize> = (0..=3).map(|d| window_kernel(&f, 1, d).unwrap().projection_dim()).collect();
    assert!(dims.windows(2).all(|w| w[1] <= w[0]), "{dims:?}");
}

#[test]
fn scaling_factor_and_sigma_together() {
    let s = sigma(1, -1, 4);
    for c in [r(3, 1), r(-2, 5)] {
        let f = TruncatedFactor::from_sigma(int(1), &s).with_component(poly(3, &[(1, [1, 1, 1])])).unwrap();
        let g = f.scaled(&c);
        assert_eq!(window_kernel(&f, 1, 2).unwrap().basis, window_kernel(&g, 1, 2).unwrap().basis);
    }
}

#[test]
fn lambda_data_is_infeasible() {
    let samples = [(1, 0), (0, 1), (1, 1), (2, -3), (-1, 5)];
    for i in 3..=6u32 {
        let f = TruncatedFactor::from_sigma(int(0), &sigma(1, 1, -i64::from(i)));
        let w = assemble_window(&f, i, 3).unwrap();
        for (a, b) in samples {
            let x = lifted_combination(i, &int(a), &int(b)).unwrap();
            assert!(!base_block_feasible(&w, &x), "degree {i}, λ = ({a}, {b})");
        }
        assert!(base_block_feasible(&w, &PolynomialVectorField::zero(i)));
    }
    // Without the coupling the lifted data is an honest solution.
    let f = TruncatedFactor::from_sigma(int(0), &sigma(1, 1, -3));
    let w = assemble_window(&f, 3, 2).unwrap();
    assert!(base_block_feasible(&w, &lifted_combination(3, &int(1), &int(2)).unwrap()));
}

#[test]
fn shifted_resonance_lives_in_the_top_block() {
    for i in 3..=6u32 {
        let f = TruncatedFactor::from_sigma(int(0), &sigma(1, 1, -i64::from(i + 3)));
        let w = window_kernel(&f, i, 3).unwrap();
        assert_eq!(w.block_dims, vec![0, 0, 0, 2], "degree {i}");
    }
}

#[test]
fn default_depths_follow_f0() {
    let f = TruncatedFactor::from_sigma(int(0), &sigma(1, 1, -3));
    let r0 = analyze(&f, &CascadeOptions::default()).unwrap();
    assert_eq!(r0.risky[0].depth, 3);
    let f = TruncatedFactor::from_sigma(int(2), &sigma(1, 1, -3));
    let r1 = analyze(&f, &CascadeOptions::default()).unwrap();
    assert_eq!(r1.risky[0].depth, 1);
    let custom = CascadeOptions { depth_zero: 2, depth_nonzero: 0, ..CascadeOptions::default() };
    assert_eq!(analyze(&f, &custom).unwrap().risky[0].depth, 0);
    assert_eq!(analyze(&f, &custom).unwrap().verdict, Verdict::ObstructionInconclusive);
}

#[test]
fn cap_applies_to_analysis() {
    let f = TruncatedFactor::from_sigma(int(0), &sigma(1, 1, -15));
    let err = analyze(&f, &CascadeOptions::default()).unwrap_err();
    assert_eq!(err, Error::DegreeCapExceeded { requested: 18, cap: 16 });
}

#[test]
fn report_serializes_with_string_rationals() {
    let r = analyze(&counterexample(), &CascadeOptions::default()).unwrap();
    let v = serde_json::to_value(&r).unwrap();
    assert_eq!(v["verdict"], "ObstructionInconclusive");
    assert_eq!(v["sigma"], serde_json::json!(["1", "1", "-1"]));
    assert_eq!(v["details"][0]["fields"].as_array().unwrap().len(), 2);
}
