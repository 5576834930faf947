//! Shared helpers for the integration tests: seeded random data and a
//! plain dense Gauss-Jordan oracle that shares no code with the library's
//! elimination.

#![allow(dead_code)]

use beltrami_core::exact::{rank_of_vectors, Rational};
use beltrami_core::poly::{CoefficientIndex, HomogeneousPolynomial, Monomial, PolynomialVectorField};
use beltrami_core::single::SigmaTriple;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn r(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// Small nonzero rational `n/d` with `|n| ≤ 9`, `1 ≤ d ≤ 5`.
pub fn nonzero_rational(g: &mut impl Rng) -> Rational {
    loop {
        let n: i64 = g.gen_range(-9..=9);
        if n != 0 {
            return r(n, g.gen_range(1..=5));
        }
    }
}

pub fn random_poly(g: &mut impl Rng, degree: u32, density: f64) -> HomogeneousPolynomial {
    let mut terms = Vec::new();
    for m in Monomial::all_of_degree(degree) {
        if g.gen_bool(density) {
            terms.push((m, nonzero_rational(g)));
        }
    }
    HomogeneousPolynomial::from_terms(degree, terms).unwrap()
}

pub fn random_field(g: &mut impl Rng, degree: u32, density: f64) -> PolynomialVectorField {
    PolynomialVectorField::new(
        random_poly(g, degree, density),
        random_poly(g, degree, density),
        random_poly(g, degree, density),
    )
    .unwrap()
}

/// Same-sign triple with entries of random magnitude.
pub fn same_sign_sigma(g: &mut impl Rng) -> SigmaTriple {
    let sign = if g.gen_bool(0.5) { Rational::one() } else { -Rational::one() };
    let v: Vec<Rational> = (0..3).map(|_| nonzero_rational(g).abs() * &sign).collect();
    SigmaTriple::new(v[0].clone(), v[1].clone(), v[2].clone()).unwrap()
}

/// Mixed-sign triple.
pub fn mixed_sign_sigma(g: &mut impl Rng) -> SigmaTriple {
    loop {
        let s = SigmaTriple::new(nonzero_rational(g), nonzero_rational(g), nonzero_rational(g)).unwrap();
        let v = s.values();
        if !(v.iter().all(Signed::is_positive) || v.iter().all(Signed::is_negative)) {
            return s;
        }
    }
}

/// Rank by textbook Gauss-Jordan over the rationals on a dense copy.
pub fn dense_rank(rows: &[Vec<Rational>]) -> usize {
    dense_rref(rows).1.len()
}

/// Reduced row echelon form and pivot columns.
#[allow(clippy::needless_range_loop)]
pub fn dense_rref(rows: &[Vec<Rational>]) -> (Vec<Vec<Rational>>, Vec<usize>) {
    let mut a: Vec<Vec<Rational>> = rows.to_vec();
    let ncols = a.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = Rational::one() / &a[r][c];
        for v in a[r].iter_mut() {
            *v *= &inv;
        }
        for i in 0..a.len() {
            if i != r && !a[i][c].is_zero() {
                let factor = a[i][c].clone();
                for j in 0..ncols {
                    let t = &factor * &a[r][j];
                    a[i][j] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    (a, pivots)
}

/// Kernel dimension by the dense oracle.
pub fn dense_nullity(rows: &[Vec<Rational>], ncols: usize) -> usize {
    ncols - dense_rank(rows)
}

pub fn fields_to_vectors(fields: &[PolynomialVectorField]) -> Vec<Vec<Rational>> {
    fields.iter().map(PolynomialVectorField::to_coefficients).collect()
}

/// Equal spans, by exact rank.
pub fn same_span(a: &[Vec<Rational>], b: &[Vec<Rational>], ncols: usize) -> bool {
    let ra = rank_of_vectors(a, ncols);
    let both: Vec<Vec<Rational>> = a.iter().chain(b).cloned().collect();
    ra == rank_of_vectors(b, ncols) && rank_of_vectors(&both, ncols) == ra
}

pub fn coefficient_count(degree: u32) -> usize {
    CoefficientIndex::all_of_degree(degree).len()
}

use std::collections::BTreeMap;

use beltrami_core::cascade::TruncatedFactor;
use beltrami_core::poly::{curl, div, dot, grad, scale_mul, Axis};
use beltrami_core::system::{EquationKind, LabeledSystem};

/// `(kind, block, monomial exponents) → (column → value)`.
pub type RowMap = BTreeMap<(EquationKind, u32, [u32; 3]), BTreeMap<usize, Rational>>;

pub fn rows_of(sys: &LabeledSystem) -> RowMap {
    sys.row_labels()
        .iter()
        .zip(sys.matrix().rows())
        .map(|(l, row)| ((l.equation.kind, l.equation.index, l.monomial.exps()), row.clone()))
        .collect()
}

/// Builds the window system column by column by applying the polynomial
/// operators to unit fields, independently of the library's assembler.
pub fn operator_oracle(f: &TruncatedFactor, lo: u32, hi: u32) -> RowMap {
    let labels: Vec<CoefficientIndex> = (lo..=hi).flat_map(CoefficientIndex::all_of_degree).collect();
    let mut out = RowMap::new();
    let mut put = |key: (EquationKind, u32, [u32; 3]), col: usize, v: &Rational| {
        if !v.is_zero() {
            let slot = out.entry(key).or_default().entry(col).or_insert_with(Rational::zero);
            *slot += v;
        }
    };
    let f0 = f.f0();
    for (col, idx) in labels.iter().enumerate() {
        let x = PolynomialVectorField::unit(idx);
        let n = idx.term_degree;
        let c = curl(&x);
        for a in Axis::ALL {
            for (m, v) in c.component(a).terms() {
                put((EquationKind::curl(a), n, m.exps()), col, v);
            }
        }
        for (m, v) in div(&x).terms() {
            put((EquationKind::Div, n, m.exps()), col, v);
        }
        if !f0.is_zero() && n < hi {
            for a in Axis::ALL {
                for (m, v) in x.scale(&f0).component(a).terms() {
                    put((EquationKind::curl(a), n + 1, m.exps()), col, &-v.clone());
                }
            }
        }
        for (j, fj) in f.components() {
            if n + 1 + j <= hi {
                let fx = scale_mul(fj, &x);
                for a in Axis::ALL {
                    for (m, v) in fx.component(a).terms() {
                        put((EquationKind::curl(a), n + 1 + j, m.exps()), col, &-v.clone());
                    }
                }
            }
            if n + j - 2 <= hi {
                for (m, v) in dot(&grad(fj), &x).terms() {
                    put((EquationKind::FirstIntegral, n + j - 2, m.exps()), col, v);
                }
            }
        }
    }
    out.retain(|_, row| {
        row.retain(|_, v| !v.is_zero());
        !row.is_empty()
    });
    out
}
