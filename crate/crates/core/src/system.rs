//! Coefficient-matching assembly of the degree-graded Beltrami equations.
//!
//! With `X = Σ X_n` and `f = f_0 + Σ_{j≥2} f_j`, matching homogeneous
//! degrees gives, for each `m`,
//!
//! * curl row block `m`: `curl X_m − Σ_j f_j X_{m−1−j} = 0` (degree `m−1`),
//! * div row block `m`: `div X_m = 0` (degree `m−1`),
//! * first-integral block `m`: `Σ_{j≥2} ⟨∇f_j, X_{m+2−j}⟩ = 0` (degree `m+1`),
//!
//! where block `m` of the first integral is the one pairing `f_2` with `X_m`.
//! A window over `X_lo ..= X_hi` sets `X_n = 0` below `lo` and keeps exactly
//! the blocks `m ∈ [lo, hi]`; every other block mentions some `X_n` with
//! `n > hi`. Entries are produced straight from the exponent formulas of
//! the operators rather than by applying them to unit fields, so the
//! polynomial operators stay available as an independent check.

use std::cmp::Reverse;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::exact::{ConstraintMatrix, Rational};
use crate::poly::{Axis, CoefficientIndex, HomogeneousPolynomial, Monomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EquationKind {
    CurlX,
    CurlY,
    CurlZ,
    Div,
    FirstIntegral,
}

impl EquationKind {
    pub fn curl(axis: Axis) -> Self {
        [EquationKind::CurlX, EquationKind::CurlY, EquationKind::CurlZ][axis.index()]
    }
}

/// Equation block: `kind` applied at Taylor index `index`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct EquationTag {
    pub index: u32,
    pub kind: EquationKind,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RowLabel {
    pub equation: EquationTag,
    pub monomial: Monomial,
}

impl RowLabel {
    fn sort_key(&self) -> (EquationTag, Reverse<Monomial>) {
        (self.equation, Reverse(self.monomial))
    }
}

impl Ord for RowLabel {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl PartialOrd for RowLabel {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for RowLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}[{}] @ {}", self.equation.kind, self.equation.index, self.monomial)
    }
}

pub type LabeledSystem = ConstraintMatrix<CoefficientIndex, RowLabel>;

/// Factor components as seen by the assembler: degree -> `f_j` (degree 1
/// never appears). `f_0` is stored as a degree-0 polynomial.
pub(crate) type FactorTerms<'a> = BTreeMap<u32, &'a HomogeneousPolynomial>;

/// Unknown ordering for `X_lo ..= X_hi`: by term degree, then the
/// per-degree ordering of [`CoefficientIndex::all_of_degree`].
pub fn window_unknowns(lo: u32, hi: u32) -> Vec<CoefficientIndex> {
    (lo..=hi).flat_map(CoefficientIndex::all_of_degree).collect()
}

struct Accumulator {
    rows: BTreeMap<RowLabel, BTreeMap<usize, Rational>>,
}

impl Accumulator {
    fn add(&mut self, kind: EquationKind, index: u32, monomial: Monomial, col: usize, value: Rational) {
        if value.is_zero() {
            return;
        }
        let label = RowLabel { equation: EquationTag { index, kind }, monomial };
        *self
            .rows
            .entry(label)
            .or_default()
            .entry(col)
            .or_insert_with(Rational::zero) += value;
    }
}

fn small(k: u32) -> Rational {
    Rational::from_integer(k.into())
}

/// Assembles the window system over `X_lo ..= X_hi`. Rows that cancel
/// identically are dropped.
pub(crate) fn assemble(factor: &FactorTerms<'_>, lo: u32, hi: u32) -> LabeledSystem {
    let unknowns = window_unknowns(lo, hi);
    let gradients: BTreeMap<u32, [HomogeneousPolynomial; 3]> = factor
        .iter()
        .filter(|(j, _)| **j >= 2)
        .map(|(j, f)| (*j, Axis::ALL.map(|a| f.partial(a))))
        .collect();
    let mut acc = Accumulator { rows: BTreeMap::new() };

    for (col, idx) in unknowns.iter().enumerate() {
        let n = idx.term_degree;
        let c = idx.component;
        let k = idx.monomial;

        // curl X_n: component o is ∂_{o+1} V_{o+2} − ∂_{o+2} V_{o+1}.
        for o in Axis::ALL {
            let next = Axis::from_index((o.index() + 1) % 3);
            let after = Axis::from_index((o.index() + 2) % 3);
            if c == after {
                if let Some(m) = k.lowered(next) {
                    acc.add(EquationKind::curl(o), n, m, col, small(k.exp(next)));
                }
            } else if c == next {
                if let Some(m) = k.lowered(after) {
                    acc.add(EquationKind::curl(o), n, m, col, -small(k.exp(after)));
                }
            }
        }

        if let Some(m) = k.lowered(c) {
            acc.add(EquationKind::Div, n, m, col, small(k.exp(c)));
        }

        // −f_j X_n enters the curl block m = n + 1 + j.
        for (j, fj) in factor {
            let m = n + 1 + j;
            if m > hi {
                continue;
            }
            for (mu, coef) in fj.terms() {
                acc.add(EquationKind::curl(c), m, mu.mul(&k), col, -coef.clone());
            }
        }

        // ⟨∇f_j, X_n⟩ enters the first-integral block m = n + j − 2.
        for (j, grad_fj) in &gradients {
            let m = n + j - 2;
            if m > hi {
                continue;
            }
            for (nu, coef) in grad_fj[c.index()].terms() {
                acc.add(EquationKind::FirstIntegral, m, nu.mul(&k), col, coef.clone());
            }
        }
    }

    let mut system = ConstraintMatrix::new(unknowns);
    for (label, entries) in acc.rows {
        if entries.values().all(Zero::is_zero) {
            continue;
        }
        system.push_row(label, entries);
    }
    system
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    #[test]
    fn unknown_counts() {
        assert_eq!(window_unknowns(3, 3).len(), 30);
        assert_eq!(window_unknowns(3, 6).len(), 30 + 45 + 63 + 84);
    }

    #[test]
    fn row_labels_sort_by_block_kind_then_descending_monomial() {
        let tag = |index, kind| EquationTag { index, kind };
        let a = RowLabel { equation: tag(1, EquationKind::CurlX), monomial: Monomial::new(0, 0, 1) };
        let b = RowLabel { equation: tag(1, EquationKind::CurlX), monomial: Monomial::new(0, 1, 0) };
        let c = RowLabel { equation: tag(1, EquationKind::Div), monomial: Monomial::new(1, 0, 0) };
        let d = RowLabel { equation: tag(2, EquationKind::CurlX), monomial: Monomial::new(1, 0, 0) };
        let mut v = vec![d, c, a, b];
        v.sort();
        assert_eq!(v, vec![b, a, c, d]);
    }

    #[test]
    fn constant_factor_couples_neighbouring_curls() {
        let f0 = HomogeneousPolynomial::constant(int(1));
        let factor: FactorTerms = [(0, &f0)].into_iter().collect();
        let sys = assemble(&factor, 0, 1);
        // curl X_1 = X_0 has three rows, each with one X_1 pair and one X_0 entry
        let curl_rows = sys
            .row_labels()
            .iter()
            .filter(|l| l.equation.index == 1 && l.equation.kind != EquationKind::Div)
            .count();
        assert_eq!(curl_rows, 3);
    }
}
