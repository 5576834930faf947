//! Sparse fraction-free elimination over the integers.
//!
//! Every rational row is first cleared of denominators, so the whole
//! reduction runs on `BigInt` rows. A combination step
//! `row <- p * row - a * pivot` is followed by division by the row content
//! (gcd of its entries), which keeps coefficients small without ever
//! introducing fractions.
//!
//! Columns are processed in index order, so the pivot columns are the
//! lexicographically first maximal independent set of columns and the
//! reduced form is the unique RREF up to row scaling. Row choice within a
//! column (fewest nonzeros, then arrival order) only affects speed.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct IntRow {
    /// Sorted by column, no zero values.
    entries: Vec<(usize, BigInt)>,
}

impl IntRow {
    pub(crate) fn from_rationals<'a>(row: impl IntoIterator<Item = (usize, &'a Rational)>) -> Self {
        let items: Vec<(usize, &Rational)> = row.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        let lcm = items
            .iter()
            .fold(BigInt::one(), |acc, (_, v)| acc.lcm(v.denom()));
        let mut entries: Vec<(usize, BigInt)> = items
            .into_iter()
            .map(|(c, v)| (c, v.numer() * (&lcm / v.denom())))
            .collect();
        entries.sort_by_key(|(c, _)| *c);
        let mut row = IntRow { entries };
        row.make_primitive();
        row
    }

    fn leading_col(&self) -> Option<usize> {
        self.entries.first().map(|(c, _)| *c)
    }

    fn get(&self, col: usize) -> Option<&BigInt> {
        self.entries
            .binary_search_by_key(&col, |(c, _)| *c)
            .ok()
            .map(|idx| &self.entries[idx].1)
    }

    fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    fn make_primitive(&mut self) {
        let mut content = BigInt::zero();
        for (_, v) in &self.entries {
            content = content.gcd(v);
            if content.is_one() {
                return;
            }
        }
        if content.is_zero() || content.is_one() {
            return;
        }
        for (_, v) in &mut self.entries {
            *v /= &content;
        }
    }

    /// Returns `pivot_value * self - self[col] * pivot`, made primitive.
    /// `pivot` must have a nonzero entry at `col`.
    fn eliminate(&self, pivot: &IntRow, col: usize) -> IntRow {
        let factor = match self.get(col) {
            Some(v) => v.clone(),
            None => return self.clone(),
        };
        let pivot_value = pivot.get(col).expect("pivot row lacks its pivot column");
        let g = factor.gcd(pivot_value);
        let mul_self = pivot_value / &g;
        let mul_pivot = &factor / &g;

        let mut out = Vec::with_capacity(self.entries.len() + pivot.entries.len());
        let (mut i, mut j) = (0, 0);
        while i < self.entries.len() || j < pivot.entries.len() {
            let next_self = self.entries.get(i).map(|(c, _)| *c);
            let next_pivot = pivot.entries.get(j).map(|(c, _)| *c);
            let (c, v) = match (next_self, next_pivot) {
                (Some(a), Some(b)) if a == b => {
                    let v = &mul_self * &self.entries[i].1 - &mul_pivot * &pivot.entries[j].1;
                    i += 1;
                    j += 1;
                    (a, v)
                }
                (Some(a), Some(b)) if a < b => {
                    i += 1;
                    (a, &mul_self * &self.entries[i - 1].1)
                }
                (Some(a), None) => {
                    i += 1;
                    (a, &mul_self * &self.entries[i - 1].1)
                }
                (_, Some(b)) => {
                    j += 1;
                    (b, -(&mul_pivot * &pivot.entries[j - 1].1))
                }
                (None, None) => unreachable!(),
            };
            if !v.is_zero() {
                out.push((c, v));
            }
        }
        let mut row = IntRow { entries: out };
        row.make_primitive();
        row
    }
}

/// Row echelon form: pivot rows sorted by their (strictly increasing)
/// leading column.
pub(crate) struct Echelon {
    pub(crate) ncols: usize,
    pub(crate) rows: Vec<IntRow>,
}

pub(crate) fn echelon(rows: Vec<IntRow>, ncols: usize) -> Echelon {
    let mut buckets: BTreeMap<usize, Vec<IntRow>> = BTreeMap::new();
    for row in rows {
        if let Some(c) = row.leading_col() {
            buckets.entry(c).or_default().push(row);
        }
    }
    let mut pivots = Vec::new();
    while let Some((col, mut group)) = buckets.pop_first() {
        let best = group
            .iter()
            .enumerate()
            .min_by_key(|(idx, r)| (r.entries.len(), *idx))
            .map(|(idx, _)| idx)
            .expect("bucket is never empty");
        let pivot = group.swap_remove(best);
        for row in group {
            let reduced = row.eliminate(&pivot, col);
            if let Some(c) = reduced.leading_col() {
                buckets.entry(c).or_default().push(reduced);
            }
        }
        pivots.push(pivot);
    }
    Echelon { ncols, rows: pivots }
}

impl Echelon {
    pub(crate) fn rank(&self) -> usize {
        self.rows.len()
    }

    pub(crate) fn pivot_cols(&self) -> Vec<usize> {
        self.rows
            .iter()
            .map(|r| r.leading_col().expect("pivot rows are nonzero"))
            .collect()
    }

    /// Clears every pivot column above its pivot, giving the reduced form.
    pub(crate) fn reduce(mut self) -> Echelon {
        for k in (0..self.rows.len()).rev() {
            let col = self.rows[k].leading_col().expect("pivot rows are nonzero");
            let (upper, lower) = self.rows.split_at_mut(k);
            let pivot = &lower[0];
            for row in upper.iter_mut() {
                if row.get(col).is_some() {
                    *row = row.eliminate(pivot, col);
                    debug_assert!(!row.is_zero());
                }
            }
        }
        self
    }

    /// Kernel basis read off a reduced echelon form: one vector per free
    /// column, in increasing free-column order.
    pub(crate) fn kernel_from_reduced(&self) -> Vec<Vec<Rational>> {
        let pivot_cols = self.pivot_cols();
        let mut is_pivot = vec![false; self.ncols];
        for &c in &pivot_cols {
            is_pivot[c] = true;
        }
        let free: Vec<usize> = (0..self.ncols).filter(|&c| !is_pivot[c]).collect();
        let mut slot = vec![usize::MAX; self.ncols];
        for (k, &c) in free.iter().enumerate() {
            slot[c] = k;
        }
        let mut basis: Vec<Vec<Rational>> = free
            .iter()
            .map(|&c| {
                let mut v = vec![Rational::zero(); self.ncols];
                v[c] = Rational::one();
                v
            })
            .collect();
        for (row, &pc) in self.rows.iter().zip(&pivot_cols) {
            let pivot_value = row.get(pc).expect("pivot entry");
            for (c, v) in &row.entries {
                if *c == pc {
                    continue;
                }
                debug_assert!(!is_pivot[*c]);
                basis[slot[*c]][pc] = -Rational::new(v.clone(), pivot_value.clone());
            }
        }
        for v in &mut basis {
            normalize_leading(v);
        }
        basis
    }
}

/// Scales `v` so its first nonzero entry is 1. Zero vectors are left alone.
pub(crate) fn normalize_leading(v: &mut [Rational]) {
    if let Some(lead) = v.iter().find(|x| !x.is_zero()).cloned() {
        if lead.is_one() {
            return;
        }
        for x in v.iter_mut() {
            if !x.is_zero() {
                *x = &*x / &lead;
            }
        }
    }
}
