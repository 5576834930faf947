use std::collections::BTreeMap;

use num_traits::Zero;

use super::elimination::{echelon, IntRow};
use super::rational::Rational;

/// Sparse rational matrix stored row by row; only nonzero entries are kept.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SparseMatrix {
    ncols: usize,
    rows: Vec<BTreeMap<usize, Rational>>,
}

impl SparseMatrix {
    pub fn new(ncols: usize) -> Self {
        SparseMatrix { ncols, rows: Vec::new() }
    }

    pub fn from_dense(rows: &[Vec<Rational>]) -> Self {
        let ncols = rows.first().map_or(0, Vec::len);
        let mut m = SparseMatrix::new(ncols);
        for r in rows {
            assert_eq!(r.len(), ncols, "ragged dense matrix");
            m.push_row(r.iter().cloned().enumerate());
        }
        m
    }

    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        SparseMatrix { ncols, rows: vec![BTreeMap::new(); nrows] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = SparseMatrix::new(n);
        for i in 0..n {
            m.push_row([(i, Rational::from_integer(1.into()))]);
        }
        m
    }

    /// Appends a row, summing duplicate columns and dropping zeros.
    pub fn push_row(&mut self, entries: impl IntoIterator<Item = (usize, Rational)>) {
        let mut row: BTreeMap<usize, Rational> = BTreeMap::new();
        for (c, v) in entries {
            assert!(c < self.ncols, "column {c} out of range ({} columns)", self.ncols);
            *row.entry(c).or_insert_with(Rational::zero) += v;
        }
        row.retain(|_, v| !v.is_zero());
        self.rows.push(row);
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn row(&self, r: usize) -> &BTreeMap<usize, Rational> {
        &self.rows[r]
    }

    pub fn rows(&self) -> impl Iterator<Item = &BTreeMap<usize, Rational>> {
        self.rows.iter()
    }

    pub fn get(&self, r: usize, c: usize) -> Rational {
        self.rows[r].get(&c).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(BTreeMap::len).sum()
    }

    pub fn to_dense(&self) -> Vec<Vec<Rational>> {
        self.rows
            .iter()
            .map(|row| {
                let mut dense = vec![Rational::zero(); self.ncols];
                for (c, v) in row {
                    dense[*c] = v.clone();
                }
                dense
            })
            .collect()
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.ncols);
        self.rows
            .iter()
            .map(|row| row.iter().fold(Rational::zero(), |acc, (c, a)| acc + a * &v[*c]))
            .collect()
    }

    /// Copy with columns restricted to `cols` (renumbered in the given order).
    pub fn select_columns(&self, cols: &[usize]) -> SparseMatrix {
        let mut position = vec![None; self.ncols];
        for (new, &old) in cols.iter().enumerate() {
            position[old] = Some(new);
        }
        let mut out = SparseMatrix::new(cols.len());
        for row in &self.rows {
            out.push_row(
                row.iter()
                    .filter_map(|(c, v)| position[*c].map(|n| (n, v.clone()))),
            );
        }
        out
    }

    /// `[self | rhs]` with `rhs` as one extra column.
    pub fn augment(&self, rhs: &[Rational]) -> SparseMatrix {
        assert_eq!(rhs.len(), self.nrows());
        let mut out = SparseMatrix::new(self.ncols + 1);
        for (row, b) in self.rows.iter().zip(rhs) {
            out.push_row(
                row.iter()
                    .map(|(c, v)| (*c, v.clone()))
                    .chain(std::iter::once((self.ncols, b.clone()))),
            );
        }
        out
    }

    pub fn vstack(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.ncols, other.ncols);
        let mut out = self.clone();
        out.rows.extend(other.rows.iter().cloned());
        out
    }

    fn int_rows(&self) -> Vec<IntRow> {
        self.rows
            .iter()
            .map(|row| IntRow::from_rationals(row.iter().map(|(c, v)| (*c, v))))
            .collect()
    }

    pub fn rank(&self) -> usize {
        echelon(self.int_rows(), self.ncols).rank()
    }

    /// Pivot columns of the reduced row echelon form, ascending.
    pub fn pivot_columns(&self) -> Vec<usize> {
        echelon(self.int_rows(), self.ncols).pivot_cols()
    }

    /// Canonical nullspace basis: one vector per non-pivot column of the
    /// RREF, each scaled so its first nonzero entry is 1.
    pub fn kernel(&self) -> Vec<Vec<Rational>> {
        echelon(self.int_rows(), self.ncols)
            .reduce()
            .kernel_from_reduced()
    }

    /// Whether `self * v = rhs` has a solution, by comparing ranks.
    pub fn is_consistent(&self, rhs: &[Rational]) -> bool {
        self.rank() == self.augment(rhs).rank()
    }
}

/// Rank of the matrix whose rows are `vectors`.
pub fn rank_of_vectors(vectors: &[Vec<Rational>], ncols: usize) -> usize {
    let mut m = SparseMatrix::new(ncols);
    for v in vectors {
        m.push_row(v.iter().cloned().enumerate());
    }
    m.rank()
}

/// A linear system with labeled unknowns (columns) and labeled equations (rows).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstraintMatrix<C, R> {
    matrix: SparseMatrix,
    col_labels: Vec<C>,
    row_labels: Vec<R>,
}

impl<C: Clone, R: Clone> ConstraintMatrix<C, R> {
    pub fn new(col_labels: Vec<C>) -> Self {
        ConstraintMatrix {
            matrix: SparseMatrix::new(col_labels.len()),
            col_labels,
            row_labels: Vec::new(),
        }
    }

    pub fn from_parts(matrix: SparseMatrix, col_labels: Vec<C>, row_labels: Vec<R>) -> Self {
        assert_eq!(matrix.ncols(), col_labels.len(), "column label count mismatch");
        assert_eq!(matrix.nrows(), row_labels.len(), "row label count mismatch");
        ConstraintMatrix { matrix, col_labels, row_labels }
    }

    pub fn push_row(&mut self, label: R, entries: impl IntoIterator<Item = (usize, Rational)>) {
        self.matrix.push_row(entries);
        self.row_labels.push(label);
    }

    pub fn matrix(&self) -> &SparseMatrix {
        &self.matrix
    }

    pub fn rows(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn cols(&self) -> usize {
        self.matrix.ncols()
    }

    pub fn col_labels(&self) -> &[C] {
        &self.col_labels
    }

    pub fn row_labels(&self) -> &[R] {
        &self.row_labels
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn kernel_basis(&self) -> KernelBasis<C> {
        KernelBasis {
            vectors: self.matrix.kernel(),
            col_labels: self.col_labels.clone(),
        }
    }

    /// Rows whose label satisfies `keep`, with the same columns.
    pub fn filter_rows(&self, mut keep: impl FnMut(&R) -> bool) -> Self {
        let mut out = ConstraintMatrix::new(self.col_labels.clone());
        for (r, label) in self.row_labels.iter().enumerate() {
            if keep(label) {
                out.push_row(
                    label.clone(),
                    self.matrix.row(r).iter().map(|(c, v)| (*c, v.clone())),
                );
            }
        }
        out
    }
}

pub fn rank<C: Clone, R: Clone>(m: &ConstraintMatrix<C, R>) -> usize {
    m.rank()
}

pub fn kernel_basis<C: Clone, R: Clone>(m: &ConstraintMatrix<C, R>) -> KernelBasis<C> {
    m.kernel_basis()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelBasis<C> {
    pub vectors: Vec<Vec<Rational>>,
    pub col_labels: Vec<C>,
}

impl<C> KernelBasis<C> {
    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    /// Dimension of the span of the basis restricted to the given columns.
    pub fn projection_dim(&self, cols: &[usize]) -> usize {
        let projected: Vec<Vec<Rational>> = self
            .vectors
            .iter()
            .map(|v| cols.iter().map(|&c| v[c].clone()).collect())
            .collect();
        rank_of_vectors(&projected, cols.len())
    }
}
