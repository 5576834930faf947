use num_traits::Zero;

use super::factor::TruncatedFactor;
use crate::error::{Error, Result};
use crate::exact::{KernelBasis, Rational};
use crate::poly::{curl, div, dot, grad, scale_mul, CoefficientIndex, PolynomialVectorField};
use crate::system::{assemble, LabeledSystem};

/// Largest `i + d` accepted by default.
pub const DEFAULT_DEGREE_CAP: u32 = 16;

/// Coupled system for `X_i ..= X_{i+d}` with every lower Taylor term set to
/// zero.
#[derive(Clone, Debug)]
pub struct WindowSystem {
    pub base_degree: u32,
    pub depth: u32,
    pub system: LabeledSystem,
}

impl WindowSystem {
    pub fn unknowns(&self) -> &[CoefficientIndex] {
        self.system.col_labels()
    }

    pub fn top_degree(&self) -> u32 {
        self.base_degree + self.depth
    }

    /// Column positions of the `X_n` block.
    pub fn block_columns(&self, n: u32) -> Vec<usize> {
        block_columns(self.unknowns(), n)
    }
}

fn block_columns(labels: &[CoefficientIndex], n: u32) -> Vec<usize> {
    labels
        .iter()
        .enumerate()
        .filter(|(_, idx)| idx.term_degree == n)
        .map(|(c, _)| c)
        .collect()
}

pub fn assemble_window(f: &TruncatedFactor, i: u32, d: u32) -> Result<WindowSystem> {
    assemble_window_capped(f, i, d, DEFAULT_DEGREE_CAP)
}

pub fn assemble_window_capped(f: &TruncatedFactor, i: u32, d: u32, cap: u32) -> Result<WindowSystem> {
    if i == 0 {
        return Err(Error::DegreeTooSmall { min: 1, got: 0 });
    }
    let top = i.saturating_add(d);
    if top > cap {
        return Err(Error::DegreeCapExceeded { requested: top, cap });
    }
    Ok(WindowSystem { base_degree: i, depth: d, system: assemble(&f.terms(), i, top) })
}

/// Window system of `f` with its cubic part multiplied by `eps`.
pub fn epsilon_window(f: &TruncatedFactor, i: u32, d: u32, eps: &Rational) -> Result<WindowSystem> {
    assemble_window(&f.with_scaled_cubic(eps)?, i, d)
}

#[derive(Clone, Debug)]
pub struct WindowKernel {
    pub base_degree: u32,
    pub depth: u32,
    pub basis: KernelBasis<CoefficientIndex>,
    /// Dimension of the kernel's projection onto each block `X_i ..= X_{i+d}`.
    pub block_dims: Vec<usize>,
}

impl WindowKernel {
    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    /// Dimension of the projection onto the `X_i` block.
    pub fn projection_dim(&self) -> usize {
        self.block_dims[0]
    }

    /// The fields `(X_i, …, X_{i+d})` encoded by kernel vector `k`.
    pub fn fields(&self, k: usize) -> Vec<PolynomialVectorField> {
        let v = &self.basis.vectors[k];
        (self.base_degree..=self.base_degree + self.depth)
            .map(|n| PolynomialVectorField::from_labeled(n, &self.basis.col_labels, v))
            .collect()
    }

    /// Kernel vectors restricted to the `X_n` block.
    pub fn block_vectors(&self, n: u32) -> Vec<Vec<Rational>> {
        let cols = block_columns(&self.basis.col_labels, n);
        self.basis
            .vectors
            .iter()
            .map(|v| cols.iter().map(|&c| v[c].clone()).collect())
            .collect()
    }
}

pub fn window_kernel(f: &TruncatedFactor, i: u32, d: u32) -> Result<WindowKernel> {
    window_kernel_capped(f, i, d, DEFAULT_DEGREE_CAP)
}

pub fn window_kernel_capped(f: &TruncatedFactor, i: u32, d: u32, cap: u32) -> Result<WindowKernel> {
    Ok(solve_window(&assemble_window_capped(f, i, d, cap)?))
}

pub fn solve_window(w: &WindowSystem) -> WindowKernel {
    let basis = w.system.kernel_basis();
    let block_dims = (w.base_degree..=w.top_degree())
        .map(|n| basis.projection_dim(&w.block_columns(n)))
        .collect();
    WindowKernel { base_degree: w.base_degree, depth: w.depth, basis, block_dims }
}

/// Whether some solution of the window has the prescribed `X_i` block.
/// The system is homogeneous, so this is a rank test on `[A | b]` with the
/// `X_i` columns moved to the right-hand side.
pub fn base_block_feasible(w: &WindowSystem, x_i: &PolynomialVectorField) -> bool {
    assert_eq!(x_i.degree(), w.base_degree);
    let labels = w.unknowns();
    let base = w.block_columns(w.base_degree);
    let rest: Vec<usize> = (0..labels.len()).filter(|c| !base.contains(c)).collect();
    let mut full = vec![Rational::zero(); labels.len()];
    for &c in &base {
        full[c] = x_i.coefficient(&labels[c]);
    }
    let rhs: Vec<Rational> = w.system.matrix().mul_vec(&full).into_iter().map(|v| -v).collect();
    w.system.matrix().select_columns(&rest).is_consistent(&rhs)
}

/// Substitution check with the polynomial operators: do the fields
/// `X_i, …, X_{i+d}` (given in order, lower terms zero) satisfy every
/// window equation of `f`?
pub fn satisfies_window(f: &TruncatedFactor, i: u32, fields: &[PolynomialVectorField]) -> bool {
    let top = i + fields.len() as u32 - 1;
    let x = |n: u32| -> Option<&PolynomialVectorField> {
        (n >= i && n <= top).then(|| &fields[(n - i) as usize])
    };
    let f0 = f.f0();
    for m in i..=top {
        let xm = x(m).expect("inside the window");
        if !div(xm).is_zero() {
            return false;
        }
        let mut residual = curl(xm);
        if m >= 1 {
            if let Some(prev) = x(m - 1) {
                residual = &residual - &prev.scale(&f0);
            }
        }
        for (j, fj) in f.components() {
            if let Some(xn) = m.checked_sub(j + 1).and_then(x) {
                residual = &residual - &scale_mul(fj, xn);
            }
        }
        if !residual.is_zero() {
            return false;
        }
        let mut fi = crate::poly::HomogeneousPolynomial::zero(m + 1);
        for (j, fj) in f.components() {
            if let Some(xn) = (m + 2).checked_sub(j).and_then(x) {
                fi = &fi + &dot(&grad(fj), xn);
            }
        }
        if !fi.is_zero() {
            return false;
        }
    }
    true
}
