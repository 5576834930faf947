use num_traits::Zero;
use serde::Serialize;

use super::factor::TruncatedFactor;
use super::window::{window_kernel_capped, DEFAULT_DEGREE_CAP};
use crate::error::Result;
use crate::poly::PolynomialVectorField;
use crate::single::{classify_spectrum, SigmaTriple, SpectrumClassification};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CascadeOptions {
    /// Window depth when `f_0 = 0`.
    pub depth_zero: u32,
    /// Window depth when `f_0 ≠ 0`.
    pub depth_nonzero: u32,
    pub degree_cap: u32,
}

impl Default for CascadeOptions {
    fn default() -> Self {
        CascadeOptions { depth_zero: 3, depth_nonzero: 1, degree_cap: DEFAULT_DEGREE_CAP }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    /// Every risky window forces the first nonvanishing term to zero.
    TrivialOnly,
    /// Some risky window admits a nonzero first term.
    ObstructionInconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RiskyWindow {
    pub degree: u32,
    pub depth: u32,
    pub window_kernel_dim: usize,
    pub projection_dim: usize,
    pub block_dims: Vec<usize>,
}

/// A kernel vector of a risky window, as the fields `X_i, …, X_{i+d}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WindowSolution {
    pub degree: u32,
    pub fields: Vec<PolynomialVectorField>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CascadeReport {
    pub sigma: SigmaTriple,
    pub classification: SpectrumClassification,
    pub risky: Vec<RiskyWindow>,
    pub verdict: Verdict,
    pub details: Vec<WindowSolution>,
}

/// Runs the window test at every degree the spectrum flags as resonant.
/// Degrees that are not flagged cannot carry the first nonvanishing term,
/// so they need no window.
pub fn analyze(f: &TruncatedFactor, options: &CascadeOptions) -> Result<CascadeReport> {
    let sigma = f.sigma()?;
    let classification = classify_spectrum(&sigma);
    let depth = if f.f0().is_zero() { options.depth_zero } else { options.depth_nonzero };

    let mut risky = Vec::new();
    let mut details = Vec::new();
    for &i in &classification.risky_degrees {
        let w = window_kernel_capped(f, i, depth, options.degree_cap)?;
        for k in 0..w.dim() {
            details.push(WindowSolution { degree: i, fields: w.fields(k) });
        }
        risky.push(RiskyWindow {
            degree: i,
            depth,
            window_kernel_dim: w.dim(),
            projection_dim: w.projection_dim(),
            block_dims: w.block_dims.clone(),
        });
    }
    let verdict = if risky.iter().all(|r| r.projection_dim == 0) {
        Verdict::TrivialOnly
    } else {
        Verdict::ObstructionInconclusive
    };
    Ok(CascadeReport { sigma, classification, risky, verdict, details })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::exact::int;
    use crate::poly::HomogeneousPolynomial;

    fn p(degree: u32, terms: &[(i64, [u32; 3])]) -> HomogeneousPolynomial {
        HomogeneousPolynomial::from_ints(degree, terms).unwrap()
    }

    #[test]
    fn same_sign_is_trivial_without_windows() {
        let f = TruncatedFactor::new(
            int(1),
            [p(2, &[(1, [2, 0, 0]), (2, [0, 2, 0]), (3, [0, 0, 2])]), p(3, &[(5, [1, 1, 1])])],
        )
        .unwrap();
        let r = analyze(&f, &CascadeOptions::default()).unwrap();
        assert!(r.risky.is_empty());
        assert_eq!(r.verdict, Verdict::TrivialOnly);
    }

    #[test]
    fn missing_quadric_is_an_error() {
        let f = TruncatedFactor::new(int(1), [p(3, &[(1, [1, 1, 1])])]).unwrap();
        assert!(matches!(analyze(&f, &CascadeOptions::default()), Err(Error::HessianRequired(_))));
    }
}
