//! Coupled multi-degree ("window") systems over consecutive Taylor terms
//! `X_i, …, X_{i+d}` of a Beltrami field whose lower terms vanish, and the
//! cascade analysis that runs them at every resonant degree of a factor.

mod analyze;
mod factor;
mod window;

pub use analyze::{analyze, CascadeOptions, CascadeReport, RiskyWindow, Verdict, WindowSolution};
pub use factor::TruncatedFactor;
pub use window::{
    assemble_window, assemble_window_capped, base_block_feasible, epsilon_window, satisfies_window,
    solve_window, window_kernel, window_kernel_capped, WindowKernel, WindowSystem, DEFAULT_DEGREE_CAP,
};
