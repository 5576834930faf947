//! Exact Taylor-jet obstruction systems for Beltrami fields
//! `curl X = f X`, `div X = 0` near a non-degenerate critical point of `f`.
//!
//! Everything is computed over the rationals: homogeneous polynomial vector
//! fields, the coefficient-matching linear systems obtained degree by degree,
//! and their exact nullspaces.

pub mod cascade;
pub mod error;
pub mod exact;
pub mod harmonic;
pub mod notation;
pub mod poly;
pub mod series;
pub mod single;
pub mod suite;
pub mod system;

pub use error::{Error, Result};
