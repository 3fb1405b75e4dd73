//! Generalized zeta-series transformation coefficients and the identities
//! built on them.
//!
//! The coefficients `{{k, j}}*` satisfy
//! `sum_{n>=1} g_n z^n / n^k = sum_{j>=1} {{k+2, j}}* z^j G^(j)(z)`
//! for any ordinary generating function `G`. This crate computes them exactly,
//! evaluates the polylogarithm-type series they produce, and audits the
//! surrounding harmonic-number identities.

pub mod audit;
pub mod cli;
pub mod coeffs;
pub mod error;
pub mod exactnum;
pub mod harmonic;
pub mod msums;
pub mod series;
pub mod special;
pub mod stirling;

pub use error::{Error, Result};
pub use exactnum::{ComplexF, ExactRational};
