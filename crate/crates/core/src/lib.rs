//! Exact construction of Kustin-Miller complexes.
//!
//! Given graded free resolutions of two Gorenstein quotients `R/I` and `R/J`
//! with `I ⊂ J` and `dim R/J = dim R/I - 1`, the crate computes the
//! unprojection ideal `U ⊂ R[T]` and an explicit graded free resolution of
//! `R[T]/U`. A small Gröbner kernel (Buchberger over graded free modules)
//! provides syzygies, lifting and minimal resolutions; the [`simplicial`]
//! module drives the construction for stellar subdivisions and cyclic
//! polytopes.

pub mod error;
pub mod fixtures;
pub mod cli;
pub mod complex;
pub mod gb;
pub mod km;
pub mod resolve;
pub mod ring;
pub mod simplicial;
pub mod unproj;

pub use error::{Error, ErrorCategory, Result};
