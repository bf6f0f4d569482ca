//! Exact tools for real-rooted polynomial families: class membership under
//! coefficient sign flips, diagonal (multiplier) sequence tests, univariate
//! discriminants with their Newton polytopes, Archimedean coefficient
//! geometry, and floating-point amoeba experiments for the discriminant
//! hypersurface.
//!
//! All classification decisions are exact over the rationals; floating point
//! is confined to the `amoeba` module.

pub mod amoeba;
pub mod archgeo;
pub mod discriminant;
pub mod error;
pub mod multiplier;
pub mod poly;
pub mod realroots;
mod zpoly;

pub use error::{Error, Result};
pub use poly::{GammaSeq, Poly, SignPattern};
