//! Faddeeva function w(z) over the whole complex plane, with the family
//! of special functions that reduce to it and the reference oracles used
//! to validate them.
//!
//! The evaluator is double precision and region-based: a truncated Laplace
//! continued fraction for |z| > 8, a shifted rational sum for the inner
//! region with y >= 0.1, and a single-exponential small-y form on the band
//! 0 <= y < 0.1. Lower-half-plane arguments go through the reflection
//! identity w(z) + w(-z) = 2e^{-z²}.
//!
//! ```
//! use faddeeva::{w, Complex64};
//!
//! let v = w(Complex64::new(1.0, 0.5)).unwrap();
//! assert!((v.re - 0.3549003328675779).abs() < 1e-14);
//! assert!((v.im - 0.3428717191311007).abs() < 1e-14);
//! ```

pub use num_complex::Complex64;

mod dd;
mod dispatch;
mod error;
mod family;
mod kernel;
mod math;
pub mod oracle;

pub use dispatch::{classify, faddeeva, faddeeva_with, w, FaddeevaResult};
pub use error::Error;
pub use family::{
    dawson, dawson_rational, erf, fresnel, normal_phi, plasma_dispersion, voigt_k, voigt_l,
};
pub use kernel::{
    w_laplace_cf, w_rational, w_small_y, CoeffSet, DomainTag, DEFAULT_CF_DEPTH,
};
