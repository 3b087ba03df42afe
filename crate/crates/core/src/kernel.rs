//! Coefficient tables and the three core approximations of w(z).
//!
//! The evaluation scheme splits the upper half-plane into three regions:
//! a truncated Laplace continued fraction outside the circle |z| = 8, a
//! shifted rational sum on the inner region with y >= 0.1, and a
//! Dawson-style small-y form on the band 0 <= y < 0.1. Region selection
//! lives in [`crate::dispatch`]; the kernels themselves evaluate wherever
//! they are asked, which is what the error-map studies need.

use std::sync::OnceLock;

use num_complex::Complex64;

use crate::dd::{self, Dd};
use crate::error::Error;
use crate::math;

/// Which of the three approximation regions a point falls in.
///
/// Classification applies to upper-half-plane representatives, so y >= 0
/// always holds where a tag is produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DomainTag {
    /// |z| > 8: truncated Laplace continued fraction.
    External,
    /// |z| <= 8 and y >= 0.1: shifted rational sum.
    PrimaryInner,
    /// |z| <= 8 and 0 <= y < 0.1: small-y form.
    SecondaryBand,
}

impl DomainTag {
    pub fn label(self) -> &'static str {
        match self {
            DomainTag::External => "external",
            DomainTag::PrimaryInner => "primary_inner",
            DomainTag::SecondaryBand => "secondary_band",
        }
    }
}

/// Number of half-integer continued-fraction coefficients used by default.
pub const DEFAULT_CF_DEPTH: u32 = 11;

/// Precomputed expansion coefficients for fixed (N, sigma, h).
///
/// Immutable after construction; share it freely across threads.
#[derive(Debug, Clone)]
pub struct CoeffSet {
    n_terms: usize,
    sigma: f64,
    step: f64,
    a: Vec<f64>,
    b: Vec<f64>,
    c: Vec<f64>,
    alpha: Vec<f64>,
    beta: Vec<f64>,
    gamma: Vec<f64>,
    // cached scalars used on every evaluation
    two_h_exp_sigma_sq: f64,
    four_sigma_sq: f64,
    sigma_sq: f64,
}

impl CoeffSet {
    /// Fills all six coefficient arrays from their closed forms.
    pub fn new(n_terms: usize, sigma: f64, step: f64) -> Result<Self, Error> {
        if n_terms < 1 {
            return Err(Error::InvalidParam("n_terms must be >= 1"));
        }
        if !(sigma.is_finite() && sigma > 0.0) {
            return Err(Error::InvalidParam("sigma must be finite and > 0"));
        }
        if !(step.is_finite() && step > 0.0) {
            return Err(Error::InvalidParam("step must be finite and > 0"));
        }

        // The trig arguments reach ~18, where plain f64 evaluation loses
        // up to ~250 ulp in the small table entries, so the one-time
        // table fill runs in double-double. Evaluation stays pure f64.
        let exp_sigma_sq = (sigma * sigma).exp();
        let sigma_sq_dd = Dd::from_prod(sigma, sigma);
        let mut a = Vec::with_capacity(n_terms);
        let mut b = Vec::with_capacity(n_terms);
        let mut c = Vec::with_capacity(n_terms);
        let mut alpha = Vec::with_capacity(n_terms);
        let mut beta = Vec::with_capacity(n_terms);
        let mut gamma = Vec::with_capacity(n_terms);
        for k in 1..=n_terms {
            let n = k as f64;
            let cn_dd = dd::TWO_PI.mul_f64(step).mul_f64(n);
            let cn = cn_dd.to_f64();
            let damp = cn_dd.sqr().neg().exp();
            let damp_shifted = sigma_sq_dd.sub(cn_dd.sqr()).exp();
            let (sin4, cos4) = cn_dd.mul_f64(2.0).mul_f64(sigma).sin_cos();
            a.push(
                dd::PI
                    .mul(Dd::from_prod(step, step))
                    .mul_f64(8.0 * n)
                    .mul(damp_shifted)
                    .mul(sin4)
                    .to_f64(),
            );
            b.push(damp_shifted.mul(cos4).mul_f64(4.0 * step).to_f64());
            c.push(cn);
            alpha.push(
                dd::PI
                    .mul_f64(8.0 * step)
                    .mul_f64(n * sigma)
                    .mul(damp)
                    .mul(sin4)
                    .to_f64(),
            );
            beta.push(damp.mul(cos4).mul_f64(2.0).to_f64());
            // bit-for-bit the square of the rounded C_n
            gamma.push(cn * cn);
        }

        Ok(CoeffSet {
            n_terms,
            sigma,
            step,
            a,
            b,
            c,
            alpha,
            beta,
            gamma,
            two_h_exp_sigma_sq: 2.0 * step * exp_sigma_sq,
            four_sigma_sq: 4.0 * sigma * sigma,
            sigma_sq: sigma * sigma,
        })
    }

    /// The operating point used throughout: N = 23, sigma = 1.5,
    /// h = 6/(2·pi·23). Computed once and shared.
    pub fn operating_point() -> &'static CoeffSet {
        static CACHE: OnceLock<CoeffSet> = OnceLock::new();
        CACHE.get_or_init(|| {
            CoeffSet::new(23, 1.5, 6.0 / (2.0 * std::f64::consts::PI) / 23.0)
                .expect("default parameters are valid")
        })
    }

    pub fn n_terms(&self) -> usize {
        self.n_terms
    }
    pub fn sigma(&self) -> f64 {
        self.sigma
    }
    pub fn step(&self) -> f64 {
        self.step
    }
    pub fn a(&self) -> &[f64] {
        &self.a
    }
    pub fn b(&self) -> &[f64] {
        &self.b
    }
    pub fn c(&self) -> &[f64] {
        &self.c
    }
    pub fn alpha(&self) -> &[f64] {
        &self.alpha
    }
    pub fn beta(&self) -> &[f64] {
        &self.beta
    }
    pub fn gamma(&self) -> &[f64] {
        &self.gamma
    }
}

/// Shifted rational sum; intended for the primary inner region (|z| <= 8,
/// y >= 0.1) but computes wherever asked.
pub fn w_rational(z: Complex64, coeffs: &CoeffSet) -> Complex64 {
    debug_assert!(z.re.is_finite() && z.im.is_finite());
    let zs = Complex64::new(z.re, z.im + coeffs.sigma);
    let zs_sq = zs * zs;
    // i·2h·e^{sigma²}/z' evaluated without a complex division
    let q = zs.norm_sqr();
    let mut acc = Complex64::new(
        coeffs.two_h_exp_sigma_sq * zs.im / q,
        coeffs.two_h_exp_sigma_sq * zs.re / q,
    );
    for n in 0..coeffs.n_terms {
        let num = Complex64::new(coeffs.a[n] + zs.im * coeffs.b[n], -zs.re * coeffs.b[n]);
        let den = Complex64::new(coeffs.gamma[n] - zs_sq.re, -zs_sq.im);
        acc += num / den;
    }
    acc
}

#[cfg(test)]
thread_local! {
    static SMALL_Y_EXP_CALLS: std::cell::Cell<u64> = const { std::cell::Cell::new(0) };
}

/// Number of complex-exponential evaluations performed by [`w_small_y`]
/// on this thread. Test instrumentation only.
#[cfg(test)]
pub(crate) fn small_y_exp_calls() -> u64 {
    SMALL_Y_EXP_CALLS.with(|c| c.get())
}

#[inline]
fn exp_neg_z_sq_counted(z: Complex64) -> Complex64 {
    #[cfg(test)]
    SMALL_Y_EXP_CALLS.with(|c| c.set(c.get() + 1));
    math::cexp(math::neg_z_sq(z))
}

/// Small-y form: e^{-z²} + 2ih·e^{sigma²}·z·theta(z² + sigma²).
///
/// The exponential is the only non-rational term and is evaluated exactly
/// once per call. Intended for the band 0 <= y < 0.1, |z| <= 8.
pub fn w_small_y(z: Complex64, coeffs: &CoeffSet) -> Complex64 {
    debug_assert!(z.re.is_finite() && z.im.is_finite());
    let u = z * z + coeffs.sigma_sq;
    let th = theta(u, coeffs);
    let scale = Complex64::new(0.0, coeffs.two_h_exp_sigma_sq);
    exp_neg_z_sq_counted(z) + scale * z * th
}

/// The rational sum carrying the whole inner loop of the small-y form.
fn theta(u: Complex64, coeffs: &CoeffSet) -> Complex64 {
    let mut t = u.finv();
    // term-by-term in index order, no compensated summation
    for n in 0..coeffs.n_terms {
        let g = coeffs.gamma[n];
        let num = Complex64::new(
            coeffs.alpha[n] + coeffs.beta[n] * (u.re - g),
            coeffs.beta[n] * u.im,
        );
        let d = Complex64::new(g - u.re, -u.im);
        let d_sq = d * d;
        let den = Complex64::new(coeffs.four_sigma_sq * g + d_sq.re, d_sq.im);
        t += num / den;
    }
    t
}

/// Truncated Laplace continued fraction with half-integer coefficients
/// k/2 for k = depth..1, evaluated bottom-up. Intended for |z| > 8.
///
/// Division by zero cannot occur for |z| > depth/2; for smaller |z| the
/// value is still returned and the dispatcher is responsible for not
/// routing such points here.
pub fn w_laplace_cf(z: Complex64, depth: u32) -> Complex64 {
    debug_assert!(z.re.is_finite() && z.im.is_finite());
    debug_assert!(depth >= 1);
    let mut inner = Complex64::new(0.0, 0.0);
    for k in (1..=depth).rev() {
        inner = (k as f64 * 0.5) / (z - inner);
    }
    Complex64::new(0.0, math::FRAC_1_SQRT_PI) / (z - inner)
}
