//! Special functions derived from w(z): Dawson's integral, Voigt K and L,
//! complex erf, plasma dispersion Z, Fresnel integral and the normal
//! distribution function. All of them route through the dispatcher so the
//! region logic has a single source of truth.
//!
//! The argument rotations in `erf`, `fresnel` and `normal_phi` can push a
//! point into the dispatcher's overflow regime; values stay accurate for
//! |Re z|, |Im z| <= 26 and saturate to flagged infinities beyond that.

use num_complex::Complex64;

use crate::dispatch;
use crate::error::Error;
use crate::kernel::CoeffSet;
use crate::math::{self, SQRT_PI};

/// Dawson's integral via w(z) = e^{-z²} + (2i/√π)·daw(z).
pub fn dawson(z: Complex64) -> Result<Complex64, Error> {
    let w = dispatch::w(z)?;
    let diff = w - math::cexp(math::neg_z_sq(z));
    // √π/(2i) = -i·√π/2
    Ok(Complex64::new(0.0, -0.5 * SQRT_PI) * diff)
}

/// Dawson's integral for real arguments as an explicit rational sum,
/// independent of the dispatcher. Kept alongside [`dawson`] because the
/// two routes cross-validate each other.
pub fn dawson_rational(x: f64, coeffs: &CoeffSet) -> f64 {
    debug_assert!(x.is_finite());
    let sigma = coeffs.sigma();
    let sigma_sq = sigma * sigma;
    let p = x * x + sigma_sq;
    let exp_sigma_sq = sigma_sq.exp();
    let mut sum = 2.0 * exp_sigma_sq * coeffs.step() / p;
    for n in 0..coeffs.n_terms() {
        let c_sq = coeffs.gamma()[n];
        let num = 2.0 * coeffs.a()[n] * sigma + coeffs.b()[n] * (p - c_sq);
        let den = c_sq * c_sq + 2.0 * c_sq * (sigma_sq - x * x) + p * p;
        sum += num / den;
    }
    0.5 * SQRT_PI * x * sum
}

/// Voigt function K(x, y) = Re w(x + iy), valid for y >= 0.
pub fn voigt_k(x: f64, y: f64) -> Result<f64, Error> {
    if y < 0.0 {
        return Err(Error::NegativeImag { y });
    }
    Ok(dispatch::w(Complex64::new(x, y))?.re)
}

/// L(x, y) = Im w(x + iy), valid for y >= 0. Odd in x.
pub fn voigt_l(x: f64, y: f64) -> Result<f64, Error> {
    if y < 0.0 {
        return Err(Error::NegativeImag { y });
    }
    Ok(dispatch::w(Complex64::new(x, y))?.im)
}

/// Error function of a complex argument: erf(z) = 1 - e^{-z²}·w(iz).
pub fn erf(z: Complex64) -> Result<Complex64, Error> {
    let rotated = Complex64::new(-z.im, z.re);
    let w = dispatch::w(rotated)?;
    Ok(1.0 - math::cexp(math::neg_z_sq(z)) * w)
}

/// Plasma dispersion function Z(z) = i·√π·w(z).
pub fn plasma_dispersion(z: Complex64) -> Result<Complex64, Error> {
    Ok(Complex64::new(0.0, SQRT_PI) * dispatch::w(z)?)
}

/// Fresnel integral F(z) = (1+i)·[1 - e^{i(π/2)z²}·w(√π(1+i)z/2)]/2.
pub fn fresnel(z: Complex64) -> Result<Complex64, Error> {
    let z_sq = z * z;
    let phase = math::cexp(Complex64::new(
        -std::f64::consts::FRAC_PI_2 * z_sq.im,
        std::f64::consts::FRAC_PI_2 * z_sq.re,
    ));
    let arg = 0.5 * SQRT_PI * Complex64::new(z.re - z.im, z.re + z.im);
    let w = dispatch::w(arg)?;
    Ok(Complex64::new(0.5, 0.5) * (1.0 - phase * w))
}

/// Normal distribution function Φ(z) = [1 - e^{-z²/2}·w(iz/√2)]/2,
/// which is the same closed form as erf(z/√2)/2.
pub fn normal_phi(z: Complex64) -> Result<Complex64, Error> {
    Ok(0.5 * erf(z / std::f64::consts::SQRT_2)?)
}
