//! Small shared numeric helpers.

use num_complex::Complex64;

pub(crate) const SQRT_PI: f64 = 1.772_453_850_905_516;
pub(crate) const FRAC_1_SQRT_PI: f64 = 0.564_189_583_547_756_3;

/// Largest x with exp(x) finite in f64.
pub(crate) const EXP_OVERFLOW: f64 = 709.782_712_893_384;

/// -z² with the real part in the cancellation-free form (y-x)(x+y).
#[inline]
pub(crate) fn neg_z_sq(z: Complex64) -> Complex64 {
    Complex64::new((z.im - z.re) * (z.re + z.im), -2.0 * z.re * z.im)
}

/// exp of a complex argument, saturating to signed infinities instead of
/// producing inf·0 = NaN when the real part overflows.
#[inline]
pub(crate) fn cexp(c: Complex64) -> Complex64 {
    let (s, co) = c.im.sin_cos();
    if c.re > EXP_OVERFLOW {
        return Complex64::new(
            f64::INFINITY.copysign(co),
            f64::INFINITY.copysign(s),
        );
    }
    let m = c.re.exp();
    Complex64::new(m * co, m * s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cexp_matches_std_in_range() {
        for &(re, im) in &[(0.0, 0.0), (-3.5, 2.0), (1.25, -700.0), (-64.0, 0.3)] {
            let got = cexp(Complex64::new(re, im));
            let want = Complex64::new(re, im).exp();
            assert!((got - want).norm() <= 1e-15 * want.norm().max(1e-300));
        }
    }

    #[test]
    fn cexp_saturates_instead_of_nan() {
        let v = cexp(Complex64::new(800.0, 1.0));
        assert!(v.re.is_infinite() && v.im.is_infinite());
        assert!(v.re.is_sign_positive()); // cos(1) > 0
        assert!(v.im.is_sign_positive()); // sin(1) > 0
    }
}
