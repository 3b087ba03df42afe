//! Full-plane evaluation: reflect lower-half-plane arguments through the
//! identity w(z) + w(-z) = 2e^{-z²}, classify the upper-half representative,
//! and route to the matching kernel.

use num_complex::Complex64;

use crate::error::Error;
use crate::kernel::{self, CoeffSet, DomainTag, DEFAULT_CF_DEPTH};
use crate::math;

/// Outcome of a full-plane evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FaddeevaResult {
    pub value: Complex64,
    /// Classification of the upper-half-plane representative of the input.
    pub region: DomainTag,
    /// Whether the lower-half-plane identity was applied.
    pub reflected: bool,
}

impl FaddeevaResult {
    /// True when the reflection term 2e^{-z'²} overflowed and the value
    /// saturated to infinite components. A representable-range limitation
    /// deep in the lower half-plane, never a silent wrong answer.
    pub fn overflowed(&self) -> bool {
        !self.value.re.is_finite() || !self.value.im.is_finite()
    }
}

/// Region classification for y >= 0. Boundaries: |z| = 8 is inner,
/// y = 0.1 belongs to the primary subdomain.
pub fn classify(z: Complex64) -> Result<DomainTag, Error> {
    if !z.re.is_finite() || !z.im.is_finite() {
        return Err(Error::NonFiniteInput { x: z.re, y: z.im });
    }
    if z.im < 0.0 {
        return Err(Error::NegativeImag { y: z.im });
    }
    Ok(classify_upper(z))
}

#[inline]
fn classify_upper(z: Complex64) -> DomainTag {
    if z.norm_sqr() > 64.0 {
        DomainTag::External
    } else if z.im < 0.1 {
        DomainTag::SecondaryBand
    } else {
        DomainTag::PrimaryInner
    }
}

#[inline]
fn route(z: Complex64, region: DomainTag, coeffs: &CoeffSet) -> Complex64 {
    match region {
        DomainTag::External => kernel::w_laplace_cf(z, DEFAULT_CF_DEPTH),
        DomainTag::PrimaryInner => kernel::w_rational(z, coeffs),
        DomainTag::SecondaryBand => kernel::w_small_y(z, coeffs),
    }
}

/// w(z) anywhere in the complex plane, with the default coefficient set.
pub fn faddeeva(z: Complex64) -> Result<FaddeevaResult, Error> {
    faddeeva_with(z, CoeffSet::operating_point())
}

/// w(z) anywhere in the complex plane, with an explicit coefficient set.
pub fn faddeeva_with(z: Complex64, coeffs: &CoeffSet) -> Result<FaddeevaResult, Error> {
    if !z.re.is_finite() || !z.im.is_finite() {
        return Err(Error::NonFiniteInput { x: z.re, y: z.im });
    }
    if z.im >= 0.0 {
        let region = classify_upper(z);
        Ok(FaddeevaResult {
            value: route(z, region, coeffs),
            region,
            reflected: false,
        })
    } else {
        let zu = z.conj();
        let region = classify_upper(zu);
        let upper = route(zu, region, coeffs);
        let twice_gauss = 2.0 * math::cexp(math::neg_z_sq(zu));
        Ok(FaddeevaResult {
            value: (twice_gauss - upper).conj(),
            region,
            reflected: true,
        })
    }
}

/// Convenience accessor returning only the value.
pub fn w(z: Complex64) -> Result<Complex64, Error> {
    faddeeva(z).map(|r| r.value)
}
