//! Real-argument erf / erfc / erfcx via the classic series/continued-
//! fraction split at |x| = 1. Oracle-grade accuracy, not a performance
//! path.

use crate::math::FRAC_1_SQRT_PI;

/// erf(x) for real x.
pub fn erf(x: f64) -> f64 {
    if x < 0.0 {
        return -erf(-x);
    }
    if x < 1.0 {
        erf_series(x)
    } else {
        1.0 - erfc(x)
    }
}

/// erfc(x) for real x.
pub fn erfc(x: f64) -> f64 {
    if x < 0.0 {
        return 2.0 - erfc(-x);
    }
    if x < 1.0 {
        1.0 - erf_series(x)
    } else {
        (-x * x).exp() * FRAC_1_SQRT_PI * erfc_cf(x)
    }
}

/// erfcx(x) = e^{x²}·erfc(x), overflow-free for x >= 0.
pub fn erfcx(x: f64) -> f64 {
    if x < 0.0 {
        // grows like 2e^{x²}; saturates beyond the representable range
        let e = (x * x).exp();
        return 2.0 * e - erfcx(-x);
    }
    if x < 1.0 {
        (x * x).exp() * (1.0 - erf_series(x))
    } else {
        FRAC_1_SQRT_PI * erfc_cf(x)
    }
}

/// erf by the cancellation-free confluent series, 0 <= x < 1:
/// erf(x) = (2/√π)·x·e^{-x²}·Σ (2x²)ⁿ / (1·3·…·(2n+1))
fn erf_series(x: f64) -> f64 {
    let two_x_sq = 2.0 * x * x;
    let mut term = 1.0;
    let mut sum = 1.0;
    let mut odd = 1.0;
    for _ in 0..60 {
        odd += 2.0;
        term *= two_x_sq / odd;
        sum += term;
        if term < 1e-18 * sum {
            break;
        }
    }
    2.0 * FRAC_1_SQRT_PI * x * (-x * x).exp() * sum
}

/// The Stieltjes continued fraction for √π·e^{x²}·erfc(x), x >= 1:
/// 1/(x + (1/2)/(x + 1/(x + (3/2)/(x + ...)))), by modified Lentz.
fn erfc_cf(x: f64) -> f64 {
    const TINY: f64 = 1e-300;
    let mut f = x;
    let mut c = x;
    let mut d = 0.0;
    for k in 1..400 {
        let a = k as f64 * 0.5;
        d = x + a * d;
        if d == 0.0 {
            d = TINY;
        }
        c = x + a / c;
        if c == 0.0 {
            c = TINY;
        }
        d = 1.0 / d;
        let delta = c * d;
        f *= delta;
        if (delta - 1.0).abs() < 1e-17 {
            break;
        }
    }
    1.0 / f
}

#[cfg(test)]
mod tests {
    use super::*;

    // frozen references computed offline in 60-digit arithmetic
    const ERFC_0_05: f64 = 0.9436280222029834;
    const ERFC_0_5: f64 = 0.4795001221869535;
    const ERFC_1_5: f64 = 0.033894853524689274;
    const ERFC_3: f64 = 2.209049699858544e-5;
    const ERFC_8: f64 = 1.1224297172982926e-29;
    const ERFCX_2: f64 = 0.25539567631050575;
    const ERFCX_15: f64 = 0.03752960638850576;

    #[test]
    fn erfc_matches_frozen_references() {
        let cases = [
            (0.05, ERFC_0_05, 1e-15),
            (0.5, ERFC_0_5, 1e-15),
            (1.5, ERFC_1_5, 1e-15),
            (3.0, ERFC_3, 1e-15),
            (8.0, ERFC_8, 1e-15),
        ];
        for (x, want, tol) in cases {
            let got = erfc(x);
            assert!(
                ((got - want) / want).abs() <= tol,
                "erfc({x}) = {got}, want {want}"
            );
        }
    }

    #[test]
    fn erfcx_matches_frozen_references() {
        assert!(((erfcx(2.0) - ERFCX_2) / ERFCX_2).abs() <= 1e-15);
        assert!(((erfcx(15.0) - ERFCX_15) / ERFCX_15).abs() <= 1e-15);
        assert!((erfcx(0.0) - 1.0).abs() <= 1e-16);
    }

    #[test]
    fn erf_basics() {
        assert_eq!(erf(0.0), 0.0);
        assert!((erf(1.0) - 0.8427007929497149).abs() <= 1e-15);
        assert!((erf(-1.0) + 0.8427007929497149).abs() <= 1e-15);
        assert!((erfc(-0.5) - (2.0 - ERFC_0_5)).abs() <= 1e-15);
    }

    #[test]
    fn series_and_cf_agree_at_the_seam() {
        // both branches evaluated at the same point x = 1
        let series_route = 1.0 - erf_series(1.0);
        let cf_route = (-1.0f64).exp() * crate::math::FRAC_1_SQRT_PI * erfc_cf(1.0);
        assert!((series_route - cf_route).abs() <= 5e-15 * series_route);
    }
}
