//! Seeded point generators shared by the benchmark targets.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Uniform points over the band 0 < x < 6, 0 < y < 0.1.
pub fn band_points(count: usize, seed: u64) -> Vec<Complex64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| Complex64::new(rng.gen_range(0.0..6.0), rng.gen_range(0.0..0.1)))
        .collect()
}

/// Uniform points over the primary inner region (|z| <= 8, y >= 0.1).
pub fn primary_inner_points(count: usize, seed: u64) -> Vec<Complex64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| loop {
            let z = Complex64::new(rng.gen_range(0.0..8.0), rng.gen_range(0.1..8.0));
            if z.norm_sqr() <= 64.0 {
                break z;
            }
        })
        .collect()
}

/// Uniform points over a square box (0, side)².
pub fn box_points(count: usize, side: f64, seed: u64) -> Vec<Complex64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| Complex64::new(rng.gen_range(0.0..side), rng.gen_range(0.0..side)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_are_deterministic_and_in_range() {
        let a = band_points(100, 7);
        let b = band_points(100, 7);
        assert_eq!(a, b);
        assert!(a.iter().all(|z| z.re < 6.0 && z.im < 0.1));
        let p = primary_inner_points(100, 7);
        assert!(p.iter().all(|z| z.norm_sqr() <= 64.0 && z.im >= 0.1));
    }
}
