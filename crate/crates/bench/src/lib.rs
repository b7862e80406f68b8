//! Shared fixtures for the criterion benchmarks.

use seedwave::{SeedSequence, SeedWavelet};

/// Zero-mean Gaussian seed of length `n` on `[-1, 1]`.
pub fn random_wavelet(n: usize) -> SeedWavelet {
    SeedWavelet::new(SeedSequence::random(n, 1.0, 0x5eed).expect("valid parameters"))
}

/// Smooth chirp-like test signal of `len` samples.
pub fn test_signal(len: usize, dt: f64) -> Vec<f64> {
    (0..len)
        .map(|i| {
            let t = i as f64 * dt;
            (2.0 * t + 3.0 * t * t).sin()
        })
        .collect()
}
