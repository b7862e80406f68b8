//! Reproducible Gaussian draws.
//!
//! All randomness in the crate goes through [`gaussian`], which seeds a
//! ChaCha8 stream from a `u64`. ChaCha8 output is specified bit-for-bit, so
//! the same seed yields the same samples on every platform.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};

use crate::error::{Error, Result};

/// Draws `len` i.i.d. samples from N(0, variance).
pub fn gaussian(len: usize, variance: f64, rng_seed: u64) -> Result<Vec<f64>> {
    if !(variance.is_finite() && variance > 0.0) {
        return Err(Error::InvalidVariance(variance));
    }
    let normal = Normal::new(0.0, variance.sqrt()).map_err(|_| Error::InvalidVariance(variance))?;
    let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
    Ok((0..len).map(|_| normal.sample(&mut rng)).collect())
}
