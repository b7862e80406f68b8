//! Continuous wavelet transform with seed wavelets.
//!
//! The analysing family is L2-normalized, `psi_{a,b}(t) = psi((t - b)/a) / sqrt(a)`,
//! and coefficients are plain Riemann sums over the signal samples:
//!
//! ```text
//! W(a, b) = dt * sum_i s[i] * psi_{a,b}(i * dt)
//! ```
//!
//! Sample `i` sits at `t = i * dt`. The sum is exact for band-limited
//! products sampled above their Nyquist rate and otherwise carries an
//! `O(dt)` error.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::wavelet::SeedWavelet;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CwtGrid {
    pub scales: Vec<f64>,
    pub shifts: Vec<f64>,
    /// `scales.len() x shifts.len()`.
    pub coefficients: Matrix,
    pub signal_delta: f64,
}

impl CwtGrid {
    pub fn coefficient(&self, scale_idx: usize, shift_idx: usize) -> f64 {
        self.coefficients[(scale_idx, shift_idx)]
    }
}

fn check_scale(a: f64) -> Result<()> {
    if a.is_finite() && a > 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidScale(a))
    }
}

/// `psi((t - b)/a) / sqrt(a)`.
pub fn dilate_shift(w: &SeedWavelet, a: f64, b: f64, t: f64) -> Result<f64> {
    check_scale(a)?;
    w.evaluate((t - b) / a).map(|v| v / a.sqrt())
}

pub fn cwt(
    signal: &[f64],
    signal_delta: f64,
    w: &SeedWavelet,
    scales: &[f64],
    shifts: &[f64],
) -> Result<CwtGrid> {
    if signal.is_empty() {
        return Err(Error::EmptySignal);
    }
    if !(signal_delta.is_finite() && signal_delta > 0.0) {
        return Err(Error::InvalidDelta(signal_delta));
    }
    if scales.is_empty() || shifts.is_empty() {
        return Err(Error::InvalidGrid(
            "need at least one scale and one shift".into(),
        ));
    }
    for &a in scales {
        check_scale(a)?;
    }
    if let Some(&b) = shifts.iter().find(|b| !b.is_finite()) {
        return Err(Error::NonFiniteArgument {
            name: "shift",
            value: b,
        });
    }
    if let Some(&v) = signal.iter().find(|v| !v.is_finite()) {
        return Err(Error::NonFiniteArgument {
            name: "signal",
            value: v,
        });
    }

    let coefficients = Matrix::from_fn(scales.len(), shifts.len(), |ia, ib| {
        let (a, b) = (scales[ia], shifts[ib]);
        let norm = signal_delta / a.sqrt();
        let sum: f64 = signal
            .iter()
            .enumerate()
            .map(|(i, &s)| s * w.value((i as f64 * signal_delta - b) / a))
            .sum();
        norm * sum
    });
    Ok(CwtGrid {
        scales: scales.to_vec(),
        shifts: shifts.to_vec(),
        coefficients,
        signal_delta,
    })
}
