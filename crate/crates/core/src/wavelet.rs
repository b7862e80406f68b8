//! Seed wavelets: the sinc interpolant of a seed sequence,
//!
//! ```text
//! psi(t) = sum_k u(k) * sinc(W * (t - t_k)),   W = pi / delta,
//! ```
//!
//! together with its closed-form spectrum
//! `F(w) = delta * sum_k u(k) * exp(-j w t_k)` for `|w| <= W` and zero beyond.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::quadrature::{integrate_partitioned, Integral, QuadratureConfig};
use crate::seedseq::SeedSequence;
use crate::util::pairwise_sum;

/// Below this |x| the sinc kernel switches to its Taylor series.
const SINC_SERIES_CUTOFF: f64 = 1e-4;

/// `sin(x)/x` with the removable singularity filled in.
pub fn sinc(x: f64) -> f64 {
    if x.abs() < SINC_SERIES_CUTOFF {
        let x2 = x * x;
        1.0 - x2 / 6.0 + x2 * x2 / 120.0
    } else {
        x.sin() / x
    }
}

/// `sinc(pi * r)`, with the argument reduced around the nearest integer so
/// integer `r != 0` gives an exact zero.
pub fn sinc_pi(r: f64) -> f64 {
    let x = PI * r;
    if x.abs() < SINC_SERIES_CUTOFF {
        return sinc(x);
    }
    let m = r.round();
    let s = (PI * (r - m)).sin();
    // sin(pi r) = (-1)^m sin(pi (r - m))
    let s = if m.rem_euclid(2.0) == 0.0 { s } else { -s };
    s / x
}

/// A seed sequence viewed as a continuous, band-limited function.
#[derive(Debug, Clone, PartialEq)]
pub struct SeedWavelet {
    seed: SeedSequence,
    band_edge: f64,
}

impl From<SeedSequence> for SeedWavelet {
    fn from(seed: SeedSequence) -> Self {
        Self::new(seed)
    }
}

impl SeedWavelet {
    pub fn new(seed: SeedSequence) -> Self {
        let band_edge = seed.band_edge();
        Self { seed, band_edge }
    }

    pub fn seed(&self) -> &SeedSequence {
        &self.seed
    }

    /// `pi / delta`, in rad/s.
    pub fn band_edge(&self) -> f64 {
        self.band_edge
    }

    /// First and last sample times. The function is not zero outside this
    /// interval; it decays like `1/t`.
    pub fn time_support(&self) -> (f64, f64) {
        (self.seed.t0(), self.seed.sample_time(self.seed.len() - 1))
    }

    /// Midpoint of [`SeedWavelet::time_support`].
    pub fn center(&self) -> f64 {
        let (a, b) = self.time_support();
        0.5 * (a + b)
    }

    /// psi(t); fails on non-finite `t`.
    pub fn evaluate(&self, t: f64) -> Result<f64> {
        if !t.is_finite() {
            return Err(Error::NonFiniteArgument {
                name: "t",
                value: t,
            });
        }
        Ok(self.value(t))
    }

    /// Unchecked psi(t): NaN in, NaN out.
    pub fn value(&self, t: f64) -> f64 {
        // position on the sample grid, in units of delta
        let s = (t - self.seed.t0()) / self.seed.delta();
        self.seed
            .values()
            .iter()
            .enumerate()
            .map(|(i, &u)| u * sinc_pi(s - i as f64))
            .sum()
    }

    /// Samples psi on `num_points` evenly spaced times from `t_start` to
    /// `t_end`, both included.
    pub fn evaluate_grid(
        &self,
        t_start: f64,
        t_end: f64,
        num_points: usize,
    ) -> Result<Vec<(f64, f64)>> {
        let ts = linspace(t_start, t_end, num_points)?;
        Ok(ts.into_iter().map(|t| (t, self.value(t))).collect())
    }

    /// Closed-form Fourier transform `F(omega)`. The band is closed: at
    /// `|omega| == band_edge` the in-band value is returned.
    pub fn spectrum(&self, omega: f64) -> Result<Complex64> {
        if !omega.is_finite() {
            return Err(Error::NonFiniteArgument {
                name: "omega",
                value: omega,
            });
        }
        Ok(self.spectrum_value(omega))
    }

    pub fn spectrum_value(&self, omega: f64) -> Complex64 {
        if omega.abs() > self.band_edge {
            return Complex64::new(0.0, 0.0);
        }
        let (re, im) =
            self.seed
                .values()
                .iter()
                .enumerate()
                .fold((0.0, 0.0), |(re, im), (i, &u)| {
                    let phase = omega * self.seed.sample_time(i);
                    (re + u * phase.cos(), im - u * phase.sin())
                });
        Complex64::new(re, im) * self.seed.delta()
    }

    /// Exact squared L2 norm, `delta * sum u(k)^2` (shifted sincs are
    /// orthogonal with norm `delta`).
    pub fn energy(&self) -> f64 {
        let squares: Vec<f64> = self.seed.values().iter().map(|u| u * u).collect();
        self.seed.delta() * pairwise_sum(&squares)
    }

    /// Half-width `200 * n * delta` used by the energy cross-check; the
    /// truncated tail is below `1/(200 pi^2)` of the energy.
    pub fn energy_window(&self) -> f64 {
        200.0 * self.seed.len() as f64 * self.seed.delta()
    }

    /// Quadrature of psi^2 over `center +- half_width`, with breakpoints every
    /// half sample so no oscillation is under-resolved at the start.
    pub fn energy_by_quadrature(
        &self,
        half_width: f64,
        cfg: &QuadratureConfig,
    ) -> Result<Integral> {
        if !(half_width.is_finite() && half_width > 0.0) {
            return Err(Error::NonFiniteArgument {
                name: "half_width",
                value: half_width,
            });
        }
        let c = self.center();
        let step = 0.5 * self.seed.delta();
        let pieces = (2.0 * half_width / step).ceil().max(1.0) as usize;
        let breaks = linspace(c - half_width, c + half_width, pieces + 1)?;
        integrate_partitioned(|t| self.value(t).powi(2), &breaks, cfg)
    }

    /// `C = integral_0^W |F(omega)|^2 / omega d omega`.
    ///
    /// Only defined for zero-mean seeds: then `F(0) = 0` and the integrand
    /// extends continuously to 0 at the origin. A seed with nonzero mean
    /// gives a divergent integral and is rejected with
    /// [`Error::NotAdmissible`].
    pub fn admissibility_constant(&self, cfg: &QuadratureConfig) -> Result<Integral> {
        if self.seed.is_zero() {
            return Err(Error::Degenerate(
                "all-zero seed has no admissibility constant",
            ));
        }
        self.seed.ensure_admissible()?;
        let integrand = |w: f64| {
            if w == 0.0 {
                0.0
            } else {
                self.spectrum_value(w).norm_sqr() / w
            }
        };
        // |F|^2 oscillates with periods down to ~2 pi / span
        let pieces = 4 * self.seed.len();
        let breaks = linspace(0.0, self.band_edge, pieces + 1)?;
        integrate_partitioned(integrand, &breaks, cfg)
    }
}

/// `num_points` evenly spaced values from `start` to `end` inclusive.
pub fn linspace(start: f64, end: f64, num_points: usize) -> Result<Vec<f64>> {
    if !(start.is_finite() && end.is_finite() && start < end) {
        return Err(Error::InvalidGrid(format!(
            "need finite start < end, got [{start}, {end}]"
        )));
    }
    if num_points < 2 {
        return Err(Error::InvalidGrid(format!(
            "need at least 2 points, got {num_points}"
        )));
    }
    let step = (end - start) / (num_points - 1) as f64;
    Ok((0..num_points)
        .map(|i| {
            if i == num_points - 1 {
                end
            } else {
                start + i as f64 * step
            }
        })
        .collect())
}
