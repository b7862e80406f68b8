//! Seed sequences: finite, uniformly sampled real sequences that generate
//! wavelets by sinc interpolation.
//!
//! A [`SeedSequence`] is immutable once built. Zero mean is a *predicate*
//! ([`SeedSequence::is_admissible`]) rather than a construction requirement,
//! so non-admissible sequences can be loaded and inspected.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rng;
use crate::util::{max_abs, pairwise_sum};

/// Fraction of a sampling period by which `t0` may miss `-l*delta` and the
/// sequence still counts as centered.
const CENTER_TOL: f64 = 1e-9;

/// On-disk form of a seed: `{"values": [...], "delta": .., "t0": ..}`.
///
/// Deserializing into this type never fails on semantic grounds; use
/// `SeedSequence::try_from` to validate.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SeedRecord {
    pub values: Vec<f64>,
    pub delta: f64,
    pub t0: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "SeedRecord", into = "SeedRecord")]
pub struct SeedSequence {
    values: Vec<f64>,
    delta: f64,
    t0: f64,
}

impl SeedSequence {
    /// Validates and builds a sequence. Sample `i` sits at `t0 + i*delta`.
    pub fn new(values: Vec<f64>, delta: f64, t0: f64) -> Result<Self> {
        if values.len() < 2 {
            return Err(Error::TooShort { len: values.len() });
        }
        if let Some((index, &value)) = values.iter().enumerate().find(|(_, v)| !v.is_finite()) {
            return Err(Error::NonFiniteValue { index, value });
        }
        if !(delta.is_finite() && delta > 0.0) {
            return Err(Error::InvalidDelta(delta));
        }
        if !t0.is_finite() {
            return Err(Error::InvalidOrigin(t0));
        }
        Ok(Self { values, delta, t0 })
    }

    /// Odd-length sequence centered on t = 0, i.e. `t0 = -l*delta`.
    pub fn centered(values: Vec<f64>, delta: f64) -> Result<Self> {
        let l = values.len().saturating_sub(1) / 2;
        Self::new(values, delta, -(l as f64) * delta)
    }

    /// Zero-mean Gaussian seed of odd length `n` spanning `[-1, 1]`,
    /// so `delta = 2/(n-1)`.
    pub fn random(n: usize, variance: f64, rng_seed: u64) -> Result<Self> {
        if n.is_multiple_of(2) || n < 3 {
            return Err(Error::InvalidLength(n));
        }
        Self::random_with_delta(n, variance, rng_seed, 2.0 / (n - 1) as f64)
    }

    /// Like [`SeedSequence::random`] with an explicit sampling period; the
    /// sequence is still centered.
    pub fn random_with_delta(n: usize, variance: f64, rng_seed: u64, delta: f64) -> Result<Self> {
        if n.is_multiple_of(2) || n < 3 {
            return Err(Error::InvalidLength(n));
        }
        let mut values = rng::gaussian(n, variance, rng_seed)?;
        let mean = pairwise_sum(&values) / n as f64;
        for v in &mut values {
            *v -= mean;
        }
        Self::centered(values, delta)
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn delta(&self) -> f64 {
        self.delta
    }

    pub fn t0(&self) -> f64 {
        self.t0
    }

    /// Nyquist band edge `pi / delta` in rad/s.
    pub fn band_edge(&self) -> f64 {
        PI / self.delta
    }

    /// Time of sample `i` (0-based position in `values`).
    pub fn sample_time(&self, i: usize) -> f64 {
        self.t0 + i as f64 * self.delta
    }

    pub fn is_centered(&self) -> bool {
        let n = self.values.len();
        if n.is_multiple_of(2) {
            return false;
        }
        let l = ((n - 1) / 2) as f64;
        (self.t0 + l * self.delta).abs() <= CENTER_TOL * self.delta
    }

    /// `l` such that the indices run over `-l..=l`; `None` unless centered.
    pub fn half_length(&self) -> Option<usize> {
        self.is_centered().then(|| (self.values.len() - 1) / 2)
    }

    /// Total time span `(n-1)*delta`; `2*l*delta` for centered seeds.
    pub fn span(&self) -> f64 {
        (self.values.len() - 1) as f64 * self.delta
    }

    pub fn sum(&self) -> f64 {
        pairwise_sum(&self.values)
    }

    pub fn mean(&self) -> f64 {
        self.sum() / self.values.len() as f64
    }

    pub fn max_abs(&self) -> f64 {
        max_abs(&self.values)
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&v| v == 0.0)
    }

    /// Zero-sum tolerance: `1e-12 * n * max(1, max|u|)`.
    pub fn admissibility_tolerance(&self) -> f64 {
        1e-12 * self.values.len() as f64 * self.max_abs().max(1.0)
    }

    pub fn is_admissible(&self) -> bool {
        self.sum().abs() <= self.admissibility_tolerance()
    }

    /// Fails with [`Error::NotAdmissible`] unless the values sum to zero.
    pub fn ensure_admissible(&self) -> Result<()> {
        if self.is_admissible() {
            Ok(())
        } else {
            Err(Error::NotAdmissible {
                sum: self.sum(),
                tolerance: self.admissibility_tolerance(),
            })
        }
    }

    pub fn ensure_centered(&self) -> Result<usize> {
        self.half_length().ok_or(Error::NotCentered)
    }

    /// Values in reverse order; `delta` and `t0` are kept, so on a centered
    /// seed this maps `u(k)` to `u(-k)`.
    pub fn reversed(&self) -> Self {
        let mut values = self.values.clone();
        values.reverse();
        Self {
            values,
            delta: self.delta,
            t0: self.t0,
        }
    }

    /// Same grid, every value multiplied by `c`.
    pub fn scaled(&self, c: f64) -> Result<Self> {
        Self::new(
            self.values.iter().map(|v| c * v).collect(),
            self.delta,
            self.t0,
        )
    }

    /// Splits a centered seed into its even part `0.5*(u + u_inv)` and odd
    /// part `0.5*(u - u_inv)`.
    pub fn decompose_even_odd(&self) -> Result<(Self, Self)> {
        self.ensure_centered()?;
        let n = self.values.len();
        let (even, odd): (Vec<f64>, Vec<f64>) = (0..n)
            .map(|i| {
                let (a, b) = (self.values[i], self.values[n - 1 - i]);
                (0.5 * (a + b), 0.5 * (a - b))
            })
            .unzip();
        let mk = |values| Self {
            values,
            delta: self.delta,
            t0: self.t0,
        };
        Ok((mk(even), mk(odd)))
    }
}

impl TryFrom<SeedRecord> for SeedSequence {
    type Error = Error;

    fn try_from(r: SeedRecord) -> Result<Self> {
        Self::new(r.values, r.delta, r.t0)
    }
}

impl From<SeedSequence> for SeedRecord {
    fn from(s: SeedSequence) -> Self {
        SeedRecord {
            values: s.values,
            delta: s.delta,
            t0: s.t0,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn two_sample_seed_is_valid_but_not_centered() {
        let s = SeedSequence::new(vec![1.0, -1.0], 0.5, 0.25).unwrap();
        assert!(!s.is_centered());
        assert!(s.is_admissible());
        assert_eq!(s.mean(), 0.0);
        assert_eq!(s.band_edge(), 2.0 * PI);
    }

    #[test]
    fn symmetric_triplet_is_centered() {
        let s = SeedSequence::new(vec![1.0, -2.0, 1.0], 1.0, -1.0).unwrap();
        assert!(s.is_centered());
        assert_eq!(s.half_length(), Some(1));
        assert!(s.is_admissible());
        assert_eq!(s.mean(), 0.0);
        assert_eq!(s.span(), 2.0);
    }

    #[test]
    fn nonzero_mean_is_valid_but_not_admissible() {
        let s = SeedSequence::new(vec![1.0, 2.0], 1.0, 0.0).unwrap();
        assert!(!s.is_centered());
        assert!(!s.is_admissible());
        assert_eq!(s.mean(), 1.5);
        assert!(matches!(
            s.ensure_admissible(),
            Err(Error::NotAdmissible { .. })
        ));
    }

    #[test]
    fn validation_errors_are_distinct() {
        assert_eq!(
            SeedSequence::new(vec![1.0], 1.0, 0.0),
            Err(Error::TooShort { len: 1 })
        );
        assert!(matches!(
            SeedSequence::new(vec![1.0, f64::NAN], 1.0, 0.0),
            Err(Error::NonFiniteValue { index: 1, .. })
        ));
        assert_eq!(
            SeedSequence::new(vec![1.0, -1.0], 0.0, 0.0),
            Err(Error::InvalidDelta(0.0))
        );
        assert_eq!(
            SeedSequence::new(vec![1.0, -1.0], -1.0, 0.0),
            Err(Error::InvalidDelta(-1.0))
        );
    }

    #[test]
    fn even_length_is_never_centered() {
        let s = SeedSequence::new(vec![1.0, -1.0, 1.0, -1.0], 1.0, -1.5).unwrap();
        assert!(!s.is_centered());
        assert_eq!(s.decompose_even_odd(), Err(Error::NotCentered));
    }

    #[test]
    fn random_seed_has_exact_zero_mean() {
        let s = SeedSequence::random(41, 1.0, 3).unwrap();
        assert!(s.is_centered());
        assert_eq!(s.delta(), 0.05);
        assert_eq!(s.t0(), -1.0);
        assert!(s.mean().abs() <= 1e-14);
        assert!(s.sum().abs() <= 1e-14 * 41.0 * s.max_abs());
    }

    #[test]
    fn random_seed_is_deterministic() {
        let a = SeedSequence::random(41, 1.0, 99).unwrap();
        let b = SeedSequence::random(41, 1.0, 99).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn random_seed_sample_variance_smoke() {
        for (n, seed) in [(41, 11), (401, 12)] {
            let s = SeedSequence::random(n, 1.0, seed).unwrap();
            let var = s.values().iter().map(|v| v * v).sum::<f64>() / (n - 1) as f64;
            assert!((var - 1.0).abs() <= 0.25, "n = {n}: sample variance {var}");
        }
    }

    #[test]
    fn random_seed_rejects_bad_parameters() {
        assert_eq!(
            SeedSequence::random(4, 1.0, 0),
            Err(Error::InvalidLength(4))
        );
        assert_eq!(
            SeedSequence::random(1, 1.0, 0),
            Err(Error::InvalidLength(1))
        );
        assert_eq!(
            SeedSequence::random(5, 0.0, 0),
            Err(Error::InvalidVariance(0.0))
        );
    }

    #[test]
    fn reverse_examples() {
        let s = SeedSequence::centered(vec![3.0, 1.0, -2.0, -1.0, -1.0], 1.0).unwrap();
        assert_eq!(s.reversed().values(), &[-1.0, -1.0, -2.0, 1.0, 3.0]);
        assert_eq!(s.reversed().t0(), s.t0());
        let p = SeedSequence::centered(vec![1.0, 0.0, 1.0], 1.0).unwrap();
        assert_eq!(p.reversed(), p);
    }

    #[test]
    fn decomposition_examples() {
        let s = SeedSequence::centered(vec![3.0, 1.0, -2.0, -1.0, -1.0], 1.0).unwrap();
        let (e, o) = s.decompose_even_odd().unwrap();
        assert_eq!(e.values(), &[1.0, 0.0, -2.0, 0.0, 1.0]);
        assert_eq!(o.values(), &[2.0, 1.0, 0.0, -1.0, -2.0]);

        let sym = SeedSequence::centered(vec![1.0, -2.0, 1.0], 1.0).unwrap();
        let (e, o) = sym.decompose_even_odd().unwrap();
        assert_eq!(e.values(), sym.values());
        assert!(o.is_zero());

        let anti = SeedSequence::centered(vec![1.0, 0.0, -1.0], 1.0).unwrap();
        let (e, o) = anti.decompose_even_odd().unwrap();
        assert!(e.is_zero());
        assert_eq!(o.values(), anti.values());
    }

    #[test]
    fn json_round_trip_preserves_digits() {
        let s = SeedSequence::new(
            vec![0.1, -0.30000000000000004, 1e-300, 2.0 / 3.0],
            0.05,
            -0.075,
        )
        .unwrap();
        let text = serde_json::to_string(&s).unwrap();
        let back: SeedSequence = serde_json::from_str(&text).unwrap();
        assert_eq!(back, s);
        assert_eq!(serde_json::to_string(&back).unwrap(), text);
    }

    #[test]
    fn json_validation_runs_on_load() {
        let bad = r#"{"values": [1.0], "delta": 1.0, "t0": 0.0}"#;
        assert!(serde_json::from_str::<SeedSequence>(bad).is_err());
    }

    fn centered_seed() -> impl Strategy<Value = SeedSequence> {
        (1usize..20, 0.01f64..2.0)
            .prop_flat_map(|(l, delta)| {
                (
                    prop::collection::vec(-10.0f64..10.0, 2 * l + 1),
                    Just(delta),
                )
            })
            .prop_map(|(v, d)| SeedSequence::centered(v, d).unwrap())
    }

    proptest! {
        #[test]
        fn even_odd_parts_recompose_and_are_symmetric(s in centered_seed()) {
            let (e, o) = s.decompose_even_odd().unwrap();
            let n = s.len();
            for i in 0..n {
                let j = n - 1 - i;
                prop_assert_eq!(e.values()[i], e.values()[j]);
                prop_assert_eq!(o.values()[i], -o.values()[j]);
                // u + u_inv rounds relative to the larger of the pair
                let u = s.values()[i];
                let pair = u.abs().max(s.values()[j].abs());
                let r = e.values()[i] + o.values()[i];
                prop_assert!((r - u).abs() <= f64::EPSILON * pair);
            }
            prop_assert_eq!(o.values()[n / 2], 0.0);
            prop_assert_eq!(e.values()[n / 2], s.values()[n / 2]);
        }

        #[test]
        fn reverse_is_an_involution(s in centered_seed()) {
            prop_assert_eq!(s.reversed().reversed(), s.clone());
            let tol = 1e-15 * s.len() as f64 * s.max_abs().max(1.0);
            prop_assert!((s.reversed().mean() - s.mean()).abs() <= tol);
        }
    }
}
