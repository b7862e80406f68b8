//! Band-limited wavelets generated by finite "seed" sequences.
//!
//! A real sequence `u(-l..=l)` sampled at period `delta` defines the
//! continuous function
//!
//! ```text
//! psi(t) = sum_k u(k) sin(W (t - k delta)) / (W (t - k delta)),   W = pi / delta
//! ```
//!
//! which interpolates the samples, has a spectrum supported on `[-W, W]`,
//! and is an admissible wavelet exactly when the sequence sums to zero. Its
//! moments are `delta^(m+1) * sum k^m u(k)`, so vanishing moments reduce to
//! linear conditions on the sequence, which [`construct`] uses to build
//! symmetric random wavelets with a prescribed number of vanishing moments.
//!
//! ```
//! use seedwave::{moments, SeedSequence, SeedWavelet};
//!
//! let seed = SeedSequence::centered(vec![1.0, -2.0, 1.0], 1.0).unwrap();
//! let w = SeedWavelet::new(seed.clone());
//! assert!((w.evaluate(0.0).unwrap() + 2.0).abs() < 1e-12);
//! assert_eq!(moments::vanishing_order(&seed, 1e-9).unwrap().vanishing_order, 2);
//! ```

pub mod construct;
pub mod error;
pub mod export;
pub mod linalg;
pub mod moments;
pub mod quadrature;
pub mod rng;
pub mod seedseq;
pub mod transform;
mod util;
pub mod wavelet;

pub use construct::{build_symmetric_wavelet, ConstructionSystem};
pub use error::{Error, Result};
pub use linalg::Matrix;
pub use moments::MomentReport;
pub use quadrature::{Integral, QuadratureConfig};
pub use seedseq::{SeedRecord, SeedSequence};
pub use transform::CwtGrid;
pub use wavelet::SeedWavelet;
