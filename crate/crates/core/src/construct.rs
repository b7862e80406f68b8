//! Symmetric random wavelets with a prescribed number of vanishing moments.
//!
//! Layout of the constructed seed (length `n = 2l + 1`, `p` moments):
//!
//! ```text
//! index:  -l ... -l+lR-1 | -l+lR ... l-lR | l-lR+1 ... l
//! value:  u_R (random)   | x (solved)     | u_R reversed
//! ```
//!
//! with `lR = (n - p)/2`. The middle block holds `p` consecutive integer
//! nodes centered on 0. The mirrored wings contribute `2 sum_j (-l+j)^i u_R(j)`
//! to every even moment and nothing to odd moments, so the middle values
//! solve the `p x p` Vandermonde system `M x = c` with
//! `c_i = -2 sum_j (-l+j)^i u_R(j)` for even `i` and `c_i = 0` for odd `i`.
//!
//! `p` must be odd (so the nodes are symmetric integers) and `n - p` even.
//! The system becomes badly conditioned as `p` grows; `p <= 13` is the
//! practical ceiling and [`ConstructionSystem::condition`] reports the
//! infinity-norm condition number so callers can warn above
//! [`CONDITION_WARN`].

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{condition_number, solve_dense as solve, Matrix};
use crate::rng;
use crate::seedseq::SeedSequence;
use crate::util::{int_pow, pairwise_sum};

pub use crate::linalg::solve_dense;

/// Condition numbers above this deserve a warning.
pub const CONDITION_WARN: f64 = 1e12;

/// Recommended upper bound on `p`.
pub const PRACTICAL_MAX_ORDER: usize = 13;

/// The linear system for the middle block, plus what it was built from.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConstructionSystem {
    /// `p x p`, entry `(m, j) = nodes[j]^m`.
    #[serde(rename = "M")]
    pub matrix: Matrix,
    pub c: Vec<f64>,
    /// Solution of `M x = c`; empty until solved.
    pub x: Vec<f64>,
    pub nodes: Vec<i64>,
    pub wing: Vec<f64>,
    /// Infinity-norm condition number of `M`.
    pub condition: f64,
}

impl ConstructionSystem {
    /// `max_i |x_i - x_{p-1-i}|`.
    pub fn symmetry_defect(&self) -> f64 {
        let p = self.x.len();
        (0..p)
            .map(|i| (self.x[i] - self.x[p - 1 - i]).abs())
            .fold(0.0, f64::max)
    }

    pub fn is_solved(&self) -> bool {
        self.x.len() == self.nodes.len()
    }
}

/// Validates `(n, p)` and returns `(l, l_R)`.
pub fn check_parameters(n: usize, p: usize) -> Result<(usize, usize)> {
    if n.is_multiple_of(2) || n < 3 {
        return Err(Error::Parity(format!(
            "seed length n = {n} must be odd and >= 3"
        )));
    }
    if p == 0 {
        return Err(Error::Parity("moment order p must be >= 1".into()));
    }
    if p >= n {
        return Err(Error::Parity(format!(
            "moment order p = {p} must be < n = {n}: a length-n seed cannot have n vanishing moments"
        )));
    }
    if p.is_multiple_of(2) {
        return Err(Error::Parity(format!(
            "moment order p = {p} must be odd so the middle block has p symmetric nodes \
             (n - p must be even); request p = {} explicitly if that many moments are acceptable",
            p + 1
        )));
    }
    Ok(((n - 1) / 2, (n - p) / 2))
}

/// Builds `M` and `c` for a given wing. The returned system is unsolved.
pub fn assemble_system(wing: &[f64], n: usize, p: usize) -> Result<ConstructionSystem> {
    let (l, l_r) = check_parameters(n, p)?;
    if wing.len() != l_r {
        return Err(Error::WingLength {
            got: wing.len(),
            expected: l_r,
        });
    }
    let half = ((p - 1) / 2) as i64;
    let nodes: Vec<i64> = (-half..=half).collect();
    let matrix = Matrix::from_fn(p, p, |m, j| int_pow(nodes[j] as f64, m));
    let c = (0..p)
        .map(|i| {
            if i % 2 == 1 {
                0.0
            } else {
                let terms: Vec<f64> = wing
                    .iter()
                    .enumerate()
                    .map(|(j, &u)| int_pow(j as f64 - l as f64, i) * u)
                    .collect();
                -2.0 * pairwise_sum(&terms)
            }
        })
        .collect();
    let condition = condition_number(&matrix)?;
    Ok(ConstructionSystem {
        matrix,
        c,
        x: Vec::new(),
        nodes,
        wing: wing.to_vec(),
        condition,
    })
}

/// Solves the system in place and returns the seed values
/// `[wing, x, wing reversed]`.
///
/// The middle block placed in the seed is `x` averaged with its mirror
/// image, so the seed is exactly symmetric; the raw solution stays in
/// `system.x`.
fn solve_and_assemble(system: &mut ConstructionSystem) -> Result<Vec<f64>> {
    system.x = solve(&system.matrix, &system.c)?;
    let p = system.x.len();
    let middle = (0..p).map(|i| 0.5 * (system.x[i] + system.x[p - 1 - i]));
    Ok(system
        .wing
        .iter()
        .copied()
        .chain(middle)
        .chain(system.wing.iter().rev().copied())
        .collect())
}

/// Builds the symmetric seed from an explicit wing with sampling period
/// `delta` (centered, so `t0 = -l*delta`).
pub fn build_from_wing(
    wing: &[f64],
    n: usize,
    p: usize,
    delta: f64,
) -> Result<(SeedSequence, ConstructionSystem)> {
    let mut system = assemble_system(wing, n, p)?;
    let values = solve_and_assemble(&mut system)?;
    if values.iter().all(|&v| v == 0.0) {
        return Err(Error::Degenerate("zero wing yields the zero sequence"));
    }
    Ok((SeedSequence::centered(values, delta)?, system))
}

/// Random symmetric seed spanning `[-1, 1]` (`delta = 2/(n-1)`) with at
/// least `p` vanishing moments. The wing is Gaussian with the given
/// variance, drawn from `rng_seed`.
pub fn build_symmetric_wavelet(
    n: usize,
    p: usize,
    variance: f64,
    rng_seed: u64,
) -> Result<(SeedSequence, ConstructionSystem)> {
    check_parameters(n, p)?;
    build_symmetric_wavelet_with_delta(n, p, variance, rng_seed, 2.0 / (n - 1) as f64)
}

pub fn build_symmetric_wavelet_with_delta(
    n: usize,
    p: usize,
    variance: f64,
    rng_seed: u64,
    delta: f64,
) -> Result<(SeedSequence, ConstructionSystem)> {
    let (_, l_r) = check_parameters(n, p)?;
    let wing = rng::gaussian(l_r, variance, rng_seed)?;
    build_from_wing(&wing, n, p, delta)
}
