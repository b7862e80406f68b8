//! The `verify` report.

use seedwave::moments::{
    analytic_moment, default_fd_step, moment_fd_oracle_richardson, moment_report, MAX_ORACLE_ORDER,
};
use seedwave::{Integral, MomentReport, QuadratureConfig, SeedSequence, SeedWavelet};
use serde::Serialize;

/// Highest moment order cross-checked against the spectral oracle.
const ORACLE_ORDER: usize = 4;
const ORACLE_LEVELS: usize = 2;
const INTERPOLATION_TOL: f64 = 1e-12;
const ENERGY_TOL: f64 = 1e-3;
const CONSTANT_REL_ERROR: f64 = 1e-6;
/// Finite differences of order m lose about `eps * (delta sum|u|) * t_max^m / h^m`
/// to rounding; with the default steps this factor covers it tenfold.
const ROUNDING_ALLOWANCE: f64 = 1e-9;

#[derive(Debug, Clone, Serialize)]
pub struct SeedSummary {
    pub len: usize,
    pub delta: f64,
    pub t0: f64,
    pub sum: f64,
    pub centered: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct OracleRow {
    pub order: usize,
    pub analytic: f64,
    pub finite_difference: f64,
    pub tolerance: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct Energy {
    pub analytic: f64,
    pub quadrature: f64,
    pub error_estimate: f64,
    pub half_width: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub seed: SeedSummary,
    pub moments: Option<MomentReport>,
    pub moment_oracle: Vec<OracleRow>,
    pub admissibility_constant: Option<Integral>,
    pub energy: Energy,
    pub checks: Vec<Check>,
    pub pass: bool,
}

impl VerifyReport {
    pub fn failed_checks(&self) -> Vec<&'static str> {
        self.checks
            .iter()
            .filter(|c| !c.pass)
            .map(|c| c.name)
            .collect()
    }
}

fn check(name: &'static str, pass: bool, detail: impl Into<String>) -> Check {
    Check {
        name,
        pass,
        detail: detail.into(),
    }
}

/// `delta^(m+1) * sum |k^m u(k)|`, the size of the terms of moment m.
fn moment_scale(seq: &SeedSequence, m: usize) -> f64 {
    let l = (seq.len() - 1) / 2;
    let terms: f64 = seq
        .values()
        .iter()
        .enumerate()
        .map(|(i, u)| ((i as f64 - l as f64).powi(m as i32) * u).abs())
        .sum();
    seq.delta().powi(m as i32 + 1) * terms
}

pub fn verify(
    seq: &SeedSequence,
    tol: f64,
    max_order: Option<usize>,
    min_order: Option<usize>,
) -> VerifyReport {
    let w = SeedWavelet::new(seq.clone());
    let cfg = QuadratureConfig::default();
    let mut checks = Vec::new();

    let constant = w.admissibility_constant(&cfg);
    checks.push(match &constant {
        Ok(c)
            if c.value.is_finite() && c.value > 0.0 && c.relative_error() < CONSTANT_REL_ERROR =>
        {
            check("admissible", true, format!("C = {:e}", c.value))
        }
        Ok(c) => check(
            "admissible",
            false,
            format!("C = {:e} +- {:e}", c.value, c.error),
        ),
        Err(e) => check("admissible", false, e.to_string()),
    });

    let worst = seq
        .values()
        .iter()
        .enumerate()
        .map(|(i, &u)| (w.value(seq.sample_time(i)) - u).abs())
        .fold(0.0, f64::max);
    let bound = INTERPOLATION_TOL * seq.max_abs();
    checks.push(check(
        "interpolation",
        worst <= bound,
        format!("max |psi(t_k) - u(k)| = {worst:e}, bound {bound:e}"),
    ));

    let half_width = w.energy_window();
    let analytic = w.energy();
    let energy = match w.energy_by_quadrature(half_width, &cfg) {
        Ok(q) => {
            let pass = (q.value - analytic).abs() <= ENERGY_TOL * analytic;
            checks.push(check(
                "energy",
                pass,
                format!("quadrature {:e} vs {analytic:e}", q.value),
            ));
            Energy {
                analytic,
                quadrature: q.value,
                error_estimate: q.error,
                half_width,
            }
        }
        Err(e) => {
            checks.push(check("energy", false, e.to_string()));
            Energy {
                analytic,
                quadrature: f64::NAN,
                error_estimate: f64::NAN,
                half_width,
            }
        }
    };

    let mut moments = None;
    let mut moment_oracle = Vec::new();
    if seq.is_centered() {
        match moment_report(seq, tol, max_order) {
            Ok(report) => {
                if let Some(p) = min_order {
                    checks.push(check(
                        "vanishing_order",
                        report.vanishing_order >= p,
                        format!("{} vanishing moments, required {p}", report.vanishing_order),
                    ));
                }
                moments = Some(report);
            }
            Err(e) => checks.push(check("moments", false, e.to_string())),
        }
        let top = ORACLE_ORDER.min(MAX_ORACLE_ORDER);
        let mass = moment_scale(seq, 0);
        let reach = w.time_support().1.abs().max(w.time_support().0.abs());
        let mut oracle_ok = true;
        let mut detail = String::from("ok");
        for m in 0..=top {
            let analytic = analytic_moment(seq, m).expect("centered seed, small order");
            let fd = moment_fd_oracle_richardson(&w, m, default_fd_step(&w, m), ORACLE_LEVELS);
            let tolerance = 1e-6 * moment_scale(seq, m).max(1.0)
                + 1e-4 * analytic.abs()
                + ROUNDING_ALLOWANCE * mass * reach.powi(m as i32);
            match fd {
                Ok(fd) => {
                    if fd.is_nan() || (analytic - fd).abs() > tolerance {
                        oracle_ok = false;
                        detail =
                            format!("order {m}: analytic {analytic:e}, finite difference {fd:e}");
                    }
                    moment_oracle.push(OracleRow {
                        order: m,
                        analytic,
                        finite_difference: fd,
                        tolerance,
                    });
                }
                Err(e) => {
                    oracle_ok = false;
                    detail = format!("order {m}: {e}");
                }
            }
        }
        checks.push(check("moment_oracle", oracle_ok, detail));
    } else if let Some(p) = min_order {
        checks.push(check(
            "vanishing_order",
            false,
            format!("seed is not centered, cannot confirm {p} moments"),
        ));
    }

    let pass = checks.iter().all(|c| c.pass);
    VerifyReport {
        seed: SeedSummary {
            len: seq.len(),
            delta: seq.delta(),
            t0: seq.t0(),
            sum: seq.sum(),
            centered: seq.is_centered(),
        },
        moments,
        moment_oracle,
        admissibility_constant: constant.ok(),
        energy,
        checks,
        pass,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(r: &VerifyReport) -> Vec<&'static str> {
        r.failed_checks()
    }

    #[test]
    fn triplet_passes_with_order_two() {
        let seq = SeedSequence::centered(vec![1.0, -2.0, 1.0], 1.0).unwrap();
        let r = verify(&seq, 1e-9, None, Some(2));
        assert!(r.pass, "{:?}", names(&r));
        assert_eq!(r.moments.unwrap().vanishing_order, 2);
        assert_eq!(r.moment_oracle.len(), 5);
    }

    #[test]
    fn nonzero_mean_fails_admissibility_only() {
        let seq = SeedSequence::centered(vec![1.0, 2.0, 1.0], 1.0).unwrap();
        let r = verify(&seq, 1e-9, None, None);
        assert!(!r.pass);
        assert_eq!(names(&r), vec!["admissible"]);
        assert!(r.admissibility_constant.is_none());
    }

    #[test]
    fn two_sample_seed_is_not_centered_but_passes() {
        let seq = SeedSequence::new(vec![1.0, 2.0], 1.0, 0.0).unwrap();
        assert!(!verify(&seq, 1e-9, None, None).pass);
        let seq = SeedSequence::new(vec![1.0, -1.0], 0.5, 0.25).unwrap();
        let r = verify(&seq, 1e-9, None, None);
        assert!(r.pass, "{:?}", names(&r));
        assert!(r.moments.is_none());
        let r = verify(&seq, 1e-9, None, Some(1));
        assert_eq!(names(&r), vec!["vanishing_order"]);
    }

    #[test]
    fn min_order_is_enforced() {
        let seq = SeedSequence::centered(vec![1.0, -2.0, 1.0], 1.0).unwrap();
        assert_eq!(
            names(&verify(&seq, 1e-9, None, Some(3))),
            vec!["vanishing_order"]
        );
    }

    #[test]
    fn max_order_extends_the_listing() {
        let seq = SeedSequence::centered(vec![1.0, -2.0, 1.0], 1.0).unwrap();
        let r = verify(&seq, 1e-9, Some(6), None);
        assert_eq!(r.moments.unwrap().moments.len(), 7);
    }
}
