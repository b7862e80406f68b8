//! Adaptive Simpson quadrature and central finite differences.
//!
//! These are the numerical oracles used to cross-check the closed-form
//! results elsewhere in the crate (energy, admissibility constant, spectral
//! derivatives). Integrands must be finite on closed intervals; extending a
//! removable singularity at an endpoint is the caller's job.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Hard cap on live segments, independent of `max_depth`.
const MAX_SEGMENTS: usize = 1 << 20;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadratureConfig {
    pub rel_tol: f64,
    pub abs_tol: f64,
    /// Maximum number of bisections applied to any initial segment.
    pub max_depth: u32,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        Self {
            rel_tol: 1e-8,
            abs_tol: 1e-12,
            max_depth: 50,
        }
    }
}

impl QuadratureConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.rel_tol.is_finite() && self.rel_tol > 0.0) {
            return Err(Error::QuadratureConfig(format!(
                "rel_tol must be > 0, got {}",
                self.rel_tol
            )));
        }
        if !(self.abs_tol.is_finite() && self.abs_tol > 0.0) {
            return Err(Error::QuadratureConfig(format!(
                "abs_tol must be > 0, got {}",
                self.abs_tol
            )));
        }
        if self.max_depth < 10 {
            return Err(Error::QuadratureConfig(format!(
                "max_depth must be >= 10, got {}",
                self.max_depth
            )));
        }
        Ok(())
    }
}

/// An integral value with its estimated absolute error.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Integral {
    pub value: f64,
    pub error: f64,
}

impl Integral {
    pub fn relative_error(&self) -> f64 {
        self.error / self.value.abs()
    }
}

struct Segment {
    a: f64,
    b: f64,
    // f at a, a+h/4, a+h/2, a+3h/4, b
    f: [f64; 5],
    depth: u32,
    value: f64,
    error: f64,
}

impl Segment {
    fn new<F: Fn(f64) -> f64>(
        f: &F,
        a: f64,
        b: f64,
        fa: f64,
        fm: f64,
        fb: f64,
        depth: u32,
    ) -> Self {
        let m = 0.5 * (a + b);
        let fl = f(0.5 * (a + m));
        let fr = f(0.5 * (m + b));
        let h = b - a;
        let coarse = h / 6.0 * (fa + 4.0 * fm + fb);
        let fine = h / 12.0 * (fa + 4.0 * fl + 2.0 * fm + 4.0 * fr + fb);
        let diff = fine - coarse;
        Self {
            a,
            b,
            f: [fa, fl, fm, fr, fb],
            depth,
            value: fine + diff / 15.0,
            error: diff.abs() / 15.0,
        }
    }

    fn split<F: Fn(f64) -> f64>(&self, f: &F) -> (Self, Self) {
        let m = 0.5 * (self.a + self.b);
        let [fa, fl, fm, fr, fb] = self.f;
        (
            Self::new(f, self.a, m, fa, fl, fm, self.depth + 1),
            Self::new(f, m, self.b, fm, fr, fb, self.depth + 1),
        )
    }
}

impl PartialEq for Segment {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Segment {}

impl PartialOrd for Segment {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Segment {
    fn cmp(&self, other: &Self) -> Ordering {
        // ties broken by position so the refinement order is deterministic
        self.error
            .total_cmp(&other.error)
            .then_with(|| other.a.total_cmp(&self.a))
    }
}

/// Compensated sum of segment values and errors.
fn totals(heap: &BinaryHeap<Segment>) -> (f64, f64) {
    let mut sum = 0.0;
    let mut comp = 0.0;
    let mut err = 0.0;
    for s in heap.iter() {
        let t = sum + s.value;
        if sum.abs() >= s.value.abs() {
            comp += (sum - t) + s.value;
        } else {
            comp += (s.value - t) + sum;
        }
        sum = t;
        err += s.error;
    }
    (sum + comp, err)
}

/// Adaptive Simpson quadrature of `f` over `[a, b]`.
///
/// Segments are refined worst-first until the summed step-halving error
/// estimate drops below `max(abs_tol, rel_tol * |value|)`.
pub fn integrate<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    cfg: &QuadratureConfig,
) -> Result<Integral> {
    integrate_partitioned(f, &[a, b], cfg)
}

/// Same as [`integrate`], starting from the given breakpoints instead of a
/// single interval. Oscillatory integrands need a starting partition finer
/// than their oscillation, or the first Simpson estimates can agree by
/// accident.
pub fn integrate_partitioned<F: Fn(f64) -> f64>(
    f: F,
    breaks: &[f64],
    cfg: &QuadratureConfig,
) -> Result<Integral> {
    cfg.validate()?;
    if breaks.len() < 2 {
        return Err(Error::InvalidGrid("need at least two breakpoints".into()));
    }
    for w in breaks.windows(2) {
        if !(w[0].is_finite() && w[1].is_finite() && w[0] < w[1]) {
            return Err(Error::InvalidRange { a: w[0], b: w[1] });
        }
    }

    let mut heap = BinaryHeap::with_capacity(2 * breaks.len());
    let mut f_left = f(breaks[0]);
    for w in breaks.windows(2) {
        let f_right = f(w[1]);
        let fm = f(0.5 * (w[0] + w[1]));
        heap.push(Segment::new(&f, w[0], w[1], f_left, fm, f_right, 0));
        f_left = f_right;
    }

    let (mut value, mut error) = totals(&heap);
    loop {
        if !(value.is_finite() && error.is_finite()) {
            return Err(Error::NonConvergence {
                estimate: value,
                error,
            });
        }
        if error <= cfg.abs_tol.max(cfg.rel_tol * value.abs()) {
            // the running sums drift; confirm on exact totals
            let (v, e) = totals(&heap);
            value = v;
            error = e;
            if error <= cfg.abs_tol.max(cfg.rel_tol * value.abs()) {
                return Ok(Integral { value, error });
            }
        }
        let worst = heap.pop().expect("heap is never empty");
        if worst.depth >= cfg.max_depth || heap.len() + 2 > MAX_SEGMENTS {
            heap.push(worst);
            let (estimate, error) = totals(&heap);
            return Err(Error::NonConvergence { estimate, error });
        }
        let (left, right) = worst.split(&f);
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
    }
}

fn binomial(n: usize, k: usize) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

/// Second-order accurate central difference for the `order`-th derivative
/// of `f` at `x0`, `order` in `1..=6`.
///
/// Even orders use `sum (-1)^k C(d,k) f(x0 + (d/2 - k) h) / h^d`; odd orders
/// average the two half-step stencils, e.g. `(f(x+h) - f(x-h)) / 2h`.
pub fn central_difference<F: Fn(f64) -> f64>(f: F, x0: f64, order: usize, h: f64) -> Result<f64> {
    if !(1..=6).contains(&order) {
        return Err(Error::UnsupportedOrder(order));
    }
    if !(h.is_finite() && h > 0.0) {
        return Err(Error::InvalidStep(h));
    }
    if !x0.is_finite() {
        return Err(Error::NonFiniteArgument {
            name: "x0",
            value: x0,
        });
    }
    let sign = |k: usize| if k.is_multiple_of(2) { 1.0 } else { -1.0 };
    let sum = if order.is_multiple_of(2) {
        let r = (order / 2) as f64;
        (0..=order)
            .map(|k| sign(k) * binomial(order, k) * f(x0 + (r - k as f64) * h))
            .sum::<f64>()
    } else {
        let r = ((order - 1) / 2) as f64;
        let s: f64 = (0..order)
            .map(|k| {
                let c = sign(k) * binomial(order - 1, k);
                let off = r - k as f64;
                c * (f(x0 + (off + 1.0) * h) - f(x0 + (off - 1.0) * h))
            })
            .sum();
        0.5 * s
    };
    Ok(sum / h.powi(order as i32))
}

/// Richardson extrapolation of [`central_difference`] over steps
/// `h, h/2, ..., h/2^levels`. Each level removes one more even power of `h`
/// from the truncation error.
pub fn central_difference_richardson<F: Fn(f64) -> f64>(
    f: F,
    x0: f64,
    order: usize,
    h: f64,
    levels: usize,
) -> Result<f64> {
    let mut table = (0..=levels)
        .map(|i| central_difference(&f, x0, order, h / f64::powi(2.0, i as i32)))
        .collect::<Result<Vec<f64>>>()?;
    let mut factor = 4.0;
    for _ in 0..levels {
        table = table
            .windows(2)
            .map(|w| (factor * w[1] - w[0]) / (factor - 1.0))
            .collect();
        factor *= 4.0;
    }
    Ok(table[0])
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn cfg() -> QuadratureConfig {
        QuadratureConfig::default()
    }

    #[test]
    fn polynomial() {
        let r = integrate(|x| x * x, 0.0, 1.0, &cfg()).unwrap();
        assert!((r.value - 1.0 / 3.0).abs() <= 1e-10);
    }

    #[test]
    fn cubics_are_exact() {
        for &(a, b) in &[(0.0, 1.0), (-3.0, 7.5), (1e3, 1e3 + 2.0)] {
            let p = |x: f64| 2.0 * x * x * x - x * x + 3.0 * x - 5.0;
            let anti = |x: f64| 0.5 * x.powi(4) - x.powi(3) / 3.0 + 1.5 * x * x - 5.0 * x;
            let exact = anti(b) - anti(a);
            let r = integrate(p, a, b, &cfg()).unwrap();
            assert!(
                (r.value - exact).abs() <= 1e-13 * exact.abs(),
                "{a}..{b}: {} vs {exact}",
                r.value
            );
        }
    }

    #[test]
    fn odd_function_on_symmetric_interval() {
        let c = cfg();
        let r = integrate(|x: f64| x.powi(3) * (2.0 * x).cos(), -1.0, 1.0, &c).unwrap();
        assert!(r.value.abs() <= c.abs_tol);
    }

    #[test]
    fn two_sample_admissibility_integrand() {
        // |F(w)|^2 / w for seed {1,-1}, delta 1/2: sin^2(w/4)/w, extended by 0 at w = 0.
        // Reference: (gamma + ln(pi) - Ci(pi)) / 2 from scipy.special.sici.
        let g = |w: f64| {
            if w == 0.0 {
                0.0
            } else {
                (w / 4.0).sin().powi(2) / w
            }
        };
        let r = integrate(g, 0.0, 2.0 * PI, &cfg()).unwrap();
        assert!((r.value - 0.8241388193522536).abs() <= 1e-9);
        assert!(r.relative_error() <= 1e-8);
    }

    #[test]
    fn halving_tolerance_never_grows_error() {
        let f = |x: f64| (3.0 * x).sin() * (-x * x).exp() + 1.0 / (1.0 + x * x);
        let mut c = QuadratureConfig {
            rel_tol: 1e-4,
            ..cfg()
        };
        let mut last = f64::INFINITY;
        for _ in 0..12 {
            let r = integrate(f, -3.0, 4.0, &c).unwrap();
            assert!(r.error <= last);
            last = r.error;
            c.rel_tol /= 2.0;
        }
    }

    #[test]
    fn depth_exhaustion_reports_best_estimate() {
        let c = QuadratureConfig {
            rel_tol: 1e-15,
            abs_tol: 1e-300,
            max_depth: 10,
        };
        match integrate(|x: f64| x.abs().sqrt(), -1.0, 1.0, &c) {
            Err(Error::NonConvergence { estimate, .. }) => {
                assert!((estimate - 4.0 / 3.0).abs() < 1e-3)
            }
            other => panic!("expected non-convergence, got {other:?}"),
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            integrate(|x| x, 1.0, 0.0, &cfg()),
            Err(Error::InvalidRange { .. })
        ));
        let bad = QuadratureConfig {
            max_depth: 3,
            ..cfg()
        };
        assert!(integrate(|x| x, 0.0, 1.0, &bad).is_err());
    }

    #[test]
    fn second_derivative_of_square() {
        for x0 in [-2.0, 0.0, 3.5] {
            let d = central_difference(|x| x * x, x0, 2, 1e-3).unwrap();
            assert!((d - 2.0).abs() <= 1e-6);
        }
    }

    #[test]
    fn constants_have_zero_derivatives() {
        for order in 1..=6 {
            assert_eq!(central_difference(|_| 4.0, 0.3, order, 0.5).unwrap(), 0.0);
        }
    }

    #[test]
    fn stencils_recover_polynomial_derivatives() {
        // x^d has d-th derivative d!; the second-order stencils are exact on it
        // up to the O(h^2) term, which Richardson removes.
        for order in 1..=6usize {
            let fact: f64 = (1..=order).map(|k| k as f64).product();
            let d =
                central_difference_richardson(|x: f64| x.powi(order as i32), 0.0, order, 0.5, 2)
                    .unwrap();
            assert!((d - fact).abs() <= 1e-9 * fact, "order {order}: {d}");
        }
    }

    #[test]
    fn odd_stencils_match_textbook_forms() {
        let f = |x: f64| x.sin();
        let h = 0.01;
        let d1 = central_difference(f, 0.7, 1, h).unwrap();
        assert_eq!(d1, 0.5 * (f(0.7 + h) - f(0.7 - h)) / h);
        let d3 = central_difference(f, 0.7, 3, h).unwrap();
        let text = (f(0.7 + 2.0 * h) - 2.0 * f(0.7 + h) + 2.0 * f(0.7 - h) - f(0.7 - 2.0 * h))
            / (2.0 * h.powi(3));
        assert!((d3 - text).abs() <= 1e-6);
        assert!((d3 + 0.7f64.cos()).abs() <= 1e-4);
    }

    #[test]
    fn unsupported_orders() {
        assert_eq!(
            central_difference(|x| x, 0.0, 0, 0.1),
            Err(Error::UnsupportedOrder(0))
        );
        assert_eq!(
            central_difference(|x| x, 0.0, 7, 0.1),
            Err(Error::UnsupportedOrder(7))
        );
        assert_eq!(
            central_difference(|x| x, 0.0, 1, 0.0),
            Err(Error::InvalidStep(0.0))
        );
    }
}
