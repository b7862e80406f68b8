use proptest::prelude::*;
use seedwave::construct::{
    assemble_system, build_from_wing, build_symmetric_wavelet, check_parameters,
};
use seedwave::moments::{analytic_moment, vanishing_order, DEFAULT_MOMENT_TOL};
use seedwave::{Error, SeedWavelet};

fn relative_moment(seq: &seedwave::SeedSequence, m: usize) -> f64 {
    let l = (seq.len() - 1) / 2;
    let terms: Vec<f64> = seq
        .values()
        .iter()
        .enumerate()
        .map(|(i, &u)| (i as f64 - l as f64).powi(m as i32) * u)
        .collect();
    let scale: f64 = terms.iter().map(|t| t.abs()).sum();
    terms.iter().sum::<f64>().abs() / scale
}

#[test]
fn grid_sweep() {
    for n in [9, 15, 21, 41] {
        for p in [1, 3, 5, 7] {
            for trial in 0..20u64 {
                let (seq, sys) =
                    build_symmetric_wavelet(n, p, 1.0, 1000 * n as u64 + 10 * p as u64 + trial)
                        .unwrap();
                assert_eq!(seq.len(), n);
                for m in 0..p {
                    let r = relative_moment(&seq, m);
                    assert!(r <= 1e-9, "n={n} p={p} trial={trial} m={m}: {r:e}");
                }
                // the solution grows like l^(p-1); compare in units of its size
                let xmax = sys.x.iter().fold(1.0_f64, |a, v| a.max(v.abs()));
                assert!(sys.symmetry_defect() <= 1e-10 * xmax);
                let order = vanishing_order(&seq, DEFAULT_MOMENT_TOL)
                    .unwrap()
                    .vanishing_order;
                assert!(order > p, "n={n} p={p}: order {order}");
            }
        }
    }
}

#[test]
fn fifteen_three_seed_has_three_moments() {
    let (seq, sys) = build_symmetric_wavelet(15, 3, 1.0, 7).unwrap();
    assert_eq!(sys.nodes, vec![-1, 0, 1]);
    assert_eq!(sys.wing.len(), 6);
    assert!(
        vanishing_order(&seq, DEFAULT_MOMENT_TOL)
            .unwrap()
            .vanishing_order
            >= 3
    );
    let w = SeedWavelet::new(seq);
    assert!(w.seed().is_admissible());
}

#[test]
fn rejects_p_at_least_n() {
    for n in [3, 9, 15] {
        for p in [n, n + 1, n + 2] {
            assert!(matches!(check_parameters(n, p), Err(Error::Parity(_))));
            assert!(build_symmetric_wavelet(n, p, 1.0, 1).is_err());
        }
    }
    let err = check_parameters(15, 17).unwrap_err().to_string();
    assert!(err.contains("p = 17") && err.contains("n = 15"), "{err}");
}

#[test]
fn parity_diagnostic_quotes_the_constraint() {
    let err = check_parameters(15, 4).unwrap_err().to_string();
    assert!(err.contains("odd"), "{err}");
    assert!(err.contains("n - p"), "{err}");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn any_wing_gives_the_requested_order(
        l in 2usize..=12,
        p_half in 0usize..6,
        wing in prop::collection::vec(-3.0f64..3.0, 24),
        delta in 0.05f64..2.0,
    ) {
        let n = 2 * l + 1;
        let p = 2 * p_half + 1;
        prop_assume!(p < n);
        let (_, l_r) = check_parameters(n, p).unwrap();
        let wing = &wing[..l_r];
        prop_assume!(wing.iter().any(|w| w.abs() > 1e-3));
        let (seq, sys) = build_from_wing(wing, n, p, delta).unwrap();
        let order = vanishing_order(&seq, DEFAULT_MOMENT_TOL).unwrap().vanishing_order;
        prop_assert!(order > p, "order {} for p {}", order, p);
        prop_assert_eq!(seq.reversed(), seq.clone());
        let unsolved = assemble_system(wing, n, p).unwrap();
        prop_assert_eq!(unsolved.c, sys.c);
    }

    #[test]
    fn moments_are_homogeneous(
        raw in prop::collection::vec(-1.0f64..1.0, 9),
        c in -10.0f64..10.0,
        m in 0usize..8,
    ) {
        let seq = seedwave::SeedSequence::centered(raw, 0.25).unwrap();
        let scaled = seq.scaled(c).unwrap();
        let a = analytic_moment(&seq, m).unwrap();
        let b = analytic_moment(&scaled, m).unwrap();
        let scale: f64 = seq.values().iter().enumerate()
            .map(|(i, u)| ((i as f64 - 4.0).powi(m as i32) * u).abs()).sum::<f64>()
            * 0.25f64.powi(m as i32 + 1);
        prop_assert!((b - c * a).abs() <= 16.0 * f64::EPSILON * c.abs() * scale);
    }
}
