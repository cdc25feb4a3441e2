//! Invariants over randomly drawn laws and grids.

use dualquant::dual::{distortion_hessian, dual_weights, dual_weights_by_quadrature, projection_mean, residual_sup};
use dualquant::lloyd::lloyd_map;
use dualquant::special::{chi, power_grid, truncexp_grid};
use dualquant::spectral::tridiag_eigs;
use dualquant::{lloyd_solve, DistributionSpec, DualGrid, LloydConfig, Orientation};
use proptest::prelude::*;

fn law() -> impl Strategy<Value = DistributionSpec> {
    prop_oneof![
        (-2.0f64..0.0, 0.5f64..3.0).prop_map(|(a, l)| DistributionSpec::uniform(a, a + l).unwrap()),
        (0.2f64..3.0, -1.0f64..1.0, 0.5f64..2.0, any::<bool>()).prop_map(|(al, a, l, rising)| {
            let o = if rising { Orientation::Rising } else { Orientation::Falling };
            DistributionSpec::power(al, a, a + l, o).unwrap()
        }),
        (prop_oneof![-3.0f64..-0.1, 0.1f64..3.0], -1.0f64..1.0, 0.5f64..2.0)
            .prop_map(|(lam, a, l)| DistributionSpec::trunc_exp(lam, a, a + l).unwrap()),
        (2usize..6).prop_map(|n| DistributionSpec::periodic_counterexample(2.0, n).unwrap()),
    ]
}

fn law_and_grid() -> impl Strategy<Value = (DistributionSpec, DualGrid)> {
    law().prop_flat_map(|d| {
        let (a, b) = (d.a(), d.b());
        prop::collection::vec(0.0f64..1.0, 1..10).prop_filter_map("repeated points", move |mut u| {
            u.sort_by(f64::total_cmp);
            let interior: Vec<f64> = u.iter().map(|t| a + t * (b - a)).collect();
            DualGrid::from_interior(a, &interior, b).ok().map(|g| (d.clone(), g))
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn splitting_preserves_the_point((_d, g) in law_and_grid(), t in 0.0f64..=1.0) {
        let xi = g.a() + t * (g.b() - g.a());
        let m = projection_mean(&g, xi).unwrap();
        prop_assert!((m - xi).abs() <= 1e-14 * (1.0 + xi.abs()));
    }

    #[test]
    fn weights_are_a_mean_preserving_law((d, g) in law_and_grid()) {
        let p = dual_weights(&g, &d);
        prop_assert!(p.iter().all(|&w| w >= 0.0));
        prop_assert!((p.iter().sum::<f64>() - 1.0).abs() <= 1e-12);
        let mean: f64 = p.iter().zip(g.points()).map(|(w, x)| w * x).sum();
        prop_assert!((mean - d.mean()).abs() <= 1e-10 * (1.0 + d.mean().abs()));
        let q = dual_weights_by_quadrature(&g, &d).unwrap();
        for (x, y) in p.iter().zip(&q) {
            prop_assert!((x - y).abs() <= 1e-10);
        }
    }

    #[test]
    fn quantile_inverts_cdf(d in law(), t in 0.0f64..=1.0) {
        let x = d.a() + t * (d.b() - d.a());
        prop_assert!((d.quantile(d.cdf(x)) - x).abs() <= 1e-10 * (1.0 + x.abs()));
    }

    #[test]
    fn lloyd_map_preserves_order_and_support((d, g) in law_and_grid()) {
        let x = g.interior().to_vec();
        let tx = lloyd_map(&x, &d);
        let mut prev = d.a();
        for &v in &tx {
            prop_assert!(v >= prev && v <= d.b());
            prev = v;
        }
    }

    #[test]
    fn lloyd_map_is_monotone((d, g) in law_and_grid(), s in 0.0f64..1.0) {
        // Moving every interior point towards b cannot move any image point towards a.
        let x = g.interior().to_vec();
        let y: Vec<f64> = x.iter().map(|v| v + s * (d.b() - v)).collect();
        for (u, v) in lloyd_map(&x, &d).iter().zip(lloyd_map(&y, &d)) {
            prop_assert!(v >= u - 1e-12);
        }
    }

    #[test]
    fn chi_is_increasing(alpha in 0.2f64..4.0, r in prop::sample::select(vec![1.0, 1.5, 2.0, 3.0]), x in 0.01f64..20.0, dx in 0.01f64..5.0) {
        prop_assert!(chi(alpha, r, x).unwrap() < chi(alpha, r, x + dx).unwrap());
    }

    #[test]
    fn power_ratios_do_not_depend_on_n(alpha in 0.3f64..3.0, n in 3usize..12) {
        let small = power_grid(alpha, 2.0, n, 0.0, 1.0, Orientation::Rising).unwrap();
        let large = power_grid(alpha, 2.0, n + 3, 0.0, 1.0, Orientation::Rising).unwrap();
        let ratios = |g: &DualGrid| g.points().windows(2).map(|w| w[0] / w[1]).collect::<Vec<f64>>();
        for (u, v) in ratios(&small).iter().zip(ratios(&large)) {
            prop_assert!((u - v).abs() <= 1e-12);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn log_concave_optima_are_strict_minima(lam in prop_oneof![-3.0f64..-0.1, 0.1f64..3.0], n in 3usize..16) {
        let d = DistributionSpec::trunc_exp(lam, 0.0, 1.0).unwrap();
        let g = truncexp_grid(lam, 2.0, n, 0.0, 1.0).unwrap();
        prop_assert!(residual_sup(&g, &d, 2.0).unwrap() < 1e-9);
        let l = lloyd_solve(&d, n, 2.0, &LloydConfig::default()).unwrap();
        for (x, y) in l.grid.points().iter().zip(g.points()) {
            prop_assert!((x - y).abs() <= 1e-8);
        }
        prop_assert!(tridiag_eigs(&distortion_hessian(&g, &d, 2.0).unwrap())[0] > 0.0);
    }

    #[test]
    fn general_exponent_grids_are_critical(lam in 0.2f64..2.0, r in prop::sample::select(vec![1.0, 1.5, 3.0]), n in 3usize..9) {
        let d = DistributionSpec::trunc_exp(lam, 0.0, 1.0).unwrap();
        let g = truncexp_grid(lam, r, n, 0.0, 1.0).unwrap();
        prop_assert!(residual_sup(&g, &d, r).unwrap() < 1e-9);
        let p = DistributionSpec::power(lam + 1.0, 0.0, 1.0, Orientation::Rising).unwrap();
        let g = power_grid(lam + 1.0, r, n, 0.0, 1.0, Orientation::Rising).unwrap();
        prop_assert!(residual_sup(&g, &p, r).unwrap() < 1e-9);
    }
}
