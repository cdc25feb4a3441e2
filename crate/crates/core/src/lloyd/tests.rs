use super::*;
use crate::distributions::Orientation;

fn unif() -> DistributionSpec {
    DistributionSpec::uniform(0.0, 1.0).unwrap()
}

fn texp() -> DistributionSpec {
    DistributionSpec::trunc_exp(1.0, 0.0, 1.0).unwrap()
}

#[test]
fn uniform_map_takes_midpoints() {
    let x = [0.1, 0.5, 0.6];
    let t = lloyd_map(&x, &unif());
    let want = [0.25, 0.35, 0.75];
    for (a, b) in t.iter().zip(want) {
        assert!((a - b).abs() < 1e-15, "{a} vs {b}");
    }
}

#[test]
fn collapsed_triple_is_fixed() {
    let t = lloyd_map(&[0.4, 0.4, 0.4], &texp());
    assert_eq!(t[1], 0.4);
}

#[test]
fn uniform_jacobian_is_half() {
    let j = lloyd_jacobian(&[0.1, 0.3, 0.35, 0.9], &unif()).unwrap();
    for v in j.lower.iter().chain(&j.upper) {
        assert!((v - 0.5).abs() < 1e-13);
    }
    assert!(j.diag.iter().all(|&d| d == 0.0));
}

#[test]
fn jacobian_matches_finite_differences() {
    let dists = [texp(), DistributionSpec::power(2.0, 0.0, 1.0, Orientation::Rising).unwrap()];
    let x = vec![0.15, 0.3, 0.52, 0.8];
    for d in &dists {
        let j = lloyd_jacobian(&x, d).unwrap().to_dense();
        for k in 0..x.len() {
            let h = 1e-6;
            let mut xp = x.clone();
            let mut xm = x.clone();
            xp[k] += h;
            xm[k] -= h;
            let (tp, tm) = (lloyd_map(&xp, d), lloyd_map(&xm, d));
            for i in 0..x.len() {
                let fd = (tp[i] - tm[i]) / (2.0 * h);
                assert!((fd - j[i][k]).abs() < 1e-7, "{d} J[{i}][{k}] = {} vs {fd}", j[i][k]);
            }
        }
    }
}

#[test]
fn jacobian_needs_density() {
    let tab = crate::Tabulated::new(vec![0.0, 0.5, 1.0], vec![0.0, 0.3, 1.0]).unwrap();
    let d = DistributionSpec::tabulated(tab, "t.csv");
    assert!(matches!(lloyd_jacobian(&[0.5], &d), Err(Error::Unsupported(_))));
}

#[test]
fn uniform_converges_to_equidistant_with_rate() {
    for n in [5usize, 10, 20] {
        let init: Vec<f64> = (1..n - 1).map(|i| (i as f64 / (n - 1) as f64).powi(2)).collect();
        let cfg = LloydConfig { init: LloydInit::Interior(init), track_rate: true, ..Default::default() };
        let res = lloyd_solve(&unif(), n, 2.0, &cfg).unwrap();
        assert!(res.converged);
        let want = (std::f64::consts::PI / (n - 1) as f64).cos();
        // Error after stopping is at most tol * rho / (1 - rho).
        let slack = 2.0 * cfg.tol / (1.0 - want);
        for (i, x) in res.grid.points().iter().enumerate() {
            assert!((x - i as f64 / (n - 1) as f64).abs() < slack);
        }
        let got = res.rate_estimate.unwrap();
        assert!((got / want - 1.0).abs() < 0.02, "N={n}: {got} vs {want}");
    }
}

#[test]
fn uniform_default_start_is_exact() {
    for n in [2usize, 3, 7, 20, 50] {
        let res = lloyd_solve(&unif(), n, 2.0, &LloydConfig::default()).unwrap();
        assert!(res.converged);
        for (i, x) in res.grid.points().iter().enumerate() {
            assert!((x - i as f64 / (n - 1) as f64).abs() < 1e-12);
        }
        let h = 1.0 / (n - 1) as f64;
        assert!((res.weights[0] - h / 2.0).abs() < 1e-15);
        assert!((res.weights[n - 1] - h / 2.0).abs() < 1e-15);
        for w in &res.weights[1..n - 1] {
            assert!((w - h).abs() < 1e-15);
        }
    }
}

#[test]
fn rejects_other_exponents() {
    assert!(matches!(lloyd_solve(&unif(), 5, 3.0, &LloydConfig::default()), Err(Error::Domain(_))));
}

#[test]
fn bad_initial_grid_is_rejected() {
    let cfg = LloydConfig { init: LloydInit::Interior(vec![0.5, 0.2]), ..Default::default() };
    assert!(matches!(lloyd_solve(&unif(), 4, 2.0, &cfg), Err(Error::InvalidGrid(_))));
    let cfg = LloydConfig { init: LloydInit::Interior(vec![0.5]), ..Default::default() };
    assert!(lloyd_solve(&unif(), 4, 2.0, &cfg).is_err());
}

#[test]
fn iteration_cap_reports_non_convergence() {
    let cfg = LloydConfig { max_iter: 3, ..Default::default() };
    let res = lloyd_solve(&DistributionSpec::uniform(0.0, 1.0).unwrap(), 8, 2.0, &LloydConfig {
        init: LloydInit::Interior(vec![0.01, 0.02, 0.03, 0.04, 0.05, 0.06]),
        ..cfg
    })
    .unwrap();
    assert!(!res.converged);
    assert_eq!(res.iterations, 3);
}

#[test]
fn trace_distortion_does_not_increase() {
    let mut last = f64::INFINITY;
    let mut count = 0;
    let cfg = LloydConfig { max_iter: 200, ..Default::default() };
    lloyd_solve_traced(
        &texp(),
        9,
        2.0,
        &cfg,
        Some(|rec: &IterRecord| {
            assert!(rec.distortion <= last + 1e-15);
            last = rec.distortion;
            count += 1;
        }),
    )
    .unwrap();
    assert!(count > 5);
}

#[test]
fn monotone_trapping_holds_for_ordered_starts() {
    // T is order preserving, so starts below and above the fixed point
    // stay on their side.
    let d = texp();
    let star = lloyd_solve(&d, 7, 2.0, &LloydConfig::default()).unwrap();
    let xs = star.grid.interior().to_vec();
    let mut lo: Vec<f64> = xs.iter().map(|x| x * 0.7).collect();
    let mut hi: Vec<f64> = xs.iter().map(|x| x + 0.3 * (1.0 - x)).collect();
    for _ in 0..50 {
        lo = lloyd_map(&lo, &d);
        hi = lloyd_map(&hi, &d);
        for ((l, h), s) in lo.iter().zip(&hi).zip(&xs) {
            assert!(*l <= s + 1e-14 && *h >= s - 1e-14);
        }
    }
}

#[test]
fn certificate_for_uniform_half_matrices() {
    for n in [4usize, 5, 8, 9] {
        let m = n - 2;
        let a = Tridiag::new(vec![0.5; m - 1], vec![0.0; m], vec![0.5; m - 1]).unwrap();
        let k = n.div_ceil(2) - 1;
        let c = contraction_certificate(&vec![a; k]).unwrap();
        assert!(c.certified(), "N={n}: {c:?}");
        assert_eq!(c.n_tilde, k);
    }
}

#[test]
fn certificate_single_interior_point() {
    let a = Tridiag::new(vec![], vec![0.0], vec![]).unwrap();
    let c = contraction_certificate(&[a]).unwrap();
    assert_eq!(c.bound, 0.0);
    assert_eq!(c.product_norm, 0.0);
}

#[test]
fn certificate_names_violated_condition() {
    let a = Tridiag::new(vec![0.7, 0.5], vec![0.0; 3], vec![0.5, 0.5]).unwrap();
    let err = contraction_certificate(&[a.clone(), a]).unwrap_err();
    assert!(matches!(&err, Error::Precondition(m) if m.contains("row sum")), "{err}");
    let b = Tridiag::new(vec![0.5, 0.0], vec![0.0; 3], vec![0.5, 0.5]).unwrap();
    let err = contraction_certificate(&[b.clone(), b]).unwrap_err();
    assert!(matches!(&err, Error::Precondition(m) if m.contains("> 0")), "{err}");
    let c = Tridiag::new(vec![0.5, 0.5], vec![0.0; 3], vec![0.5, 0.5]).unwrap();
    assert!(matches!(contraction_certificate(&[c]), Err(Error::Precondition(_))));
}

#[test]
fn truncexp_run_is_certified() {
    let d = texp();
    let n = 8;
    let star = lloyd_solve(&d, n, 2.0, &LloydConfig::default()).unwrap();
    let xs = star.grid.interior().to_vec();
    let mut x: Vec<f64> = DualGrid::equidistant(0.0, 1.0, n).unwrap().interior().to_vec();
    let k = n.div_ceil(2) - 1;
    let mut iterates = vec![x.clone()];
    for _ in 0..k {
        x = lloyd_map(&x, &d);
        iterates.push(x.clone());
    }
    // Pointwise Jacobians.
    let js: Vec<Tridiag> = iterates[..k].iter().map(|p| lloyd_jacobian(p, &d).unwrap()).collect();
    assert!(contraction_certificate(&js).unwrap().certified());
    // Mean value matrices give the observed contraction.
    let ms: Vec<Tridiag> = iterates[..k].iter().map(|p| mean_value_jacobian(&xs, p, &d).unwrap()).collect();
    let c = contraction_certificate(&ms).unwrap();
    assert!(c.certified());
    let err = |v: &[f64]| v.iter().zip(&xs).fold(0.0f64, |m, (a, b)| m.max((a - b).abs()));
    assert!(err(&iterates[k]) <= c.bound * err(&iterates[0]) + 1e-15);
    // The mean value relation itself.
    let y = ms[0].mul_vec(&iterates[0].iter().zip(&xs).map(|(a, b)| a - b).collect::<Vec<_>>());
    for ((yi, ti), s) in y.iter().zip(&iterates[1]).zip(&xs) {
        assert!((yi - (ti - s)).abs() < 1e-12);
    }
}
