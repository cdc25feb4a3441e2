use super::*;
use crate::distributions::Orientation;
use proptest::prelude::*;

fn uniform() -> DistributionSpec {
    DistributionSpec::uniform(0.0, 1.0).unwrap()
}

fn truncexp() -> DistributionSpec {
    DistributionSpec::trunc_exp(1.0, 0.0, 1.0).unwrap()
}

fn fd_gradient(grid: &DualGrid, dist: &DistributionSpec, r: f64, h: f64) -> Vec<f64> {
    let x = grid.points().to_vec();
    (1..x.len() - 1)
        .map(|i| {
            let mut p = x.clone();
            let mut m = x.clone();
            p[i] += h;
            m[i] -= h;
            let lp = distortion(&DualGrid::new(p).unwrap(), dist, r).unwrap().lr;
            let lm = distortion(&DualGrid::new(m).unwrap(), dist, r).unwrap().lr;
            (lp - lm) / (2.0 * h)
        })
        .collect()
}

#[test]
fn uniform_three_points_quadratic() {
    let g = DualGrid::equidistant(0.0, 1.0, 3).unwrap();
    let d = distortion(&g, &uniform(), 2.0).unwrap();
    assert!((d.lr - 1.0 / 24.0).abs() < 1e-16);
    assert!((distortion_density_form(&g, &uniform(), 2.0).unwrap() - 1.0 / 24.0).abs() < 1e-16);
}

#[test]
fn uniform_equidistant_error_modulus() {
    for r in [1.0f64, 1.5, 2.0, 3.0, 4.5] {
        let c = (2.0 / ((r + 1.0) * (r + 2.0))).powf(1.0 / r);
        for n in [2, 3, 7, 20] {
            let g = DualGrid::equidistant(0.0, 1.0, n).unwrap();
            let d = distortion(&g, &uniform(), r).unwrap().root;
            assert!((d * (n - 1) as f64 - c).abs() < 1e-12, "r={r} n={n}");
        }
    }
}

#[test]
fn reference_truncexp_grid_beats_equidistant() {
    let pts = vec![
        0.0, 0.086271, 0.17510, 0.26663, 0.36105, 0.45853, 0.55929, 0.66355, 0.77156, 0.88361, 1.0,
    ];
    let g = DualGrid::new(pts).unwrap();
    let e = DualGrid::equidistant(0.0, 1.0, 11).unwrap();
    let d = truncexp();
    assert!(distortion(&g, &d, 2.0).unwrap().lr < distortion(&e, &d, 2.0).unwrap().lr);
}

#[test]
fn gradient_examples() {
    let g = DualGrid::new(vec![0.0, 0.3, 1.0]).unwrap();
    let u = uniform();
    let grad = distortion_gradient(&g, &u, 2.0).unwrap();
    assert!((grad[0] + 0.2).abs() < 1e-15);
    assert!((gradient_density_form(&g, &u, 2.0).unwrap()[0] + 0.2).abs() < 1e-15);
    assert!((gradient_cdf_form(&g, &u, 2.0).unwrap()[0] + 0.2).abs() < 1e-15);
    let fd = fd_gradient(&g, &u, 2.0, 1e-5);
    assert!((fd[0] - grad[0]).abs() < 1e-7);
    for r in [1.0, 1.5, 2.0, 3.0] {
        let e = DualGrid::equidistant(0.0, 1.0, 8).unwrap();
        let grad = distortion_gradient(&e, &u, r).unwrap();
        assert!(grad.iter().all(|v| v.abs() < 1e-12), "r={r}: {grad:?}");
    }
}

#[test]
fn gradient_forms_agree() {
    let dists = [
        uniform(),
        truncexp(),
        DistributionSpec::trunc_exp(-3.0, -1.0, 2.0).unwrap(),
        DistributionSpec::power(0.5, 0.0, 1.0, Orientation::Rising).unwrap(),
        DistributionSpec::power(0.5, 0.0, 1.0, Orientation::Falling).unwrap(),
        DistributionSpec::power(2.0, 0.0, 2.0, Orientation::Rising).unwrap(),
        DistributionSpec::periodic_counterexample(2.0, 5).unwrap(),
        DistributionSpec::periodic_counterexample(2.5, 4).unwrap(),
    ];
    for d in &dists {
        let pts: Vec<f64> = (0..7).map(|i| d.a() + d.len() * (i as f64 / 6.0).powf(1.2)).collect();
        let g = DualGrid::for_dist(d, pts).unwrap();
        for r in [1.0, 1.5, 2.0, 3.0] {
            let a = gradient_density_form(&g, d, r).unwrap();
            let b = gradient_cdf_form(&g, d, r).unwrap();
            for (x, y) in a.iter().zip(&b) {
                assert!((x - y).abs() < 1e-9, "{d} r={r}: {x} vs {y}");
            }
            if r == 2.0 {
                let c = gradient_quadratic(&g, d);
                for (x, y) in a.iter().zip(&c) {
                    assert!((x - y).abs() < 1e-10, "{d}: {x} vs {y}");
                }
            }
            let l1 = distortion_density_form(&g, d, r).unwrap();
            let l2 = distortion_cdf_form(&g, d, r).unwrap();
            assert!((l1 - l2).abs() < 1e-10, "{d} r={r}");
        }
        let q = distortion_quadratic(&g, d);
        let p = distortion_density_form(&g, d, 2.0).unwrap();
        assert!((q - p).abs() < 1e-10, "{d}: {q} vs {p}");
    }
}

#[test]
fn counterexample_hessian_is_scaled_toeplitz() {
    for n in [3, 4, 6, 11] {
        let d = DistributionSpec::periodic_counterexample(2.0, n).unwrap();
        let g = DualGrid::equidistant(0.0, 1.0, n).unwrap();
        let h = distortion_hessian(&g, &d, 2.0).unwrap();
        let s = 1.0 / (n - 1) as f64;
        assert!(h.diag.iter().all(|v| v.abs() < 1e-12), "{:?}", h.diag);
        assert!(h.off.iter().all(|v| (v + s).abs() < 1e-12), "{:?}", h.off);
        let grad = distortion_gradient(&g, &d, 2.0).unwrap();
        assert!(grad.iter().all(|v| v.abs() < 1e-10));
    }
}

#[test]
fn hessian_off_diagonal_sign_for_uniform() {
    let g = DualGrid::new(vec![0.0, 0.1, 0.45, 0.5, 0.8, 1.0]).unwrap();
    let h = distortion_hessian(&g, &uniform(), 2.0).unwrap();
    let w = g.widths();
    for (i, v) in h.off.iter().enumerate() {
        assert!(*v < 0.0);
        assert!((v + w[i + 1]).abs() < 1e-15);
    }
}

#[test]
fn hessian_matches_finite_differences() {
    let g = DualGrid::new(vec![0.0, 0.4, 0.7, 1.0]).unwrap();
    let d = truncexp();
    let h = distortion_hessian(&g, &d, 2.0).unwrap();
    let dense = h.to_dense();
    let step = 1e-5;
    let x = g.points().to_vec();
    for j in 1..x.len() - 1 {
        let mut p = x.clone();
        let mut m = x.clone();
        p[j] += step;
        m[j] -= step;
        let gp = distortion_gradient(&DualGrid::new(p).unwrap(), &d, 2.0).unwrap();
        let gm = distortion_gradient(&DualGrid::new(m).unwrap(), &d, 2.0).unwrap();
        for i in 0..gp.len() {
            let fd = (gp[i] - gm[i]) / (2.0 * step);
            assert!((fd - dense[i][j - 1]).abs() < 1e-5);
        }
    }
}

#[test]
fn hessian_needs_density() {
    let xs = vec![0.0, 0.5, 1.0];
    let t = DistributionSpec::tabulated(crate::distributions::Tabulated::new(xs.clone(), xs).unwrap(), "inline");
    let g = DualGrid::equidistant(0.0, 1.0, 4).unwrap();
    assert!(matches!(distortion_hessian(&g, &t, 2.0), Err(Error::Unsupported(_))));
    // CDF-only laws still get distortion and gradient.
    assert!((distortion(&g, &t, 3.0).unwrap().root * 3.0 - (2.0f64 / 20.0).powf(1.0 / 3.0)).abs() < 1e-12);
    assert!(distortion_gradient(&g, &t, 3.0).unwrap().iter().all(|v| v.abs() < 1e-12));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn gradient_matches_finite_differences(
        raw in proptest::collection::vec(0.02f64..1.0, 5),
        which in 0usize..3,
        r in prop_oneof![Just(1.0), Just(2.0), Just(3.0)],
    ) {
        let d = match which {
            0 => uniform(),
            1 => truncexp(),
            _ => DistributionSpec::power(2.0, 0.0, 1.0, Orientation::Rising).unwrap(),
        };
        let total: f64 = raw.iter().sum();
        let mut acc = 0.0;
        let mut pts = vec![0.0];
        for w in &raw[..raw.len() - 1] {
            acc += w / total;
            pts.push(acc);
        }
        pts.push(1.0);
        let g = DualGrid::new(pts).unwrap();
        let grad = distortion_gradient(&g, &d, r).unwrap();
        let fd = fd_gradient(&g, &d, r, 1e-6);
        for (a, b) in grad.iter().zip(&fd) {
            prop_assert!((a - b).abs() <= 1e-7 * a.abs().max(1e-3), "{} vs {}", a, b);
        }
    }
}
