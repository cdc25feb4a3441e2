use super::*;
use crate::dual::{distortion_gradient, distortion_hessian, DualGrid};
use proptest::prelude::*;

fn close(a: &[f64], b: &[f64], tol: f64) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol)
}

#[test]
fn toeplitz_examples() {
    assert_eq!(toeplitz_eigs(1.0, 0.0, 3), vec![2.0, 2.0, 2.0]);
    let s = std::f64::consts::SQRT_2;
    assert!(close(&toeplitz_eigs(0.0, -1.0, 3), &[-s, 0.0, s], 1e-15));
    // Zero diagonal, off-diagonal 1/2: cos(k pi/(N-1)) with N = n + 2.
    let n = 6;
    let mut want: Vec<f64> = (1..=n).map(|k| (k as f64 * PI / (n + 1) as f64).cos()).collect();
    want.sort_by(f64::total_cmp);
    assert!(close(&toeplitz_eigs(0.0, 0.5, n), &want, 1e-15));
}

#[test]
fn sturm_examples() {
    let m = TridiagSym::new(vec![2.0, 2.0], vec![0.0]).unwrap();
    assert!(close(&tridiag_eigs(&m), &[2.0, 2.0], 1e-12));
    let t = TridiagSym::toeplitz(0.0, -1.0, 5);
    assert!(close(&tridiag_eigs(&t), &toeplitz_eigs(0.0, -1.0, 5), 1e-10));
}

#[test]
fn sturm_handles_non_toeplitz_matrix() {
    // det of [[4,1,0],[1,3,1],[0,1,2]] - x I, roots 3 and 3 +- sqrt(3).
    let m = TridiagSym::new(vec![4.0, 3.0, 2.0], vec![1.0, 1.0]).unwrap();
    let s3 = 3f64.sqrt();
    assert!(close(&tridiag_eigs(&m), &[3.0 - s3, 3.0, 3.0 + s3], 1e-12));
}

#[test]
fn uniform_hessian_is_positive_definite() {
    let d = DistributionSpec::uniform(0.0, 1.0).unwrap();
    let g = DualGrid::equidistant(0.0, 1.0, 8).unwrap();
    let h = distortion_hessian(&g, &d, 2.0).unwrap();
    assert!(tridiag_eigs(&h)[0] > 0.0);
    assert!(gershgorin_check(&h).positive_certified);
}

#[test]
fn gershgorin_examples() {
    let id = TridiagSym::new(vec![1.0; 3], vec![0.0; 2]).unwrap();
    let rep = gershgorin_check(&id);
    assert!(rep.nonneg_certified && !rep.positive_certified);
    assert!(rep.violated_condition.unwrap().contains("strictly negative"));

    let t = TridiagSym::toeplitz(1.0, -1.0, 4);
    let rep = gershgorin_check(&t);
    assert!(rep.positive_certified);
    assert_eq!(rep.row_sums, vec![1.0, 0.0, 0.0, 1.0]);
    assert!(tridiag_eigs(&t)[0] > 0.0);

    let c = TridiagSym::toeplitz(0.0, -1.0, 4);
    let rep = gershgorin_check(&c);
    assert!(!rep.nonneg_certified && !rep.positive_certified);
    assert_eq!(rep.row_sums[1], -2.0);
    assert!(rep.violated_condition.unwrap().contains("negative"));
}

#[test]
fn counterexample_quadratic() {
    for n in [3usize, 4, 5, 10, 30] {
        let rep = counterexample_min_eig(2.0, n).unwrap();
        assert!(rep.a.abs() < 1e-10, "a = {}", rep.a);
        assert!((rep.b + 1.0).abs() < 1e-10, "b = {}", rep.b);
        let want = -2.0 * (PI / (n - 1) as f64).cos();
        assert!((rep.lambda_min - want).abs() < 1e-10);
        assert!((rep.a_plus_b_expected + 1.0).abs() < 1e-10);
        assert!(rep.identity_holds);
        // cos(pi/2) = 0 makes N = 3 degenerate.
        assert_eq!(rep.is_saddle, n > 3);
        // The equidistant grid is critical.
        let d = DistributionSpec::periodic_counterexample(2.0, n).unwrap();
        let g = DualGrid::equidistant(0.0, 1.0, n).unwrap();
        assert!(distortion_gradient(&g, &d, 2.0).unwrap().iter().all(|v| v.abs() < 1e-10));
    }
}

#[test]
fn counterexample_cubic_decreases_in_n() {
    let (r4, r40) = (counterexample_min_eig(3.0, 4).unwrap(), counterexample_min_eig(3.0, 40).unwrap());
    assert!(r4.identity_holds && r40.identity_holds);
    assert!(r40.b < 0.0 && r40.a + r40.b < 0.0);
    assert!(r40.lambda_min < r4.lambda_min);
}

proptest! {
    #[test]
    fn sturm_matches_toeplitz_closed_form(a in -3.0f64..3.0, b in -3.0f64..3.0, n in 1usize..=64) {
        let t = TridiagSym::toeplitz(a, b, n);
        prop_assert!(close(&tridiag_eigs(&t), &toeplitz_eigs(a, b, n), 1e-10));
    }

    #[test]
    fn positive_certificate_is_sound(diag in proptest::collection::vec(0.0f64..3.0, 2..12), off_seed in 0.01f64..1.0) {
        let n = diag.len();
        let off: Vec<f64> = (0..n - 1).map(|i| -off_seed * (1.0 + (i % 3) as f64) / 3.0).collect();
        let m = TridiagSym::new(diag, off).unwrap();
        let rep = gershgorin_check(&m);
        if rep.positive_certified {
            prop_assert!(rep.nonneg_certified);
            prop_assert!(tridiag_eigs(&m)[0] > 0.0);
        }
    }
}

#[test]
fn saddle_threshold_matches_the_cosine_condition() {
    assert_eq!(saddle_threshold(0.0, -1.0, 100), Some(4));
    // -a/b = cos(pi/5) sits exactly on N = 6, so the first strict case is N = 7.
    let c = (PI / 5.0).cos();
    assert_eq!(saddle_threshold(c + 1e-6, -1.0, 100), Some(7));
    assert_eq!(saddle_threshold(-0.5, -1.0, 100), Some(3));
    assert_eq!(saddle_threshold(1.0, -1.0, 1000), None);
    assert_eq!(saddle_threshold(0.0, 1.0, 100), None);
}
