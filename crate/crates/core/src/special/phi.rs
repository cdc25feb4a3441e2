//! The functions `Phi_r(x) = |x|^r e^{-x} int_0^1 Psi_r(z) e^{xz} dz` and
//! their mirror images `check Phi_r(x) = Phi_r(-x)`.

use crate::kernels::KernelParams;
use crate::quadrature::integrate_tanh_sinh_offsets;

/// `e^x - sum_{k<n} x^k/k!`, by its tail series for small `|x|`.
pub(crate) fn exp_tail(n: u32, x: f64) -> f64 {
    if x.abs() < 2.0 {
        let mut term = 1.0;
        for k in 1..=n {
            term *= x / f64::from(k);
        }
        // term = x^n / n!
        let mut sum = term;
        let mut k = n;
        loop {
            k += 1;
            term *= x / f64::from(k);
            sum += term;
            if term.abs() <= 1e-18 * sum.abs() || k > n + 60 {
                return sum;
            }
        }
    }
    let mut term = 1.0;
    let mut partial = 0.0;
    for k in 0..n {
        if k > 0 {
            term *= x / f64::from(k);
        }
        partial += term;
    }
    x.exp() - partial
}

/// `Phi_r(x)` for real `x`. Closed forms for `r = 1` and `r = 2`,
/// tanh-sinh quadrature otherwise.
pub fn phi(r: f64, x: f64) -> f64 {
    if x == 0.0 {
        return 0.0;
    }
    if r == 2.0 {
        exp_tail(2, -x)
    } else if r == 1.0 {
        4.0 * exp_tail(3, -x).abs() / (x * x)
    } else {
        phi_by_quadrature(r, x)
    }
}

/// `check Phi_r(x) = Phi_r(-x)`.
pub fn phi_check(r: f64, x: f64) -> f64 {
    phi(r, -x)
}

/// `|x|^r int_0^1 Psi_r(z) e^{-x(1-z)} dz`, the defining integral.
pub(crate) fn phi_by_quadrature(r: f64, x: f64) -> f64 {
    let k = KernelParams::new(r).expect("r >= 1 checked by callers");
    x.abs().powf(r) * integrate_tanh_sinh_offsets(|_, z, zc| k.psi_uv(z, zc) * (-x * zc).exp(), 0.0, 1.0)
}

/// `Phi_r(x)` together with its derivative.
pub(crate) fn phi_with_derivative(r: f64, x: f64) -> (f64, f64) {
    if r == 2.0 {
        let v = phi(2.0, x);
        return (v, x - v);
    }
    if r == 1.0 {
        let v = phi(1.0, x);
        if x == 0.0 {
            return (0.0, 0.0);
        }
        return (v, -(2.0 / x + 1.0) * v + 2.0 * x.signum());
    }
    if x == 0.0 {
        return (0.0, 0.0);
    }
    let k = KernelParams::new(r).expect("r >= 1 checked by callers");
    // d/dx |x|^r I(x) = r |x|^r / x I(x) + |x|^r I'(x), I' = -int (1-z) Psi e^{..}.
    let i0 = integrate_tanh_sinh_offsets(|_, z, zc| k.psi_uv(z, zc) * (-x * zc).exp(), 0.0, 1.0);
    let i1 = integrate_tanh_sinh_offsets(|_, z, zc| zc * k.psi_uv(z, zc) * (-x * zc).exp(), 0.0, 1.0);
    let p = x.abs().powf(r);
    (p * i0, r * p / x * i0 - p * i1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadrature::GaussLegendre;

    #[test]
    fn exp_tail_matches_direct_form() {
        for x in [-5.0f64, -1.5, -0.3, 1e-3, 0.7, 1.99, 2.5, 8.0] {
            let direct = x.exp() - 1.0 - x - x * x / 2.0;
            let got = exp_tail(3, x);
            assert!((got - direct).abs() < 1e-13 * direct.abs().max(1e-3), "{x}: {got} vs {direct}");
        }
        assert!((exp_tail(2, 1e-5) - 5.000016666708333e-11).abs() < 1e-24);
    }

    #[test]
    fn closed_form_values() {
        assert!((phi(2.0, 1.0) - (-1.0f64).exp()).abs() < 1e-15);
        assert_eq!(phi(2.0, 0.0), 0.0);
        let x = 50.0f64;
        let want = 2.0 - 4.0 / x + 4.0 / (x * x) - 4.0 * (-x).exp() / (x * x);
        assert!((phi(1.0, x) - want).abs() < 1e-15);
        assert!((phi(1.0, 1e9) - 2.0).abs() < 1e-8);
    }

    #[test]
    fn closed_forms_agree_with_defining_integral() {
        for r in [1.0, 2.0] {
            for x in [-3.0, -0.5, -1e-3, 1e-3, 0.4, 2.0, 10.0] {
                let q = phi_by_quadrature(r, x);
                let c = phi(r, x);
                assert!((q - c).abs() < 1e-13 * c, "r={r} x={x}: {q} vs {c}");
            }
        }
    }

    #[test]
    fn general_r_against_gauss_legendre() {
        // Composite GL64 over many panels as an independent evaluation.
        let gl = GaussLegendre::new(64);
        for r in [3.0, 4.0] {
            let k = KernelParams::new(r).unwrap();
            for x in [-2.0f64, 0.5, 5.0] {
                let panels = 50;
                let ref_int: f64 = (0..panels)
                    .map(|j| {
                        let (lo, hi) = (j as f64 / panels as f64, (j + 1) as f64 / panels as f64);
                        gl.integrate(lo, hi, |z| k.psi(z) * (-x * (1.0 - z)).exp())
                    })
                    .sum();
                let want = f64::abs(x).powf(r) * ref_int;
                let got = phi(r, x);
                assert!((got - want).abs() < 1e-13 * want, "r={r} x={x}");
            }
        }
    }

    #[test]
    fn derivatives_match_finite_differences() {
        for r in [1.0, 1.5, 2.0, 3.0] {
            for x in [-2.0, -0.3, 0.4, 3.0] {
                let h = 1e-6;
                let fd = (phi(r, x + h) - phi(r, x - h)) / (2.0 * h);
                let (_, d) = phi_with_derivative(r, x);
                assert!((fd - d).abs() < 1e-7 * d.abs().max(1.0), "r={r} x={x}: {d} vs {fd}");
            }
        }
    }

    #[test]
    fn growth_bound() {
        for r in [1.5f64, 2.0, 3.0] {
            for x in [2.0 * (r + 1.0), 4.0 * (r + 1.0)] {
                assert!(phi(r, x) >= 0.5 * x.powf(r - 1.0));
            }
        }
    }
}
