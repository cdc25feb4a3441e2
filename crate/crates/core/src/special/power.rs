//! Optimal dual grids of power laws `alpha x^(alpha-1)` through the
//! `N`-independent ratios `lambda_i = x_i / x_{i+1}`.

use crate::distributions::Orientation;
use crate::dual::DualGrid;
use crate::error::{Error, Result};
use crate::kernels::KernelParams;
use crate::quadrature::integrate_tanh_sinh_offsets;
use crate::roots::bisect;

/// `(1+x)^p - 1 - p x`, with a series near zero.
fn binomial_tail(p: f64, x: f64) -> f64 {
    if x.abs() < 0.5 {
        let mut term = p * (p - 1.0) / 2.0 * x * x;
        let mut sum = term;
        for k in 3..200 {
            term *= (p - f64::from(k - 1)) / f64::from(k) * x;
            sum += term;
            if term.abs() <= 1e-18 * sum.abs() {
                break;
            }
        }
        sum
    } else {
        (1.0 + x).powf(p) - 1.0 - p * x
    }
}

fn check_chi_args(alpha: f64, r: f64, x: f64) -> Result<KernelParams> {
    if !(alpha > 0.0) || !alpha.is_finite() {
        return Err(Error::Domain(format!("alpha must be positive, got {alpha}")));
    }
    let k = KernelParams::new(r)?;
    if !(x >= -1.0) || !x.is_finite() {
        return Err(Error::Domain(format!("chi_r is defined for x >= -1, got {x}")));
    }
    Ok(k)
}

/// `chi_r(x) = |x|^r int_0^1 Psi_r(1-z) (1+zx)^(alpha-1) dz`, `x >= -1`.
pub fn chi(alpha: f64, r: f64, x: f64) -> Result<f64> {
    let k = check_chi_args(alpha, r, x)?;
    Ok(chi_unchecked(&k, alpha, x))
}

fn chi_unchecked(k: &KernelParams, alpha: f64, x: f64) -> f64 {
    if x == 0.0 {
        return 0.0;
    }
    if k.r() == 2.0 {
        return binomial_tail(1.0 + alpha, x) / (alpha * (1.0 + alpha));
    }
    // 1 + zx = (1 - z) + z (1 + x) keeps full precision at x = -1, z -> 1.
    let integral = integrate_tanh_sinh_offsets(
        |_, z, zc| k.psi_uv(zc, z) * (zc + z * (1.0 + x)).powf(alpha - 1.0),
        0.0,
        1.0,
    );
    x.abs().powf(k.r()) * integral
}

/// The ratios `lambda_1 = 0, lambda_2, ..., lambda_{n-1}`, from
/// `chi_r(1/lambda_i - 1) = chi_r(lambda_{i-1} - 1)`.
pub fn power_ratios(alpha: f64, r: f64, n: usize) -> Result<Vec<f64>> {
    let k = check_chi_args(alpha, r, 0.0)?;
    if n < 2 {
        return Err(Error::InvalidGrid(format!("need N >= 2, got {n}")));
    }
    let mut lambdas = vec![0.0];
    for i in 2..n {
        let prev = lambdas[i - 2];
        let target = chi_unchecked(&k, alpha, prev - 1.0);
        let f = |y: f64| chi_unchecked(&k, alpha, y) - target;
        // lambda_i >= lambda_{i-1} means y <= 1/lambda_{i-1} - 1; widen if not.
        let mut hi = if prev > 0.0 { 1.0 / prev - 1.0 } else { 1.0 };
        let mut widenings = 0;
        while f(hi) < 0.0 {
            hi *= 2.0;
            widenings += 1;
            if widenings > 1100 || !hi.is_finite() {
                return Err(Error::Numerical(format!("could not bracket lambda_{i} (alpha = {alpha}, r = {r})")));
            }
        }
        let y = bisect(f, 0.0, hi, 1e-15).map_err(|e| Error::Numerical(format!("lambda_{i}: {e}")))?;
        lambdas.push(1.0 / (1.0 + y));
    }
    Ok(lambdas)
}

/// The `L^r`-optimal dual `N`-grid of the power law on `[a, b]`.
pub fn power_grid(alpha: f64, r: f64, n: usize, a: f64, b: f64, orientation: Orientation) -> Result<DualGrid> {
    if !(a < b) || !a.is_finite() || !b.is_finite() {
        return Err(Error::Domain(format!("need a finite interval a < b, got [{a}, {b}]")));
    }
    let lambdas = power_ratios(alpha, r, n)?;
    // u_i = prod_{j=i}^{N-1} lambda_j on [0, 1], with u_N = 1.
    let mut u = vec![1.0; n];
    for i in (0..n - 1).rev() {
        u[i] = u[i + 1] * lambdas[i];
    }
    let l = b - a;
    let pts: Vec<f64> = match orientation {
        Orientation::Rising => u.iter().map(|t| a + l * t).collect(),
        Orientation::Falling => u.iter().rev().map(|t| b - l * t).collect(),
    };
    let mut pts = pts;
    pts[0] = a;
    pts[n - 1] = b;
    DualGrid::new(pts)
}
