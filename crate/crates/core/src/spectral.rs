//! Eigenvalues of symmetric tridiagonal matrices, Gershgorin-type
//! positivity certificates and the periodic counterexample.

use std::f64::consts::PI;

use crate::distributions::{DistributionKind, DistributionSpec};
use crate::error::{Error, Result};
use crate::kernels::KernelParams;
use crate::quadrature::integrate_tanh_sinh_offsets;
use crate::tridiag::TridiagSym;

/// Eigenvalues `2(a + b cos(k pi/(n+1)))`, `k = 1..n`, of
/// `Toeplitz(2a, b)`, ascending.
pub fn toeplitz_eigs(a: f64, b: f64, n: usize) -> Vec<f64> {
    let mut v: Vec<f64> = (1..=n).map(|k| 2.0 * (a + b * (k as f64 * PI / (n + 1) as f64).cos())).collect();
    v.sort_by(f64::total_cmp);
    v
}

/// Number of eigenvalues strictly below `x`, from the signs of the
/// pivots of `T - x I`.
fn sturm_count(m: &TridiagSym, x: f64) -> usize {
    let mut count = 0;
    let mut q = 1.0;
    for i in 0..m.size() {
        let off2 = if i == 0 { 0.0 } else { m.off[i - 1] * m.off[i - 1] };
        q = m.diag[i] - x - if i == 0 { 0.0 } else { off2 / q };
        if q == 0.0 {
            q = -f64::EPSILON * (m.diag[i].abs() + x.abs()).max(f64::MIN_POSITIVE);
        }
        if q < 0.0 {
            count += 1;
        }
    }
    count
}

/// Absolute accuracy of [`tridiag_eigs`].
pub const EIG_TOL: f64 = 1e-12;

/// All eigenvalues by Sturm bisection, ascending, each to [`EIG_TOL`].
pub fn tridiag_eigs(m: &TridiagSym) -> Vec<f64> {
    let n = m.size();
    if n == 0 {
        return Vec::new();
    }
    // Gershgorin interval.
    let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
    for i in 0..n {
        let rad = if i > 0 { m.off[i - 1].abs() } else { 0.0 } + if i + 1 < n { m.off[i].abs() } else { 0.0 };
        lo = lo.min(m.diag[i] - rad);
        hi = hi.max(m.diag[i] + rad);
    }
    let pad = 1e-12 * (lo.abs().max(hi.abs())).max(1.0);
    let (lo, hi) = (lo - pad, hi + pad);
    (0..n)
        .map(|k| {
            // k-th smallest: count(x) <= k on the left, > k on the right.
            let (mut a, mut b) = (lo, hi);
            while b - a > 0.25 * EIG_TOL {
                let mid = 0.5 * (a + b);
                if mid <= a || mid >= b {
                    break;
                }
                if sturm_count(m, mid) > k {
                    b = mid;
                } else {
                    a = mid;
                }
            }
            0.5 * (a + b)
        })
        .collect()
}

/// Outcome of the diagonal-dominance tests.
#[derive(Debug, Clone, PartialEq)]
pub struct GershgorinReport {
    /// Off-diagonals `<= 0` and every row sum `>= 0`: positive semidefinite.
    pub nonneg_certified: bool,
    /// Moreover tridiagonal with off-diagonals `< 0` and a strictly
    /// positive first or last row sum: positive definite.
    pub positive_certified: bool,
    /// Row sums `Lambda_i`.
    pub row_sums: Vec<f64>,
    /// First condition that failed, if any.
    pub violated_condition: Option<String>,
}

/// Relative slack, against the largest entry, for the sign tests.
pub const GERSHGORIN_REL_TOL: f64 = 1e-10;

pub fn gershgorin_check(m: &TridiagSym) -> GershgorinReport {
    let n = m.size();
    let row_sums = m.row_sums();
    let scale = m.diag.iter().chain(&m.off).fold(0.0f64, |s, v| s.max(v.abs()));
    let tol = GERSHGORIN_REL_TOL * scale;
    let mut violated = None;
    if let Some(i) = m.off.iter().position(|&v| v > tol) {
        violated = Some(format!("off-diagonal a_{},{} = {} is positive", i + 1, i + 2, m.off[i]));
    } else if let Some(i) = row_sums.iter().position(|&s| s < -tol) {
        violated = Some(format!("row sum Lambda_{} = {} is negative", i + 1, row_sums[i]));
    }
    let nonneg = violated.is_none();
    let mut positive = nonneg;
    if nonneg {
        if let Some(i) = m.off.iter().position(|&v| v >= -tol) {
            positive = false;
            violated =
                Some(format!("off-diagonal a_{},{} = {} is not strictly negative", i + 1, i + 2, m.off[i]));
        } else if !(row_sums[0] > tol || row_sums[n - 1] > tol) {
            positive = false;
            violated = Some(format!(
                "neither Lambda_1 = {} nor Lambda_{n} = {} is strictly positive",
                row_sums[0],
                row_sums[n - 1]
            ));
        }
    }
    GershgorinReport { nonneg_certified: nonneg, positive_certified: positive, row_sums, violated_condition: violated }
}

/// The Hessian of the periodic counterexample at the equidistant grid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CounterexampleReport {
    /// `int tilde vartheta_r g`.
    pub a: f64,
    /// `-int vartheta_r g`.
    pub b: f64,
    /// `2(a + b cos(pi/(N-1)))`.
    pub lambda_min: f64,
    /// `lambda_min` is negative beyond the accuracy of `a` and `b`.
    pub is_saddle: bool,
    /// `-c_r int_0^{1/2} (varpi_r')^2`, which must equal `a + b`.
    pub a_plus_b_expected: f64,
    /// `|a + b - a_plus_b_expected| <= 1e-10`.
    pub identity_holds: bool,
}

/// Hessian data of the density `g = c_r varpi_r` repeated over `N - 1`
/// cells, at the critical point `((k-1)/(N-1))_k`.
pub fn counterexample_min_eig(r: f64, n: usize) -> Result<CounterexampleReport> {
    let k = KernelParams::new(r)?;
    if n < 3 {
        return Err(Error::Domain(format!("need N >= 3, got {n}")));
    }
    let dist = DistributionSpec::periodic_counterexample(r, n)?;
    let c_r = match dist.kind() {
        DistributionKind::PeriodicCounterexample { c_r, .. } => *c_r,
        _ => unreachable!("constructed as a counterexample law"),
    };
    let g = |z: f64, w: f64| c_r * k.varpi_uv(z, w);
    let a = integrate_tanh_sinh_offsets(|_, z, w| k.vartheta_tilde_uv(z, w) * g(z, w), 0.0, 1.0);
    let b = -integrate_tanh_sinh_offsets(|_, z, w| k.vartheta_uv(z, w) * g(z, w), 0.0, 1.0);
    let slope2 = integrate_tanh_sinh_offsets(|_, z, _| k.varpi_d1_uv(z, 1.0 - z).powi(2), 0.0, 0.5);
    let expected = -c_r * slope2;
    let lambda_min = toeplitz_eigs(a, b, n - 2)[0];
    Ok(CounterexampleReport {
        a,
        b,
        lambda_min,
        is_saddle: below_margin(lambda_min, a, b),
        a_plus_b_expected: expected,
        identity_holds: (a + b - expected).abs() <= 1e-10,
    })
}

// a and b carry quadrature error, so demand a margin before calling the
// critical point a saddle.
fn below_margin(lambda: f64, a: f64, b: f64) -> bool {
    lambda < -1e-10 * a.abs().max(b.abs())
}

/// Smallest `N >= 3` whose Toeplitz Hessian `(2a, b)` of size `N - 2` has a
/// negative eigenvalue, that is `cos(pi/(N-1)) > -a/b`. `None` when no `N`
/// up to `max_n` qualifies.
pub fn saddle_threshold(a: f64, b: f64, max_n: usize) -> Option<usize> {
    (3..=max_n).find(|&n| below_margin(2.0 * (a + b * (PI / (n - 1) as f64).cos()), a, b))
}

#[cfg(test)]
mod tests;
