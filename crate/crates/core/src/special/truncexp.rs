//! Optimal dual grids of truncated exponential laws.

use super::theta::{theta1_pole, theta_backward, theta_forward, ThetaMethod};
use crate::dual::DualGrid;
use crate::error::{Error, Result};
use crate::kernels::KernelParams;
use crate::roots::bisect;

/// Steps `d, s(d), s(s(d)), ...` (`count` of them), or `None` once a step
/// leaves the domain of `s`, meaning the sum is infinite. Stops early once
/// the running sum exceeds `cap`.
fn orbit(d: f64, count: usize, cap: f64, step: &dyn Fn(f64) -> Result<f64>) -> Option<Vec<f64>> {
    let mut out = Vec::with_capacity(count);
    let mut cur = d;
    let mut sum = 0.0;
    for k in 0..count {
        if k > 0 {
            cur = step(cur).ok()?;
        }
        sum += cur;
        out.push(cur);
        if sum > cap {
            break;
        }
    }
    Some(out)
}

/// Cell widths `Delta x_2, ..., Delta x_N` for `lambda = 1` on `[0, len]`.
fn unit_rate_widths(r: f64, n: usize, len: f64) -> Result<Vec<f64>> {
    let cells = n - 1;
    let forward = r == 1.0 || r == 2.0;
    let step = move |x: f64| -> Result<f64> {
        if forward {
            theta_forward(r, x, ThetaMethod::RootFind)
        } else {
            theta_backward(r, x)
        }
    };
    let total = |d: f64| -> f64 {
        match orbit(d, cells, 2.0 * len, &step) {
            Some(v) => v.iter().sum::<f64>() - len,
            None => f64::INFINITY,
        }
    };
    // The sum is continuous and increasing from 0, and at least d, so the
    // root lies below len; for theta_1 also below the pole.
    let hi = if r == 1.0 { len.min(theta1_pole() * (1.0 - 1e-15)) } else { len };
    let d = bisect(total, 0.0, hi, 1e-14).map_err(|e| Error::Numerical(format!("boundary equation: {e}")))?;
    let mut widths = orbit(d, cells, f64::INFINITY, &step)
        .ok_or_else(|| Error::Numerical(format!("orbit of {d} left the domain of theta_{r}")))?;
    if widths.len() != cells {
        return Err(Error::Numerical("orbit terminated early".into()));
    }
    if !forward {
        // Backward orbit starts from Delta x_N.
        widths.reverse();
    }
    Ok(widths)
}

/// The `L^r`-optimal dual `N`-grid of the truncated exponential law with
/// rate `lambda` on `[a, b]`.
pub fn truncexp_grid(lambda: f64, r: f64, n: usize, a: f64, b: f64) -> Result<DualGrid> {
    KernelParams::new(r)?;
    if lambda == 0.0 || !lambda.is_finite() {
        return Err(Error::Domain(format!("lambda must be finite and nonzero, got {lambda}")));
    }
    if !(a < b) || !a.is_finite() || !b.is_finite() {
        return Err(Error::Domain(format!("need a finite interval a < b, got [{a}, {b}]")));
    }
    if n < 2 {
        return Err(Error::InvalidGrid(format!("need N >= 2, got {n}")));
    }
    if lambda < 0.0 {
        // x -> -x maps the law to rate |lambda| on [-b, -a].
        let mirrored = truncexp_grid(-lambda, r, n, -b, -a)?;
        let pts: Vec<f64> = mirrored.points().iter().rev().map(|x| -x).collect();
        return DualGrid::new(pts);
    }
    if n == 2 {
        return DualGrid::new(vec![a, b]);
    }
    let len = lambda * (b - a);
    let widths = unit_rate_widths(r, n, len)?;
    let mut pts = Vec::with_capacity(n);
    let mut acc = 0.0;
    pts.push(a);
    for w in &widths[..n - 2] {
        acc += w;
        pts.push(a + acc / lambda);
    }
    pts.push(b);
    DualGrid::new(pts)
}
