//! Scalar root finding for monotone functions.

use crate::error::{Error, Result};

const MAX_BISECTIONS: usize = 400;

/// Bisection on `[lo, hi]` for `f(x) = 0`, where `f(lo)` and `f(hi)` have
/// opposite signs (or one of them vanishes). Stops once the bracket is
/// narrower than `rel_tol * max(|lo|, |hi|)` or cannot be split further.
pub fn bisect<F: FnMut(f64) -> f64>(mut f: F, mut lo: f64, mut hi: f64, rel_tol: f64) -> Result<f64> {
    let mut flo = f(lo);
    let fhi = f(hi);
    if flo == 0.0 {
        return Ok(lo);
    }
    if fhi == 0.0 {
        return Ok(hi);
    }
    if flo.signum() == fhi.signum() || flo.is_nan() || fhi.is_nan() {
        return Err(Error::Numerical(format!(
            "root not bracketed on [{lo}, {hi}] (f = {flo}, {fhi})"
        )));
    }
    for _ in 0..MAX_BISECTIONS {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi || hi - lo <= rel_tol * lo.abs().max(hi.abs()) {
            break;
        }
        let fm = f(mid);
        if fm == 0.0 {
            return Ok(mid);
        }
        if fm.signum() == flo.signum() {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Newton's method kept inside a shrinking bracket, falling back to
/// bisection whenever a Newton step leaves the bracket or stalls.
///
/// `f` returns the value and derivative. The bracket must contain a sign
/// change.
pub fn safeguarded_newton<F: FnMut(f64) -> (f64, f64)>(
    mut f: F,
    mut lo: f64,
    mut hi: f64,
    rel_tol: f64,
) -> Result<f64> {
    let (flo, _) = f(lo);
    let (fhi, _) = f(hi);
    if flo == 0.0 {
        return Ok(lo);
    }
    if fhi == 0.0 {
        return Ok(hi);
    }
    if flo.signum() == fhi.signum() || flo.is_nan() || fhi.is_nan() {
        return Err(Error::Numerical(format!(
            "root not bracketed on [{lo}, {hi}] (f = {flo}, {fhi})"
        )));
    }
    let increasing = fhi > 0.0;
    let mut x = 0.5 * (lo + hi);
    let mut step_prev = hi - lo;
    for _ in 0..MAX_BISECTIONS {
        let (fx, dfx) = f(x);
        if fx == 0.0 {
            return Ok(x);
        }
        if (fx > 0.0) == increasing {
            hi = x;
        } else {
            lo = x;
        }
        let tol = rel_tol * lo.abs().max(hi.abs()).max(f64::MIN_POSITIVE);
        if hi - lo <= tol {
            return Ok(0.5 * (lo + hi));
        }
        let newton = x - fx / dfx;
        let x_next = if dfx != 0.0
            && newton.is_finite()
            && newton > lo
            && newton < hi
            && (newton - x).abs() < 0.5 * step_prev
        {
            newton
        } else {
            0.5 * (lo + hi)
        };
        step_prev = (x_next - x).abs();
        if step_prev <= tol {
            return Ok(x_next);
        }
        x = x_next;
    }
    Ok(x)
}

/// Grows `hi` geometrically from `start` until `f(hi) >= 0`, for an
/// increasing `f` with `f(lo) < 0`. Returns the first such `hi`.
pub fn expand_upper<F: FnMut(f64) -> f64>(mut f: F, start: f64, max_hi: f64) -> Result<f64> {
    let mut hi = start;
    for _ in 0..2000 {
        let v = f(hi);
        if v >= 0.0 {
            return Ok(hi);
        }
        if hi >= max_hi {
            break;
        }
        hi = (hi * 2.0).min(max_hi);
    }
    Err(Error::Numerical(format!(
        "could not bracket root below {max_hi}"
    )))
}
