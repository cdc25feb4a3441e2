//! The quadratic fixed-point solver.
//!
//! For `r = 2` the master equation is equivalent to `x = T(x)` with
//! `T_i(x) = F^{-1}( int_{x_{i-1}}^{x_{i+1}} F / (x_{i+1} - x_{i-1}) )`.
//! For log-concave laws `T` has a unique fixed point and the iteration
//! `x <- T(x)` converges geometrically from any start.

use crate::distributions::DistributionSpec;
use crate::dual::{distortion, residual_sup, DualGrid, QuantizerResult};
use crate::error::{Error, Result};
use crate::quadrature::GaussLegendre;
use crate::tridiag::{inf_norm, product, Tridiag};

/// Starting interior for the iteration.
#[derive(Debug, Clone, PartialEq)]
pub enum LloydInit {
    Equidistant,
    /// Interior points `x_2, ..., x_{N-1}`, weakly increasing inside `[a, b]`.
    Interior(Vec<f64>),
}

#[derive(Debug, Clone, PartialEq)]
pub struct LloydConfig {
    /// Stop once the sup-norm of the update falls below this.
    pub tol: f64,
    pub max_iter: usize,
    pub init: LloydInit,
    /// Estimate the asymptotic contraction factor.
    pub track_rate: bool,
}

impl Default for LloydConfig {
    fn default() -> Self {
        Self { tol: 1e-13, max_iter: 100_000, init: LloydInit::Equidistant, track_rate: false }
    }
}

impl LloydConfig {
    fn validate(&self) -> Result<()> {
        if !(self.tol > 0.0) {
            return Err(Error::Domain(format!("tolerance must be positive, got {}", self.tol)));
        }
        if self.max_iter == 0 {
            return Err(Error::Domain("max_iter must be at least 1".into()));
        }
        Ok(())
    }
}

/// One row of the per-iteration trace.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IterRecord {
    pub iter: usize,
    pub sup_update: f64,
    pub distortion: f64,
    pub residual: f64,
}

/// `T(x)` on the interior `x_2..x_{N-1}`, with `x_1 = a` and `x_N = b`
/// taken from `dist`. Collapsed triples `x_{i-1} = x_i = x_{i+1}` are
/// fixed, which is the continuous extension of `T` to the closure.
pub fn lloyd_map(interior: &[f64], dist: &DistributionSpec) -> Vec<f64> {
    let n = interior.len();
    let at = |j: usize| -> f64 {
        // j indexes the full grid, 0 = a.
        if j == 0 {
            dist.a()
        } else if j == n + 1 {
            dist.b()
        } else {
            interior[j - 1]
        }
    };
    (1..=n)
        .map(|j| {
            let (lo, hi) = (at(j - 1), at(j + 1));
            if hi <= lo {
                return at(j);
            }
            let avg = dist.cdf_integral(lo, hi) / (hi - lo);
            dist.quantile(avg).clamp(lo, hi)
        })
        .collect()
}

/// Jacobian of `T`: zero diagonal, with
/// `dT_i/dx_{i-1} = int (F - F(x_{i-1})) / (D^2 f(T_i))` and
/// `dT_i/dx_{i+1} = int (F(x_{i+1}) - F) / (D^2 f(T_i))`,
/// integrals over `[x_{i-1}, x_{i+1}]` of length `D`.
pub fn lloyd_jacobian(interior: &[f64], dist: &DistributionSpec) -> Result<Tridiag> {
    if !dist.has_pdf() {
        return Err(Error::Unsupported(format!("the Jacobian of T needs a density, but {dist} is CDF-only")));
    }
    let n = interior.len();
    if n == 0 {
        return Err(Error::InvalidGrid("no interior points".into()));
    }
    DualGrid::from_interior(dist.a(), interior, dist.b())?;
    let t = lloyd_map(interior, dist);
    let at = |j: usize| if j == 0 { dist.a() } else if j == n + 1 { dist.b() } else { interior[j - 1] };
    let mut lower = Vec::with_capacity(n - 1);
    let mut upper = Vec::with_capacity(n - 1);
    for j in 1..=n {
        let (lo, hi) = (at(j - 1), at(j + 1));
        let d = hi - lo;
        let int_f = dist.cdf_integral(lo, hi);
        let density = dist.pdf(t[j - 1])?;
        if !(density > 0.0) {
            return Err(Error::Numerical(format!("density vanishes at T_{} = {}", j + 1, t[j - 1])));
        }
        let scale = d * d * density;
        if j > 1 {
            lower.push((int_f - d * dist.cdf(lo)) / scale);
        }
        if j < n {
            upper.push((d * dist.cdf(hi) - int_f) / scale);
        }
    }
    Tridiag::new(lower, vec![0.0; n], upper)
}

fn initial_interior(dist: &DistributionSpec, n: usize, init: &LloydInit) -> Result<Vec<f64>> {
    match init {
        LloydInit::Equidistant => Ok(DualGrid::equidistant(dist.a(), dist.b(), n)?.interior().to_vec()),
        LloydInit::Interior(v) => {
            if v.len() + 2 != n {
                return Err(Error::InvalidGrid(format!("initial interior has {} points, expected {}", v.len(), n - 2)));
            }
            let mut prev = dist.a();
            for &x in v {
                if !(x >= prev && x <= dist.b()) {
                    return Err(Error::InvalidGrid(format!("initial interior not weakly increasing in [a, b] at {x}")));
                }
                prev = x;
            }
            Ok(v.clone())
        }
    }
}

/// Least-squares slope of `log y` against the iteration index, mapped back
/// through `exp`.
fn rate_from_updates(updates: &[f64]) -> Option<f64> {
    let pts: Vec<(f64, f64)> =
        updates.iter().enumerate().filter(|(_, &u)| u > 0.0).map(|(i, &u)| (i as f64, u.ln())).collect();
    if pts.len() < 3 {
        return None;
    }
    let m = pts.len() as f64;
    let (sx, sy) = pts.iter().fold((0.0, 0.0), |(a, b), (x, y)| (a + x, b + y));
    let (mx, my) = (sx / m, sy / m);
    let (sxy, sxx) = pts.iter().fold((0.0, 0.0), |(a, b), (x, y)| (a + (x - mx) * (y - my), b + (x - mx) * (x - mx)));
    Some((sxy / sxx).exp().clamp(0.0, 1.0))
}

const RATE_WINDOW: usize = 20;

/// Runs `x <- T(x)` and reports the result. Only `r = 2` is supported.
pub fn lloyd_solve(dist: &DistributionSpec, n: usize, r: f64, config: &LloydConfig) -> Result<QuantizerResult> {
    lloyd_solve_traced(dist, n, r, config, None::<fn(&IterRecord)>)
}

/// As [`lloyd_solve`], calling `trace` after every iteration with the
/// update size, the distortion and the gradient residual.
pub fn lloyd_solve_traced<C: FnMut(&IterRecord)>(
    dist: &DistributionSpec,
    n: usize,
    r: f64,
    config: &LloydConfig,
    mut trace: Option<C>,
) -> Result<QuantizerResult> {
    if r != 2.0 {
        return Err(Error::Domain(format!("the Lloyd fixed point map is defined for r = 2 only, got r = {r}")));
    }
    if n < 2 {
        return Err(Error::InvalidGrid(format!("need N >= 2, got {n}")));
    }
    config.validate()?;
    if n == 2 {
        let grid = DualGrid::new(vec![dist.a(), dist.b()])?;
        return QuantizerResult::assemble(grid, dist, r, 0, true, None);
    }
    let mut x = initial_interior(dist, n, &config.init)?;
    let mut updates: Vec<f64> = Vec::new();
    let mut converged = false;
    let mut iterations = 0;
    while iterations < config.max_iter {
        let next = lloyd_map(&x, dist);
        let sup = x.iter().zip(&next).fold(0.0f64, |m, (a, b)| m.max((a - b).abs()));
        x = next;
        iterations += 1;
        if config.track_rate {
            if updates.len() == RATE_WINDOW {
                updates.remove(0);
            }
            updates.push(sup);
        }
        if let Some(cb) = trace.as_mut() {
            let g = DualGrid::from_interior(dist.a(), &x, dist.b());
            let (dl, res) = match g {
                Ok(g) => (distortion(&g, dist, r)?.lr, residual_sup(&g, dist, r)?),
                Err(_) => (f64::NAN, f64::NAN),
            };
            cb(&IterRecord { iter: iterations, sup_update: sup, distortion: dl, residual: res });
        }
        if sup < config.tol {
            converged = true;
            break;
        }
    }
    let grid = DualGrid::from_interior(dist.a(), &x, dist.b())?;
    let rate = if config.track_rate { rate_from_updates(&updates) } else { None };
    QuantizerResult::assemble(grid, dist, r, iterations, converged, rate)
}

/// Outcome of the quantitative contraction bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ContractionCertificate {
    /// Number of factors, `ceil(N/2) - 1`.
    pub n_tilde: usize,
    /// The explicit bound on `|A^[n_tilde] ... A^[1]|_inf`.
    pub bound: f64,
    /// The operator norm of the product, computed directly.
    pub product_norm: f64,
}

impl ContractionCertificate {
    /// The bound is below one and dominates the product norm.
    pub fn certified(&self) -> bool {
        self.bound < 1.0 && self.product_norm <= self.bound * (1.0 + 1e-12) + 1e-15
    }
}

const ROW_SUM_SLACK: f64 = 1e-12;

/// Bound on the sup-norm of `A^[k] ... A^[1]`, `k = ceil(N/2) - 1`, for
/// zero-diagonal tridiagonal matrices with positive off-diagonals, row sums
/// at most one and corner entries below one. `matrices[l]` is `A^[l+1]`.
pub fn contraction_certificate(matrices: &[Tridiag]) -> Result<ContractionCertificate> {
    let first = matrices.first().ok_or_else(|| Error::Precondition("no matrices given".into()))?;
    let m = first.size();
    let big_n = m + 2;
    let n_tilde = big_n.div_ceil(2) - 1;
    if matrices.len() != n_tilde {
        return Err(Error::Precondition(format!(
            "expected ceil(N/2) - 1 = {n_tilde} matrices for N = {big_n}, got {}",
            matrices.len()
        )));
    }
    for (l, a) in matrices.iter().enumerate() {
        let l = l + 1;
        if a.size() != m {
            return Err(Error::Precondition(format!("A^[{l}] has size {}, expected {m}", a.size())));
        }
        if let Some(i) = a.diag.iter().position(|&v| v != 0.0) {
            return Err(Error::Precondition(format!("a_ii = 0 violated: A^[{l}] has a_{0}{0} = {1}", i + 2, a.diag[i])));
        }
        for (k, (&lo, &up)) in a.lower.iter().zip(&a.upper).enumerate() {
            if !(lo > 0.0 && up > 0.0) {
                return Err(Error::Precondition(format!(
                    "a_i,i+-1 > 0 violated: A^[{l}] has a_{},{} = {up} and a_{},{} = {lo}",
                    k + 2,
                    k + 3,
                    k + 3,
                    k + 2
                )));
            }
        }
        for (i, s) in a.row_sums().iter().enumerate() {
            if *s > 1.0 + ROW_SUM_SLACK {
                return Err(Error::Precondition(format!("row sum <= 1 violated: A^[{l}] row {} sums to {s}", i + 2)));
            }
        }
        if m >= 2 && !(a.upper[0] < 1.0 && a.lower[m - 2] < 1.0) {
            return Err(Error::Precondition(format!(
                "corner entries a_23 < 1 and a_N-1,N-2 < 1 violated in A^[{l}]: {} and {}",
                a.upper[0],
                a.lower[m - 2]
            )));
        }
    }
    // Entry a^[l]_{p,q} in the 2..N-1 indexing, zero when absent.
    let entry = |l: usize, p: usize, q: usize| -> f64 {
        if p < 2 || q < 2 || p > big_n - 1 || q > big_n - 1 {
            return 0.0;
        }
        matrices[l - 1].get(p - 2, q - 2)
    };
    let mut bound: f64 = 0.0;
    for i in 2..=n_tilde + 1 {
        let mut prod = 1.0;
        for s in 0..i.saturating_sub(2) {
            prod *= entry(n_tilde - s, i - s, i - s - 1);
        }
        prod *= 1.0 - entry(n_tilde + 2 - i, 2, 3);
        bound = bound.max(1.0 - prod);
    }
    for i in (big_n - n_tilde)..=big_n - 1 {
        let mut prod = 1.0;
        for s in 0..(big_n - 1 - i) {
            prod *= entry(n_tilde - s, i + s, i + s + 1);
        }
        prod *= 1.0 - entry(n_tilde + 1 + i - big_n, big_n - 1, big_n - 2);
        bound = bound.max(1.0 - prod);
    }
    let product_norm = inf_norm(&product(matrices));
    Ok(ContractionCertificate { n_tilde, bound, product_norm })
}

/// `int_0^1 J_T(x* + t (x - x*)) dt`, the matrix with
/// `T(x) - x* = A (x - x*)` when `x*` is the fixed point.
pub fn mean_value_jacobian(x_star: &[f64], x: &[f64], dist: &DistributionSpec) -> Result<Tridiag> {
    let gl = GaussLegendre::cached(24);
    let n = x_star.len();
    let mut acc = Tridiag::new(vec![0.0; n - 1], vec![0.0; n], vec![0.0; n - 1])?;
    for (node, w) in gl.nodes().iter().zip(gl.weights()) {
        let t = 0.5 * (node + 1.0);
        let pt: Vec<f64> = x_star.iter().zip(x).map(|(s, v)| s + t * (v - s)).collect();
        let j = lloyd_jacobian(&pt, dist)?;
        for k in 0..n - 1 {
            acc.lower[k] += 0.5 * w * j.lower[k];
            acc.upper[k] += 0.5 * w * j.upper[k];
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests;
