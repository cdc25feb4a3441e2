//! The `L^r` dual distortion
//! `L_N = sum_i (Delta x_i)^{r+1} int_0^1 varpi_r(z) f(x_{i-1} + z Delta x_i) dz`
//! and its gradient and Hessian in the interior points.

use super::DualGrid;
use crate::distributions::DistributionSpec;
use crate::error::{Error, Result};
use crate::kernels::KernelParams;
use crate::tridiag::TridiagSym;

/// `L_N` together with its `r`-th root.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Distortion {
    pub lr: f64,
    pub root: f64,
    pub r: f64,
}

impl Distortion {
    fn new(lr: f64, r: f64) -> Self {
        let lr = lr.max(0.0);
        Self { lr, root: lr.powf(1.0 / r), r }
    }
}

/// Picks the most accurate available path: the `F`/`K` closed form for
/// `r = 2`, the density form otherwise, and the CDF form for laws without a
/// density.
pub fn distortion(grid: &DualGrid, dist: &DistributionSpec, r: f64) -> Result<Distortion> {
    KernelParams::new(r)?;
    let lr = if r == 2.0 {
        distortion_quadratic(grid, dist)
    } else if dist.has_pdf() {
        distortion_density_form(grid, dist, r)?
    } else {
        distortion_cdf_form(grid, dist, r)?
    };
    Ok(Distortion::new(lr, r))
}

/// `sum_i ((x_i + x_{i+1})[K] - x_i x_{i+1}[F]) - E X^2`.
pub fn distortion_quadratic(grid: &DualGrid, dist: &DistributionSpec) -> f64 {
    let x = grid.points();
    let mut s = 0.0;
    let (mut f0, mut k0) = (dist.cdf(x[0]), dist.partial_moment(x[0]));
    for w in x.windows(2) {
        let (f1, k1) = (dist.cdf(w[1]), dist.partial_moment(w[1]));
        s += (w[0] + w[1]) * (k1 - k0) - w[0] * w[1] * (f1 - f0);
        f0 = f1;
        k0 = k1;
    }
    s - dist.second_moment()
}

/// Per-cell quadrature of `varpi_r` against the density.
pub fn distortion_density_form(grid: &DualGrid, dist: &DistributionSpec, r: f64) -> Result<f64> {
    let k = KernelParams::new(r)?;
    require_pdf(dist, "density-form distortion")?;
    let rough = !k.is_integer();
    Ok(grid
        .points()
        .windows(2)
        .map(|w| {
            let h = w[1] - w[0];
            h.powf(r + 1.0) * dist.integrate_in_cell(w[0], w[1], |z, zc| k.varpi_uv(z, zc), rough)
        })
        .sum())
}

/// `-sum_i (Delta x_i)^r int_0^1 (F(x_{i-1} + z Delta x_i) - F(x_{i-1})) varpi_r'(z) dz`.
pub fn distortion_cdf_form(grid: &DualGrid, dist: &DistributionSpec, r: f64) -> Result<f64> {
    let k = KernelParams::new(r)?;
    let rough = !k.is_integer();
    Ok(grid
        .points()
        .windows(2)
        .map(|w| {
            let (lo, hi) = (w[0], w[1]);
            let h = hi - lo;
            let f_lo = dist.cdf(lo);
            let inner = dist.integrate_over_cell(
                lo,
                hi,
                |z, zc| (dist.cdf(lo + z * h) - f_lo) * k.varpi_d1_uv(z, zc),
                rough,
            );
            -h.powf(r) * inner
        })
        .sum())
}

/// Gradient of `L_N` in `x_2, ..., x_{N-1}`.
pub fn distortion_gradient(grid: &DualGrid, dist: &DistributionSpec, r: f64) -> Result<Vec<f64>> {
    KernelParams::new(r)?;
    if r == 2.0 {
        Ok(gradient_quadratic(grid, dist))
    } else if dist.has_pdf() {
        gradient_density_form(grid, dist, r)
    } else {
        gradient_cdf_form(grid, dist, r)
    }
}

/// `[K]_{x_{i-1}}^{x_{i+1}} - x_{i+1}[F]_{x_i}^{x_{i+1}} - x_{i-1}[F]_{x_{i-1}}^{x_i}`.
pub fn gradient_quadratic(grid: &DualGrid, dist: &DistributionSpec) -> Vec<f64> {
    let x = grid.points();
    let f: Vec<f64> = x.iter().map(|&v| dist.cdf(v)).collect();
    let k: Vec<f64> = x.iter().map(|&v| dist.partial_moment(v)).collect();
    (1..x.len() - 1)
        .map(|i| {
            let left = (k[i] - k[i - 1]) - x[i - 1] * (f[i] - f[i - 1]);
            let right = x[i + 1] * (f[i + 1] - f[i]) - (k[i + 1] - k[i]);
            left - right
        })
        .collect()
}

/// `(Delta x_i)^r int Psi_r(z) f(x_{i-1} + z Delta x_i) dz
///  - (Delta x_{i+1})^r int Psi_r(1 - z) f(x_i + z Delta x_{i+1}) dz`.
pub fn gradient_density_form(grid: &DualGrid, dist: &DistributionSpec, r: f64) -> Result<Vec<f64>> {
    let k = KernelParams::new(r)?;
    require_pdf(dist, "density-form gradient")?;
    let rough = !k.is_integer();
    let x = grid.points();
    // Per cell: (left-anchored, right-anchored) moments of Psi.
    let cells: Vec<(f64, f64)> = x
        .windows(2)
        .map(|w| {
            let h = w[1] - w[0];
            let hr = h.powf(r);
            let into_right = dist.integrate_in_cell(w[0], w[1], |z, zc| k.psi_uv(z, zc), rough);
            let into_left = dist.integrate_in_cell(w[0], w[1], |z, zc| k.psi_uv(zc, z), rough);
            (hr * into_right, hr * into_left)
        })
        .collect();
    Ok((1..x.len() - 1).map(|i| cells[i - 1].0 - cells[i].1).collect())
}

/// Integrated-by-parts form using only the CDF:
/// `(Delta x_i)^{r-1} int Psi_r'(z)(F(x_i) - F(x_{i-1} + z Delta x_i)) dz
///  - (Delta x_{i+1})^{r-1} int Psi_r'(1 - z)(F(x_i + z Delta x_{i+1}) - F(x_i)) dz`.
pub fn gradient_cdf_form(grid: &DualGrid, dist: &DistributionSpec, r: f64) -> Result<Vec<f64>> {
    let k = KernelParams::new(r)?;
    let rough = !k.is_integer();
    let x = grid.points();
    let cells: Vec<(f64, f64)> = x
        .windows(2)
        .map(|w| {
            let (lo, hi) = (w[0], w[1]);
            let h = hi - lo;
            let hr = h.powf(r - 1.0);
            let (f_lo, f_hi) = (dist.cdf(lo), dist.cdf(hi));
            let into_right = dist.integrate_over_cell(
                lo,
                hi,
                |z, zc| k.psi_d1_uv(z, zc) * (f_hi - dist.cdf(lo + z * h)),
                rough,
            );
            let into_left = dist.integrate_over_cell(
                lo,
                hi,
                |z, zc| k.psi_d1_uv(zc, z) * (dist.cdf(lo + z * h) - f_lo),
                rough,
            );
            (hr * into_right, hr * into_left)
        })
        .collect();
    Ok((1..x.len() - 1).map(|i| cells[i - 1].0 - cells[i].1).collect())
}

/// Hessian of `L_N` in the interior points, which is tridiagonal.
///
/// Off-diagonal `(i-1, i)`: `-(Delta x_i)^{r-1} int vartheta_r(z) f(x_{i-1} + z Delta x_i) dz`.
/// Diagonal: `Psi_r(1) f(x_i)((Delta x_i)^{r-1} + (Delta x_{i+1})^{r-1})` plus the
/// `vartheta_tilde_r` moments of the two adjacent cells.
pub fn distortion_hessian(grid: &DualGrid, dist: &DistributionSpec, r: f64) -> Result<TridiagSym> {
    let k = KernelParams::new(r)?;
    require_pdf(dist, "Hessian")?;
    let x = grid.points();
    let n = x.len();
    if n < 3 {
        return Err(Error::InvalidGrid("the Hessian needs at least one interior point".into()));
    }
    let rough = !k.is_integer();
    let psi1 = k.psi(1.0);
    struct Cell {
        hr1: f64,
        theta: f64,
        tilde_right: f64,
        tilde_left: f64,
    }
    let cells: Vec<Cell> = x
        .windows(2)
        .map(|w| {
            let h = w[1] - w[0];
            Cell {
                hr1: h.powf(r - 1.0),
                theta: dist.integrate_in_cell(w[0], w[1], |z, zc| k.vartheta_uv(z, zc), rough),
                tilde_right: dist.integrate_in_cell(w[0], w[1], |z, zc| k.vartheta_tilde_uv(z, zc), rough),
                tilde_left: dist.integrate_in_cell(w[0], w[1], |z, zc| k.vartheta_tilde_uv(zc, z), rough),
            }
        })
        .collect();
    let mut diag = Vec::with_capacity(n - 2);
    for i in 1..n - 1 {
        let (l, rgt) = (&cells[i - 1], &cells[i]);
        let fx = dist.pdf(x[i])?;
        diag.push(psi1 * fx * (l.hr1 + rgt.hr1) + l.hr1 * l.tilde_right + rgt.hr1 * rgt.tilde_left);
    }
    let off = (2..n - 1).map(|i| -cells[i - 1].hr1 * cells[i - 1].theta).collect();
    TridiagSym::new(diag, off)
}

/// `sup_i |dL_N / dx_i|` over the interior.
pub fn residual_sup(grid: &DualGrid, dist: &DistributionSpec, r: f64) -> Result<f64> {
    Ok(distortion_gradient(grid, dist, r)?.iter().fold(0.0, |m, g| m.max(g.abs())))
}

fn require_pdf(dist: &DistributionSpec, what: &str) -> Result<()> {
    if dist.has_pdf() {
        Ok(())
    } else {
        Err(Error::Unsupported(format!("{what} needs a density, but {dist} is CDF-only")))
    }
}

#[cfg(test)]
mod tests;
