use super::DualGrid;
use crate::distributions::DistributionSpec;
use crate::error::{Error, Result};

/// Companion weights `p_i = P(X_hat = x_i)`.
///
/// Cell `[x_i, x_{i+1}]` gives `(x_{i+1}[F] - [K])/Delta` to its left end
/// and `([K] - x_i[F])/Delta` to its right end.
pub fn dual_weights(grid: &DualGrid, dist: &DistributionSpec) -> Vec<f64> {
    let x = grid.points();
    let mut p = vec![0.0; x.len()];
    let mut f_prev = dist.cdf(x[0]);
    for i in 0..x.len() - 1 {
        let f_next = dist.cdf(x[i + 1]);
        let df = f_next - f_prev;
        let h = x[i + 1] - x[i];
        // [K] - x_i [F] is a nonnegative integral; clip the rounding noise
        // so weights stay nonnegative.
        let to_right = (dist.cell_moment(x[i], x[i + 1]) / h).clamp(0.0, df.max(0.0));
        p[i + 1] += to_right;
        p[i] += df.max(0.0) - to_right;
        f_prev = f_next;
    }
    p
}

/// The same weights by quadrature of the splitting fractions against the
/// density. Used as an independent check.
pub fn dual_weights_by_quadrature(grid: &DualGrid, dist: &DistributionSpec) -> Result<Vec<f64>> {
    if !dist.has_pdf() {
        return Err(Error::Unsupported("weights by quadrature need a density".into()));
    }
    let x = grid.points();
    let mut p = vec![0.0; x.len()];
    for i in 0..x.len() - 1 {
        let h = x[i + 1] - x[i];
        p[i] += h * dist.integrate_in_cell(x[i], x[i + 1], |_, zc| zc, false);
        p[i + 1] += h * dist.integrate_in_cell(x[i], x[i + 1], |z, _| z, false);
    }
    Ok(p)
}
