use super::{distortion, dual_weights, residual_sup, Distortion, DualGrid};
use crate::distributions::DistributionSpec;
use crate::error::Result;

/// A solved quantizer with its diagnostics.
#[derive(Debug, Clone, PartialEq)]
pub struct QuantizerResult {
    pub grid: DualGrid,
    pub weights: Vec<f64>,
    pub distortion: Distortion,
    pub r: f64,
    /// Fixed-point iterations; zero for direct solvers.
    pub iterations: usize,
    /// Sup-norm of the distortion gradient at the returned grid.
    pub residual_sup: f64,
    pub rate_estimate: Option<f64>,
    pub converged: bool,
}

impl QuantizerResult {
    /// Fills in weights, distortion and the gradient residual for `grid`.
    pub fn assemble(
        grid: DualGrid,
        dist: &DistributionSpec,
        r: f64,
        iterations: usize,
        converged: bool,
        rate_estimate: Option<f64>,
    ) -> Result<Self> {
        let weights = dual_weights(&grid, dist);
        let distortion = distortion(&grid, dist, r)?;
        let residual_sup = if grid.len() > 2 { residual_sup(&grid, dist, r)? } else { 0.0 };
        Ok(Self { grid, weights, distortion, r, iterations, residual_sup, rate_estimate, converged })
    }

    /// `sum_i p_i g(x_i)`, the cubature formula attached to the quantizer.
    pub fn quadrature_apply<G: Fn(f64) -> f64>(&self, g: G) -> f64 {
        self.weights.iter().zip(self.grid.points()).map(|(p, &x)| p * g(x)).sum()
    }
}

/// `sum_i p_i g(x_i)`.
pub fn quadrature_apply<G: Fn(f64) -> f64>(result: &QuantizerResult, g: G) -> f64 {
    result.quadrature_apply(g)
}
