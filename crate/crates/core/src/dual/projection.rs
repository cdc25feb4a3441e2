use super::DualGrid;
use crate::error::{domain, Result};

/// Randomized splitting: `xi` in `[x_i, x_{i+1})` goes to `x_i` when
/// `u < (x_{i+1} - xi)/(x_{i+1} - x_i)` and to `x_{i+1}` otherwise;
/// `xi = b` goes to `b`.
pub fn dual_project(grid: &DualGrid, xi: f64, u: f64) -> Result<f64> {
    if !(xi >= grid.a() && xi <= grid.b()) {
        return domain(format!("xi = {xi} outside [{}, {}]", grid.a(), grid.b()));
    }
    if !(u > 0.0 && u < 1.0) {
        return domain(format!("u = {u} must lie in (0, 1)"));
    }
    if xi == grid.b() {
        return Ok(grid.b());
    }
    let (lo, hi) = cell(grid, xi);
    Ok(if u < (hi - xi) / (hi - lo) { lo } else { hi })
}

/// `int_0^1 dual_project(grid, xi, u) du`, the barycentric two-point
/// average. Equals `xi` up to rounding.
pub fn projection_mean(grid: &DualGrid, xi: f64) -> Result<f64> {
    if !(xi >= grid.a() && xi <= grid.b()) {
        return domain(format!("xi = {xi} outside [{}, {}]", grid.a(), grid.b()));
    }
    if xi == grid.b() {
        return Ok(xi);
    }
    let (lo, hi) = cell(grid, xi);
    let theta = (hi - xi) / (hi - lo);
    Ok(theta * lo + (1.0 - theta) * hi)
}

fn cell(grid: &DualGrid, xi: f64) -> (f64, f64) {
    let i = grid.cell_index(xi);
    let p = grid.points();
    (p[i], p[i + 1])
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn examples() {
        let g = DualGrid::new(vec![0.0, 0.5, 1.0]).unwrap();
        assert_eq!(dual_project(&g, 0.25, 0.4).unwrap(), 0.0);
        assert_eq!(dual_project(&g, 0.25, 0.6).unwrap(), 0.5);
        assert_eq!(dual_project(&g, 1.0, 0.01).unwrap(), 1.0);
        assert_eq!(dual_project(&g, 0.5, 0.99).unwrap(), 0.5);
        assert!(dual_project(&g, 1.1, 0.5).is_err());
        assert!(dual_project(&g, 0.5, 1.0).is_err());
    }

    #[test]
    fn empirical_split_frequency() {
        let g = DualGrid::new(vec![0.0, 0.4, 1.0]).unwrap();
        let m = 100_000;
        let mean: f64 = (0..m)
            .map(|k| dual_project(&g, 0.7, (k as f64 + 0.5) / m as f64).unwrap())
            .sum::<f64>()
            / m as f64;
        assert!((mean - 0.7).abs() < 1e-5);
    }

    proptest! {
        #[test]
        fn stationarity(xi in 0.0f64..=1.0) {
            let g = DualGrid::new(vec![0.0, 0.1, 0.35, 0.5, 0.9, 1.0]).unwrap();
            prop_assert!((projection_mean(&g, xi).unwrap() - xi).abs() < 1e-14);
        }
    }
}
