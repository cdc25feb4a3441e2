use super::{distortion, DualGrid};
use crate::distributions::DistributionSpec;
use crate::error::Result;
use crate::kernels::KernelParams;

/// `(2/((r+1)(r+2)))^{1/r}`, the sharp constant of the dual quantization
/// rate in dimension one.
pub fn zador_constant(r: f64) -> Result<f64> {
    KernelParams::new(r)?;
    Ok((2.0 / ((r + 1.0) * (r + 2.0))).powf(1.0 / r))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZadorRow {
    pub n: usize,
    /// `d_{r,N}` of the uniform law on `[0, 1]`.
    pub d: f64,
    pub n_times_d: f64,
    pub constant: f64,
}

/// Optimal error modulus of `U([0,1])` for each level, computed from the
/// equidistant grid (optimal for this law) with the distortion routine.
pub fn uniform_zador_table(r: f64, levels: &[usize]) -> Result<Vec<ZadorRow>> {
    let constant = zador_constant(r)?;
    let dist = DistributionSpec::uniform(0.0, 1.0)?;
    levels
        .iter()
        .map(|&n| {
            let g = DualGrid::equidistant(0.0, 1.0, n)?;
            let d = distortion(&g, &dist, r)?.root;
            Ok(ZadorRow { n, d, n_times_d: n as f64 * d, constant })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_examples() {
        let rows = uniform_zador_table(2.0, &[2, 101]).unwrap();
        assert!((rows[0].d - 6f64.powf(-0.5)).abs() < 1e-15);
        // The quadratic closed form subtracts O(1) terms to get O(N^-2).
        let expected = 101.0 / 100.0 * 6f64.powf(-0.5);
        assert!((rows[1].n_times_d - expected).abs() < 1e-11);
        let r1 = uniform_zador_table(1.0, &[11]).unwrap()[0];
        assert!((r1.constant - 1.0 / 3.0).abs() < 1e-15);
        assert!((r1.n_times_d - 1.1 / 3.0).abs() < 1e-13);
    }
}
