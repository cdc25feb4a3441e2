//! Method selection and dispatch.

use dualquant::dual::brute_force_optimal;
use dualquant::lloyd::{lloyd_solve_traced, IterRecord};
use dualquant::special::{power_grid, truncexp_grid};
use dualquant::{DistributionKind, DistributionSpec, LloydConfig, LloydInit, Orientation, QuantizerResult};

use crate::args::Method;
use crate::Failure;

/// Gradient residual below which a direct solver's grid counts as converged.
pub const DIRECT_RESIDUAL_TOL: f64 = 1e-9;

#[derive(Debug, Clone)]
pub struct SolveRequest {
    pub dist: DistributionSpec,
    pub r: f64,
    pub method: Method,
    pub tol: f64,
    pub max_iter: usize,
    pub init: Option<Vec<f64>>,
    pub resolution: usize,
}

#[derive(Debug, Clone)]
pub struct Solved {
    pub method: &'static str,
    pub result: QuantizerResult,
}

/// The method `auto` resolves to for this law and exponent.
pub fn resolve(method: Method, dist: &DistributionSpec, r: f64) -> Result<Method, Failure> {
    if method != Method::Auto {
        return Ok(method);
    }
    match dist.kind() {
        // The equidistant start is already the fixed point, so Lloyd returns
        // the uniform grid without rounding.
        DistributionKind::Uniform if r == 2.0 => Ok(Method::Lloyd),
        DistributionKind::Uniform | DistributionKind::Power { .. } => Ok(Method::Power),
        DistributionKind::TruncExp { .. } => Ok(Method::Truncexp),
        _ if r == 2.0 => Ok(Method::Lloyd),
        _ => Err(Failure::usage(format!("no solver for {dist} with r = {r}: Lloyd needs r = 2"))),
    }
}

pub fn solve(
    req: &SolveRequest,
    n: usize,
    trace: Option<&mut dyn FnMut(&IterRecord)>,
) -> Result<Solved, Failure> {
    let dist = &req.dist;
    let r = req.r;
    let method = resolve(req.method, dist, r)?;
    if trace.is_some() && method != Method::Lloyd {
        return Err(Failure::usage("a trace is only recorded by the lloyd method"));
    }
    let direct = |grid| -> Result<QuantizerResult, Failure> {
        let mut res = QuantizerResult::assemble(grid, dist, r, 0, true, None)?;
        res.converged = res.residual_sup < DIRECT_RESIDUAL_TOL;
        Ok(res)
    };
    let (a, b) = (dist.a(), dist.b());
    let (name, result) = match method {
        Method::Lloyd => {
            let cfg = LloydConfig {
                tol: req.tol,
                max_iter: req.max_iter,
                init: req.init.clone().map_or(LloydInit::Equidistant, LloydInit::Interior),
                track_rate: false,
            };
            let res = match trace {
                Some(t) => lloyd_solve_traced(dist, n, r, &cfg, Some(t))?,
                None => lloyd_solve_traced(dist, n, r, &cfg, None::<fn(&IterRecord)>)?,
            };
            ("lloyd", res)
        }
        Method::Power => {
            let (alpha, orientation) = match dist.kind() {
                DistributionKind::Power { alpha, orientation } => (*alpha, *orientation),
                // The uniform law is the power law with exponent one.
                DistributionKind::Uniform => (1.0, Orientation::Rising),
                _ => return Err(Failure::usage(format!("method power needs a power or uniform law, got {dist}"))),
            };
            ("power", direct(power_grid(alpha, r, n, a, b, orientation)?)?)
        }
        Method::Truncexp => {
            let DistributionKind::TruncExp { lambda } = dist.kind() else {
                return Err(Failure::usage(format!("method truncexp needs a truncexp law, got {dist}")));
            };
            ("truncexp", direct(truncexp_grid(*lambda, r, n, a, b)?)?)
        }
        Method::Brute => {
            let grid = brute_force_optimal(dist, n, r, req.resolution)?;
            // A lattice optimum is not a critical point to solver accuracy.
            ("brute", QuantizerResult::assemble(grid, dist, r, 0, true, None)?)
        }
        Method::Auto => unreachable!("resolved above"),
    };
    Ok(Solved { method: name, result })
}
