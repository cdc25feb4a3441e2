//! The invariant checks behind `dualquant verify`.

use std::fmt::Write;

use dualquant::dual::{distortion_hessian, dual_weights, projection_mean, residual_sup};
use dualquant::spectral::tridiag_eigs;
use dualquant::{DistributionKind, DistributionSpec, DualGrid};

use crate::args::{Method, VerifyArgs};
use crate::solve::{solve, SolveRequest};
use crate::{Failure, Outcome, EXIT_FAILED, EXIT_OK};

pub const STATIONARITY_TOL: f64 = 1e-14;
pub const WEIGHT_SUM_TOL: f64 = 1e-12;
pub const MEAN_TOL: f64 = 1e-10;
pub const GRADIENT_TOL: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

#[derive(Debug, Clone)]
pub struct Check {
    pub name: &'static str,
    pub status: Status,
    pub detail: String,
}

impl Check {
    fn judged(name: &'static str, ok: bool, detail: String) -> Self {
        Self { name, status: if ok { Status::Pass } else { Status::Fail }, detail }
    }

    fn skipped(name: &'static str, why: &str) -> Self {
        Self { name, status: Status::Skip, detail: why.to_string() }
    }
}

fn parse_grid(spec: &str, dist: &DistributionSpec, n: usize) -> Result<DualGrid, Failure> {
    if spec.trim() == "equidistant" {
        return Ok(DualGrid::equidistant(dist.a(), dist.b(), n)?);
    }
    let points = spec
        .split(',')
        .map(|t| t.trim().parse::<f64>().map_err(|_| Failure::usage(format!("--grid: '{t}' is not a number"))))
        .collect::<Result<Vec<_>, _>>()?;
    if points.len() != n {
        return Err(Failure::usage(format!("--grid has {} points but --N is {n}", points.len())));
    }
    Ok(DualGrid::for_dist(dist, points)?)
}

/// Runs every applicable check on `grid`.
pub fn checks(grid: &DualGrid, dist: &DistributionSpec, r: f64) -> Result<Vec<Check>, Failure> {
    let mut out = Vec::new();
    let scale = dist.a().abs().max(dist.b().abs()).max(1.0);

    let mut worst: f64 = 0.0;
    for k in 0..=100 {
        let xi = dist.a() + (dist.b() - dist.a()) * f64::from(k) / 100.0;
        worst = worst.max((projection_mean(grid, xi)? - xi).abs());
    }
    out.push(Check::judged(
        "stationarity",
        worst <= STATIONARITY_TOL * scale,
        format!("max |E[proj(xi)] - xi| = {worst:.3e} over 101 points"),
    ));

    let p = dual_weights(grid, dist);
    let sum_err = (p.iter().sum::<f64>() - 1.0).abs();
    let mean: f64 = p.iter().zip(grid.points()).map(|(w, x)| w * x).sum();
    let mean_err = (mean - dist.mean()).abs();
    out.push(Check::judged(
        "weights",
        sum_err <= WEIGHT_SUM_TOL && mean_err <= MEAN_TOL * scale,
        format!("|sum p - 1| = {sum_err:.3e}, |sum p x - E X| = {mean_err:.3e}"),
    ));

    if grid.len() > 2 {
        let res = residual_sup(grid, dist, r)?;
        out.push(Check::judged("gradient", res < GRADIENT_TOL, format!("sup |grad L| = {res:.3e}")));
    } else {
        out.push(Check::skipped("gradient", "no interior points"));
    }

    if grid.len() < 3 {
        out.push(Check::skipped("hessian", "no interior points"));
    } else if !dist.has_pdf() {
        out.push(Check::skipped("hessian", "the law has no density"));
    } else {
        let min = tridiag_eigs(&distortion_hessian(grid, dist, r)?)[0];
        out.push(Check::judged("hessian", min > 0.0, format!("min eigenvalue = {min:.6e}")));
    }
    Ok(out)
}

/// Lloyd against the dedicated solver, when one exists for the law.
fn cross_check(req: &SolveRequest, n: usize) -> Result<Check, Failure> {
    let (special, tol) = match req.dist.kind() {
        DistributionKind::TruncExp { .. } => (Method::Truncexp, 1e-8),
        DistributionKind::Power { .. } => (Method::Power, 1e-6),
        _ => return Ok(Check::skipped("cross-solver", "no dedicated solver for this law")),
    };
    if req.r != 2.0 || n < 3 {
        return Ok(Check::skipped("cross-solver", "Lloyd runs at r = 2 with N >= 3 only"));
    }
    let lloyd = solve(&SolveRequest { method: Method::Lloyd, ..req.clone() }, n, None)?;
    let other = solve(&SolveRequest { method: special, ..req.clone() }, n, None)?;
    let gap = lloyd
        .result
        .grid
        .points()
        .iter()
        .zip(other.result.grid.points())
        .fold(0.0f64, |m, (x, y)| m.max((x - y).abs()));
    Ok(Check::judged("cross-solver", gap <= tol, format!("lloyd vs {}: {gap:.3e} (tol {tol:e})", other.method)))
}

pub fn run_verify(a: &VerifyArgs) -> Result<Outcome, Failure> {
    let req = a.common.request()?;
    let mut stdout = String::new();
    let mut failed = false;
    for n in a.common.levels.values() {
        let (grid, label) = match &a.grid {
            Some(spec) => (parse_grid(spec, &req.dist, n)?, "given grid".to_string()),
            None => {
                let s = solve(&req, n, None)?;
                (s.result.grid, format!("method {}", s.method))
            }
        };
        let _ = writeln!(stdout, "# {} N={n} r={} {label}", req.dist, req.r);
        let mut all = checks(&grid, &req.dist, req.r)?;
        if a.grid.is_none() {
            all.push(cross_check(&req, n)?);
        }
        for c in all {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => {
                    failed = true;
                    "FAIL"
                }
                Status::Skip => "SKIP",
            };
            let _ = writeln!(stdout, "{tag} {:<13}{}", c.name, c.detail);
        }
    }
    Ok(Outcome { stdout, code: if failed { EXIT_FAILED } else { EXIT_OK } })
}
