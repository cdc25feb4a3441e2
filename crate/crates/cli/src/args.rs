//! Command-line syntax.

use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use dualquant::DistributionSpec;

use crate::solve::SolveRequest;
use crate::Failure;

#[derive(Debug, Parser)]
#[command(name = "dualquant", version, about = "Optimal dual quantizers of one-dimensional laws")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute an optimal grid with its weights and distortion.
    Solve(SolveArgs),
    /// Solve (or take a given grid) and check the invariants of the result.
    Verify(VerifyArgs),
    /// Uniform-law table of N d_{r,N} against its limit constant.
    Zador(ZadorArgs),
    /// Hessian data of the periodic counterexample at its symmetric critical point.
    Counterexample(CounterexampleArgs),
    /// Per-iteration CSV of the Lloyd fixed-point iteration.
    Trace(TraceArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// The dedicated solver for the law if there is one, else Lloyd (r = 2).
    Auto,
    Lloyd,
    Power,
    Truncexp,
    /// Lattice search, N = 3 or 4 only.
    Brute,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

/// A single level `N` or an inclusive range `LO..HI`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Levels {
    pub lo: usize,
    pub hi: usize,
}

impl Levels {
    pub fn values(&self) -> Vec<usize> {
        (self.lo..=self.hi).collect()
    }
}

impl FromStr for Levels {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let num = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("'{t}' is not a level count"));
        let (lo, hi) = match s.split_once("..") {
            Some((lo, hi)) => (num(lo)?, num(hi.strip_prefix('=').unwrap_or(hi))?),
            None => {
                let n = num(s)?;
                (n, n)
            }
        };
        if lo < 2 || hi < lo {
            return Err(format!("'{s}': need 2 <= LO <= HI"));
        }
        Ok(Self { lo, hi })
    }
}

/// Comma-separated reals.
#[derive(Debug, Clone, PartialEq)]
pub struct Reals(pub Vec<f64>);

impl FromStr for Reals {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        s.split(',')
            .map(|t| t.trim().parse::<f64>().map_err(|_| format!("'{t}' is not a number")))
            .collect::<Result<Vec<_>, _>>()
            .map(Reals)
    }
}

#[derive(Debug, Args)]
pub struct CommonArgs {
    /// uniform:a,b | power:alpha,a,b[,falling] | truncexp:lambda,a,b |
    /// counterexample:r,Nperiod | tabulated:@file.csv
    #[arg(long)]
    pub dist: String,
    /// Number of grid points, or an inclusive range LO..HI solved as a batch.
    #[arg(long = "N", value_name = "N|LO..HI")]
    pub levels: Levels,
    #[arg(long, default_value_t = 2.0)]
    pub r: f64,
    #[arg(long, value_enum, default_value_t = Method::Auto)]
    pub method: Method,
    /// Lloyd stopping threshold on the sup-norm of the update.
    #[arg(long, default_value_t = 1e-13)]
    pub tol: f64,
    #[arg(long, default_value_t = 100_000)]
    pub max_iter: usize,
    /// Starting interior points x_2..x_{N-1} for Lloyd (default: equidistant).
    #[arg(long, value_name = "X2,...")]
    pub init: Option<Reals>,
    /// Lattice resolution of the brute-force search.
    #[arg(long, default_value_t = 1000)]
    pub resolution: usize,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

impl CommonArgs {
    pub fn request(&self) -> Result<SolveRequest, Failure> {
        let dist = DistributionSpec::from_str(&self.dist)?;
        Ok(SolveRequest {
            dist,
            r: self.r,
            method: self.method,
            tol: self.tol,
            max_iter: self.max_iter,
            init: self.init.as_ref().map(|r| r.0.clone()),
            resolution: self.resolution,
        })
    }
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    /// Also write the per-iteration Lloyd trace as CSV to this file.
    #[arg(long, value_name = "PATH")]
    pub trace: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    /// Check this grid instead of solving: `equidistant` or x_1,...,x_N.
    #[arg(long, value_name = "equidistant|X1,...")]
    pub grid: Option<String>,
}

#[derive(Debug, Args)]
pub struct ZadorArgs {
    #[arg(long, default_value_t = 2.0)]
    pub r: f64,
    #[arg(long = "N", value_name = "N|LO..HI", default_value = "2..50")]
    pub levels: Levels,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct CounterexampleArgs {
    #[arg(long, default_value_t = 2.0)]
    pub r: f64,
    #[arg(long = "N", value_name = "N|LO..HI", default_value = "3..20")]
    pub levels: Levels,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct TraceArgs {
    #[command(flatten)]
    pub common: CommonArgs,
}
