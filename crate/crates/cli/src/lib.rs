//! Command-line front-end for `dualquant`: parse a distribution, dispatch
//! to a solver and print grids, weights and diagnostics as JSON or CSV.
//!
//! Data goes to stdout and diagnostics to stderr. Exit status is 0 on
//! success, 2 when a solve did not converge or a check failed, and 1 on
//! usage or domain errors.

pub mod args;
pub mod output;
pub mod solve;
pub mod verify;

use std::ffi::OsString;
use std::io::Write;

use clap::Parser;
use rayon::prelude::*;

use args::{Cli, Command, CounterexampleArgs, Format, SolveArgs, TraceArgs, ZadorArgs};
use dualquant::dual::uniform_zador_table;
use dualquant::lloyd::IterRecord;
use dualquant::quadrature::ORDER_ENV_VAR;
use dualquant::spectral::{counterexample_min_eig, saddle_threshold};

pub const EXIT_OK: u8 = 0;
pub const EXIT_USAGE: u8 = 1;
pub const EXIT_FAILED: u8 = 2;

/// A failed command: message for stderr plus exit status.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Self {
        Self { code: EXIT_USAGE, message: message.into() }
    }
}

impl From<dualquant::Error> for Failure {
    fn from(e: dualquant::Error) -> Self {
        Self::usage(e.to_string())
    }
}

/// Output of a command: the data for stdout and the exit status.
pub struct Outcome {
    pub stdout: String,
    pub code: u8,
}

pub fn main_with_args<I, T>(args: I) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    warn_on_bad_quad_order();
    match run(&cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(out.stdout.as_bytes()).and_then(|_| stdout.flush());
            out.code
        }
        Err(f) => {
            eprintln!("dualquant: {}", f.message);
            f.code
        }
    }
}

fn warn_on_bad_quad_order() {
    if let Ok(v) = std::env::var(ORDER_ENV_VAR) {
        if !v.trim().parse::<usize>().is_ok_and(|n| (2..=512).contains(&n)) {
            eprintln!("dualquant: ignoring {ORDER_ENV_VAR}={v}: expected an integer in 2..=512");
        }
    }
}

pub fn run(cli: &Cli) -> Result<Outcome, Failure> {
    match &cli.command {
        Command::Solve(a) => run_solve(a),
        Command::Verify(a) => verify::run_verify(a),
        Command::Zador(a) => run_zador(a),
        Command::Counterexample(a) => run_counterexample(a),
        Command::Trace(a) => run_trace(a),
    }
}

fn run_solve(a: &SolveArgs) -> Result<Outcome, Failure> {
    let levels = a.common.levels.values();
    if a.trace.is_some() && levels.len() > 1 {
        return Err(Failure::usage("--trace takes a single --N"));
    }
    let req = a.common.request()?;
    let solved = if let Some(path) = &a.trace {
        let mut rows = Vec::new();
        let mut record = |r: &IterRecord| rows.push(*r);
        let s = solve::solve(&req, levels[0], Some(&mut record))?;
        std::fs::write(path, output::trace_csv(&rows))
            .map_err(|e| Failure::usage(format!("cannot write {}: {e}", path.display())))?;
        vec![s]
    } else {
        // Solved concurrently, reported in order of N.
        levels.par_iter().map(|&n| solve::solve(&req, n, None)).collect::<Result<Vec<_>, _>>()?
    };
    let docs: Vec<output::SolveDoc> = solved.iter().map(|s| output::SolveDoc::new(&req.dist, s)).collect();
    let code = if docs.iter().all(|d| d.converged) { EXIT_OK } else { EXIT_FAILED };
    for d in docs.iter().filter(|d| !d.converged) {
        eprintln!("dualquant: N={} did not converge (residual {:e})", d.n, d.residual_sup);
    }
    let single = levels.len() == 1;
    let stdout = match a.common.format {
        Format::Json => output::solve_json(&docs, single),
        Format::Csv => docs.iter().map(output::solve_csv).collect(),
    };
    Ok(Outcome { stdout, code })
}

fn run_zador(a: &ZadorArgs) -> Result<Outcome, Failure> {
    let rows = uniform_zador_table(a.r, &a.levels.values())?;
    let stdout = match a.format {
        Format::Json => output::zador_json(&rows),
        Format::Csv => output::zador_csv(a.r, &rows),
    };
    Ok(Outcome { stdout, code: EXIT_OK })
}

fn run_counterexample(a: &CounterexampleArgs) -> Result<Outcome, Failure> {
    let levels = a.levels.values();
    let reports = levels
        .par_iter()
        .map(|&n| counterexample_min_eig(a.r, n).map(|rep| (n, rep)))
        .collect::<Result<Vec<_>, _>>()?;
    let (_, first) = reports[0];
    let threshold = saddle_threshold(first.a, first.b, 1_000_000);
    let doc = output::CounterexampleDoc::new(a.r, threshold, &reports);
    let stdout = match a.format {
        Format::Json => output::to_json(&doc),
        Format::Csv => output::counterexample_csv(&doc),
    };
    Ok(Outcome { stdout, code: EXIT_OK })
}

fn run_trace(a: &TraceArgs) -> Result<Outcome, Failure> {
    let mut req = a.common.request()?;
    req.method = args::Method::Lloyd;
    let levels = a.common.levels.values();
    if levels.len() != 1 {
        return Err(Failure::usage("trace takes a single --N"));
    }
    let mut rows = Vec::new();
    let mut record = |r: &IterRecord| rows.push(*r);
    let s = solve::solve(&req, levels[0], Some(&mut record))?;
    let code = if s.result.converged { EXIT_OK } else { EXIT_FAILED };
    Ok(Outcome { stdout: output::trace_csv(&rows), code })
}
