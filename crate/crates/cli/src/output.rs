//! JSON and CSV documents. Floats are written in their shortest
//! round-trip form, so re-serializing a parsed document reproduces it
//! byte for byte.

use std::fmt::Write;

use dualquant::dual::ZadorRow;
use dualquant::lloyd::IterRecord;
use dualquant::spectral::CounterexampleReport;
use dualquant::DistributionSpec;
use serde::{Deserialize, Serialize};

use crate::solve::Solved;

/// Shortest representation that parses back to the same double.
pub fn num(x: f64) -> String {
    format!("{x:?}")
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("documents hold finite numbers and strings");
    s.push('\n');
    s
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolveDoc {
    pub distribution: String,
    #[serde(rename = "N")]
    pub n: usize,
    pub r: f64,
    pub method: String,
    pub grid: Vec<f64>,
    pub weights: Vec<f64>,
    #[serde(rename = "distortion_Lr")]
    pub distortion_lr: f64,
    pub distortion_root: f64,
    pub iterations: usize,
    pub residual_sup: f64,
    pub converged: bool,
}

impl SolveDoc {
    pub fn new(dist: &DistributionSpec, s: &Solved) -> Self {
        let res = &s.result;
        Self {
            distribution: dist.to_spec_string(),
            n: res.grid.len(),
            r: res.r,
            method: s.method.to_string(),
            grid: res.grid.points().to_vec(),
            weights: res.weights.clone(),
            distortion_lr: res.distortion.lr,
            distortion_root: res.distortion.root,
            iterations: res.iterations,
            residual_sup: res.residual_sup,
            converged: res.converged,
        }
    }
}

/// One object for a single level, an array for a batch.
pub fn solve_json(docs: &[SolveDoc], single: bool) -> String {
    if single {
        to_json(&docs[0])
    } else {
        to_json(&docs)
    }
}

pub fn solve_csv(d: &SolveDoc) -> String {
    let mut s = format!(
        "# distribution={} N={} r={} method={} distortion_Lr={} distortion_root={} iterations={} residual_sup={} converged={}\n",
        d.distribution,
        d.n,
        num(d.r),
        d.method,
        num(d.distortion_lr),
        num(d.distortion_root),
        d.iterations,
        num(d.residual_sup),
        d.converged
    );
    s.push_str("index,x,weight\n");
    for (i, (x, p)) in d.grid.iter().zip(&d.weights).enumerate() {
        let _ = writeln!(s, "{},{},{}", i + 1, num(*x), num(*p));
    }
    s
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ZadorDoc {
    #[serde(rename = "N")]
    pub n: usize,
    pub d: f64,
    #[serde(rename = "N_times_d")]
    pub n_times_d: f64,
    pub constant: f64,
}

pub fn zador_json(rows: &[ZadorRow]) -> String {
    let docs: Vec<ZadorDoc> =
        rows.iter().map(|r| ZadorDoc { n: r.n, d: r.d, n_times_d: r.n_times_d, constant: r.constant }).collect();
    to_json(&docs)
}

pub fn zador_csv(r: f64, rows: &[ZadorRow]) -> String {
    let mut s = format!("# uniform:0,1 r={}\nN,d,N_times_d,constant\n", num(r));
    for row in rows {
        let _ = writeln!(s, "{},{},{},{}", row.n, num(row.d), num(row.n_times_d), num(row.constant));
    }
    s
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CounterexampleRow {
    #[serde(rename = "N")]
    pub n: usize,
    pub lambda_min: f64,
    pub saddle: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CounterexampleDoc {
    pub r: f64,
    pub a: f64,
    pub b: f64,
    pub a_plus_b_expected: f64,
    /// Smallest N whose symmetric critical point is a saddle.
    pub threshold_n: Option<usize>,
    pub rows: Vec<CounterexampleRow>,
}

impl CounterexampleDoc {
    pub fn new(r: f64, threshold_n: Option<usize>, reports: &[(usize, CounterexampleReport)]) -> Self {
        let first = reports[0].1;
        Self {
            r,
            a: first.a,
            b: first.b,
            a_plus_b_expected: first.a_plus_b_expected,
            threshold_n,
            rows: reports
                .iter()
                .map(|(n, rep)| CounterexampleRow { n: *n, lambda_min: rep.lambda_min, saddle: rep.is_saddle })
                .collect(),
        }
    }
}

pub fn counterexample_csv(d: &CounterexampleDoc) -> String {
    let threshold = d.threshold_n.map_or_else(|| "none".to_string(), |n| n.to_string());
    let mut s = format!(
        "# r={} a={} b={} a_plus_b_expected={} threshold_N={}\nN,lambda_min,saddle\n",
        num(d.r),
        num(d.a),
        num(d.b),
        num(d.a_plus_b_expected),
        threshold
    );
    for row in &d.rows {
        let _ = writeln!(s, "{},{},{}", row.n, num(row.lambda_min), row.saddle);
    }
    s
}

pub fn trace_csv(rows: &[IterRecord]) -> String {
    let mut s = String::from("iter,sup_update,distortion,residual\n");
    for r in rows {
        let _ = writeln!(s, "{},{},{},{}", r.iter, num(r.sup_update), num(r.distortion), num(r.residual));
    }
    s
}
