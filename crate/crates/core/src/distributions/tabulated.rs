//! CDF-only laws given by knots `(x_k, F(x_k))`, interpolated with a
//! monotone piecewise cubic Hermite (Fritsch–Carlson) scheme.

use crate::error::{Error, Result};
use crate::quadrature::GaussLegendre;
use std::path::Path;

#[derive(Debug, Clone, PartialEq)]
pub struct Tabulated {
    xs: Vec<f64>,
    fs: Vec<f64>,
    slopes: Vec<f64>,
    /// `int_a^{x_k} F` at every knot.
    cum_int: Vec<f64>,
}

impl Tabulated {
    /// Knots must be strictly increasing in both coordinates, with
    /// `F = 0` at the first knot and `F = 1` at the last.
    pub fn new(xs: Vec<f64>, fs: Vec<f64>) -> Result<Self> {
        if xs.len() != fs.len() {
            return Err(Error::Parse("abscissae and CDF values differ in length".into()));
        }
        if xs.len() < 2 {
            return Err(Error::Parse("a tabulated law needs at least two knots".into()));
        }
        if xs.iter().chain(&fs).any(|v| !v.is_finite()) {
            return Err(Error::Parse("tabulated values must be finite".into()));
        }
        for w in xs.windows(2) {
            if w[1] <= w[0] {
                return Err(Error::Parse(format!("abscissae not strictly increasing at {}", w[1])));
            }
        }
        for w in fs.windows(2) {
            if w[1] <= w[0] {
                return Err(Error::Parse(format!("CDF values not strictly increasing at {}", w[1])));
            }
        }
        let (f0, f1) = (fs[0], fs[fs.len() - 1]);
        if f0.abs() > 1e-12 || (f1 - 1.0).abs() > 1e-12 {
            return Err(Error::Parse(format!("CDF must run from 0 to 1, got {f0} .. {f1}")));
        }
        let mut fs = fs;
        fs[0] = 0.0;
        let last = fs.len() - 1;
        fs[last] = 1.0;
        let slopes = pchip_slopes(&xs, &fs);
        let mut t = Self { xs, fs, slopes, cum_int: Vec::new() };
        let mut acc = 0.0;
        t.cum_int.push(0.0);
        for k in 0..t.xs.len() - 1 {
            let h = t.xs[k + 1] - t.xs[k];
            acc += h * (t.fs[k] + t.fs[k + 1]) / 2.0 + h * h * (t.slopes[k] - t.slopes[k + 1]) / 12.0;
            t.cum_int.push(acc);
        }
        Ok(t)
    }

    /// Reads a two-column CSV `x, F(x)`. Lines starting with `#` are
    /// comments; a leading non-numeric row is treated as a header.
    pub fn from_csv_path(path: &Path) -> Result<Self> {
        let mut rdr = csv::ReaderBuilder::new()
            .has_headers(false)
            .comment(Some(b'#'))
            .trim(csv::Trim::All)
            .flexible(true)
            .from_path(path)?;
        let mut xs = Vec::new();
        let mut fs = Vec::new();
        for (row, rec) in rdr.records().enumerate() {
            let rec = rec?;
            if rec.iter().all(|f| f.is_empty()) {
                continue;
            }
            if rec.len() < 2 {
                return Err(Error::Parse(format!("row {}: expected two columns", row + 1)));
            }
            match (rec[0].parse::<f64>(), rec[1].parse::<f64>()) {
                (Ok(x), Ok(f)) => {
                    xs.push(x);
                    fs.push(f);
                }
                _ if row == 0 && xs.is_empty() => continue,
                _ => return Err(Error::Parse(format!("row {}: non-numeric entry", row + 1))),
            }
        }
        Self::new(xs, fs)
    }

    pub fn a(&self) -> f64 {
        self.xs[0]
    }

    pub fn b(&self) -> f64 {
        self.xs[self.xs.len() - 1]
    }

    pub fn knots(&self) -> (&[f64], &[f64]) {
        (&self.xs, &self.fs)
    }

    fn segment(&self, x: f64) -> usize {
        let k = self.xs.partition_point(|&v| v <= x);
        k.saturating_sub(1).min(self.xs.len() - 2)
    }

    fn hermite(&self, k: usize, x: f64) -> (f64, f64) {
        let h = self.xs[k + 1] - self.xs[k];
        let t = (x - self.xs[k]) / h;
        let (y0, y1, d0, d1) = (self.fs[k], self.fs[k + 1], self.slopes[k], self.slopes[k + 1]);
        let t2 = t * t;
        let t3 = t2 * t;
        let h00 = 2.0 * t3 - 3.0 * t2 + 1.0;
        let h10 = t3 - 2.0 * t2 + t;
        let h01 = -2.0 * t3 + 3.0 * t2;
        let h11 = t3 - t2;
        let value = h00 * y0 + h10 * h * d0 + h01 * y1 + h11 * h * d1;
        let dh00 = (6.0 * t2 - 6.0 * t) / h;
        let dh10 = 3.0 * t2 - 4.0 * t + 1.0;
        let dh01 = (-6.0 * t2 + 6.0 * t) / h;
        let dh11 = 3.0 * t2 - 2.0 * t;
        let deriv = dh00 * y0 + dh10 * d0 + dh01 * y1 + dh11 * d1;
        (value, deriv)
    }

    pub fn cdf(&self, x: f64) -> f64 {
        if x <= self.a() {
            return 0.0;
        }
        if x >= self.b() {
            return 1.0;
        }
        let k = self.segment(x);
        self.hermite(k, x).0.clamp(0.0, 1.0)
    }

    /// `int_a^x F`, exact for the interpolant.
    pub fn cdf_integral(&self, x: f64) -> f64 {
        let x = x.clamp(self.a(), self.b());
        let k = self.segment(x);
        let x0 = self.xs[k];
        if x == x0 {
            return self.cum_int[k];
        }
        // The piece is a cubic, so three-point Gauss–Legendre is exact.
        self.cum_int[k] + GaussLegendre::cached(3).integrate(x0, x, |s| self.hermite(k, s).0)
    }

    pub fn partial_moment(&self, x: f64) -> f64 {
        let x = x.clamp(self.a(), self.b());
        x * self.cdf(x) - self.cdf_integral(x)
    }

    pub fn second_moment(&self) -> f64 {
        // E X^2 = b^2 - 2 int_a^b xi F(xi) d xi; each piece is a quartic.
        let gl = GaussLegendre::cached(3);
        let mut s = 0.0;
        for k in 0..self.xs.len() - 1 {
            s += gl.integrate(self.xs[k], self.xs[k + 1], |x| x * self.hermite(k, x).0);
        }
        let b = self.b();
        b * b - 2.0 * s
    }

    pub fn quantile(&self, p: f64) -> f64 {
        if p <= 0.0 {
            return self.a();
        }
        if p >= 1.0 {
            return self.b();
        }
        let k = self.fs.partition_point(|&v| v <= p).saturating_sub(1).min(self.xs.len() - 2);
        let (lo, hi) = (self.xs[k], self.xs[k + 1]);
        crate::roots::safeguarded_newton(
            |x| {
                let (v, d) = self.hermite(k, x);
                (v - p, d)
            },
            lo,
            hi,
            1e-15,
        )
        .unwrap_or_else(|_| lo + (hi - lo) * (p - self.fs[k]) / (self.fs[k + 1] - self.fs[k]))
    }
}

/// Fritsch–Carlson slopes with the one-sided three-point end formula,
/// clipped to preserve monotonicity.
fn pchip_slopes(xs: &[f64], ys: &[f64]) -> Vec<f64> {
    let n = xs.len();
    let h: Vec<f64> = xs.windows(2).map(|w| w[1] - w[0]).collect();
    let delta: Vec<f64> = (0..n - 1).map(|k| (ys[k + 1] - ys[k]) / h[k]).collect();
    if n == 2 {
        return vec![delta[0]; 2];
    }
    let mut d = vec![0.0; n];
    for k in 1..n - 1 {
        if delta[k - 1] * delta[k] > 0.0 {
            let w1 = 2.0 * h[k] + h[k - 1];
            let w2 = h[k] + 2.0 * h[k - 1];
            d[k] = (w1 + w2) / (w1 / delta[k - 1] + w2 / delta[k]);
        }
    }
    let end = |h0: f64, h1: f64, m0: f64, m1: f64| {
        let mut s = ((2.0 * h0 + h1) * m0 - h0 * m1) / (h0 + h1);
        if s.signum() != m0.signum() {
            s = 0.0;
        } else if m0.signum() != m1.signum() && s.abs() > 3.0 * m0.abs() {
            s = 3.0 * m0;
        }
        s
    };
    d[0] = end(h[0], h[1], delta[0], delta[1]);
    d[n - 1] = end(h[n - 2], h[n - 3], delta[n - 2], delta[n - 3]);
    d
}
