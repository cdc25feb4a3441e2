//! Compactly supported one-dimensional laws and the functionals the
//! quantizers need: density `f`, CDF `F`, first partial moment
//! `K(x) = E[X 1{X <= x}]` and quantile `F^{-1}`.

mod tabulated;

pub use tabulated::Tabulated;

use crate::error::{domain, Error, Result};
use crate::kernels::KernelParams;
use crate::quadrature;
use std::fmt;
use std::path::Path;
use std::str::FromStr;

/// Which endpoint carries the origin of a power law.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    /// Density proportional to `(x - a)^(alpha - 1)`.
    Rising,
    /// Density proportional to `(b - x)^(alpha - 1)`.
    Falling,
}

#[derive(Debug, Clone, PartialEq)]
pub enum DistributionKind {
    Uniform,
    Power { alpha: f64, orientation: Orientation },
    /// Density `lambda e^{-lambda (x - a)} / (1 - e^{-lambda (b - a)})`.
    TruncExp { lambda: f64 },
    /// Density `c_r varpi_r({(n_period - 1) x})` on `[0, 1]`.
    PeriodicCounterexample { r: f64, n_period: usize, c_r: f64 },
    Tabulated { table: Tabulated, source: String },
}

/// An immutable law on `[a, b]`.
#[derive(Debug, Clone, PartialEq)]
pub struct DistributionSpec {
    kind: DistributionKind,
    a: f64,
    b: f64,
    second_moment: f64,
}

fn check_interval(a: f64, b: f64) -> Result<()> {
    if !(a.is_finite() && b.is_finite() && a < b) {
        return domain(format!("support [{a}, {b}] must be a finite interval with a < b"));
    }
    Ok(())
}

/// `g_k(u) = k! (1 - e^{-u} sum_{j<=k} u^j/j!) = k! e^{-u} sum_{j>k} u^j/j!`.
///
/// The tail series is used for small `|u|`, where the direct form cancels.
pub(crate) fn gamma_tail(k: u32, u: f64) -> f64 {
    let kf: f64 = (1..=k).map(f64::from).product();
    if u.abs() < 2.0 {
        let mut term = 1.0;
        for j in 1..=k {
            term *= u / f64::from(j);
        }
        let mut sum = 0.0;
        let mut j = k + 1;
        loop {
            term *= u / f64::from(j);
            sum += term;
            if term.abs() <= 1e-18 * sum.abs() || j > k + 80 {
                break;
            }
            j += 1;
        }
        kf * (-u).exp() * sum
    } else {
        if k == 0 {
            return -(-u).exp_m1();
        }
        let mut term = 1.0;
        let mut partial = 1.0;
        for j in 1..=k {
            term *= u / f64::from(j);
            partial += term;
        }
        kf * (1.0 - (-u).exp() * partial)
    }
}

impl DistributionSpec {
    pub fn uniform(a: f64, b: f64) -> Result<Self> {
        check_interval(a, b)?;
        Ok(Self::finish(DistributionKind::Uniform, a, b))
    }

    pub fn power(alpha: f64, a: f64, b: f64, orientation: Orientation) -> Result<Self> {
        check_interval(a, b)?;
        if !(alpha.is_finite() && alpha > 0.0) {
            return domain(format!("power exponent must be positive, got {alpha}"));
        }
        Ok(Self::finish(DistributionKind::Power { alpha, orientation }, a, b))
    }

    pub fn trunc_exp(lambda: f64, a: f64, b: f64) -> Result<Self> {
        check_interval(a, b)?;
        if !(lambda.is_finite() && lambda != 0.0) {
            return domain(format!("truncated exponential needs a finite nonzero rate, got {lambda}"));
        }
        if (lambda * (b - a)).abs() > 700.0 {
            return domain("lambda (b - a) too large in magnitude for double precision");
        }
        Ok(Self::finish(DistributionKind::TruncExp { lambda }, a, b))
    }

    /// The periodic law on `[0, 1]` whose equidistant `n_period`-grid is a
    /// critical point but not a minimum of the distortion.
    pub fn periodic_counterexample(r: f64, n_period: usize) -> Result<Self> {
        let k = KernelParams::new(r)?;
        if n_period < 2 {
            return domain(format!("period count must be at least 2, got {n_period}"));
        }
        let mass = if k.is_integer() {
            quadrature::integrate(|u| k.varpi(u), 0.0, 1.0)
        } else {
            quadrature::integrate_tanh_sinh(|u| k.varpi(u), 0.0, 1.0)
        };
        let c_r = 1.0 / mass;
        Ok(Self::finish(DistributionKind::PeriodicCounterexample { r, n_period, c_r }, 0.0, 1.0))
    }

    pub fn tabulated(table: Tabulated, source: impl Into<String>) -> Self {
        let (a, b) = (table.a(), table.b());
        Self::finish(DistributionKind::Tabulated { table, source: source.into() }, a, b)
    }

    pub fn tabulated_from_csv(path: &Path) -> Result<Self> {
        let table = Tabulated::from_csv_path(path)?;
        Ok(Self::tabulated(table, format!("@{}", path.display())))
    }

    fn finish(kind: DistributionKind, a: f64, b: f64) -> Self {
        let mut d = Self { kind, a, b, second_moment: f64::NAN };
        d.second_moment = d.compute_second_moment();
        d
    }

    pub fn kind(&self) -> &DistributionKind {
        &self.kind
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn len(&self) -> f64 {
        self.b - self.a
    }

    pub fn has_pdf(&self) -> bool {
        !matches!(self.kind, DistributionKind::Tabulated { .. })
    }

    /// Known to have a log-concave density on `(a, b)`.
    pub fn is_log_concave(&self) -> bool {
        match self.kind {
            DistributionKind::Uniform | DistributionKind::TruncExp { .. } => true,
            DistributionKind::Power { alpha, .. } => alpha >= 1.0,
            _ => false,
        }
    }

    /// Interior points where the density is not smooth.
    pub fn breakpoints(&self) -> Vec<f64> {
        match self.kind {
            DistributionKind::PeriodicCounterexample { n_period, .. } => {
                let m = (n_period - 1) as f64;
                (1..n_period - 1).map(|k| k as f64 / m).collect()
            }
            DistributionKind::Tabulated { ref table, .. } => {
                let xs = table.knots().0;
                xs[1..xs.len() - 1].to_vec()
            }
            _ => Vec::new(),
        }
    }

    /// True when the density is not analytic at `x` when approached from
    /// inside a smooth piece, so that Gauss–Legendre would converge slowly.
    pub fn rough_at(&self, x: f64) -> bool {
        match self.kind {
            DistributionKind::Power { alpha, orientation } => {
                alpha.fract() != 0.0
                    && match orientation {
                        Orientation::Rising => x == self.a,
                        Orientation::Falling => x == self.b,
                    }
            }
            DistributionKind::PeriodicCounterexample { r, n_period, .. } => {
                let y = x * (n_period - 1) as f64;
                r.fract() != 0.0 && y == y.round()
            }
            _ => false,
        }
    }

    fn check_x(&self, x: f64, what: &str) -> Result<()> {
        if x.is_nan() || x < self.a || x > self.b {
            return domain(format!("{what}: {x} outside the support [{}, {}]", self.a, self.b));
        }
        Ok(())
    }

    /// CDF, clamped to `{0, 1}` outside `[a, b]`. The flag reports whether
    /// clamping took place.
    pub fn cdf_flagged(&self, x: f64) -> (f64, bool) {
        if x <= self.a {
            return (0.0, x < self.a);
        }
        if x >= self.b {
            return (1.0, x > self.b);
        }
        (self.cdf_inner(x).clamp(0.0, 1.0), false)
    }

    pub fn cdf(&self, x: f64) -> f64 {
        self.cdf_flagged(x).0
    }

    fn cdf_inner(&self, x: f64) -> f64 {
        let (a, b, l) = (self.a, self.b, self.len());
        match &self.kind {
            DistributionKind::Uniform => (x - a) / l,
            DistributionKind::Power { alpha, orientation } => match orientation {
                Orientation::Rising => ((x - a) / l).powf(*alpha),
                Orientation::Falling => 1.0 - ((b - x) / l).powf(*alpha),
            },
            DistributionKind::TruncExp { lambda } => {
                gamma_tail(0, lambda * (x - a)) / gamma_tail(0, lambda * l)
            }
            DistributionKind::PeriodicCounterexample { r, n_period, c_r } => {
                let m = (*n_period - 1) as f64;
                let (k, u) = cell_of(x, m);
                (k + c_r * varpi_antiderivative(*r, u)) / m
            }
            DistributionKind::Tabulated { table, .. } => table.cdf(x),
        }
    }

    /// Density on `(a, b)`. Tabulated laws expose no density.
    pub fn pdf(&self, x: f64) -> Result<f64> {
        self.check_x(x, "pdf")?;
        let (a, b, l) = (self.a, self.b, self.len());
        Ok(match &self.kind {
            DistributionKind::Uniform => 1.0 / l,
            DistributionKind::Power { alpha, orientation } => {
                let t = match orientation {
                    Orientation::Rising => (x - a) / l,
                    Orientation::Falling => (b - x) / l,
                };
                alpha * t.powf(alpha - 1.0) / l
            }
            DistributionKind::TruncExp { lambda } => {
                lambda * (-lambda * (x - a)).exp() / gamma_tail(0, lambda * l)
            }
            DistributionKind::PeriodicCounterexample { r, n_period, c_r } => {
                let m = (*n_period - 1) as f64;
                let (_, u) = cell_of(x, m);
                // Density of the law on [0,1] is (n-1) * c_r varpi / (n-1).
                c_r * KernelParams::new(*r)?.varpi(u)
            }
            DistributionKind::Tabulated { .. } => {
                return Err(Error::Unsupported(
                    "tabulated laws are CDF-only and expose no density".into(),
                ))
            }
        })
    }

    /// Density at `lo + z (hi - lo)` where `zc = 1 - z` is supplied
    /// separately, so that singular power densities can be evaluated from
    /// the exact distance to their base point. Zero for CDF-only laws.
    pub fn pdf_in_cell(&self, lo: f64, hi: f64, z: f64, zc: f64) -> f64 {
        let h = hi - lo;
        match &self.kind {
            DistributionKind::Power { alpha, orientation } => {
                let l = self.len();
                let t = match orientation {
                    Orientation::Rising => ((lo - self.a) + z * h) / l,
                    Orientation::Falling => ((self.b - hi) + zc * h) / l,
                };
                alpha * t.max(0.0).powf(alpha - 1.0) / l
            }
            DistributionKind::Tabulated { .. } => 0.0,
            _ => {
                let x = if z <= 0.5 { lo + z * h } else { hi - zc * h };
                self.pdf(x.clamp(self.a, self.b)).unwrap_or(0.0)
            }
        }
    }

    /// `int_0^1 g(z, 1 - z) dz` for an integrand built on the cell
    /// `[lo, hi]` from this law's functionals. The cell is split at density
    /// breakpoints. Pieces with a rough endpoint, or every piece when
    /// `rough` is set, use tanh-sinh; the rest adaptive Gauss–Legendre.
    pub fn integrate_over_cell<G: FnMut(f64, f64) -> f64>(&self, lo: f64, hi: f64, mut g: G, rough: bool) -> f64 {
        let h = hi - lo;
        if h <= 0.0 {
            return 0.0;
        }
        let mut cuts: Vec<(f64, f64)> = vec![(lo, 0.0)];
        for c in self.breakpoints() {
            if c > lo && c < hi {
                cuts.push((c, (c - lo) / h));
            }
        }
        cuts.push((hi, 1.0));
        let mut total = 0.0;
        for piece in cuts.windows(2) {
            let ((x0, z0), (x1, z1)) = (piece[0], piece[1]);
            let zc1 = if z1 == 1.0 { 0.0 } else { (hi - x1) / h };
            if rough || self.rough_at(x0) || self.rough_at(x1) {
                total += quadrature::integrate_tanh_sinh_offsets(
                    |_, d0, d1| {
                        if d0 <= d1 {
                            g(z0 + d0, 1.0 - (z0 + d0))
                        } else {
                            g(z1 - d1, zc1 + d1)
                        }
                    },
                    z0,
                    z1,
                );
            } else {
                total += quadrature::integrate(|z| g(z, 1.0 - z), z0, z1);
            }
        }
        total
    }

    /// `int_0^1 w(z, 1 - z) f(lo + z (hi - lo)) dz`.
    pub fn integrate_in_cell<W: FnMut(f64, f64) -> f64>(&self, lo: f64, hi: f64, mut w: W, rough_weight: bool) -> f64 {
        self.integrate_over_cell(lo, hi, |z, zc| w(z, zc) * self.pdf_in_cell(lo, hi, z, zc), rough_weight)
    }

    /// `int_lo^hi w(x) f(x) dx`.
    pub fn integrate_density<W: Fn(f64) -> f64>(&self, lo: f64, hi: f64, w: W) -> f64 {
        let h = hi - lo;
        h * self.integrate_in_cell(lo, hi, |z, _| w(lo + z * h), false)
    }

    /// `K(x) = E[X 1{X <= x}]`, clamped to `[a, b]`.
    pub fn partial_moment(&self, x: f64) -> f64 {
        if x <= self.a {
            return 0.0;
        }
        let x = x.min(self.b);
        let (a, b, l) = (self.a, self.b, self.len());
        match &self.kind {
            DistributionKind::Uniform => (x - a) * (x + a) / (2.0 * l),
            DistributionKind::Power { alpha, orientation } => match orientation {
                Orientation::Rising => {
                    let t = (x - a) / l;
                    a * t.powf(*alpha) + l * alpha / (alpha + 1.0) * t.powf(alpha + 1.0)
                }
                Orientation::Falling => {
                    let s = (b - x) / l;
                    b * (1.0 - s.powf(*alpha))
                        - l * alpha / (alpha + 1.0) * (1.0 - s.powf(alpha + 1.0))
                }
            },
            DistributionKind::TruncExp { lambda } => {
                let g0 = gamma_tail(0, lambda * l);
                a * self.cdf_inner(x) + gamma_tail(1, lambda * (x - a)) / (lambda * g0)
            }
            DistributionKind::PeriodicCounterexample { r, n_period, c_r } => {
                let m = (*n_period - 1) as f64;
                let (k, u) = cell_of(x, m);
                let h = 1.0 / m;
                let g = c_r * varpi_antiderivative(*r, u);
                let hm = c_r * varpi_first_moment(*r, u);
                h * h * (0.5 * k * k + k * g + hm)
            }
            DistributionKind::Tabulated { table, .. } => table.partial_moment(x),
        }
    }

    pub fn mean(&self) -> f64 {
        self.partial_moment(self.b)
    }

    /// `E[X^2]`, computed once at construction.
    pub fn second_moment(&self) -> f64 {
        self.second_moment
    }

    fn compute_second_moment(&self) -> f64 {
        let (a, b, l) = (self.a, self.b, self.len());
        match &self.kind {
            DistributionKind::Uniform => (a * a + a * b + b * b) / 3.0,
            DistributionKind::Power { alpha, orientation } => {
                let m1 = l * alpha / (alpha + 1.0);
                let m2 = l * l * alpha / (alpha + 2.0);
                match orientation {
                    Orientation::Rising => a * a + 2.0 * a * m1 + m2,
                    Orientation::Falling => b * b - 2.0 * b * m1 + m2,
                }
            }
            DistributionKind::TruncExp { lambda } => {
                let u = lambda * l;
                let g0 = gamma_tail(0, u);
                let es = gamma_tail(1, u) / (lambda * g0);
                let es2 = gamma_tail(2, u) / (lambda * lambda * g0);
                a * a + 2.0 * a * es + es2
            }
            DistributionKind::PeriodicCounterexample { r, n_period, c_r } => {
                let m = (*n_period - 1) as f64;
                let h = 1.0 / m;
                let m2 = c_r * varpi_second_moment(*r);
                let cells: f64 = (0..*n_period - 1).map(|j| (j * j + j) as f64 + m2).sum();
                h * h * h * cells
            }
            DistributionKind::Tabulated { table, .. } => table.second_moment(),
        }
    }

    /// `int_lo^hi (xi - lo) mu(d xi)`, without the cancellation of
    /// `[K] - lo [F]` on short cells.
    pub fn cell_moment(&self, lo: f64, hi: f64) -> f64 {
        let (lo, hi) = (lo.max(self.a), hi.min(self.b));
        if hi <= lo {
            return 0.0;
        }
        let h = hi - lo;
        match &self.kind {
            DistributionKind::Uniform => h * h / (2.0 * self.len()),
            DistributionKind::TruncExp { lambda } => {
                let g0 = gamma_tail(0, lambda * self.len());
                (-lambda * (lo - self.a)).exp() * gamma_tail(1, lambda * h) / (lambda * g0)
            }
            DistributionKind::Tabulated { .. } => {
                let (flo, fhi) = (self.cdf(lo), self.cdf(hi));
                (self.partial_moment(hi) - self.partial_moment(lo)) - lo * (fhi - flo)
            }
            // Cells within one width of the singular base point: closed form,
            // which cancels only mildly there.
            &DistributionKind::Power { alpha, orientation } => {
                let l = self.len();
                let s = h / l;
                let t0 = match orientation {
                    Orientation::Rising => (lo - self.a) / l,
                    Orientation::Falling => (self.b - hi) / l,
                };
                if t0 > s {
                    return h * h * self.integrate_in_cell(lo, hi, |z, _| z, false);
                }
                let t1 = t0 + s;
                let k = alpha / (alpha + 1.0);
                l * match orientation {
                    Orientation::Rising => k * t1.powf(alpha + 1.0) - t0 * t1.powf(alpha) + t0.powf(alpha + 1.0) / (alpha + 1.0),
                    Orientation::Falling => t1.powf(alpha + 1.0) / (alpha + 1.0) - t1 * t0.powf(alpha) + k * t0.powf(alpha + 1.0),
                }
            }
            _ => h * h * self.integrate_in_cell(lo, hi, |z, _| z, false),
        }
    }

    /// `int_lo^hi F(xi) d xi`, evaluated exactly as `[xi F(xi) - K(xi)]`.
    pub fn cdf_integral(&self, lo: f64, hi: f64) -> f64 {
        match &self.kind {
            DistributionKind::Tabulated { table, .. } => return table.cdf_integral(hi) - table.cdf_integral(lo),
            DistributionKind::Uniform | DistributionKind::TruncExp { .. } if lo < hi => {
                return (hi - lo) * self.cdf(hi) - self.cell_moment(lo, hi);
            }
            _ => {}
        }
        // Shifting by lo keeps the two boundary terms small.
        let (flo, fhi) = (self.cdf(lo), self.cdf(hi));
        let (klo, khi) = (self.partial_moment(lo), self.partial_moment(hi));
        (hi - lo) * fhi - ((khi - klo) - lo * (fhi - flo))
    }

    /// Quantile `F^{-1}(p)` for `p` in `[0, 1]` (clamped outside).
    pub fn quantile(&self, p: f64) -> f64 {
        if p.is_nan() || p <= 0.0 {
            return self.a;
        }
        if p >= 1.0 {
            return self.b;
        }
        let (a, b, l) = (self.a, self.b, self.len());
        let x = match &self.kind {
            DistributionKind::Uniform => a + p * l,
            DistributionKind::Power { alpha, orientation } => match orientation {
                Orientation::Rising => a + l * p.powf(1.0 / alpha),
                Orientation::Falling => b - l * (1.0 - p).powf(1.0 / alpha),
            },
            DistributionKind::TruncExp { lambda } => {
                let q = p * gamma_tail(0, lambda * l);
                a - (-q).ln_1p() / lambda
            }
            DistributionKind::PeriodicCounterexample { r, n_period, c_r } => {
                let m = (*n_period - 1) as f64;
                let y = p * m;
                let k = y.floor().min(m - 1.0);
                let target = (y - k) / c_r;
                let kp = KernelParams::new(*r).expect("validated at construction");
                let u = crate::roots::safeguarded_newton(
                    |u| (varpi_antiderivative(*r, u) - target, kp.varpi(u)),
                    0.0,
                    1.0,
                    1e-16,
                )
                .unwrap_or(0.5);
                (k + u) / m
            }
            DistributionKind::Tabulated { table, .. } => table.quantile(p),
        };
        x.clamp(a, b)
    }

    /// Canonical textual form, accepted back by [`FromStr`].
    pub fn to_spec_string(&self) -> String {
        self.to_string()
    }
}

fn cell_of(x: f64, m: f64) -> (f64, f64) {
    let y = x * m;
    let k = y.floor().min(m - 1.0).max(0.0);
    (k, (y - k).clamp(0.0, 1.0))
}

/// `int_0^u varpi_r`.
fn varpi_antiderivative(r: f64, u: f64) -> f64 {
    // int_0^u t^r (1-t) dt + int_{1-u}^1 s^r (1-s) ds
    let p = |s: f64| s.powf(r + 1.0) / (r + 1.0) - s.powf(r + 2.0) / (r + 2.0);
    p(u) + (p(1.0) - p(1.0 - u))
}

/// `int_0^u t varpi_r(t) dt`.
fn varpi_first_moment(r: f64, u: f64) -> f64 {
    let first = u.powf(r + 2.0) / (r + 2.0) - u.powf(r + 3.0) / (r + 3.0);
    // int_0^u t^2 (1-t)^r dt with s = 1 - t.
    let q = |s: f64| s.powf(r + 1.0) / (r + 1.0) - 2.0 * s.powf(r + 2.0) / (r + 2.0) + s.powf(r + 3.0) / (r + 3.0);
    first + (q(1.0) - q(1.0 - u))
}

/// `int_0^1 t^2 varpi_r(t) dt`.
fn varpi_second_moment(r: f64) -> f64 {
    1.0 / (r + 3.0) - 1.0 / (r + 4.0) + 6.0 / ((r + 1.0) * (r + 2.0) * (r + 3.0) * (r + 4.0))
}

impl fmt::Display for DistributionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            DistributionKind::Uniform => write!(f, "uniform:{},{}", self.a, self.b),
            DistributionKind::Power { alpha, orientation } => {
                write!(f, "power:{},{},{}", alpha, self.a, self.b)?;
                if *orientation == Orientation::Falling {
                    write!(f, ",falling")?;
                }
                Ok(())
            }
            DistributionKind::TruncExp { lambda } => write!(f, "truncexp:{},{},{}", lambda, self.a, self.b),
            DistributionKind::PeriodicCounterexample { r, n_period, .. } => {
                write!(f, "counterexample:{r},{n_period}")
            }
            DistributionKind::Tabulated { source, .. } => write!(f, "tabulated:{source}"),
        }
    }
}

fn parse_num(s: &str, what: &str) -> Result<f64> {
    s.trim()
        .parse::<f64>()
        .map_err(|_| Error::Parse(format!("{what}: '{}' is not a number", s.trim())))
}

impl FromStr for DistributionSpec {
    type Err = Error;

    /// `uniform:a,b` | `power:alpha,a,b[,falling]` | `truncexp:lambda,a,b`
    /// | `counterexample:r,Nperiod` | `tabulated:@file.csv`
    fn from_str(s: &str) -> Result<Self> {
        let (name, args) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("'{s}': expected <kind>:<parameters>")))?;
        let name = name.trim().to_ascii_lowercase();
        if name == "tabulated" {
            let path = args.trim().strip_prefix('@').ok_or_else(|| {
                Error::Parse("tabulated laws are given as tabulated:@file.csv".into())
            })?;
            return Self::tabulated_from_csv(Path::new(path));
        }
        let parts: Vec<&str> = args.split(',').map(str::trim).collect();
        let arity = |n: usize| -> Result<()> {
            if parts.len() != n {
                return Err(Error::Parse(format!(
                    "'{s}': {name} takes {n} parameters, got {}",
                    parts.len()
                )));
            }
            Ok(())
        };
        match name.as_str() {
            "uniform" => {
                arity(2)?;
                Self::uniform(parse_num(parts[0], "a")?, parse_num(parts[1], "b")?)
            }
            "power" => {
                let orientation = match parts.get(3) {
                    None => Orientation::Rising,
                    Some(&"falling") => Orientation::Falling,
                    Some(&"rising") => Orientation::Rising,
                    Some(other) => {
                        return Err(Error::Parse(format!("unknown power orientation '{other}'")))
                    }
                };
                if !(3..=4).contains(&parts.len()) {
                    arity(3)?;
                }
                Self::power(
                    parse_num(parts[0], "alpha")?,
                    parse_num(parts[1], "a")?,
                    parse_num(parts[2], "b")?,
                    orientation,
                )
            }
            "truncexp" => {
                arity(3)?;
                Self::trunc_exp(
                    parse_num(parts[0], "lambda")?,
                    parse_num(parts[1], "a")?,
                    parse_num(parts[2], "b")?,
                )
            }
            "counterexample" => {
                arity(2)?;
                let n = parts[1]
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("Nperiod: '{}' is not a count", parts[1])))?;
                Self::periodic_counterexample(parse_num(parts[0], "r")?, n)
            }
            other => Err(Error::Parse(format!("unknown distribution kind '{other}'"))),
        }
    }
}
