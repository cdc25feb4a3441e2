//! Numerical integration on finite intervals.
//!
//! Two rules are provided. Composite Gauss–Legendre with adaptive bisection
//! is the default for smooth integrands. Tanh–sinh (double exponential)
//! quadrature is used on pieces whose integrand carries an algebraic
//! singularity at an endpoint, such as `x^{-1/2}` densities or kernels with
//! non-integer exponents.
//!
//! The default Gauss–Legendre order is 32 and can be overridden with the
//! `DUALQUANT_QUAD_ORDER` environment variable.

use std::collections::{BinaryHeap, HashMap};
use std::f64::consts::FRAC_PI_2;
use std::sync::{Mutex, OnceLock};

pub const DEFAULT_ORDER: usize = 32;
pub const ORDER_ENV_VAR: &str = "DUALQUANT_QUAD_ORDER";

const MAX_PANELS: usize = 400;
const DEFAULT_REL_TOL: f64 = 1e-14;

/// Gauss–Legendre order used when none is given explicitly.
pub fn default_order() -> usize {
    static ORDER: OnceLock<usize> = OnceLock::new();
    *ORDER.get_or_init(|| {
        std::env::var(ORDER_ENV_VAR)
            .ok()
            .and_then(|s| s.trim().parse::<usize>().ok())
            .filter(|&n| (2..=512).contains(&n))
            .unwrap_or(DEFAULT_ORDER)
    })
}

/// Nodes and weights of the `n`-point Gauss–Legendre rule on `[-1, 1]`.
#[derive(Debug, Clone)]
pub struct GaussLegendre {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl GaussLegendre {
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "Gauss-Legendre order must be positive");
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        let m = n.div_ceil(2);
        for i in 0..m {
            // Tricomi initial guess, then Newton on P_n.
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            let mut dp = 1.0;
            for _ in 0..100 {
                let (p, d) = legendre_with_derivative(n, x);
                dp = d;
                let dx = p / d;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            let (_, d) = legendre_with_derivative(n, x);
            if d.is_finite() {
                dp = d;
            }
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            nodes[i] = -x;
            weights[i] = w;
            nodes[n - 1 - i] = x;
            weights[n - 1 - i] = w;
        }
        Self { nodes, weights }
    }

    /// Shared instance for the given order.
    pub fn cached(n: usize) -> &'static GaussLegendre {
        static CACHE: OnceLock<Mutex<HashMap<usize, &'static GaussLegendre>>> = OnceLock::new();
        let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        let mut guard = cache.lock().expect("quadrature cache poisoned");
        guard
            .entry(n)
            .or_insert_with(|| Box::leak(Box::new(GaussLegendre::new(n))))
    }

    pub fn order(&self) -> usize {
        self.nodes.len()
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn integrate<F: FnMut(f64) -> f64>(&self, a: f64, b: f64, mut f: F) -> f64 {
        let half = 0.5 * (b - a);
        let mid = 0.5 * (a + b);
        let mut sum = 0.0;
        for (x, w) in self.nodes.iter().zip(&self.weights) {
            sum += w * f(mid + half * x);
        }
        sum * half
    }
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let (pn, pn1) = if n == 1 { (x, 1.0) } else { (p1, p0) };
    let d = n as f64 * (x * pn - pn1) / (x * x - 1.0);
    (pn, d)
}

/// Adaptive Gauss–Legendre integration of `f` over `[a, b]`.
///
/// Global adaptive scheme: each panel carries the difference between its
/// one-panel and two-half-panel estimates as an error indicator, and the
/// worst panel is split until the summed indicator meets the tolerance or
/// the panel budget runs out. The budget keeps integrands that are pure
/// rounding noise (identically vanishing kernels) from running away.
pub fn integrate<F: FnMut(f64) -> f64>(f: F, a: f64, b: f64) -> f64 {
    integrate_with(f, a, b, default_order(), DEFAULT_REL_TOL)
}

struct Panel {
    a: f64,
    b: f64,
    value: f64,
    err: f64,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.err == other.err
    }
}
impl Eq for Panel {}
impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Panel {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.err.total_cmp(&other.err)
    }
}

pub fn integrate_with<F: FnMut(f64) -> f64>(
    mut f: F,
    a: f64,
    b: f64,
    order: usize,
    rel_tol: f64,
) -> f64 {
    if a == b {
        return 0.0;
    }
    let rule = GaussLegendre::cached(order);
    let panel = |lo: f64, hi: f64, f: &mut F| -> Panel {
        let m = 0.5 * (lo + hi);
        let whole = rule.integrate(lo, hi, &mut *f);
        let halves = rule.integrate(lo, m, &mut *f) + rule.integrate(m, hi, &mut *f);
        Panel { a: lo, b: hi, value: halves, err: (halves - whole).abs() }
    };
    // Absolute floor from the magnitude of the integrand, so that integrals
    // that vanish by cancellation still terminate.
    let scale = rule.integrate(a, b, |x| f(x).abs());
    let floor = 64.0 * f64::EPSILON * scale;
    let mut heap = BinaryHeap::new();
    heap.push(panel(a, b, &mut f));
    let (mut total, mut err) = (heap.peek().map_or(0.0, |p| p.value), heap.peek().map_or(0.0, |p| p.err));
    while err > floor.max(rel_tol * total.abs()) && heap.len() < MAX_PANELS {
        let worst = heap.pop().expect("heap is nonempty");
        let m = 0.5 * (worst.a + worst.b);
        if m <= worst.a || m >= worst.b {
            heap.push(Panel { err: 0.0, ..worst });
            continue;
        }
        let (l, r) = (panel(worst.a, m, &mut f), panel(m, worst.b, &mut f));
        total += l.value + r.value - worst.value;
        err += l.err + r.err - worst.err;
        heap.push(l);
        heap.push(r);
    }
    // Re-sum to shed the drift of the running updates.
    heap.iter().map(|p| p.value).sum()
}

/// Tanh–sinh quadrature over `[a, b]`, tolerant of integrable endpoint
/// singularities. The integrand is never evaluated at `a` or `b`.
pub fn integrate_tanh_sinh<F: FnMut(f64) -> f64>(mut f: F, a: f64, b: f64) -> f64 {
    integrate_tanh_sinh_offsets(|x, _, _| if x > a && x < b { f(x) } else { 0.0 }, a, b)
}

/// Tanh–sinh quadrature where the integrand also receives `x - a` and
/// `b - x`, both accurate to full relative precision even where `x` itself
/// is rounded onto an endpoint. This matters for singularities at a nonzero
/// endpoint, where `b - x` would otherwise be quantized to an ulp of `b`.
pub fn integrate_tanh_sinh_offsets<F: FnMut(f64, f64, f64) -> f64>(mut f: F, a: f64, b: f64) -> f64 {
    if a == b {
        return 0.0;
    }
    // Far enough out that a node's offset from the endpoint underflows;
    // strong singularities such as (x - a)^(-0.9) still contribute at t = 4.
    const T_MAX: f64 = 6.5;
    const T_TAIL: f64 = 3.0;
    const MAX_LEVEL: u32 = 9;
    let len = b - a;
    let half = 0.5 * len;

    // Contribution of abscissa t (and -t when t > 0).
    let node = |t: f64, f: &mut F| -> f64 {
        let u = FRAC_PI_2 * t.sinh();
        let e = (-2.0 * u.abs()).exp();
        // half * pi/2 * cosh(t) / cosh(u)^2, written so it cannot overflow.
        let w = half * FRAC_PI_2 * t.cosh() * 4.0 * e / ((1.0 + e) * (1.0 + e));
        // Distance from the nearer endpoint, computed without cancellation.
        let delta = len * e / (1.0 + e);
        if t == 0.0 {
            return w * f(a + half, half, half);
        }
        if delta > 0.0 && w > 0.0 {
            let far = len - delta;
            w * (f(a + delta, delta, far) + f(b - delta, far, delta))
        } else {
            0.0
        }
    };
    // Adds the nodes k h, k h + step h, ... until the tail is negligible.
    let sweep = |h: f64, first: usize, step: usize, sum: f64, f: &mut F| -> f64 {
        let mut sum = sum;
        let mut k = first;
        while k as f64 * h <= T_MAX {
            let c = node(k as f64 * h, f);
            sum += c;
            if k as f64 * h > T_TAIL && c.abs() <= 1e-18 * sum.abs() {
                break;
            }
            k += step;
        }
        sum
    };

    let mut h = 1.0;
    let mut sum = sweep(h, 1, 1, node(0.0, &mut f), &mut f);
    let mut estimate = sum * h;
    for _ in 1..=MAX_LEVEL {
        h *= 0.5;
        sum = sweep(h, 1, 2, sum, &mut f);
        let next = sum * h;
        let converged = (next - estimate).abs() <= 1e-15 * next.abs().max(f64::MIN_POSITIVE);
        estimate = next;
        if converged {
            break;
        }
    }
    estimate
}
