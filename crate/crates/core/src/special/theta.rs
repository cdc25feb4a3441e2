//! The maps `theta_r = Phi_r^{-1} o check Phi_r` (forward, `r` in {1, 2})
//! and `tilde theta_r = check Phi_r^{-1} o Phi_r` (backward, any `r`),
//! together with the power series of `theta_1` and `theta_2`.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use super::phi::{phi, phi_check, phi_with_derivative};
use crate::error::{Error, Result};
use crate::kernels::KernelParams;
use crate::roots::{bisect, expand_upper, safeguarded_newton};

/// How to evaluate `theta_r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ThetaMethod {
    /// Monotone root finding, valid on the whole domain.
    RootFind,
    /// The truncated power series, valid up to its calibrated radius.
    Series,
}

/// Order of the cached series used by [`theta_forward`].
pub const DEFAULT_SERIES_ORDER: usize = 48;

/// Series and root finding must agree to this on `[0, x_max]`.
pub const SERIES_AGREEMENT: f64 = 1e-10;

/// `check Phi_1^{-1}(2)`, the right end of the domain of `theta_1`.
pub fn theta1_pole() -> f64 {
    static POLE: OnceLock<f64> = OnceLock::new();
    *POLE.get_or_init(|| bisect(|x| phi_check(1.0, x) - 2.0, 1.0, 3.0, 1e-16).expect("pole is bracketed"))
}

fn check_forward_args(r: f64, x: f64) -> Result<()> {
    if r != 1.0 && r != 2.0 {
        return Err(Error::Unsupported(format!("theta_r is defined forward for r = 1 or 2 only, got {r}")));
    }
    if !(x >= 0.0) || !x.is_finite() {
        return Err(Error::Domain(format!("theta_r needs a finite x >= 0, got {x}")));
    }
    if r == 1.0 && x >= theta1_pole() {
        return Err(Error::Domain(format!(
            "theta_1 is only defined below check Phi_1^(-1)(2) = {}, got x = {x}",
            theta1_pole()
        )));
    }
    Ok(())
}

/// `theta_r(x)` for `r` in {1, 2}.
pub fn theta_forward(r: f64, x: f64, method: ThetaMethod) -> Result<f64> {
    check_forward_args(r, x)?;
    match method {
        ThetaMethod::RootFind => theta_rootfind(r, x),
        ThetaMethod::Series => default_series(r).eval(x),
    }
}

/// Solves `Phi_r(y) = check Phi_r(x)`; the root lies in `[x, inf)`.
fn theta_rootfind(r: f64, x: f64) -> Result<f64> {
    if x == 0.0 {
        return Ok(0.0);
    }
    let target = phi_check(r, x);
    if !target.is_finite() {
        return Err(Error::Numerical(format!("check Phi_{r}({x}) overflows")));
    }
    let hi = expand_upper(|y| phi(r, y) - target, 2.0 * x + 1.0, f64::MAX / 4.0)?;
    safeguarded_newton(
        |y| {
            let (v, d) = phi_with_derivative(r, y);
            (v - target, d)
        },
        x,
        hi,
        1e-15,
    )
}

/// `tilde theta_r(x)`, the `y` in `[0, x]` with `check Phi_r(y) = Phi_r(x)`.
pub fn theta_backward(r: f64, x: f64) -> Result<f64> {
    KernelParams::new(r)?;
    if !(x >= 0.0) || !x.is_finite() {
        return Err(Error::Domain(format!("tilde theta_r needs a finite x >= 0, got {x}")));
    }
    if x == 0.0 {
        return Ok(0.0);
    }
    let target = phi(r, x);
    safeguarded_newton(
        |y| {
            let (v, d) = phi_with_derivative(r, -y);
            (v - target, -d)
        },
        0.0,
        x,
        1e-15,
    )
}

/// Truncated power series `sum_{k=1}^K a_k x^k` with exact rational
/// coefficients, validated against root finding on `[0, x_max]`.
#[derive(Debug, Clone)]
pub struct PowerSeries {
    r: f64,
    exact: Vec<BigRational>,
    coefficients: Vec<f64>,
    x_max: f64,
}

impl PowerSeries {
    fn from_exact(r: f64, exact: Vec<BigRational>) -> Self {
        let coefficients = exact.iter().map(|q| q.to_f64().unwrap_or(f64::NAN)).collect();
        let mut s = Self { r, exact, coefficients, x_max: 0.0 };
        s.x_max = s.calibrate();
        s
    }

    /// Largest `j/64 <= 2` such that the series agrees with root finding on
    /// every `i/64`, `i <= j`.
    fn calibrate(&self) -> f64 {
        let mut x_max = 0.0;
        for j in 1..=128 {
            let x = f64::from(j) / 64.0;
            if self.r == 1.0 && x >= theta1_pole() {
                break;
            }
            match theta_rootfind(self.r, x) {
                Ok(t) if (self.eval_unchecked(x) - t).abs() <= SERIES_AGREEMENT => x_max = x,
                _ => break,
            }
        }
        x_max
    }

    /// `(a_1, ..., a_K)`.
    pub fn coefficients(&self) -> &[f64] {
        &self.coefficients
    }

    pub fn exact_coefficients(&self) -> &[BigRational] {
        &self.exact
    }

    pub fn order(&self) -> usize {
        self.exact.len()
    }

    pub fn x_max(&self) -> f64 {
        self.x_max
    }

    /// Series value, refusing inputs outside `[0, x_max]`.
    pub fn eval(&self, x: f64) -> Result<f64> {
        if !(0.0..=self.x_max).contains(&x) {
            return Err(Error::Domain(format!(
                "series for theta_{} is validated on [0, {}] only, got {x}; use root finding",
                self.r, self.x_max
            )));
        }
        Ok(self.eval_unchecked(x))
    }

    /// Horner evaluation without the radius check.
    pub fn eval_unchecked(&self, x: f64) -> f64 {
        x * self.coefficients.iter().rev().fold(0.0, |acc, a| acc * x + a)
    }

    /// Term-by-term derivative.
    pub fn derivative(&self, x: f64) -> f64 {
        self.coefficients.iter().enumerate().rev().fold(0.0, |acc, (k, a)| acc * x + (k + 1) as f64 * a)
    }
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// `1/n!` for `n = 0..=m`.
fn inverse_factorials(m: usize) -> Vec<BigRational> {
    let mut out = vec![BigRational::one()];
    for n in 1..=m {
        let next = &out[n - 1] / rat(n as i64);
        out.push(next);
    }
    out
}

fn check_order(k: usize) -> Result<()> {
    if k < 2 {
        return Err(Error::Domain(format!("series order must be at least 2, got {k}")));
    }
    Ok(())
}

/// Exact coefficients `a_1..a_K` of `theta_2`.
pub fn theta2_coefficients(k_max: usize) -> Result<Vec<BigRational>> {
    check_order(k_max)?;
    let inv_fact = inverse_factorials(k_max + 1);
    // a[0] is a placeholder so that a[k] = a_k.
    let mut a = vec![BigRational::zero(), BigRational::one()];
    // (a_1 + 1)/2 = 3 a_1 a_2.
    a.push((&a[1] + BigRational::one()) / (rat(6) * &a[1]));
    for k in 3..=k_max {
        let mut lin = rat(2) * &inv_fact[k];
        let mut quad = BigRational::zero();
        for l in 2..k {
            lin += rat(l as i64) * &inv_fact[k + 1 - l] * &a[l];
            quad += &a[l] * &a[k + 1 - l];
        }
        a.push(lin / rat(k as i64 + 1) - quad / rat(2));
    }
    a.remove(0);
    Ok(a)
}

/// `b_k`, `k = 1..=K`, the Taylor coefficients of `check Phi_1`, read off
/// from `4 (e^x - 1 - x - x^2/2) / x^2`.
pub fn theta1_b_coefficients(k_max: usize) -> Vec<BigRational> {
    let inv_fact = inverse_factorials(k_max + 2);
    (1..=k_max).map(|k| rat(4) * &inv_fact[k + 2]).collect()
}

/// Exact coefficients `a_1..a_K` of `theta_1`.
///
/// Matching powers of `x` in
/// `2 cPhi theta' - (theta^2)' (1 - cPhi/2) + theta cPhi' = 0` gives
/// `a_k (2k+4)/3 = sum_{l<k} (at_l b_{k-l}/2 + (k+l+1) a_l b_{k+1-l})
///  - (k+1) sum_{l=2}^{k-1} a_l a_{k+1-l}`, `at_l = (l+1) sum a_m a_{l+1-m}`.
pub fn theta1_coefficients(k_max: usize) -> Result<Vec<BigRational>> {
    check_order(k_max)?;
    let b_vec = theta1_b_coefficients(k_max);
    let b = |k: usize| &b_vec[k - 1];
    let mut a = vec![BigRational::zero(), BigRational::one()];
    let mut at: Vec<BigRational> = vec![BigRational::zero()];
    for k in 2..=k_max {
        // at_{k-1} only needs a_1..a_{k-1}.
        let l = k - 1;
        let mut s = BigRational::zero();
        for m in 1..=l {
            s += &a[m] * &a[l + 1 - m];
        }
        at.push(rat(l as i64 + 1) * s);
        let mut s1 = BigRational::zero();
        for l in 1..k {
            s1 += &at[l] * b(k - l) / rat(2) + rat((k + l + 1) as i64) * &a[l] * b(k + 1 - l);
        }
        let mut s2 = BigRational::zero();
        for l in 2..k {
            s2 += &a[l] * &a[k + 1 - l];
        }
        a.push(rat(3) / rat(2 * (k as i64 + 2)) * (s1 - rat(k as i64 + 1) * s2));
    }
    a.remove(0);
    Ok(a)
}

/// The `theta_2` series of order `K`, with calibrated `x_max`.
pub fn theta2_series(k_max: usize) -> Result<PowerSeries> {
    Ok(PowerSeries::from_exact(2.0, theta2_coefficients(k_max)?))
}

/// The `theta_1` series of order `K`, with calibrated `x_max`.
pub fn theta1_series(k_max: usize) -> Result<PowerSeries> {
    Ok(PowerSeries::from_exact(1.0, theta1_coefficients(k_max)?))
}

fn default_series(r: f64) -> &'static PowerSeries {
    static THETA1: OnceLock<PowerSeries> = OnceLock::new();
    static THETA2: OnceLock<PowerSeries> = OnceLock::new();
    if r == 1.0 {
        THETA1.get_or_init(|| theta1_series(DEFAULT_SERIES_ORDER).expect("order >= 2"))
    } else {
        THETA2.get_or_init(|| theta2_series(DEFAULT_SERIES_ORDER).expect("order >= 2"))
    }
}
