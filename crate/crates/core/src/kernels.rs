//! Special functions of one variable that drive the L^r dual distortion and
//! its derivatives.
//!
//! * `varpi(u) = u^r (1-u) + (1-u)^r u` is the per-cell distortion kernel,
//!   extended by zero outside `[0, 1]`.
//! * `psi(u) = r varpi(u) - u varpi'(u)` appears in the gradient.
//! * `vartheta` and `vartheta_tilde` appear in the off-diagonal and diagonal
//!   Hessian entries respectively, and satisfy `vartheta_tilde - vartheta = -psi'`.

use crate::error::{domain, Result};

/// The exponent `r >= 1` shared by every kernel.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KernelParams {
    r: f64,
}

impl KernelParams {
    pub fn new(r: f64) -> Result<Self> {
        if !(r.is_finite() && r >= 1.0) {
            return domain(format!("exponent r must be a finite real >= 1, got {r}"));
        }
        Ok(Self { r })
    }

    pub fn r(&self) -> f64 {
        self.r
    }

    /// True when `r` is an integer, in which case every kernel is a
    /// polynomial on `[0, 1]`.
    pub fn is_integer(&self) -> bool {
        self.r.fract() == 0.0
    }

    pub fn varpi(&self, u: f64) -> f64 {
        if !(0.0..=1.0).contains(&u) {
            return 0.0;
        }
        self.varpi_uv(u, 1.0 - u)
    }

    /// `varpi` at `u` with `v = 1 - u` supplied by the caller.
    pub fn varpi_uv(&self, u: f64, v: f64) -> f64 {
        let r = self.r;
        u.powf(r) * v + v.powf(r) * u
    }

    /// First derivative of `varpi` on `(0, 1)`.
    pub fn varpi_d1(&self, u: f64) -> f64 {
        self.varpi_d1_uv(u, 1.0 - u)
    }

    pub fn varpi_d1_uv(&self, u: f64, v: f64) -> f64 {
        let r = self.r;
        r * u.powf(r - 1.0) * v - u.powf(r) - r * v.powf(r - 1.0) * u + v.powf(r)
    }

    /// Second derivative of `varpi` on `(0, 1)`.
    pub fn varpi_d2(&self, u: f64) -> f64 {
        let r = self.r;
        let v = 1.0 - u;
        let curvature = if r == 1.0 {
            0.0
        } else {
            r * (r - 1.0) * (u.powf(r - 2.0) * v + v.powf(r - 2.0) * u)
        };
        curvature - 2.0 * r * (u.powf(r - 1.0) + v.powf(r - 1.0))
    }

    /// `psi` on `[0, 1]`, with `psi(0) = 0` and `psi(1) = 1 + [r = 1]`.
    pub fn psi(&self, u: f64) -> f64 {
        let r = self.r;
        if u <= 0.0 {
            return 0.0;
        }
        if u >= 1.0 {
            return if r == 1.0 { 2.0 } else { 1.0 };
        }
        self.psi_uv(u, 1.0 - u)
    }

    /// `psi` on the open interval, with `v = 1 - u` supplied.
    pub fn psi_uv(&self, u: f64, v: f64) -> f64 {
        let r = self.r;
        // The third term is written with v^(r-1) only inside (0,1), so it
        // never produces 0 * inf for r < 2.
        (r - 1.0) * u * v.powf(r) + u.powf(r + 1.0) + r * u * u * v.powf(r - 1.0)
    }

    /// Derivative of `psi` on `(0, 1)`.
    pub fn psi_d1(&self, u: f64) -> f64 {
        self.psi_d1_uv(u, 1.0 - u)
    }

    pub fn psi_d1_uv(&self, u: f64, v: f64) -> f64 {
        let r = self.r;
        let mut d = (r - 1.0) * v.powf(r) - r * (r - 1.0) * u * v.powf(r - 1.0)
            + (r + 1.0) * u.powf(r)
            + 2.0 * r * u * v.powf(r - 1.0);
        if r != 1.0 {
            d -= r * (r - 1.0) * u * u * v.powf(r - 2.0);
        }
        d
    }

    /// `(r+1)(z(1-z)^r + z^r(1-z)) + (r-1)(z^{r+1} + (1-z)^{r+1})`, positive on `(0, 1)`.
    pub fn vartheta(&self, z: f64) -> f64 {
        self.vartheta_uv(z, 1.0 - z)
    }

    pub fn vartheta_uv(&self, z: f64, w: f64) -> f64 {
        let r = self.r;
        (r + 1.0) * (z * w.powf(r) + z.powf(r) * w) + (r - 1.0) * (z.powf(r + 1.0) + w.powf(r + 1.0))
    }

    /// `(r-1) psi(z) - z psi'(z)`.
    pub fn vartheta_tilde(&self, z: f64) -> f64 {
        self.vartheta_tilde_uv(z, 1.0 - z)
    }

    pub fn vartheta_tilde_uv(&self, z: f64, w: f64) -> f64 {
        (self.r - 1.0) * self.psi_uv(z, w) - z * self.psi_d1_uv(z, w)
    }
}

fn open_unit(u: f64, what: &str) -> Result<()> {
    if u > 0.0 && u < 1.0 {
        Ok(())
    } else {
        domain(format!("{what} requires u in (0, 1), got {u}"))
    }
}

/// `varpi_r(u)`; zero outside `[0, 1]`.
pub fn varpi(r: f64, u: f64) -> Result<f64> {
    Ok(KernelParams::new(r)?.varpi(u))
}

/// `(varpi_r'(u), varpi_r''(u))` for `u` in `(0, 1)`.
pub fn varpi_derivs(r: f64, u: f64) -> Result<(f64, f64)> {
    let k = KernelParams::new(r)?;
    open_unit(u, "varpi_derivs")?;
    Ok((k.varpi_d1(u), k.varpi_d2(u)))
}

/// `psi_r(u)` for `u` in `[0, 1]`.
pub fn psi(r: f64, u: f64) -> Result<f64> {
    let k = KernelParams::new(r)?;
    if !(0.0..=1.0).contains(&u) {
        return domain(format!("psi requires u in [0, 1], got {u}"));
    }
    Ok(k.psi(u))
}

/// `psi_r'(u)` for `u` in `[0, 1]`. At `u = 1` the derivative is infinite
/// when `1 < r < 2`, which is reported as a domain error.
pub fn psi_prime(r: f64, u: f64) -> Result<f64> {
    let k = KernelParams::new(r)?;
    if !(0.0..=1.0).contains(&u) {
        return domain(format!("psi_prime requires u in [0, 1], got {u}"));
    }
    if u == 0.0 {
        return Ok(r - 1.0);
    }
    if u == 1.0 {
        return if r == 1.0 {
            Ok(4.0)
        } else if r < 2.0 {
            domain(format!("psi_prime is unbounded at u = 1 for r = {r}"))
        } else if r == 2.0 {
            Ok(1.0)
        } else {
            Ok(r + 1.0)
        };
    }
    Ok(k.psi_d1(u))
}

pub fn vartheta(r: f64, z: f64) -> Result<f64> {
    let k = KernelParams::new(r)?;
    open_unit(z, "vartheta")?;
    Ok(k.vartheta(z))
}

pub fn vartheta_tilde(r: f64, z: f64) -> Result<f64> {
    let k = KernelParams::new(r)?;
    open_unit(z, "vartheta_tilde")?;
    Ok(k.vartheta_tilde(z))
}
