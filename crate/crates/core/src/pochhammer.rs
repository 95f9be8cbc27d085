//! Rising factorials `(d)_r = Γ(d + r) / Γ(d)` for real shifts.
//!
//! Integer shifts up to [`PRODUCT_CUTOFF`] in magnitude are computed as
//! finite products, which keeps small cases exact to rounding and resolves
//! the `0/0` limits at non-positive integer bases. Every other shift goes
//! through signed log-gamma.

use crate::error::{Error, Result};
use crate::gamma::{ln_gamma, near_integer, nonpositive_integer};

/// Largest integer shift magnitude evaluated by direct product.
pub const PRODUCT_CUTOFF: i64 = 50;

/// Snap `x` onto the integer it is within pole tolerance of.
fn snap(x: f64) -> f64 {
    match near_integer(x) {
        Some(n) => n as f64,
        None => x,
    }
}

/// `(d)_r` for real `d` and `r`.
///
/// Poles of the numerator with no compensating pole in `Γ(d)` give
/// [`Error::Pole`]; a pole of `Γ(d)` alone makes the ratio zero.
pub fn pochhammer(d: f64, r: f64) -> Result<f64> {
    if !d.is_finite() || !r.is_finite() {
        return Err(Error::NonFinite(format!("pochhammer({d}, {r})")));
    }
    if r == 0.0 {
        return Ok(1.0);
    }
    let d_pole = nonpositive_integer(d).is_some();
    if let Some(n) = near_integer(r) {
        if n.abs() <= PRODUCT_CUTOFF || d_pole || near_integer(d).is_some() {
            return if n >= 0 {
                via_product(snap(d), n as u64)
            } else {
                via_reciprocal_product(snap(d), n.unsigned_abs())
            };
        }
        return via_log_gamma(d, r);
    }
    let top_pole = nonpositive_integer(d + r).is_some();
    match (d_pole, top_pole) {
        (true, _) => Ok(0.0),
        (false, true) => Err(Error::pole(format!("Γ({d} + {r}) is infinite"))),
        (false, false) => via_log_gamma(d, r),
    }
}

/// `d (d+1) ... (d+n-1)`.
pub fn via_product(d: f64, n: u64) -> Result<f64> {
    let mut p = 1.0;
    for k in 0..n {
        p *= d + k as f64;
        if p == 0.0 {
            return Ok(0.0);
        }
    }
    finite(p, d, n as f64)
}

/// `(d)_{-n} = 1 / ((d-1)(d-2)...(d-n))`.
fn via_reciprocal_product(d: f64, n: u64) -> Result<f64> {
    let mut p = 1.0;
    for k in 1..=n {
        p *= d - k as f64;
    }
    if p == 0.0 {
        return Err(Error::pole(format!("({d})_{{-{n}}} has a zero denominator")));
    }
    finite(1.0 / p, d, -(n as f64))
}

/// `Γ(d + r) / Γ(d)` through signed log-gamma.
pub fn via_log_gamma(d: f64, r: f64) -> Result<f64> {
    let top = ln_gamma(d + r).ok_or_else(|| Error::pole(format!("Γ({d} + {r}) is infinite")))?;
    let bottom = match ln_gamma(d) {
        Some(lg) => lg,
        None => return Ok(0.0),
    };
    let v = top.sign * bottom.sign * (top.ln_abs - bottom.ln_abs).exp();
    finite(v, d, r)
}

fn finite(v: f64, d: f64, r: f64) -> Result<f64> {
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::NonFinite(format!("({d})_{r} overflows")))
    }
}

/// `(d)_m (d+m)_n`, which equals `(d)_{m+n}`.
pub fn pochhammer_split(d: f64, m: i64, n: i64) -> Result<f64> {
    let head = pochhammer(d, m as f64)?;
    let tail = pochhammer(d + m as f64, n as f64)?;
    Ok(head * tail)
}

/// `(-1)^r / (1-d)_r`, which equals `(d)_{-r}`.
pub fn pochhammer_negate(d: f64, r: u64) -> Result<f64> {
    let denom = pochhammer(1.0 - d, r as f64)?;
    if denom == 0.0 {
        return Err(Error::pole(format!("(1 - {d})_{r} vanishes")));
    }
    let sign = if r % 2 == 0 { 1.0 } else { -1.0 };
    Ok(sign / denom)
}

/// `2^{2r} (d/2)_r ((d+1)/2)_r`, which equals `(d)_{2r}`.
pub fn pochhammer_duplicate(d: f64, r: u64) -> Result<f64> {
    let half = pochhammer(d / 2.0, r as f64)?;
    let half_up = pochhammer((d + 1.0) / 2.0, r as f64)?;
    let scale = 4f64.powi(r as i32);
    finite(scale * half * half_up, d, 2.0 * r as f64)
}

/// Value of `(-r)_s` for non-negative integers.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Falling {
    pub value: f64,
    /// Set when `s > r`: the product passes through zero and the closed
    /// form `(-1)^s r!/(r-s)!` does not apply.
    pub vanished: bool,
}

/// `(-r)_s = (-1)^s r! / (r - s)!`.
pub fn pochhammer_falling(r: u64, s: u64) -> Falling {
    if s > r {
        return Falling {
            value: 0.0,
            vanished: true,
        };
    }
    // r!/(r-s)! = r (r-1) ... (r-s+1)
    let mut v = 1.0;
    for k in 0..s {
        v *= (r - k) as f64;
    }
    if s % 2 == 1 {
        v = -v;
    }
    Falling {
        value: v,
        vanished: false,
    }
}

/// `Σ_{s=0}^{r} C(r, s) (d)_{r-s} (k)_s`, which equals `(k + d)_r`.
pub fn pochhammer_binomial(k: f64, d: f64, r: u64) -> Result<f64> {
    let mut binom = 1.0;
    let mut sum = 0.0;
    for s in 0..=r {
        sum += binom * pochhammer(d, (r - s) as f64)? * pochhammer(k, s as f64)?;
        binom *= (r - s) as f64 / (s + 1) as f64;
    }
    finite(sum, k + d, r as f64)
}
