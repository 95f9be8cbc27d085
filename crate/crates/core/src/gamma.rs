//! Gamma-function primitives with explicit sign tracking.
//!
//! `ln_gamma` returns `ln|Γ(x)|` together with the sign of `Γ(x)`. Negative
//! non-integer arguments go through the reflection formula so the sign is
//! exact rather than recovered from a complex logarithm.

use std::f64::consts::PI;

/// Arguments within this distance of a non-positive integer are poles.
pub const POLE_TOLERANCE: f64 = 1e-12;

const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_8;

const LANCZOS_G: f64 = 7.0;
#[allow(clippy::excessive_precision)]
const LANCZOS_COEFFS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// Stirling-series coefficients B_{2k} / (2k (2k-1)).
const STIRLING_COEFFS: [f64; 7] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360_360.0,
    1.0 / 156.0,
];

/// Signed logarithm of a Gamma value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LnGamma {
    /// `ln|Γ(x)|`
    pub ln_abs: f64,
    /// `+1.0` or `-1.0`
    pub sign: f64,
}

/// Returns `Some(n)` when `x` lies within [`POLE_TOLERANCE`] of `-n`, `n >= 0`.
pub fn nonpositive_integer(x: f64) -> Option<u64> {
    if !x.is_finite() || x > POLE_TOLERANCE {
        return None;
    }
    let r = x.round();
    if (x - r).abs() <= POLE_TOLERANCE {
        Some((-r) as u64)
    } else {
        None
    }
}

pub fn is_nonpositive_integer(x: f64) -> bool {
    nonpositive_integer(x).is_some()
}

/// Returns `Some(n)` when `x` lies within [`POLE_TOLERANCE`] of the integer `n`.
pub fn near_integer(x: f64) -> Option<i64> {
    if !x.is_finite() || x.abs() > 9.0e15 {
        return None;
    }
    let r = x.round();
    if (x - r).abs() <= POLE_TOLERANCE {
        Some(r as i64)
    } else {
        None
    }
}

/// `sin(πx)` with exact zeros at the integers.
pub fn sin_pi(x: f64) -> f64 {
    let r = x % 2.0;
    let r = if r < 0.0 { r + 2.0 } else { r };
    // r in [0, 2)
    let (s, y) = if r <= 0.5 {
        (1.0, r)
    } else if r <= 1.5 {
        (-1.0, r - 1.0)
    } else {
        (1.0, r - 2.0)
    };
    s * (PI * y).sin()
}

fn ln_gamma_lanczos(x: f64) -> f64 {
    let z = x - 1.0;
    let mut acc = LANCZOS_COEFFS[0];
    for (k, c) in LANCZOS_COEFFS.iter().enumerate().skip(1) {
        acc += c / (z + k as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    LN_SQRT_2PI + (z + 0.5) * t.ln() - t + acc.ln()
}

fn ln_gamma_stirling(x: f64) -> f64 {
    let inv = 1.0 / x;
    let inv2 = inv * inv;
    let mut corr = 0.0;
    let mut p = inv;
    for c in STIRLING_COEFFS {
        corr += c * p;
        p *= inv2;
    }
    (x - 0.5) * x.ln() - x + LN_SQRT_2PI + corr
}

fn ln_gamma_positive(x: f64) -> f64 {
    if x < 0.5 {
        // Γ(x) = Γ(x + 1) / x keeps the Lanczos sum away from its pole at 0.
        ln_gamma_lanczos(x + 1.0) - x.ln()
    } else if x < 12.0 {
        ln_gamma_lanczos(x)
    } else {
        ln_gamma_stirling(x)
    }
}

/// `ln|Γ(x)|` and the sign of `Γ(x)`; `None` at the poles.
pub fn ln_gamma(x: f64) -> Option<LnGamma> {
    if x.is_nan() || is_nonpositive_integer(x) {
        return None;
    }
    if x == f64::INFINITY {
        return Some(LnGamma {
            ln_abs: f64::INFINITY,
            sign: 1.0,
        });
    }
    if x > 0.0 {
        return Some(LnGamma {
            ln_abs: ln_gamma_positive(x),
            sign: 1.0,
        });
    }
    // Γ(x) Γ(1 - x) = π / sin(πx)
    let s = sin_pi(x);
    let ln_abs = PI.ln() - s.abs().ln() - ln_gamma_positive(1.0 - x);
    Some(LnGamma {
        ln_abs,
        sign: s.signum(),
    })
}

const FACTORIALS: [f64; 23] = {
    let mut t = [1.0; 23];
    let mut i = 1;
    while i < 23 {
        t[i] = t[i - 1] * i as f64;
        i += 1;
    }
    t
};

/// `n!` for `n <= 170`; exact for `n <= 22`.
pub fn factorial(n: u64) -> f64 {
    if (n as usize) < FACTORIALS.len() {
        FACTORIALS[n as usize]
    } else {
        gamma(n as f64 + 1.0)
    }
}

/// `Γ(x)`; infinite at the poles.
pub fn gamma(x: f64) -> f64 {
    if let Some(n) = near_integer(x) {
        if n >= 1 && n <= FACTORIALS.len() as i64 {
            return FACTORIALS[(n - 1) as usize];
        }
    }
    match ln_gamma(x) {
        Some(lg) => lg.sign * lg.ln_abs.exp(),
        None => f64::INFINITY,
    }
}

/// `1/Γ(x)`, entire: zero at the poles of `Γ`.
pub fn rgamma(x: f64) -> f64 {
    match ln_gamma(x) {
        Some(lg) => lg.sign * (-lg.ln_abs).exp(),
        None => 0.0,
    }
}
