//! Named special functions built on the series evaluators.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gamma::{factorial, rgamma};
use crate::hyperseries::{eval_pfq, EvalResult, HypergeometricParams, PowerSeries, SeriesControl, SeriesSum};

/// Quantum numbers of a Landau state.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LandauParams {
    pub lambda: f64,
    pub m_l: f64,
}

impl LandauParams {
    pub fn new(lambda: f64, m_l: f64) -> Result<Self> {
        if !lambda.is_finite() || !m_l.is_finite() {
            return Err(Error::NonFinite(format!("Landau parameters λ = {lambda}, m_l = {m_l}")));
        }
        Ok(Self { lambda, m_l })
    }

    /// Upper parameter of the radial `1F1`.
    pub fn a(&self) -> f64 {
        -self.lambda + (self.m_l.abs() + 1.0) / 2.0
    }

    /// Lower parameter of the radial `1F1`.
    pub fn b(&self) -> f64 {
        1.0 + self.m_l.abs()
    }
}

/// `J₀(x) = 0F1[; 1; −x²/4]`.
pub fn bessel_j0(x: f64, control: SeriesControl) -> Result<EvalResult> {
    eval_pfq(&HypergeometricParams::new([], [1.0]), -x * x / 4.0, control)
}

fn tricomi_series(nu: f64) -> PowerSeries<impl Fn(u64) -> f64> {
    // first index whose 1/Γ(ν + r + 1) is nonzero
    let mut start = 0u64;
    while rgamma(nu + start as f64 + 1.0) == 0.0 {
        start += 1;
    }
    let sign = if start % 2 == 0 { 1.0 } else { -1.0 };
    let first = sign * rgamma(nu + start as f64 + 1.0) / factorial(start);
    PowerSeries {
        start,
        first,
        ratio: move |r: u64| -1.0 / ((r as f64 + 1.0) * (nu + r as f64 + 1.0)),
        radius_floor: 0.0,
    }
}

/// Tricomi function `C_ν(x) = Σ (−x)^r / (r! Γ(ν + r + 1))`.
///
/// Terms at poles of `Γ(ν + r + 1)` are zero, so `C_ν` is defined for every
/// real `ν`.
pub fn tricomi_c(nu: f64, x: f64, control: SeriesControl) -> Result<EvalResult> {
    tricomi_c_derivative(nu, x, 0, control)
}

/// `order`-th derivative of `C_ν` at `x`, summed termwise.
pub fn tricomi_c_derivative(nu: f64, x: f64, order: u64, control: SeriesControl) -> Result<EvalResult> {
    if !nu.is_finite() || !x.is_finite() {
        return Err(Error::NonFinite(format!("C_ν with ν = {nu}, x = {x}")));
    }
    tricomi_series(nu).derivative(x, order, control)
}

/// Cosine through `0F1[; 1/2; −x²/4]`.
pub fn cos_hyp(x: f64, control: SeriesControl) -> Result<EvalResult> {
    eval_pfq(&HypergeometricParams::new([], [0.5]), -x * x / 4.0, control)
}

/// Sine through `x · 0F1[; 3/2; −x²/4]`.
pub fn sin_hyp(x: f64, control: SeriesControl) -> Result<EvalResult> {
    let mut r = eval_pfq(&HypergeometricParams::new([], [1.5]), -x * x / 4.0, control)?;
    r.value *= x;
    r.tail_estimate *= x.abs();
    Ok(r)
}

/// `cos_{1/2}(x) = Σ Γ(r/2 + 1) / (r!)² · x^r`.
pub fn cos_half(x: f64, control: SeriesControl) -> Result<EvalResult> {
    if !x.is_finite() {
        return Err(Error::NonFinite(format!("argument {x}")));
    }
    if x == 0.0 {
        return Ok(EvalResult::exact(1.0, 1));
    }
    // c_{r+1} = c_{r-1} · ((r+1)/2) / (r (r+1))², seeded with Γ(1) and Γ(3/2)
    let mut prev = 1.0;
    let mut cur = std::f64::consts::PI.sqrt() / 2.0;
    let mut acc = SeriesSum::new(control, 1.0);
    let mut power = x;
    let mut r = 1u64;
    loop {
        if acc.push(cur * power)? {
            return Ok(acc.finish());
        }
        let rf = r as f64;
        let next = prev * ((rf + 1.0) / 2.0) / (rf * (rf + 1.0)).powi(2);
        prev = cur;
        cur = next;
        power *= x;
        r += 1;
    }
}

/// Gaussian transform of `cos_{1/2}`, reduced to its even terms:
/// `Σ_k (1/2)_k k! / ((2k)!)² · (−4x²)^k`, which sums to `cos x`.
pub fn gauss_transform_cos_half(x: f64, control: SeriesControl) -> Result<EvalResult> {
    if !x.is_finite() {
        return Err(Error::NonFinite(format!("argument {x}")));
    }
    if x == 0.0 {
        return Ok(EvalResult::exact(1.0, 1));
    }
    let z = -4.0 * x * x;
    let mut term = 1.0;
    let mut acc = SeriesSum::new(control, term);
    let mut k = 0.0;
    loop {
        let d = (2.0 * k + 1.0) * (2.0 * k + 2.0);
        term *= (k + 0.5) * (k + 1.0) * z / (d * d);
        if acc.push(term)? {
            return Ok(acc.finish());
        }
        k += 1.0;
    }
}

/// `J₀(x)² = 1F2[1/2; 1, 1; −x²]`.
pub fn j0_squared(x: f64, control: SeriesControl) -> Result<EvalResult> {
    eval_pfq(&HypergeometricParams::new([0.5], [1.0, 1.0]), -x * x, control)
}

/// Landau radial function `e^{−ξ/2} ξ^{|m_l|/2} 1F1[a; b; ξ]`.
pub fn landau_radial(params: LandauParams, xi: f64, control: SeriesControl) -> Result<EvalResult> {
    if xi < 0.0 {
        return Err(Error::domain(format!("Landau radial function needs ξ ≥ 0, got {xi}")));
    }
    let mut r = eval_pfq(&HypergeometricParams::new([params.a()], [params.b()]), xi, control)?;
    let factor = (-xi / 2.0).exp() * xi.powf(params.m_l.abs() / 2.0);
    r.value *= factor;
    r.tail_estimate *= factor;
    Ok(r)
}
