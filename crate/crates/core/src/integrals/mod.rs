//! Closed forms for integrals of hypergeometric functions.
//!
//! Each evaluator returns the right-hand side of an integral identity. The
//! [`oracle`] submodule computes the matching left-hand sides by quadrature
//! so that every closed form can be checked independently.

pub mod oracle;

use std::collections::BTreeMap;
use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gamma::{gamma, ln_gamma};
use crate::hyperseries::{
    classify_convergence, eval_fox_wright, eval_pfq, Convergence, FoxWrightParams, HypergeometricParams,
    SeriesControl, SeriesSum,
};
use crate::quadrature::integrate_beta_weighted;
use crate::umbral::{vacuum_moment, UmbralSymbol};

/// Quadrature tolerance used by the integral-valued evaluators.
pub const QUADRATURE_REL_TOL: f64 = 1e-11;

/// How the left-hand side of an identity was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LhsSource {
    Quadrature,
    Series,
}

/// One identity checked at one parameter point.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub identity_id: String,
    pub lhs: f64,
    pub rhs: f64,
    pub abs_diff: f64,
    pub rel_diff: f64,
    pub tolerance: f64,
    pub passed: bool,
    pub lhs_source: LhsSource,
    pub params: BTreeMap<String, f64>,
}

impl IdentityReport {
    /// Passes when the relative difference is within `tolerance`, or the
    /// absolute difference is when `|rhs| < 1e-12`.
    pub fn new(
        identity_id: impl Into<String>,
        lhs: f64,
        rhs: f64,
        tolerance: f64,
        lhs_source: LhsSource,
        params: BTreeMap<String, f64>,
    ) -> Self {
        let abs_diff = (lhs - rhs).abs();
        let rel_diff = if abs_diff == 0.0 { 0.0 } else { abs_diff / rhs.abs() };
        let passed = if rhs.abs() < 1e-12 {
            abs_diff <= tolerance
        } else {
            rel_diff <= tolerance
        };
        Self {
            identity_id: identity_id.into(),
            lhs,
            rhs,
            abs_diff,
            rel_diff,
            tolerance,
            passed: passed && lhs.is_finite() && rhs.is_finite(),
            lhs_source,
            params,
        }
    }
}

fn check_alpha(alpha: f64) -> Result<()> {
    if alpha > 0.0 && alpha.is_finite() {
        Ok(())
    } else {
        Err(Error::domain(format!("Gaussian weight needs α > 0, got {alpha}")))
    }
}

fn check_finite(values: &[f64]) -> Result<()> {
    match values.iter().find(|v| !v.is_finite()) {
        Some(v) => Err(Error::NonFinite(format!("parameter {v}"))),
        None => Ok(()),
    }
}

/// `∫₀^∞ t^{ν−1} 2F1[a, b; c; −t] dt = Γ(ν) (a)_{−ν} (b)_{−ν} / (c)_{−ν}`.
pub fn mellin_integral(a: f64, b: f64, c: f64, nu: f64) -> Result<f64> {
    check_finite(&[a, b, c, nu])?;
    if !(nu > 0.0 && nu < a.min(b)) {
        return Err(Error::domain(format!(
            "Mellin transform converges for 0 < ν < min(a, b) = {}, got ν = {nu}",
            a.min(b)
        )));
    }
    Ok(gamma(nu) * vacuum_moment(&UmbralSymbol::new([a, b], [c]), -nu)?)
}

/// `∫₀^∞ t^{ν−1} 2F1[a, b; c; −t^μ] dt`.
pub fn mellin_power_integral(a: f64, b: f64, c: f64, mu: f64, nu: f64) -> Result<f64> {
    check_finite(&[mu])?;
    if mu <= 0.0 {
        return Err(Error::domain(format!("power μ must be positive, got {mu}")));
    }
    Ok(mellin_integral(a, b, c, nu / mu)? / mu)
}

/// Closed form of a Gaussian-weighted `pFq`:
/// `∫ e^{−αx²} pFq(βx) dx = prefactor · 2p F 2q(params; argument)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GaussianClosedForm {
    pub params: HypergeometricParams,
    pub prefactor: f64,
    pub argument: f64,
}

impl GaussianClosedForm {
    pub fn eval(&self, control: SeriesControl) -> Result<f64> {
        Ok(self.prefactor * eval_pfq(&self.params, self.argument, control)?.value)
    }
}

fn halve_and_split(params: &[f64]) -> Vec<f64> {
    params.iter().flat_map(|&a| [a / 2.0, (a + 1.0) / 2.0]).collect()
}

/// Gaussian transform of `pFq(params; βx)` with every parameter split into
/// its halves `a/2, (a+1)/2`.
pub fn gaussian_integral_pfq(params: &HypergeometricParams, alpha: f64, beta: f64) -> Result<GaussianClosedForm> {
    check_alpha(alpha)?;
    check_finite(&[beta])?;
    params.check_finite()?;
    let (p, q) = (params.p() as i32, params.q() as i32);
    if p > q + 1 {
        return Err(Error::domain(format!(
            "Gaussian transform of {p}F{q} diverges (needs p ≤ q + 1)"
        )));
    }
    let closed = HypergeometricParams::new(halve_and_split(&params.upper), halve_and_split(&params.lower));
    let argument = 4f64.powi(p - q) * beta * beta / (4.0 * alpha);
    if argument != 0.0 {
        match classify_convergence(&closed) {
            Convergence::Divergent => {
                return Err(Error::domain(format!(
                    "closed form {}F{} diverges at argument {argument}",
                    closed.p(),
                    closed.q()
                )))
            }
            Convergence::UnitDisk if argument.abs() >= 1.0 => {
                return Err(Error::domain(format!(
                    "closed form {}F{} requires |argument| < 1, got {argument}",
                    closed.p(),
                    closed.q()
                )))
            }
            _ => {}
        }
    }
    Ok(GaussianClosedForm {
        params: closed,
        prefactor: (PI / alpha).sqrt(),
        argument,
    })
}

/// `∫ e^{−αx²} cos(√(βx)) dx` with the cosine taken as `0F1[; 1/2; −βx/4]`.
pub fn gaussian_cosine_integral(alpha: f64, beta: f64) -> Result<f64> {
    gaussian_integral_pfq(&HypergeometricParams::new([], [0.5]), alpha, -beta / 4.0)?.eval(SeriesControl::default())
}

/// `∫ F(−αx² + βx) dx` where `F = e^{χy} φ₀` for an arbitrary symbol,
/// expanded as `√(π/α) Σ_r χ^{r−1/2} φ₀ (β²/4α)^r / r!`.
pub fn gaussian_quadratic_arg_integral_symbol(
    symbol: &UmbralSymbol,
    alpha: f64,
    beta: f64,
    control: SeriesControl,
) -> Result<f64> {
    check_alpha(alpha)?;
    check_finite(&[beta])?;
    let z = beta * beta / (4.0 * alpha);
    let prefactor = (PI / alpha).sqrt();
    let first = vacuum_moment(symbol, -0.5)?;
    if z == 0.0 {
        return Ok(prefactor * first);
    }
    if symbol.upper.len() > symbol.lower.len() {
        return Err(Error::domain(format!(
            "moment series of a symbol with {} upper and {} lower parameters diverges",
            symbol.upper.len(),
            symbol.lower.len()
        )));
    }
    let mut acc = SeriesSum::new(control, first);
    let mut power = 1.0;
    let mut r = 1u64;
    loop {
        power *= z / r as f64;
        let term = vacuum_moment(symbol, r as f64 - 0.5)? * power;
        if acc.push(term)? {
            return Ok(prefactor * acc.finish().value);
        }
        r += 1;
    }
}

/// `∫ 1F2[a; b, c; −αx² + βx] dx`.
pub fn gaussian_quadratic_arg_integral(
    a: f64,
    b: f64,
    c: f64,
    alpha: f64,
    beta: f64,
    control: SeriesControl,
) -> Result<f64> {
    check_finite(&[a, b, c])?;
    gaussian_quadratic_arg_integral_symbol(&UmbralSymbol::new([a], [b, c]), alpha, beta, control)
}

/// `∫ dz / (1 + αz² − βz) = π / √(α (1 − β²/4α))`.
pub fn geometric_gaussian_integral(alpha: f64, beta: f64) -> Result<f64> {
    check_alpha(alpha)?;
    check_finite(&[beta])?;
    let disc = 1.0 - beta * beta / (4.0 * alpha);
    if disc <= 0.0 {
        return Err(Error::domain(format!(
            "1 + αz² − βz has real roots for α = {alpha}, β = {beta}"
        )));
    }
    Ok(PI / (alpha * disc).sqrt())
}

/// `∫₀^x t^α e^{−t} 2F1[a, b; c; t] dt` as
/// `x^{α+1}/(α+1) Σ_r (−1)^r (α+1)_r x^r / ((α+2)_r r!) · S_r` where
/// `S_r = Σ_{s≤r} (−r)_s (a)_s (b)_s / ((c)_s s!)` terminates.
pub fn weighted_exp_integral(a: f64, b: f64, c: f64, alpha: f64, x: f64, control: SeriesControl) -> Result<f64> {
    check_finite(&[a, b, c, alpha, x])?;
    if !(0.0..1.0).contains(&x) {
        return Err(Error::domain(format!("upper limit must lie in [0, 1), got {x}")));
    }
    if alpha <= -1.0 {
        return Err(Error::domain(format!("weight t^α needs α > −1, got {alpha}")));
    }
    HypergeometricParams::new([a, b], [c]).check_lower_poles()?;
    if x == 0.0 {
        return Ok(0.0);
    }
    // coefficients u_s = (a)_s (b)_s / ((c)_s s!) of the 2F1 series
    let mut coeffs = vec![1.0];
    // 1/n! for the binomial weights, S_r / r! = Σ_s (−1)^s u_s / (r−s)!
    let mut inv_fact = vec![1.0];
    let inner = |r: usize, coeffs: &[f64], inv_fact: &[f64]| -> f64 {
        (0..=r)
            .map(|s| {
                let sign = if s % 2 == 0 { 1.0 } else { -1.0 };
                sign * coeffs[s] * inv_fact[r - s]
            })
            .sum()
    };
    let mut acc = SeriesSum::new(control, 1.0).with_ratio_floor(x);
    // (α+1)_r / (α+2)_r = (α+1)/(α+1+r)
    let mut power = 1.0;
    let mut r = 1usize;
    loop {
        let rf = r as f64;
        let s = rf - 1.0;
        let last = coeffs[r - 1];
        coeffs.push(last * (a + s) * (b + s) / ((c + s) * rf));
        inv_fact.push(inv_fact[r - 1] / rf);
        power *= -x;
        let ratio = (alpha + 1.0) / (alpha + 1.0 + rf);
        let term = power * ratio * inner(r, &coeffs, &inv_fact);
        if acc.push(term)? {
            break;
        }
        r += 1;
    }
    Ok(x.powf(alpha + 1.0) / (alpha + 1.0) * acc.finish().value)
}

/// `∫ e^{−αx²} J₀(√x)² dx` over the real line, as
/// `α^{−1/2} 1Ψ2[(1/2, 2); (1, 2), (1, 2); 1/(4α)]`.
pub fn bessel_squared_gaussian_integral(alpha: f64, control: SeriesControl) -> Result<f64> {
    check_alpha(alpha)?;
    let params = FoxWrightParams::new([(0.5, 2.0)], [(1.0, 2.0), (1.0, 2.0)])?;
    Ok(eval_fox_wright(&params, 1.0 / (4.0 * alpha), control)?.value / alpha.sqrt())
}

/// Gaussian transform of `1F2[a; b, c; βx]` written through the Fox–Wright
/// function `1Ψ2[(a, 2); (b, 2), (c, 2); β²/4α]`.
pub fn fox_wright_gaussian_form(a: f64, b: f64, c: f64, alpha: f64, beta: f64) -> Result<f64> {
    check_alpha(alpha)?;
    check_finite(&[a, b, c, beta])?;
    let params = FoxWrightParams::new([(a, 2.0)], [(b, 2.0), (c, 2.0)])?;
    let psi = eval_fox_wright(&params, beta * beta / (4.0 * alpha), SeriesControl::default())?.value;
    let ln = |x: f64| ln_gamma(x).ok_or_else(|| Error::pole(format!("Γ({x}) is infinite")));
    let (gb, gc, ga) = (ln(b)?, ln(c)?, ln(a)?);
    let scale = gb.sign * gc.sign * ga.sign * (gb.ln_abs + gc.ln_abs - ga.ln_abs).exp();
    Ok((PI / alpha).sqrt() * scale * psi)
}

fn beta_normalization(a: f64, b: f64) -> Result<f64> {
    if !(a > 0.0 && b > a) {
        return Err(Error::domain(format!("Euler integral needs 0 < a < b, got a = {a}, b = {b}")));
    }
    let ln = |x: f64| ln_gamma(x).map(|g| g.ln_abs).unwrap_or(f64::INFINITY);
    Ok((ln(b) - ln(a) - ln(b - a)).exp())
}

fn euler_quadrature(lower: f64, upper: f64, kernel: impl Fn(f64) -> f64) -> Result<f64> {
    let norm = beta_normalization(lower, upper)?;
    let v = integrate_beta_weighted(lower, upper - lower, |t| Ok(kernel(t)), QUADRATURE_REL_TOL, 1e-300)?;
    Ok(norm * v)
}

/// `1F1[a; b; x]` from its Euler integral, evaluated by quadrature.
pub fn euler_integral_1f1(a: f64, b: f64, x: f64) -> Result<f64> {
    check_finite(&[a, b, x])?;
    euler_quadrature(a, b, |t| (x * t).exp())
}

/// `2F1[a, b; c; x]` from its Euler integral, evaluated by quadrature.
pub fn euler_integral_2f1(a: f64, b: f64, c: f64, x: f64) -> Result<f64> {
    check_finite(&[a, b, c, x])?;
    if x.abs() >= 1.0 {
        return Err(Error::domain(format!("Euler integral is used for |x| < 1, got {x}")));
    }
    euler_quadrature(a, c, |t| (1.0 - x * t).powf(-b))
}

/// Euler integral of `1F1[a; b; (β²/4α) t²]`, equal to
/// `2F2[a/2, (a+1)/2; b/2, (b+1)/2; β²/4α]`.
pub fn kummer_gauss_transform(a: f64, b: f64, alpha: f64, beta: f64) -> Result<f64> {
    check_alpha(alpha)?;
    check_finite(&[a, b, beta])?;
    let z = beta * beta / (4.0 * alpha);
    euler_quadrature(a, b, |t| (z * t * t).exp())
}
