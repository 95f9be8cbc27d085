//! Left-hand sides of the integral identities, computed by quadrature.
//!
//! Nothing here goes through the moment map. Where an integrand leaves the
//! unit disk of its series, classical transformations of `2F1` are used to
//! continue it.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::gamma::{is_nonpositive_integer, ln_gamma};
use crate::hyperseries::{eval_pfq, HypergeometricParams, SeriesControl};
use crate::quadrature::{integrate_beta_weighted, try_integrate, Domain};

/// Relative tolerance of every oracle quadrature.
pub const ORACLE_REL_TOL: f64 = 1e-10;

/// Gaussian factors below `e^{-745}` underflow to zero.
const GAUSSIAN_CUTOFF: f64 = 745.0;

fn quad(f: impl Fn(f64) -> Result<f64>, domain: Domain) -> Result<f64> {
    Ok(try_integrate(f, domain, ORACLE_REL_TOL, 1e-300)?.value)
}

fn beta_quad(p: f64, q: f64, kernel: impl Fn(f64) -> Result<f64>) -> Result<f64> {
    integrate_beta_weighted(p, q, kernel, ORACLE_REL_TOL, 1e-300)
}

fn pfq(upper: &[f64], lower: &[f64], x: f64) -> Result<f64> {
    Ok(eval_pfq(&HypergeometricParams::new(upper, lower), x, SeriesControl::default())?.value)
}

fn ln_beta_normalization(lower: f64, upper: f64) -> Result<f64> {
    let ln = |x: f64| {
        ln_gamma(x)
            .map(|g| g.ln_abs)
            .ok_or_else(|| Error::pole(format!("Γ({x}) is infinite")))
    };
    Ok(ln(upper)? - ln(lower)? - ln(upper - lower)?)
}

/// `2F1[a, b; c; −t]` for `t ≥ 0`.
///
/// Uses Pfaff's transformation up to `t = 1`. Beyond that it uses, in
/// order: a terminating Euler transformation, a terminating series, or
/// the Euler integral over the parameter in `(0, c)`.
pub fn hyp2f1_negative_axis(a: f64, b: f64, c: f64, t: f64) -> Result<f64> {
    if t < 0.0 {
        return Err(Error::domain(format!("expected t ≥ 0, got {t}")));
    }
    let w = t / (1.0 + t);
    let pfaff = || -> Result<f64> { Ok((1.0 + t).powf(-a) * pfq(&[a, c - b], &[c], w)?) };
    if t <= 1.0 {
        return pfaff();
    }
    if is_nonpositive_integer(c - a) || is_nonpositive_integer(c - b) {
        return Ok((1.0 + t).powf(c - a - b) * pfq(&[c - a, c - b], &[c], -t)?);
    }
    if is_nonpositive_integer(a) || is_nonpositive_integer(b) {
        return pfq(&[a, b], &[c], -t);
    }
    // Euler integral over whichever of a, b sits furthest inside (0, c)
    let inner = [(b, a), (a, b)]
        .into_iter()
        .filter(|&(e, _)| e > 0.0 && e < c)
        .max_by(|x, y| x.0.min(c - x.0).total_cmp(&y.0.min(c - y.0)));
    if let Some((e, other)) = inner {
        let norm = ln_beta_normalization(e, c)?.exp();
        let v = beta_quad(e, c - e, |s| Ok((1.0 + t * s).powf(-other)))?;
        return Ok(norm * v);
    }
    if w < 0.95 {
        return pfaff();
    }
    Err(Error::domain(format!(
        "no continuation of 2F1[{a}, {b}; {c}; −{t}] available"
    )))
}

/// `∫₀^∞ t^{ν−1} 2F1[a, b; c; −t] dt`.
pub fn mellin_lhs(a: f64, b: f64, c: f64, nu: f64) -> Result<f64> {
    mellin_power_lhs(a, b, c, 1.0, nu)
}

/// `∫₀^∞ t^{ν−1} 2F1[a, b; c; −t^μ] dt`.
///
/// For `ν < 1` the substitution `v = t^ν` removes the singular weight.
pub fn mellin_power_lhs(a: f64, b: f64, c: f64, mu: f64, nu: f64) -> Result<f64> {
    if nu > 0.0 && nu < 1.0 {
        let v = quad(
            |v| hyp2f1_negative_axis(a, b, c, v.powf(mu / nu)),
            Domain::HalfLine(0.0),
        )?;
        return Ok(v / nu);
    }
    quad(
        |t| Ok(t.powf(nu - 1.0) * hyp2f1_negative_axis(a, b, c, t.powf(mu))?),
        Domain::HalfLine(0.0),
    )
}

fn gaussian_weighted(alpha: f64, f: impl Fn(f64) -> Result<f64>) -> Result<f64> {
    quad(
        |x| {
            let e = alpha * x * x;
            if e > GAUSSIAN_CUTOFF {
                Ok(0.0)
            } else {
                Ok((-e).exp() * f(x)?)
            }
        },
        Domain::RealLine,
    )
}

/// `∫ e^{−αx²} pFq(params; βx) dx`.
pub fn gaussian_pfq_lhs(params: &HypergeometricParams, alpha: f64, beta: f64) -> Result<f64> {
    gaussian_weighted(alpha, |x| {
        Ok(eval_pfq(params, beta * x, SeriesControl::default())?.value)
    })
}

/// `∫ e^{−αx²} 0F1[; 1/2; −βx/4] dx`.
pub fn gaussian_cosine_lhs(alpha: f64, beta: f64) -> Result<f64> {
    gaussian_weighted(alpha, |x| pfq(&[], &[0.5], -beta * x / 4.0))
}

/// `∫ e^{−αx²} 1F2[1/2; 1, 1; −x] dx`.
pub fn bessel_squared_lhs(alpha: f64) -> Result<f64> {
    gaussian_weighted(alpha, |x| pfq(&[0.5], &[1.0, 1.0], -x))
}

/// `∫ dz / (1 + αz² − βz)`.
pub fn geometric_lhs(alpha: f64, beta: f64) -> Result<f64> {
    quad(|z| Ok(1.0 / (1.0 + alpha * z * z - beta * z)), Domain::RealLine)
}

/// `∫₀^x t^α e^{−t} 2F1[a, b; c; t] dt`.
pub fn weighted_exp_lhs(a: f64, b: f64, c: f64, alpha: f64, x: f64) -> Result<f64> {
    quad(
        |t| Ok(t.powf(alpha) * (-t).exp() * pfq(&[a, b], &[c], t)?),
        Domain::Finite(0.0, x),
    )
}

/// `∫ 1F2[a; b, c; −αx² + βx] dx`.
///
/// The integrand decays only algebraically and oscillates, so it is not
/// integrated over `x` directly. Writing `1F2` as the Euler integral of
/// `0F1[; c; zt]` over `t` and integrating each `0F1` over `x` in closed
/// form leaves
/// `Γ(b)/(Γ(a)Γ(b−a)) · √π Γ(c)/Γ(c−1/2) · α^{−1/2}
///  ∫₀¹ t^{a−3/2} (1−t)^{b−a−1} 0F1[; c−1/2; tβ²/4α] dt`,
/// which is integrated numerically. Needs `a > 1/2` and one lower parameter
/// above `a` with the other above `1/2`.
pub fn quadratic_arg_lhs(a: f64, b: f64, c: f64, alpha: f64, beta: f64) -> Result<f64> {
    let (outer, bessel) = if b > a && c > 0.5 {
        (b, c)
    } else if c > a && b > 0.5 {
        (c, b)
    } else {
        return Err(Error::domain(format!(
            "oracle needs a lower parameter above a = {a} and the other above 1/2"
        )));
    };
    if a <= 0.5 {
        return Err(Error::domain(format!("oracle needs a > 1/2, got {a}")));
    }
    let ln = |x: f64| ln_gamma(x).map(|g| g.ln_abs).unwrap_or(f64::INFINITY);
    let ln_scale = ln_beta_normalization(a, outer)? + ln(bessel) - ln(bessel - 0.5);
    let scale = ln_scale.exp() * (PI / alpha).sqrt();
    let z = beta * beta / (4.0 * alpha);
    let v = beta_quad(a - 0.5, outer - a, |t| pfq(&[], &[bessel - 0.5], z * t))?;
    Ok(scale * v)
}
