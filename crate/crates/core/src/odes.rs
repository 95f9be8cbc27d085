//! Residuals of the differential equations satisfied by the series.
//!
//! Derivatives come from termwise differentiation of the series, never from
//! finite differences. Every residual also has a variant that accepts an
//! arbitrary [`Jet`], which is how non-solutions are checked.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hyperseries::{pfq_derivative, HypergeometricParams, SeriesControl};
use crate::special::tricomi_c_derivative;

/// Value and first two derivatives of a function at a point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Jet {
    pub value: f64,
    pub d1: f64,
    pub d2: f64,
}

impl Jet {
    pub fn new(value: f64, d1: f64, d2: f64) -> Self {
        Self { value, d1, d2 }
    }
}

/// Outcome of evaluating one differential relation at one point.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OdeResidualReport {
    pub relation_id: String,
    pub x: f64,
    /// Left-hand side of the relation as written.
    pub lhs: f64,
    /// Right-hand side of the relation as written.
    pub rhs: f64,
    /// `lhs − rhs`.
    pub residual: f64,
    /// Largest magnitude among the individual terms.
    pub scale: f64,
    pub normalized_residual: f64,
}

impl OdeResidualReport {
    fn new(relation_id: &str, x: f64, lhs_terms: &[f64], rhs_terms: &[f64]) -> Self {
        let lhs: f64 = lhs_terms.iter().sum();
        let rhs: f64 = rhs_terms.iter().sum();
        let residual = lhs - rhs;
        let scale = lhs_terms.iter().chain(rhs_terms).fold(0.0f64, |m, t| m.max(t.abs()));
        let normalized_residual = if scale > 0.0 {
            residual.abs() / scale
        } else {
            residual.abs()
        };
        Self {
            relation_id: relation_id.to_string(),
            x,
            lhs,
            rhs,
            residual,
            scale,
            normalized_residual,
        }
    }
}

/// `order`-th derivative of `pFq(params; x)`.
pub fn series_derivative_pfq(
    params: &HypergeometricParams,
    x: f64,
    order: u64,
    control: SeriesControl,
) -> Result<f64> {
    Ok(pfq_derivative(params, x, order, control)?.value)
}

/// Jet of `pFq(params; x)`.
pub fn pfq_jet(params: &HypergeometricParams, x: f64, control: SeriesControl) -> Result<Jet> {
    Ok(Jet::new(
        pfq_derivative(params, x, 0, control)?.value,
        pfq_derivative(params, x, 1, control)?.value,
        pfq_derivative(params, x, 2, control)?.value,
    ))
}

/// Residual of `(d/dx)(x f′) + ν f′ + λ f = 0` for a caller-supplied jet.
pub fn laguerre_eigen_residual_of(nu: f64, lambda: f64, x: f64, f: Jet) -> OdeResidualReport {
    OdeResidualReport::new(
        "tricomi_eigen",
        x,
        &[x * f.d2, f.d1, nu * f.d1],
        &[-lambda * f.value],
    )
}

/// Eigen-equation of the Laguerre derivative for `f(x) = C_ν(λx)`.
pub fn tricomi_eigen_residual(nu: f64, lambda: f64, x: f64, control: SeriesControl) -> Result<OdeResidualReport> {
    if x <= 0.0 {
        return Err(Error::domain(format!("eigen-equation is checked for x > 0, got {x}")));
    }
    let z = lambda * x;
    let f = Jet::new(
        tricomi_c_derivative(nu, z, 0, control)?.value,
        lambda * tricomi_c_derivative(nu, z, 1, control)?.value,
        lambda * lambda * tricomi_c_derivative(nu, z, 2, control)?.value,
    );
    Ok(laguerre_eigen_residual_of(nu, lambda, x, f))
}

/// Residual of `(x D − x + b) D F = a F` for a caller-supplied jet.
pub fn kummer_ode_residual_of(a: f64, b: f64, x: f64, f: Jet) -> OdeResidualReport {
    OdeResidualReport::new("kummer_ode", x, &[x * f.d2, -x * f.d1, b * f.d1], &[a * f.value])
}

/// Kummer's equation for `F = 1F1[a; b; x]`.
pub fn kummer_ode_residual(a: f64, b: f64, x: f64, control: SeriesControl) -> Result<OdeResidualReport> {
    let f = pfq_jet(&HypergeometricParams::new([a], [b]), x, control)?;
    Ok(kummer_ode_residual_of(a, b, x, f))
}

/// `(x D + b) D 1F1[a; b; x] = a · 1F1[a + 1; b; x]`.
pub fn kummer_contiguous_residual(a: f64, b: f64, x: f64, control: SeriesControl) -> Result<OdeResidualReport> {
    kummer_contiguous_residual_with_rhs(a, b, a, x, control)
}

/// Contiguous relation with the right-hand side evaluated at `rhs_a` in
/// place of `a`. Used to measure sensitivity to a wrong parameter.
pub fn kummer_contiguous_residual_with_rhs(
    a: f64,
    b: f64,
    rhs_a: f64,
    x: f64,
    control: SeriesControl,
) -> Result<OdeResidualReport> {
    let f = pfq_jet(&HypergeometricParams::new([a], [b]), x, control)?;
    let shifted = pfq_derivative(&HypergeometricParams::new([rhs_a + 1.0], [b]), x, 0, control)?.value;
    Ok(OdeResidualReport::new(
        "kummer_contiguous",
        x,
        &[x * f.d2, b * f.d1],
        &[rhs_a * shifted],
    ))
}

/// Residual of `x(1−x)F″ + [c − (a+b+1)x]F′ = abF` for a caller-supplied jet.
pub fn gauss_ode_residual_of(a: f64, b: f64, c: f64, x: f64, f: Jet) -> OdeResidualReport {
    OdeResidualReport::new(
        "gauss_ode",
        x,
        &[x * (1.0 - x) * f.d2, (c - (a + b + 1.0) * x) * f.d1],
        &[a * b * f.value],
    )
}

/// Gauss's equation for `F = 2F1[a, b; c; x]`.
pub fn gauss_ode_residual(a: f64, b: f64, c: f64, x: f64, control: SeriesControl) -> Result<OdeResidualReport> {
    if x.abs() >= 1.0 {
        return Err(Error::domain(format!("Gauss equation is checked for |x| < 1, got {x}")));
    }
    let f = pfq_jet(&HypergeometricParams::new([a, b], [c]), x, control)?;
    Ok(gauss_ode_residual_of(a, b, c, x, f))
}

/// Gauss's equation in factored form, `(θ + c) D F = (θ + a)(θ + b) F` with
/// `θ = x D`, each factor applied in turn.
pub fn gauss_factored_residual_of(a: f64, b: f64, c: f64, x: f64, f: Jet) -> OdeResidualReport {
    // G = (θ + b)F and its derivative
    let g = x * f.d1 + b * f.value;
    let dg = f.d1 + x * f.d2 + b * f.d1;
    OdeResidualReport::new(
        "gauss_factored",
        x,
        &[x * f.d2, c * f.d1],
        &[x * dg, a * g],
    )
}

/// Residual of `F″ + F = 0` for a caller-supplied jet in `x`.
pub fn cosine_ode_residual_of(x: f64, f: Jet) -> OdeResidualReport {
    OdeResidualReport::new("cosine_ode", x, &[f.d2], &[-f.value])
}

/// Cosine equation `F″ + F = 0` for `F(x) = 0F1[; 1/2; −x²/4]`, with the
/// derivatives taken in `y = −x²/4` and mapped back by the chain rule.
pub fn cosine_ode_residual(x: f64, control: SeriesControl) -> Result<OdeResidualReport> {
    let g = pfq_jet(&HypergeometricParams::new([], [0.5]), -x * x / 4.0, control)?;
    // F″ = G″(y) x²/4 − G′(y)/2
    Ok(OdeResidualReport::new(
        "cosine_ode",
        x,
        &[g.d2 * x * x / 4.0, -g.d1 / 2.0],
        &[-g.value],
    ))
}
