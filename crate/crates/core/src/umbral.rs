//! The umbral moment map.
//!
//! A symbol `χ` acting on its vacuum returns `χ^ν φ₀ = ∏(a_i)_ν / ∏(b_j)_ν`.
//! Writing `pFq(x) = e^{χx} φ₀` turns differentiation into multiplication by
//! `χ` and integration into multiplication by `χ^{-1}`; both reduce to
//! parameter shifts. Products of independent symbols are represented by
//! concatenating their parameter lists.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gamma::is_nonpositive_integer;
use crate::hyperseries::{classify_convergence, Convergence, EvalResult, HypergeometricParams, SeriesControl, SeriesSum};
use crate::pochhammer::pochhammer;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct UmbralSymbol {
    pub upper: Vec<f64>,
    pub lower: Vec<f64>,
}

impl UmbralSymbol {
    pub fn new(upper: impl Into<Vec<f64>>, lower: impl Into<Vec<f64>>) -> Self {
        Self {
            upper: upper.into(),
            lower: lower.into(),
        }
    }

    /// Symbol whose exponential is the `pFq` with these parameters.
    pub fn from_params(params: &HypergeometricParams) -> Self {
        Self::new(params.upper.clone(), params.lower.clone())
    }

    pub fn params(&self) -> HypergeometricParams {
        HypergeometricParams::new(self.upper.clone(), self.lower.clone())
    }

    /// Joint symbol of two independent vacuums.
    pub fn product(&self, other: &UmbralSymbol) -> UmbralSymbol {
        let mut upper = self.upper.clone();
        upper.extend_from_slice(&other.upper);
        let mut lower = self.lower.clone();
        lower.extend_from_slice(&other.lower);
        UmbralSymbol { upper, lower }
    }

    pub fn moment(&self, nu: f64) -> Result<f64> {
        vacuum_moment(self, nu)
    }
}

/// `χ^ν φ₀ = ∏(a_i)_ν / ∏(b_j)_ν` for any real `ν`.
pub fn vacuum_moment(symbol: &UmbralSymbol, nu: f64) -> Result<f64> {
    // upper and lower factors are interleaved so that large Pochhammer
    // values cancel before the running product can overflow
    let n = symbol.upper.len().max(symbol.lower.len());
    let mut v = 1.0;
    for i in 0..n {
        if let Some(&a) = symbol.upper.get(i) {
            v *= pochhammer(a, nu)?;
        }
        if let Some(&b) = symbol.lower.get(i) {
            let den = pochhammer(b, nu)?;
            if den == 0.0 {
                return Err(Error::pole(format!(
                    "moment {nu} of {symbol:?} has a vanishing denominator"
                )));
            }
            v /= den;
        }
    }
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::NonFinite(format!("moment {nu} of {symbol:?}")))
    }
}

/// `e^{χx} φ₀ = Σ_r χ^r φ₀ x^r / r!`, each moment taken from the
/// Pochhammer map rather than a term recurrence.
pub fn umbral_exp_eval(symbol: &UmbralSymbol, x: f64, control: SeriesControl) -> Result<EvalResult> {
    let params = symbol.params();
    let ratio_floor = match classify_convergence(&params) {
        Convergence::Divergent if x != 0.0 => {
            return Err(Error::domain("induced series diverges"));
        }
        Convergence::UnitDisk if x.abs() >= 1.0 => {
            return Err(Error::domain(format!("induced series requires |x| < 1, got {x}")));
        }
        Convergence::UnitDisk => x.abs(),
        _ => 0.0,
    };
    if x == 0.0 {
        return Ok(EvalResult::exact(1.0, 1));
    }
    let terminating = params.terminating_degree();
    let mut acc = SeriesSum::new(control, 1.0).with_ratio_floor(ratio_floor);
    let mut power = 1.0; // x^r / r!
    let mut r = 1u64;
    loop {
        if let Some(n) = terminating {
            if r > n {
                return Ok(acc.finish_exact());
            }
        }
        power *= x / r as f64;
        let term = vacuum_moment(symbol, r as f64)? * power;
        if acc.push(term)? {
            return Ok(acc.finish());
        }
        r += 1;
    }
}

/// `d/dx pFq(params; x) = prefactor · pFq(shifted; x)` with every
/// parameter raised by one.
pub fn differentiate_pfq(params: &HypergeometricParams) -> Result<(f64, HypergeometricParams)> {
    if params.lower.contains(&0.0) {
        return Err(Error::pole("a lower parameter is zero"));
    }
    let prefactor = params.upper.iter().product::<f64>() / params.lower.iter().product::<f64>();
    let shifted = HypergeometricParams::new(
        params.upper.iter().map(|a| a + 1.0).collect::<Vec<_>>(),
        params.lower.iter().map(|b| b + 1.0).collect::<Vec<_>>(),
    );
    Ok((prefactor, shifted))
}

/// `∫ pFq(params; x) dx = prefactor · pFq(shifted; x) + C` with every
/// parameter lowered by one.
pub fn antidifferentiate_pfq(params: &HypergeometricParams) -> Result<(f64, HypergeometricParams)> {
    if params.upper.contains(&1.0) {
        return Err(Error::pole("an upper parameter equals one"));
    }
    let prefactor = params.lower.iter().map(|b| b - 1.0).product::<f64>()
        / params.upper.iter().map(|a| a - 1.0).product::<f64>();
    let shifted = HypergeometricParams::new(
        params.upper.iter().map(|a| a - 1.0).collect::<Vec<_>>(),
        params.lower.iter().map(|b| b - 1.0).collect::<Vec<_>>(),
    );
    Ok((prefactor, shifted))
}

/// The `x^{α+1} / (α+1)` factor of a power-weighted antiderivative.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerPrefactor {
    pub exponent: f64,
    pub scale: f64,
}

impl PowerPrefactor {
    pub fn eval(&self, x: f64) -> f64 {
        self.scale * x.powf(self.exponent)
    }
}

/// `∫₀^x t^α ₂F₁(a,b;c;t) dt = x^{α+1}/(α+1) · ₃F₂(a,b,α+1; c,α+2; x)`.
pub fn power_weighted_antiderivative(
    params: &HypergeometricParams,
    alpha: f64,
) -> Result<(PowerPrefactor, HypergeometricParams)> {
    if params.p() != 2 || params.q() != 1 {
        return Err(Error::domain(format!(
            "expected 2F1 parameters, got {}F{}",
            params.p(),
            params.q()
        )));
    }
    if alpha == -1.0 {
        return Err(Error::domain("α = -1 has no power antiderivative"));
    }
    if is_nonpositive_integer(alpha + 2.0) {
        return Err(Error::pole(format!("α + 2 = {} is a non-positive integer", alpha + 2.0)));
    }
    let mut extended = params.clone();
    extended.upper.push(alpha + 1.0);
    extended.lower.push(alpha + 2.0);
    Ok((
        PowerPrefactor {
            exponent: alpha + 1.0,
            scale: 1.0 / (alpha + 1.0),
        },
        extended,
    ))
}
