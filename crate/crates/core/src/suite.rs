//! JSON-configured identity suite.
//!
//! A suite lists identities by id, each with a grid of parameter records
//! and a tolerance:
//!
//! ```json
//! { "identities": [ { "id": "mellin", "grid": [ {"a": 2, "b": 3, "c": 4, "nu": 1} ], "tolerance": 1e-6 } ] }
//! ```
//!
//! Identities over `pFq` parameter lists take keys `a1, a2, ...` for upper
//! and `b1, b2, ...` for lower parameters. Differential relations report
//! their normalized residual as the left-hand side against zero.

use std::collections::BTreeMap;
use std::f64::consts::PI;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gamma::gamma;
use crate::hyperseries::{eval_appell, eval_pfq, HypergeometricParams, SeriesControl};
use crate::integrals::{self, oracle, IdentityReport, LhsSource};
use crate::odes::{self, pfq_jet, series_derivative_pfq};
use crate::pochhammer::{
    pochhammer, pochhammer_binomial, pochhammer_duplicate, pochhammer_falling, pochhammer_negate,
    pochhammer_split, via_log_gamma, via_product,
};
use crate::quadrature::{integrate, Domain};
use crate::special::{self, LandauParams};
use crate::umbral::{antidifferentiate_pfq, differentiate_pfq, power_weighted_antiderivative, umbral_exp_eval, UmbralSymbol};

/// The suite run by `verify` when no file is given.
pub const DEFAULT_SUITE: &str = include_str!("../suites/default.json");

pub type ParamRecord = BTreeMap<String, f64>;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SuiteConfig {
    pub identities: Vec<IdentitySpec>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IdentitySpec {
    pub id: String,
    pub grid: Vec<ParamRecord>,
    pub tolerance: f64,
}

impl SuiteConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        let config: SuiteConfig =
            serde_json::from_str(text).map_err(|e| Error::Invalid(format!("suite JSON: {e}")))?;
        config.validate()?;
        Ok(config)
    }

    pub fn default_suite() -> Self {
        Self::from_json(DEFAULT_SUITE).expect("bundled suite is valid")
    }

    /// Checks ids, parameter keys and tolerances without evaluating anything.
    pub fn validate(&self) -> Result<()> {
        for spec in &self.identities {
            let identity = lookup(&spec.id)?;
            if !(spec.tolerance >= 0.0 && spec.tolerance.is_finite()) {
                return Err(Error::Invalid(format!(
                    "identity {}: tolerance must be a finite non-negative number",
                    spec.id
                )));
            }
            for record in &spec.grid {
                identity
                    .keys
                    .check(record)
                    .map_err(|msg| Error::Invalid(format!("identity {}: {msg}", spec.id)))?;
            }
        }
        Ok(())
    }

    /// Number of (identity, grid point) pairs.
    pub fn len(&self) -> usize {
        self.identities.iter().map(|s| s.grid.len()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Runs every grid point of every identity. Rows come back in suite order
/// whether or not `parallel` is set.
pub fn run_suite(config: &SuiteConfig, parallel: bool) -> Result<Vec<IdentityReport>> {
    config.validate()?;
    let jobs: Vec<(&IdentitySpec, &ParamRecord)> = config
        .identities
        .iter()
        .flat_map(|spec| spec.grid.iter().map(move |record| (spec, record)))
        .collect();
    let run = |&(spec, record): &(&IdentitySpec, &ParamRecord)| evaluate(&spec.id, record, spec.tolerance);
    if parallel {
        jobs.par_iter().map(run).collect()
    } else {
        jobs.iter().map(run).collect()
    }
}

/// Evaluates one identity at one parameter record. Numerical failures give
/// a failed report; only malformed input is an error.
pub fn evaluate(id: &str, params: &ParamRecord, tolerance: f64) -> Result<IdentityReport> {
    let identity = lookup(id)?;
    identity
        .keys
        .check(params)
        .map_err(|msg| Error::Invalid(format!("identity {id}: {msg}")))?;
    let (lhs, rhs) = match (identity.eval)(params) {
        Ok(pair) => pair,
        Err(Error::Invalid(msg)) => return Err(Error::Invalid(format!("identity {id}: {msg}"))),
        Err(_) => (f64::NAN, f64::NAN),
    };
    Ok(IdentityReport::new(id, lhs, rhs, tolerance, identity.source, params.clone()))
}

/// Ids of every registered identity.
pub fn identity_ids() -> impl Iterator<Item = &'static str> {
    REGISTRY.iter().map(|i| i.id)
}

enum Keys {
    Fixed(&'static [&'static str]),
    /// `a1.., b1..` plus the listed scalars.
    Hypergeometric(&'static [&'static str]),
}

impl Keys {
    fn check(&self, record: &ParamRecord) -> std::result::Result<(), String> {
        let extra = match self {
            Keys::Fixed(keys) | Keys::Hypergeometric(keys) => *keys,
        };
        for key in extra {
            if !record.contains_key(*key) {
                return Err(format!("missing parameter {key}"));
            }
        }
        for (key, value) in record {
            if !value.is_finite() {
                return Err(format!("parameter {key} is not finite"));
            }
            let known = extra.contains(&key.as_str())
                || matches!(self, Keys::Hypergeometric(_)) && list_index(key).is_some();
            if !known {
                return Err(format!("unknown parameter {key}"));
            }
        }
        if matches!(self, Keys::Hypergeometric(_)) {
            for prefix in ['a', 'b'] {
                let n = record.keys().filter(|k| list_index(k).map(|(p, _)| p) == Some(prefix)).count();
                for i in 1..=n {
                    if !record.contains_key(&format!("{prefix}{i}")) {
                        return Err(format!("parameter list {prefix} is not numbered 1..{n}"));
                    }
                }
            }
        }
        Ok(())
    }
}

fn list_index(key: &str) -> Option<(char, usize)> {
    let prefix = key.chars().next()?;
    if prefix != 'a' && prefix != 'b' {
        return None;
    }
    let index: usize = key[1..].parse().ok()?;
    (index >= 1).then_some((prefix, index))
}

type Evaluator = fn(&ParamRecord) -> Result<(f64, f64)>;

struct Identity {
    id: &'static str,
    keys: Keys,
    source: LhsSource,
    eval: Evaluator,
}

fn lookup(id: &str) -> Result<&'static Identity> {
    REGISTRY
        .iter()
        .find(|i| i.id == id)
        .ok_or_else(|| Error::Invalid(format!("unknown identity {id}")))
}

fn ctl() -> SeriesControl {
    SeriesControl::default()
}

fn hyper(p: &ParamRecord) -> HypergeometricParams {
    let list = |prefix: char| -> Vec<f64> {
        let mut items: Vec<(usize, f64)> = p
            .iter()
            .filter_map(|(k, &v)| match list_index(k) {
                Some((c, i)) if c == prefix => Some((i, v)),
                _ => None,
            })
            .collect();
        items.sort_by_key(|&(i, _)| i);
        items.into_iter().map(|(_, v)| v).collect()
    };
    HypergeometricParams::new(list('a'), list('b'))
}

fn count(p: &ParamRecord, key: &str) -> Result<u64> {
    let v = p[key];
    if v >= 0.0 && v.fract() == 0.0 && v <= u32::MAX as f64 {
        Ok(v as u64)
    } else {
        Err(Error::Invalid(format!("{key} must be a non-negative integer, got {v}")))
    }
}

fn integer(p: &ParamRecord, key: &str) -> Result<i64> {
    let v = p[key];
    if v.fract() == 0.0 && v.abs() <= u32::MAX as f64 {
        Ok(v as i64)
    } else {
        Err(Error::Invalid(format!("{key} must be an integer, got {v}")))
    }
}

fn pfq(upper: &[f64], lower: &[f64], x: f64) -> Result<f64> {
    Ok(eval_pfq(&HypergeometricParams::new(upper, lower), x, ctl())?.value)
}

fn residual(report: odes::OdeResidualReport) -> (f64, f64) {
    (report.normalized_residual, 0.0)
}

const REGISTRY: &[Identity] = &[
    Identity {
        id: "mellin",
        keys: Keys::Fixed(&["a", "b", "c", "nu"]),
        source: LhsSource::Quadrature,
        eval: |p| {
            let rhs = integrals::mellin_integral(p["a"], p["b"], p["c"], p["nu"])?;
            Ok((oracle::mellin_lhs(p["a"], p["b"], p["c"], p["nu"])?, rhs))
        },
    },
    Identity {
        id: "mellin_power",
        keys: Keys::Fixed(&["a", "b", "c", "mu", "nu"]),
        source: LhsSource::Quadrature,
        eval: |p| {
            let rhs = integrals::mellin_power_integral(p["a"], p["b"], p["c"], p["mu"], p["nu"])?;
            Ok((oracle::mellin_power_lhs(p["a"], p["b"], p["c"], p["mu"], p["nu"])?, rhs))
        },
    },
    Identity {
        id: "gaussian_pfq",
        keys: Keys::Hypergeometric(&["alpha", "beta"]),
        source: LhsSource::Quadrature,
        eval: |p| {
            let params = hyper(p);
            Ok((
                oracle::gaussian_pfq_lhs(&params, p["alpha"], p["beta"])?,
                integrals::gaussian_integral_pfq(&params, p["alpha"], p["beta"])?.eval(ctl())?,
            ))
        },
    },
    Identity {
        id: "gaussian_cosine",
        keys: Keys::Fixed(&["alpha", "beta"]),
        source: LhsSource::Quadrature,
        eval: |p| {
            Ok((
                oracle::gaussian_cosine_lhs(p["alpha"], p["beta"])?,
                integrals::gaussian_cosine_integral(p["alpha"], p["beta"])?,
            ))
        },
    },
    Identity {
        id: "fox_wright_gaussian",
        keys: Keys::Fixed(&["a", "b", "c", "alpha", "beta"]),
        source: LhsSource::Series,
        eval: |p| {
            let params = HypergeometricParams::new([p["a"]], [p["b"], p["c"]]);
            Ok((
                integrals::gaussian_integral_pfq(&params, p["alpha"], p["beta"])?.eval(ctl())?,
                integrals::fox_wright_gaussian_form(p["a"], p["b"], p["c"], p["alpha"], p["beta"])?,
            ))
        },
    },
    Identity {
        id: "geometric_gaussian",
        keys: Keys::Fixed(&["alpha", "beta"]),
        source: LhsSource::Quadrature,
        eval: |p| {
            let rhs = integrals::geometric_gaussian_integral(p["alpha"], p["beta"])?;
            Ok((oracle::geometric_lhs(p["alpha"], p["beta"])?, rhs))
        },
    },
    Identity {
        id: "quadratic_arg",
        keys: Keys::Fixed(&["a", "b", "c", "alpha", "beta"]),
        source: LhsSource::Quadrature,
        eval: |p| {
            Ok((
                oracle::quadratic_arg_lhs(p["a"], p["b"], p["c"], p["alpha"], p["beta"])?,
                integrals::gaussian_quadratic_arg_integral(p["a"], p["b"], p["c"], p["alpha"], p["beta"], ctl())?,
            ))
        },
    },
    Identity {
        id: "quadratic_arg_exponential",
        keys: Keys::Fixed(&["a", "alpha", "beta"]),
        source: LhsSource::Quadrature,
        eval: |p| {
            let (alpha, beta) = (p["alpha"], p["beta"]);
            let lhs = integrate(
                |x| (-alpha * x * x + beta * x).exp(),
                Domain::RealLine,
                oracle::ORACLE_REL_TOL,
                1e-300,
            )?
            .value;
            let symbol = UmbralSymbol::new([p["a"]], [p["a"]]);
            Ok((lhs, integrals::gaussian_quadratic_arg_integral_symbol(&symbol, alpha, beta, ctl())?))
        },
    },
    Identity {
        id: "weighted_exp",
        keys: Keys::Fixed(&["a", "b", "c", "alpha", "x"]),
        source: LhsSource::Quadrature,
        eval: |p| {
            Ok((
                oracle::weighted_exp_lhs(p["a"], p["b"], p["c"], p["alpha"], p["x"])?,
                integrals::weighted_exp_integral(p["a"], p["b"], p["c"], p["alpha"], p["x"], ctl())?,
            ))
        },
    },
    Identity {
        id: "bessel_squared_gaussian",
        keys: Keys::Fixed(&["alpha"]),
        source: LhsSource::Quadrature,
        eval: |p| {
            Ok((
                oracle::bessel_squared_lhs(p["alpha"])?,
                integrals::bessel_squared_gaussian_integral(p["alpha"], ctl())?,
            ))
        },
    },
    Identity {
        id: "euler_1f1",
        keys: Keys::Fixed(&["a", "b", "x"]),
        source: LhsSource::Quadrature,
        eval: |p| {
            Ok((
                integrals::euler_integral_1f1(p["a"], p["b"], p["x"])?,
                pfq(&[p["a"]], &[p["b"]], p["x"])?,
            ))
        },
    },
    Identity {
        id: "euler_2f1",
        keys: Keys::Fixed(&["a", "b", "c", "x"]),
        source: LhsSource::Quadrature,
        eval: |p| {
            Ok((
                integrals::euler_integral_2f1(p["a"], p["b"], p["c"], p["x"])?,
                pfq(&[p["a"], p["b"]], &[p["c"]], p["x"])?,
            ))
        },
    },
    Identity {
        id: "kummer_gauss",
        keys: Keys::Fixed(&["a", "b", "alpha", "beta"]),
        source: LhsSource::Quadrature,
        eval: |p| {
            let (a, b) = (p["a"], p["b"]);
            let z = p["beta"] * p["beta"] / (4.0 * p["alpha"]);
            Ok((
                integrals::kummer_gauss_transform(a, b, p["alpha"], p["beta"])?,
                pfq(&[a / 2.0, (a + 1.0) / 2.0], &[b / 2.0, (b + 1.0) / 2.0], z)?,
            ))
        },
    },
    Identity {
        id: "power_antiderivative",
        keys: Keys::Fixed(&["a", "b", "c", "alpha", "x"]),
        source: LhsSource::Series,
        eval: |p| {
            let (alpha, x) = (p["alpha"], p["x"]);
            let (pre, extended) = power_weighted_antiderivative(&HypergeometricParams::new([p["a"], p["b"]], [p["c"]]), alpha)?;
            let f = pfq_jet(&extended, x, ctl())?;
            // d/dx [s x^{α+1} F(x)]
            let lhs = pre.scale * (pre.exponent * x.powf(alpha) * f.value + x.powf(pre.exponent) * f.d1);
            Ok((lhs, x.powf(alpha) * pfq(&[p["a"], p["b"]], &[p["c"]], x)?))
        },
    },
    Identity {
        id: "antiderivative_roundtrip",
        keys: Keys::Hypergeometric(&["x"]),
        source: LhsSource::Series,
        eval: |p| {
            let params = hyper(p);
            let (k1, up) = antidifferentiate_pfq(&params)?;
            let (k2, back) = differentiate_pfq(&up)?;
            if back != params {
                return Ok((f64::NAN, eval_pfq(&params, p["x"], ctl())?.value));
            }
            Ok((k1 * k2 * eval_pfq(&back, p["x"], ctl())?.value, eval_pfq(&params, p["x"], ctl())?.value))
        },
    },
    Identity {
        id: "derivative_shift",
        keys: Keys::Hypergeometric(&["x"]),
        source: LhsSource::Series,
        eval: |p| {
            let params = hyper(p);
            let (k, shifted) = differentiate_pfq(&params)?;
            Ok((
                series_derivative_pfq(&params, p["x"], 1, ctl())?,
                k * eval_pfq(&shifted, p["x"], ctl())?.value,
            ))
        },
    },
    Identity {
        id: "umbral_series",
        keys: Keys::Hypergeometric(&["x"]),
        source: LhsSource::Series,
        eval: |p| {
            let params = hyper(p);
            Ok((
                umbral_exp_eval(&UmbralSymbol::from_params(&params), p["x"], ctl())?.value,
                eval_pfq(&params, p["x"], ctl())?.value,
            ))
        },
    },
    Identity {
        id: "appell_slice",
        keys: Keys::Fixed(&["alpha", "gamma", "beta", "beta_prime", "x"]),
        source: LhsSource::Series,
        eval: |p| {
            Ok((
                eval_appell(p["alpha"], p["gamma"], p["beta"], p["beta_prime"], p["x"], 0.0, ctl())?.value,
                pfq(&[p["alpha"], p["beta"]], &[p["gamma"]], p["x"])?,
            ))
        },
    },
    Identity {
        id: "tricomi_eigen",
        keys: Keys::Fixed(&["nu", "lambda", "x"]),
        source: LhsSource::Series,
        eval: |p| Ok(residual(odes::tricomi_eigen_residual(p["nu"], p["lambda"], p["x"], ctl())?)),
    },
    Identity {
        id: "kummer_ode",
        keys: Keys::Fixed(&["a", "b", "x"]),
        source: LhsSource::Series,
        eval: |p| Ok(residual(odes::kummer_ode_residual(p["a"], p["b"], p["x"], ctl())?)),
    },
    Identity {
        id: "kummer_contiguous",
        keys: Keys::Fixed(&["a", "b", "x"]),
        source: LhsSource::Series,
        eval: |p| Ok(residual(odes::kummer_contiguous_residual(p["a"], p["b"], p["x"], ctl())?)),
    },
    Identity {
        id: "gauss_ode",
        keys: Keys::Fixed(&["a", "b", "c", "x"]),
        source: LhsSource::Series,
        eval: |p| Ok(residual(odes::gauss_ode_residual(p["a"], p["b"], p["c"], p["x"], ctl())?)),
    },
    Identity {
        id: "gauss_factored",
        keys: Keys::Fixed(&["a", "b", "c", "x"]),
        source: LhsSource::Series,
        eval: |p| {
            let (a, b, c, x) = (p["a"], p["b"], p["c"], p["x"]);
            let f = pfq_jet(&HypergeometricParams::new([a, b], [c]), x, ctl())?;
            Ok(residual(odes::gauss_factored_residual_of(a, b, c, x, f)))
        },
    },
    Identity {
        id: "cosine_ode",
        keys: Keys::Fixed(&["x"]),
        source: LhsSource::Series,
        eval: |p| Ok(residual(odes::cosine_ode_residual(p["x"], ctl())?)),
    },
    Identity {
        id: "landau_contiguous",
        keys: Keys::Fixed(&["lambda", "m_l", "xi"]),
        source: LhsSource::Series,
        eval: |p| {
            let landau = LandauParams::new(p["lambda"], p["m_l"])?;
            Ok(residual(odes::kummer_contiguous_residual(landau.a(), landau.b(), p["xi"], ctl())?))
        },
    },
    Identity {
        id: "tricomi_bessel",
        keys: Keys::Fixed(&["x"]),
        source: LhsSource::Series,
        eval: |p| {
            Ok((
                special::tricomi_c(0.0, p["x"], ctl())?.value,
                special::bessel_j0(2.0 * p["x"].sqrt(), ctl())?.value,
            ))
        },
    },
    Identity {
        id: "tricomi_reduction",
        keys: Keys::Fixed(&["b", "x"]),
        source: LhsSource::Series,
        eval: |p| {
            let b = p["b"];
            Ok((
                special::tricomi_c(b - 1.0, p["x"], ctl())?.value,
                pfq(&[], &[b], -p["x"])? / gamma(b),
            ))
        },
    },
    Identity {
        id: "j0_squared",
        keys: Keys::Fixed(&["x"]),
        source: LhsSource::Series,
        eval: |p| {
            Ok((
                special::j0_squared(p["x"], ctl())?.value,
                special::bessel_j0(p["x"], ctl())?.value.powi(2),
            ))
        },
    },
    Identity {
        id: "cos_gauss_transform",
        keys: Keys::Fixed(&["x"]),
        source: LhsSource::Series,
        eval: |p| {
            Ok((
                special::gauss_transform_cos_half(p["x"], ctl())?.value,
                special::cos_hyp(p["x"], ctl())?.value,
            ))
        },
    },
    Identity {
        id: "trig_unit",
        keys: Keys::Fixed(&["x"]),
        source: LhsSource::Series,
        eval: |p| {
            let s = special::sin_hyp(p["x"], ctl())?.value;
            let c = special::cos_hyp(p["x"], ctl())?.value;
            Ok((s * s + c * c, 1.0))
        },
    },
    Identity {
        id: "pochhammer_addition",
        keys: Keys::Fixed(&["k", "d", "r"]),
        source: LhsSource::Series,
        eval: |p| {
            let r = count(p, "r")?;
            Ok((pochhammer(p["k"] + p["d"], r as f64)?, pochhammer_binomial(p["k"], p["d"], r)?))
        },
    },
    Identity {
        id: "pochhammer_split",
        keys: Keys::Fixed(&["d", "m", "n"]),
        source: LhsSource::Series,
        eval: |p| {
            let (m, n) = (integer(p, "m")?, integer(p, "n")?);
            Ok((pochhammer(p["d"], (m + n) as f64)?, pochhammer_split(p["d"], m, n)?))
        },
    },
    Identity {
        id: "pochhammer_negate",
        keys: Keys::Fixed(&["d", "r"]),
        source: LhsSource::Series,
        eval: |p| {
            let r = count(p, "r")?;
            Ok((pochhammer(p["d"], -(r as f64))?, pochhammer_negate(p["d"], r)?))
        },
    },
    Identity {
        id: "pochhammer_duplicate",
        keys: Keys::Fixed(&["d", "r"]),
        source: LhsSource::Series,
        eval: |p| {
            let r = count(p, "r")?;
            Ok((pochhammer(p["d"], 2.0 * r as f64)?, pochhammer_duplicate(p["d"], r)?))
        },
    },
    Identity {
        id: "pochhammer_half_shift",
        keys: Keys::Fixed(&["r"]),
        source: LhsSource::Series,
        eval: |p| {
            let r = count(p, "r")? as f64;
            Ok((pochhammer(1.0, r - 0.5)?, PI.sqrt() * pochhammer(0.5, r)?))
        },
    },
    Identity {
        id: "pochhammer_falling",
        keys: Keys::Fixed(&["r", "s"]),
        source: LhsSource::Series,
        eval: |p| {
            let (r, s) = (count(p, "r")?, count(p, "s")?);
            Ok((pochhammer(-(r as f64), s as f64)?, pochhammer_falling(r, s).value))
        },
    },
    Identity {
        id: "pochhammer_paths",
        keys: Keys::Fixed(&["d", "r"]),
        source: LhsSource::Series,
        eval: |p| {
            let r = count(p, "r")?;
            Ok((via_product(p["d"], r)?, via_log_gamma(p["d"], r as f64)?))
        },
    },
];
