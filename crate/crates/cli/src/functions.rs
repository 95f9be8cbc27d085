//! Functions reachable from `eval` and `table`.

use clap::{Args, ValueEnum};
use hyperumbral::integrals::{self, euler_integral_1f1, euler_integral_2f1, kummer_gauss_transform};
use hyperumbral::pochhammer::pochhammer;
use hyperumbral::special::{self, LandauParams};
use hyperumbral::umbral::{umbral_exp_eval, UmbralSymbol};
use hyperumbral::{eval_appell, eval_fox_wright, eval_pfq, EvalResult, FoxWrightParams, HypergeometricParams, SeriesControl};

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
pub enum Function {
    /// pFq(upper; lower; x)
    Pfq,
    /// Fox–Wright Ψ with `value:step` pairs in --upper and --lower
    FoxWright,
    /// Appéll double series F(alpha, gamma; beta, beta_prime; x, y)
    Appell,
    /// pFq summed from the Pochhammer moments
    Umbral,
    /// (d)_r
    Pochhammer,
    /// ∫₀^∞ t^{ν−1} 2F1(a, b; c; −t) dt
    Mellin,
    /// ∫₀^∞ t^{ν−1} 2F1(a, b; c; −t^μ) dt
    MellinPower,
    /// ∫ e^{−αx²} pFq(upper; lower; βx) dx
    GaussianPfq,
    /// ∫ e^{−αx²} cos(√(βx)) dx
    GaussianCosine,
    /// ∫ 1F2(a; b, c; −αx² + βx) dx
    QuadraticArg,
    /// ∫ dz / (1 + αz² − βz)
    Geometric,
    /// ∫₀^x t^α e^{−t} 2F1(a, b; c; t) dt
    WeightedExp,
    /// ∫ e^{−αx²} J₀(√x)² dx
    BesselSquaredGaussian,
    /// Gaussian transform of 1F2 written as a Fox–Wright function
    FoxWrightGaussian,
    /// 1F1(a; b; x) from its Euler integral
    #[value(name = "euler_1f1")]
    Euler1F1,
    /// 2F1(a, b; c; x) from its Euler integral
    #[value(name = "euler_2f1")]
    Euler2F1,
    /// ∫ e^{−αx²} 1F1(a; b; βx) dx
    KummerGauss,
    /// J₀(x)
    BesselJ0,
    /// C_ν(x)
    Tricomi,
    /// cos x from 0F1
    CosHyp,
    /// sin x from 0F1
    SinHyp,
    /// cos_{1/2}(x)
    CosHalf,
    /// Gaussian transform of cos_{1/2}
    CosHalfGauss,
    /// J₀(x)²
    J0Squared,
    /// Landau radial function at ξ = x
    Landau,
}

/// Parameters shared by every function. Each function reads the subset it
/// needs and ignores the rest.
#[derive(Debug, Clone, Default, Args)]
pub struct FunctionArgs {
    /// Upper parameters, comma separated (`value:step` pairs for fox_wright)
    #[arg(long, allow_hyphen_values = true)]
    pub upper: Option<String>,
    /// Lower parameters, comma separated (`value:step` pairs for fox_wright)
    #[arg(long, allow_hyphen_values = true)]
    pub lower: Option<String>,
    #[arg(long, allow_negative_numbers = true)]
    pub x: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub y: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub a: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub b: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub c: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub d: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub r: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub nu: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub mu: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub alpha: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub beta: Option<f64>,
    #[arg(long = "beta-prime", allow_negative_numbers = true)]
    pub beta_prime: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub gamma: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub lambda: Option<f64>,
    /// Magnetic quantum number of a Landau state
    #[arg(long, allow_negative_numbers = true)]
    pub ml: Option<f64>,
}

impl FunctionArgs {
    /// Overwrites the scalar named `name`; used by `table --var`.
    pub fn set(&mut self, name: &str, value: f64) -> Result<(), CliError> {
        let slot = match name {
            "x" => &mut self.x,
            "y" => &mut self.y,
            "a" => &mut self.a,
            "b" => &mut self.b,
            "c" => &mut self.c,
            "d" => &mut self.d,
            "r" => &mut self.r,
            "nu" => &mut self.nu,
            "mu" => &mut self.mu,
            "alpha" => &mut self.alpha,
            "beta" => &mut self.beta,
            "beta_prime" | "beta-prime" => &mut self.beta_prime,
            "gamma" => &mut self.gamma,
            "lambda" => &mut self.lambda,
            "ml" => &mut self.ml,
            _ => return Err(CliError::Usage(format!("unknown variable {name:?}"))),
        };
        *slot = Some(value);
        Ok(())
    }
}

fn need(value: Option<f64>, flag: &str) -> Result<f64, CliError> {
    value.ok_or_else(|| CliError::Usage(format!("missing --{flag}")))
}

fn parse_list(text: Option<&str>) -> Result<Vec<f64>, CliError> {
    let Some(text) = text else { return Ok(Vec::new()) };
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<f64>()
                .map_err(|_| CliError::Usage(format!("cannot parse parameter {s:?}")))
        })
        .collect()
}

fn parse_pairs(text: Option<&str>) -> Result<Vec<(f64, f64)>, CliError> {
    let Some(text) = text else { return Ok(Vec::new()) };
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            let (v, step) = s.split_once(':').unwrap_or((s, "1"));
            match (v.trim().parse::<f64>(), step.trim().parse::<f64>()) {
                (Ok(v), Ok(step)) => Ok((v, step)),
                _ => Err(CliError::Usage(format!("cannot parse pair {s:?}"))),
            }
        })
        .collect()
}

fn params(args: &FunctionArgs) -> Result<HypergeometricParams, CliError> {
    Ok(HypergeometricParams::new(
        parse_list(args.upper.as_deref())?,
        parse_list(args.lower.as_deref())?,
    ))
}

/// A computed value and, for series, how it was truncated.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Evaluation {
    pub value: f64,
    pub terms_used: Option<usize>,
    pub tail_estimate: Option<f64>,
}

impl From<EvalResult> for Evaluation {
    fn from(r: EvalResult) -> Self {
        Self {
            value: r.value,
            terms_used: Some(r.terms_used),
            tail_estimate: Some(r.tail_estimate),
        }
    }
}

impl From<f64> for Evaluation {
    fn from(value: f64) -> Self {
        Self {
            value,
            terms_used: None,
            tail_estimate: None,
        }
    }
}

pub fn evaluate(function: Function, args: &FunctionArgs, control: SeriesControl) -> Result<Evaluation, CliError> {
    use Function::*;
    let x = || need(args.x, "x");
    let a = || need(args.a, "a");
    let b = || need(args.b, "b");
    let c = || need(args.c, "c");
    let alpha = || need(args.alpha, "alpha");
    let beta = || need(args.beta, "beta");
    let nu = || need(args.nu, "nu");
    let out: Evaluation = match function {
        Pfq => eval_pfq(&params(args)?, x()?, control)?.into(),
        FoxWright => {
            let p = FoxWrightParams::new(
                parse_pairs(args.upper.as_deref())?,
                parse_pairs(args.lower.as_deref())?,
            )?;
            eval_fox_wright(&p, x()?, control)?.into()
        }
        Appell => eval_appell(
            need(args.alpha, "alpha")?,
            need(args.gamma, "gamma")?,
            beta()?,
            need(args.beta_prime, "beta-prime")?,
            x()?,
            need(args.y, "y")?,
            control,
        )?
        .into(),
        Umbral => umbral_exp_eval(&UmbralSymbol::from_params(&params(args)?), x()?, control)?.into(),
        Pochhammer => pochhammer(need(args.d, "d")?, need(args.r, "r")?)?.into(),
        Mellin => integrals::mellin_integral(a()?, b()?, c()?, nu()?)?.into(),
        MellinPower => integrals::mellin_power_integral(a()?, b()?, c()?, need(args.mu, "mu")?, nu()?)?.into(),
        GaussianPfq => integrals::gaussian_integral_pfq(&params(args)?, alpha()?, beta()?)?
            .eval(control)?
            .into(),
        GaussianCosine => integrals::gaussian_cosine_integral(alpha()?, beta()?)?.into(),
        QuadraticArg => integrals::gaussian_quadratic_arg_integral(a()?, b()?, c()?, alpha()?, beta()?, control)?.into(),
        Geometric => integrals::geometric_gaussian_integral(alpha()?, beta()?)?.into(),
        WeightedExp => integrals::weighted_exp_integral(a()?, b()?, c()?, alpha()?, x()?, control)?.into(),
        BesselSquaredGaussian => integrals::bessel_squared_gaussian_integral(alpha()?, control)?.into(),
        FoxWrightGaussian => integrals::fox_wright_gaussian_form(a()?, b()?, c()?, alpha()?, beta()?)?.into(),
        Euler1F1 => euler_integral_1f1(a()?, b()?, x()?)?.into(),
        Euler2F1 => euler_integral_2f1(a()?, b()?, c()?, x()?)?.into(),
        KummerGauss => kummer_gauss_transform(a()?, b()?, alpha()?, beta()?)?.into(),
        BesselJ0 => special::bessel_j0(x()?, control)?.into(),
        Tricomi => special::tricomi_c(nu()?, x()?, control)?.into(),
        CosHyp => special::cos_hyp(x()?, control)?.into(),
        SinHyp => special::sin_hyp(x()?, control)?.into(),
        CosHalf => special::cos_half(x()?, control)?.into(),
        CosHalfGauss => special::gauss_transform_cos_half(x()?, control)?.into(),
        J0Squared => special::j0_squared(x()?, control)?.into(),
        Landau => {
            let p = LandauParams::new(need(args.lambda, "lambda")?, need(args.ml, "ml")?)?;
            special::landau_radial(p, x()?, control)?.into()
        }
    };
    Ok(out)
}
