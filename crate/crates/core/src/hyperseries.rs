//! Truncated series for `pFq`, the Fox–Wright `Ψ` function and the
//! two-variable Appéll–Kampé de Fériet function.
//!
//! `pFq` terms are produced by the rational recurrence
//! `t_{r+1} = t_r · ∏(a_i + r) / ∏(b_j + r) · x / (r + 1)`. Fox–Wright terms
//! have no such recurrence for general step sizes and are built in log space.
//!
//! Summation stops once two consecutive terms fall below `rel_tol · |sum|`
//! after `min_terms` terms *and* a geometric bound on the remaining tail is
//! below the same threshold. The second condition keeps slowly converging
//! unit-disk series from stopping early.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gamma::{ln_gamma, near_integer, nonpositive_integer};

/// Sums below this magnitude count as converged regardless of `rel_tol`.
pub const ABSOLUTE_FLOOR: f64 = 1e-300;

/// Upper and lower parameter lists of a `pFq`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HypergeometricParams {
    pub upper: Vec<f64>,
    pub lower: Vec<f64>,
}

impl HypergeometricParams {
    pub fn new(upper: impl Into<Vec<f64>>, lower: impl Into<Vec<f64>>) -> Self {
        Self {
            upper: upper.into(),
            lower: lower.into(),
        }
    }

    pub fn p(&self) -> usize {
        self.upper.len()
    }

    pub fn q(&self) -> usize {
        self.lower.len()
    }

    /// Smallest `n` such that some upper parameter equals `-n`.
    pub fn terminating_degree(&self) -> Option<u64> {
        self.upper.iter().filter_map(|&a| nonpositive_integer(a)).min()
    }

    pub(crate) fn check_finite(&self) -> Result<()> {
        if self.upper.iter().chain(&self.lower).all(|v| v.is_finite()) {
            Ok(())
        } else {
            Err(Error::NonFinite(format!("parameters {self:?}")))
        }
    }

    /// Errors when a lower parameter `-m` is reached before the series
    /// terminates.
    pub(crate) fn check_lower_poles(&self) -> Result<()> {
        let stop = self.terminating_degree();
        for &b in &self.lower {
            if let Some(m) = nonpositive_integer(b) {
                if stop.is_none_or(|n| n > m) {
                    return Err(Error::pole(format!(
                        "lower parameter {b} is a non-positive integer"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Parameter pairs `(a, A)` and `(b, B)` of a Fox–Wright `Ψ` function.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FoxWrightParams {
    pub upper: Vec<(f64, f64)>,
    pub lower: Vec<(f64, f64)>,
}

impl FoxWrightParams {
    pub fn new(upper: impl Into<Vec<(f64, f64)>>, lower: impl Into<Vec<(f64, f64)>>) -> Result<Self> {
        let params = Self {
            upper: upper.into(),
            lower: lower.into(),
        };
        for &(v, step) in params.upper.iter().chain(&params.lower) {
            if !v.is_finite() || !step.is_finite() {
                return Err(Error::NonFinite(format!("Fox–Wright pair ({v}, {step})")));
            }
            if step <= 0.0 {
                return Err(Error::domain(format!("Fox–Wright step {step} must be positive")));
            }
        }
        Ok(params)
    }
}

/// Truncation policy for every series in the crate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SeriesControl {
    pub rel_tol: f64,
    pub min_terms: usize,
    pub max_terms: usize,
}

impl Default for SeriesControl {
    fn default() -> Self {
        Self {
            rel_tol: 1e-14,
            min_terms: 8,
            max_terms: 10_000,
        }
    }
}

impl SeriesControl {
    pub fn new(rel_tol: f64, min_terms: usize, max_terms: usize) -> Result<Self> {
        if !(rel_tol > 0.0 && rel_tol < 1.0) {
            return Err(Error::domain(format!("rel_tol {rel_tol} outside (0, 1)")));
        }
        if min_terms > max_terms {
            return Err(Error::domain(format!(
                "min_terms {min_terms} exceeds max_terms {max_terms}"
            )));
        }
        Ok(Self {
            rel_tol,
            min_terms,
            max_terms,
        })
    }

    pub fn with_rel_tol(mut self, rel_tol: f64) -> Self {
        self.rel_tol = rel_tol;
        self
    }
}

/// Outcome of a truncated series evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EvalResult {
    pub value: f64,
    pub terms_used: usize,
    pub tail_estimate: f64,
    pub converged: bool,
}

impl EvalResult {
    pub(crate) fn exact(value: f64, terms_used: usize) -> Self {
        Self {
            value,
            terms_used,
            tail_estimate: 0.0,
            converged: true,
        }
    }
}

/// Convergence class of a `pFq` series.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Convergence {
    Entire,
    UnitDisk,
    Terminating(u64),
    Divergent,
}

/// Running sum with the crate-wide stopping rule.
#[derive(Debug)]
pub(crate) struct SeriesSum {
    control: SeriesControl,
    sum: f64,
    terms: usize,
    small_run: usize,
    prev_abs: f64,
    tail: f64,
    ratio_floor: f64,
}

impl SeriesSum {
    /// `first` is the `r = 0` term.
    pub(crate) fn new(control: SeriesControl, first: f64) -> Self {
        Self {
            control,
            sum: first,
            terms: 1,
            small_run: 0,
            prev_abs: first.abs(),
            tail: f64::INFINITY,
            ratio_floor: 0.0,
        }
    }

    /// Lower bound on the asymptotic term ratio, used in the tail bound.
    pub(crate) fn with_ratio_floor(mut self, floor: f64) -> Self {
        self.ratio_floor = floor;
        self
    }

    /// Adds a term; `Ok(true)` once the stopping rule is met.
    pub(crate) fn push(&mut self, term: f64) -> Result<bool> {
        if !term.is_finite() {
            return Err(Error::NonFinite(format!("series term {} is {term}", self.terms)));
        }
        self.sum += term;
        self.terms += 1;
        let a = term.abs();
        let threshold = self.control.rel_tol * self.sum.abs();
        let small = a <= threshold || a <= ABSOLUTE_FLOOR;
        self.small_run = if small { self.small_run + 1 } else { 0 };
        let ratio = if self.prev_abs > 0.0 {
            (a / self.prev_abs).max(self.ratio_floor)
        } else if a == 0.0 {
            self.ratio_floor
        } else {
            f64::INFINITY
        };
        self.tail = if a == 0.0 && self.ratio_floor == 0.0 {
            0.0
        } else if ratio < 1.0 {
            a * ratio / (1.0 - ratio)
        } else {
            f64::INFINITY
        };
        self.prev_abs = a;
        let tail_ok = self.tail <= threshold || a <= ABSOLUTE_FLOOR;
        if self.terms >= self.control.min_terms && self.small_run >= 2 && tail_ok {
            return Ok(true);
        }
        if self.terms >= self.control.max_terms {
            return Err(Error::NoConvergence {
                iterations: self.terms,
                estimate: self.sum,
                error: self.tail.min(a),
            });
        }
        Ok(false)
    }

    pub(crate) fn finish(self) -> EvalResult {
        let tail = if self.tail.is_finite() { self.tail } else { self.prev_abs };
        EvalResult {
            value: self.sum,
            terms_used: self.terms,
            tail_estimate: tail,
            converged: tail <= self.control.rel_tol * self.sum.abs() || self.sum.abs() < ABSOLUTE_FLOOR,
        }
    }

    /// The series ended on an exactly zero term.
    pub(crate) fn finish_exact(self) -> EvalResult {
        EvalResult::exact(self.sum, self.terms)
    }
}

/// Power series `Σ_{r ≥ start} c_r x^r` described by its first nonzero
/// coefficient and the ratio `c_{r+1} / c_r`.
pub(crate) struct PowerSeries<R: Fn(u64) -> f64> {
    pub start: u64,
    pub first: f64,
    pub ratio: R,
    /// Lower bound on `|t_{r+1} / t_r|` at large `r`, per unit `|x|`.
    pub radius_floor: f64,
}

impl<R: Fn(u64) -> f64> PowerSeries<R> {
    /// Termwise `order`-th derivative at `x`. A zero ratio ends the series
    /// exactly.
    pub(crate) fn derivative(&self, x: f64, order: u64, control: SeriesControl) -> Result<EvalResult> {
        // advance to the first index that survives differentiation
        let mut r = self.start;
        let mut coeff = self.first;
        while r < order {
            coeff *= (self.ratio)(r);
            r += 1;
            if coeff == 0.0 {
                return Ok(EvalResult::exact(0.0, 1));
            }
        }
        // t_r = c_r r!/(r-k)! x^{r-k}
        let falling: f64 = (0..order).map(|j| (r - j) as f64).product();
        let mut term = coeff * falling * x.powi((r - order) as i32);
        if x == 0.0 {
            let v = if r == order { term } else { 0.0 };
            return Ok(EvalResult::exact(v, 1));
        }
        let mut acc = SeriesSum::new(control, term).with_ratio_floor(self.radius_floor * x.abs());
        loop {
            let q = (self.ratio)(r);
            if q == 0.0 {
                return Ok(acc.finish_exact());
            }
            term *= q * (r + 1) as f64 / (r + 1 - order) as f64 * x;
            r += 1;
            if acc.push(term)? {
                return Ok(acc.finish());
            }
        }
    }
}

/// `k`-th derivative of `pFq(params; x)` summed termwise.
pub(crate) fn pfq_derivative(
    params: &HypergeometricParams,
    x: f64,
    order: u64,
    control: SeriesControl,
) -> Result<EvalResult> {
    params.check_finite()?;
    if !x.is_finite() {
        return Err(Error::NonFinite(format!("argument {x}")));
    }
    params.check_lower_poles()?;
    let radius_floor = match classify_convergence(params) {
        Convergence::Divergent if x != 0.0 => {
            return Err(Error::domain(format!(
                "{}F{} series diverges for x = {x}",
                params.p(),
                params.q()
            )))
        }
        Convergence::UnitDisk if x.abs() >= 1.0 => {
            return Err(Error::domain(format!(
                "{}F{} series requires |x| < 1, got {x}",
                params.p(),
                params.q()
            )))
        }
        Convergence::UnitDisk => 1.0,
        _ => 0.0,
    };
    let upper: Vec<f64> = params.upper.iter().map(|&a| snap(a)).collect();
    let lower: Vec<f64> = params.lower.iter().map(|&b| snap(b)).collect();
    let series = PowerSeries {
        start: 0,
        first: 1.0,
        ratio: |r: u64| {
            let rf = r as f64;
            let num: f64 = upper.iter().map(|a| a + rf).product();
            if num == 0.0 {
                return 0.0;
            }
            num / lower.iter().map(|b| b + rf).product::<f64>() / (rf + 1.0)
        },
        radius_floor,
    };
    series.derivative(x, order, control)
}

/// Classifies the series of `params` by the standard `p` versus `q + 1` rule;
/// a non-positive integer upper parameter overrides the count.
pub fn classify_convergence(params: &HypergeometricParams) -> Convergence {
    if let Some(n) = params.terminating_degree() {
        return Convergence::Terminating(n);
    }
    let (p, q) = (params.p(), params.q());
    if p <= q {
        Convergence::Entire
    } else if p == q + 1 {
        Convergence::UnitDisk
    } else {
        Convergence::Divergent
    }
}

fn snap(v: f64) -> f64 {
    match near_integer(v) {
        Some(n) => n as f64,
        None => v,
    }
}

/// Evaluates `pFq[upper; lower; x]`.
pub fn eval_pfq(params: &HypergeometricParams, x: f64, control: SeriesControl) -> Result<EvalResult> {
    params.check_finite()?;
    if !x.is_finite() {
        return Err(Error::NonFinite(format!("argument {x}")));
    }
    params.check_lower_poles()?;
    let class = classify_convergence(params);
    if x == 0.0 {
        return Ok(EvalResult::exact(1.0, 1));
    }
    let ratio_floor = match class {
        Convergence::Divergent => {
            return Err(Error::domain(format!(
                "{}F{} series diverges for x = {x}",
                params.p(),
                params.q()
            )))
        }
        Convergence::UnitDisk if x.abs() >= 1.0 => {
            return Err(Error::domain(format!(
                "{}F{} series requires |x| < 1, got {x}",
                params.p(),
                params.q()
            )))
        }
        Convergence::UnitDisk => x.abs(),
        _ => 0.0,
    };
    let upper: Vec<f64> = params.upper.iter().map(|&a| snap(a)).collect();
    let lower: Vec<f64> = params.lower.iter().map(|&b| snap(b)).collect();
    let mut acc = SeriesSum::new(control, 1.0).with_ratio_floor(ratio_floor);
    let mut term = 1.0;
    let mut r = 0.0;
    loop {
        let num: f64 = upper.iter().map(|a| a + r).product();
        if num == 0.0 {
            return Ok(acc.finish_exact());
        }
        let den: f64 = lower.iter().map(|b| b + r).product();
        term *= num / den * x / (r + 1.0);
        if acc.push(term)? {
            return Ok(acc.finish());
        }
        r += 1.0;
    }
}

/// Evaluates the Fox–Wright function `pΨq[(a,A); (b,B); x]`.
///
/// Lower Gamma factors at their poles contribute a zero reciprocal.
pub fn eval_fox_wright(params: &FoxWrightParams, x: f64, control: SeriesControl) -> Result<EvalResult> {
    if !x.is_finite() {
        return Err(Error::NonFinite(format!("argument {x}")));
    }
    let sum_a: f64 = params.upper.iter().map(|p| p.1).sum();
    let sum_b: f64 = params.lower.iter().map(|p| p.1).sum();
    let excess = sum_b - sum_a + 1.0;
    let mut ratio_floor = 0.0;
    if x != 0.0 {
        if excess.abs() <= 1e-12 {
            let ln_radius: f64 = params.lower.iter().map(|&(_, b)| b * b.ln()).sum::<f64>()
                - params.upper.iter().map(|&(_, a)| a * a.ln()).sum::<f64>();
            let radius = ln_radius.exp();
            if x.abs() >= radius {
                return Err(Error::domain(format!(
                    "Fox–Wright series requires |x| < {radius}, got {x}"
                )));
            }
            ratio_floor = x.abs() / radius;
        } else if excess < 0.0 {
            return Err(Error::domain(format!(
                "Fox–Wright series diverges (ΣB − ΣA + 1 = {excess})"
            )));
        }
    }
    let ln_x = x.abs().ln();
    let sign_x = x.signum();
    let term = |r: u64| -> Result<f64> {
        let rf = r as f64;
        let mut ln = 0.0;
        let mut sign = 1.0;
        for &(a, step) in &params.upper {
            let lg = ln_gamma(a + rf * step)
                .ok_or_else(|| Error::pole(format!("Γ({a} + {r}·{step}) is infinite")))?;
            ln += lg.ln_abs;
            sign *= lg.sign;
        }
        for &(b, step) in &params.lower {
            match ln_gamma(b + rf * step) {
                Some(lg) => {
                    ln -= lg.ln_abs;
                    sign *= lg.sign;
                }
                None => return Ok(0.0),
            }
        }
        if r > 0 {
            ln += rf * ln_x - ln_gamma(rf + 1.0).map_or(0.0, |lg| lg.ln_abs);
            if r % 2 == 1 {
                sign *= sign_x;
            }
        }
        Ok(sign * ln.exp())
    };
    let first = term(0)?;
    let mut acc = SeriesSum::new(control, first).with_ratio_floor(ratio_floor);
    if x == 0.0 {
        return Ok(acc.finish_exact());
    }
    let mut r = 1;
    loop {
        if acc.push(term(r)?)? {
            return Ok(acc.finish());
        }
        r += 1;
    }
}

/// Evaluates the two-variable series
/// `Σ (α)_{m+n} (β)_m x^m y^n / ((γ)_{m+n} (β')_n m! n!)` on `|x| + |y| < 1`.
///
/// Terms are grouped by total degree `m + n`; each group is one term for
/// the stopping rule.
pub fn eval_appell(
    alpha: f64,
    gamma: f64,
    beta: f64,
    beta_prime: f64,
    x: f64,
    y: f64,
    control: SeriesControl,
) -> Result<EvalResult> {
    for v in [alpha, gamma, beta, beta_prime, x, y] {
        if !v.is_finite() {
            return Err(Error::NonFinite(format!("Appéll argument {v}")));
        }
    }
    if x.abs() + y.abs() >= 1.0 {
        return Err(Error::domain(format!(
            "Appéll series requires |x| + |y| < 1, got x = {x}, y = {y}"
        )));
    }
    for (name, v) in [("γ", gamma), ("β'", beta_prime)] {
        if nonpositive_integer(v).is_some() {
            return Err(Error::pole(format!("{name} = {v} is a non-positive integer")));
        }
    }
    if x == 0.0 && y == 0.0 {
        return Ok(EvalResult::exact(1.0, 1));
    }
    let (alpha, beta) = (snap(alpha), snap(beta));
    // u_m = (β)_m x^m / m!,  v_n = y^n / ((β')_n n!)
    let mut u = vec![1.0];
    let mut v = vec![1.0];
    let mut coeff = 1.0; // (α)_k / (γ)_k
    let mut acc = SeriesSum::new(control, 1.0).with_ratio_floor(x.abs() + y.abs());
    let mut k = 0usize;
    loop {
        let kf = k as f64;
        coeff *= (alpha + kf) / (gamma + kf);
        let m_last = u[k];
        u.push(m_last * (beta + kf) * x / (kf + 1.0));
        let n_last = v[k];
        v.push(n_last * y / ((beta_prime + kf) * (kf + 1.0)));
        k += 1;
        if coeff == 0.0 {
            return Ok(acc.finish_exact());
        }
        let front: f64 = (0..=k).map(|m| u[m] * v[k - m]).sum();
        if acc.push(coeff * front)? {
            return Ok(acc.finish());
        }
    }
}
