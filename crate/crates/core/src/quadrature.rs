//! Adaptive Gauss–Kronrod (7, 15) quadrature on finite, half-infinite and
//! doubly infinite ranges.
//!
//! Infinite ranges are mapped onto bounded ones: `x = a + t/(1-t)` on
//! `(0, 1)` for `[a, ∞)` and `x = t/(1-t²)` on `(-1, 1)` for the real line.
//! Finite and half-infinite ranges are additionally graded towards their
//! ends through `s = 3u² − 2u³`, which turns `t^{-1/2}`-type endpoint
//! behaviour into a smooth integrand. Nodes are interior, so integrable
//! endpoint singularities are never evaluated. The panel with the largest
//! error estimate is bisected until the summed estimate meets
//! `max(abs_tol, rel_tol·|value|)`.
//!
//! [`integrate_beta_weighted`] handles the stronger `t^{p-1}(1-t)^{q-1}`
//! endpoint powers of Euler-type integrals by substitution.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Panels at this bisection depth are not split again.
pub const MAX_DEPTH: u32 = 60;

/// Hard cap on integrand evaluations.
pub const MAX_EVALUATIONS: usize = 4_000_000;

#[allow(clippy::excessive_precision)]
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];

#[allow(clippy::excessive_precision)]
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];

// Gauss weights for XGK[1], XGK[3], XGK[5] and the centre.
#[allow(clippy::excessive_precision)]
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum Domain {
    Finite(f64, f64),
    HalfLine(f64),
    RealLine,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadratureResult {
    pub value: f64,
    pub abs_error_estimate: f64,
    pub evaluations: usize,
    pub converged: bool,
}

#[derive(Debug, Clone, Copy)]
struct Panel {
    a: f64,
    b: f64,
    value: f64,
    err: f64,
    depth: u32,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.err == other.err
    }
}

impl Eq for Panel {}

impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.err.total_cmp(&other.err)
    }
}

/// Integrates an infallible integrand.
pub fn integrate<F>(f: F, domain: Domain, rel_tol: f64, abs_tol: f64) -> Result<QuadratureResult>
where
    F: Fn(f64) -> f64,
{
    try_integrate(|x| Ok(f(x)), domain, rel_tol, abs_tol)
}

/// Integrates an integrand that may itself fail; the first error aborts.
pub fn try_integrate<F>(f: F, domain: Domain, rel_tol: f64, abs_tol: f64) -> Result<QuadratureResult>
where
    F: Fn(f64) -> Result<f64>,
{
    if !(rel_tol >= 0.0 && abs_tol >= 0.0) || (rel_tol == 0.0 && abs_tol == 0.0) {
        return Err(Error::domain(format!(
            "tolerances rel {rel_tol}, abs {abs_tol} are not usable"
        )));
    }
    match domain {
        Domain::Finite(a, b) => {
            if !a.is_finite() || !b.is_finite() {
                return Err(Error::domain("finite domain needs finite endpoints"));
            }
            if a == b {
                return Ok(QuadratureResult {
                    value: 0.0,
                    abs_error_estimate: 0.0,
                    evaluations: 0,
                    converged: true,
                });
            }
            let (lo, hi, sign) = if a < b { (a, b, 1.0) } else { (b, a, -1.0) };
            let width = hi - lo;
            let g = |u: f64| -> Result<f64> {
                let (x, ds) = graded_point(lo, hi, u);
                let v = f(x)?;
                Ok(if v == 0.0 { 0.0 } else { v * width * ds })
            };
            let mut r = adaptive(&g, &[0.0, 0.5, 1.0], rel_tol, abs_tol)?;
            r.value *= sign;
            Ok(r)
        }
        Domain::HalfLine(a) => {
            if !a.is_finite() {
                return Err(Error::domain("half line needs a finite start"));
            }
            let g = |u: f64| -> Result<f64> {
                let (t, dt) = grade(u);
                let w = 1.0 - u;
                let s = w * w * (3.0 - 2.0 * w);
                let v = f((a + t / s).max(a.next_up()))?;
                Ok(if v == 0.0 { 0.0 } else { v * dt / (s * s) })
            };
            adaptive(&g, &[0.0, 0.25, 0.5, 0.75, 1.0], rel_tol, abs_tol)
        }
        Domain::RealLine => {
            let g = |t: f64| -> Result<f64> {
                let s = 1.0 - t * t;
                let v = f(t / s)?;
                Ok(if v == 0.0 { 0.0 } else { v * (1.0 + t * t) / (s * s) })
            };
            adaptive(&g, &[-1.0, -0.5, -0.25, 0.0, 0.25, 0.5, 1.0], rel_tol, abs_tol)
        }
    }
}

/// `∫₀¹ t^{p−1} (1−t)^{q−1} k(t) dt` for `p, q > 0`.
///
/// The range is split at `1/2`. On each half a singular power is absorbed
/// by substitution (`v = t^p` near 0, `w = (1−t)^q` near 1), and the
/// complementary factor is computed from the distance to the nearer end so
/// that `1 − t` never loses digits.
pub fn integrate_beta_weighted<K>(p: f64, q: f64, kernel: K, rel_tol: f64, abs_tol: f64) -> Result<f64>
where
    K: Fn(f64) -> Result<f64>,
{
    if !(p > 0.0 && q > 0.0 && p.is_finite() && q.is_finite()) {
        return Err(Error::domain(format!("beta weight needs p, q > 0, got p = {p}, q = {q}")));
    }
    // ∫₀^{1/2} t^{e−1} (1−t)^{o−1} k(t) dt with t measured from `end`
    let half = |e: f64, o: f64, to_t: &dyn Fn(f64) -> f64| -> Result<f64> {
        if e < 1.0 {
            let r = try_integrate(
                |v| {
                    let d = v.powf(1.0 / e);
                    Ok((1.0 - d).powf(o - 1.0) * kernel(to_t(d))?)
                },
                Domain::Finite(0.0, 0.5f64.powf(e)),
                rel_tol,
                abs_tol,
            )?;
            Ok(r.value / e)
        } else {
            let r = try_integrate(
                |d| Ok(d.powf(e - 1.0) * (1.0 - d).powf(o - 1.0) * kernel(to_t(d))?),
                Domain::Finite(0.0, 0.5),
                rel_tol,
                abs_tol,
            )?;
            Ok(r.value)
        }
    };
    let left = half(p, q, &|d| d)?;
    let right = half(q, p, &|d| 1.0 - d)?;
    Ok(left + right)
}

/// `s = 3u² − 2u³` and `ds/du` on `[0, 1]`.
fn grade(u: f64) -> (f64, f64) {
    (u * u * (3.0 - 2.0 * u), 6.0 * u * (1.0 - u))
}

/// Image of `u` under the grading map onto `(lo, hi)`, measured from the
/// nearer endpoint and kept strictly inside the interval.
fn graded_point(lo: f64, hi: f64, u: f64) -> (f64, f64) {
    let width = hi - lo;
    let ds = 6.0 * u * (1.0 - u);
    let x = if u <= 0.5 {
        lo + width * u * u * (3.0 - 2.0 * u)
    } else {
        let w = 1.0 - u;
        hi - width * w * w * (3.0 - 2.0 * w)
    };
    (x.clamp(lo.next_up(), hi.next_down()), ds)
}

fn rescale_error(err: f64, res_abs: f64, res_asc: f64) -> f64 {
    let mut e = err.abs();
    if res_asc != 0.0 && e != 0.0 {
        let scale = (200.0 * e / res_asc).powf(1.5);
        e = if scale < 1.0 { res_asc * scale } else { res_asc };
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        e = e.max(50.0 * f64::EPSILON * res_abs);
    }
    e
}

fn gauss_kronrod<G>(g: &G, a: f64, b: f64) -> Result<(f64, f64)>
where
    G: Fn(f64) -> Result<f64>,
{
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let eval = |x: f64| -> Result<f64> {
        // Deep panels can round an outer node onto an endpoint.
        let x = if x <= a {
            a.next_up()
        } else if x >= b {
            b.next_down()
        } else {
            x
        };
        let v = g(x)?;
        if v.is_finite() {
            Ok(v)
        } else {
            Err(Error::NonFinite(format!("integrand is {v} at node {x}")))
        }
    };
    let fc = eval(center)?;
    let mut fv1 = [0.0; 7];
    let mut fv2 = [0.0; 7];
    let mut kron = fc * WGK[7];
    let mut gauss = fc * WG[3];
    let mut res_abs = kron.abs();
    for j in 0..7 {
        let dx = half * XGK[j];
        let f1 = eval(center - dx)?;
        let f2 = eval(center + dx)?;
        fv1[j] = f1;
        fv2[j] = f2;
        kron += WGK[j] * (f1 + f2);
        res_abs += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            gauss += WG[j / 2] * (f1 + f2);
        }
    }
    let mean = 0.5 * kron;
    let mut res_asc = WGK[7] * (fc - mean).abs();
    for j in 0..7 {
        res_asc += WGK[j] * ((fv1[j] - mean).abs() + (fv2[j] - mean).abs());
    }
    let h = half.abs();
    let err = rescale_error((kron - gauss) * half, res_abs * h, res_asc * h);
    Ok((kron * half, err))
}

fn adaptive<G>(g: &G, breaks: &[f64], rel_tol: f64, abs_tol: f64) -> Result<QuadratureResult>
where
    G: Fn(f64) -> Result<f64>,
{
    let mut heap = BinaryHeap::new();
    let mut frozen: Vec<Panel> = Vec::new();
    let mut frozen_err = 0.0;
    let mut evaluations = 0usize;
    let mut total = 0.0;
    let mut total_err = 0.0;
    for w in breaks.windows(2) {
        let (value, err) = gauss_kronrod(g, w[0], w[1])?;
        evaluations += 15;
        total += value;
        total_err += err;
        heap.push(Panel {
            a: w[0],
            b: w[1],
            value,
            err,
            depth: 0,
        });
    }
    loop {
        let target = abs_tol.max(rel_tol * total.abs());
        if total_err <= target {
            break;
        }
        if frozen_err > target {
            return Err(Error::NoConvergence {
                iterations: evaluations,
                estimate: total,
                error: total_err,
            });
        }
        let Some(worst) = heap.pop() else {
            return Err(Error::NoConvergence {
                iterations: evaluations,
                estimate: total,
                error: total_err,
            });
        };
        let mid = 0.5 * (worst.a + worst.b);
        if worst.depth >= MAX_DEPTH || mid <= worst.a || mid >= worst.b {
            frozen_err += worst.err;
            frozen.push(worst);
            continue;
        }
        if evaluations >= MAX_EVALUATIONS {
            return Err(Error::NoConvergence {
                iterations: evaluations,
                estimate: total,
                error: total_err,
            });
        }
        let (v1, e1) = gauss_kronrod(g, worst.a, mid)?;
        let (v2, e2) = gauss_kronrod(g, mid, worst.b)?;
        evaluations += 30;
        total += v1 + v2 - worst.value;
        total_err += e1 + e2 - worst.err;
        let depth = worst.depth + 1;
        heap.push(Panel { a: worst.a, b: mid, value: v1, err: e1, depth });
        heap.push(Panel { a: mid, b: worst.b, value: v2, err: e2, depth });
    }
    // Re-sum to shed the drift of the incremental updates.
    let panels = heap.into_iter().chain(frozen);
    let (value, err) = panels.fold((0.0, 0.0), |(v, e), p| (v + p.value, e + p.err));
    Ok(QuadratureResult {
        value,
        abs_error_estimate: err,
        evaluations,
        converged: true,
    })
}
