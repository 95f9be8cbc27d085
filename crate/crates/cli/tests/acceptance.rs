//! Acceptance checks. Runs every criterion, prints one line per criterion
//! and exits non-zero if any of them fails.

use std::f64::consts::PI;
use std::panic::{self, AssertUnwindSafe};
use std::path::PathBuf;
use std::process::{Command, Output};

use hyperumbral::gamma::factorial;
use hyperumbral::integrals::{self, oracle};
use hyperumbral::odes::{self, Jet};
use hyperumbral::pochhammer::{
    pochhammer, pochhammer_binomial, pochhammer_duplicate, pochhammer_falling, pochhammer_negate, pochhammer_split,
};
use hyperumbral::special;
use hyperumbral::umbral::{antidifferentiate_pfq, differentiate_pfq, power_weighted_antiderivative};
use hyperumbral::{eval_pfq, Error, HypergeometricParams, SeriesControl};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn ctl() -> SeriesControl {
    SeriesControl::default()
}

fn pfq(upper: &[f64], lower: &[f64], x: f64) -> hyperumbral::Result<f64> {
    Ok(eval_pfq(&HypergeometricParams::new(upper, lower), x, ctl())?.value)
}

fn rel(lhs: f64, rhs: f64) -> f64 {
    let d = (lhs - rhs).abs();
    if rhs == 0.0 {
        d
    } else {
        d / rhs.abs()
    }
}

/// Collects comparisons against one tolerance and remembers the worst one.
struct Tally {
    label: &'static str,
    tol: f64,
    cases: usize,
    worst: f64,
    failures: Vec<String>,
}

impl Tally {
    fn new(label: &'static str, tol: f64) -> Self {
        Self {
            label,
            tol,
            cases: 0,
            worst: 0.0,
            failures: Vec::new(),
        }
    }

    fn fail(&mut self, msg: String) {
        self.cases += 1;
        self.failures.push(msg);
    }

    /// Relative difference of a pair, or the error that prevented it.
    fn compare(&mut self, case: impl std::fmt::Debug, pair: hyperumbral::Result<(f64, f64)>) {
        match pair {
            Ok((lhs, rhs)) => self.value(case, rel(lhs, rhs), format!("lhs {lhs:e}, rhs {rhs:e}")),
            Err(e) => self.fail(format!("{case:?}: {e}")),
        }
    }

    /// A measured discrepancy that must not exceed the tolerance.
    fn value(&mut self, case: impl std::fmt::Debug, d: f64, context: String) {
        self.cases += 1;
        if d.is_finite() {
            self.worst = self.worst.max(d);
        }
        if d.is_nan() || d > self.tol {
            self.failures.push(format!("{case:?}: {d:e} ({context})"));
        }
    }

    fn check(&mut self, case: impl std::fmt::Debug, ok: bool, msg: &str) {
        self.cases += 1;
        if !ok {
            self.failures.push(format!("{case:?}: {msg}"));
        }
    }

    fn summary(&self) -> String {
        if self.failures.is_empty() && self.tol == 0.0 {
            format!("{} {} cases", self.label, self.cases)
        } else if self.failures.is_empty() {
            format!("{} {} cases, worst {:.1e} (tol {:.0e})", self.label, self.cases, self.worst, self.tol)
        } else {
            format!(
                "{} {} of {} cases failed (tol {:.0e}), first: {}",
                self.label,
                self.failures.len(),
                self.cases,
                self.tol,
                self.failures[0]
            )
        }
    }
}

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(tallies: &[Tally]) -> Outcome {
    Outcome {
        passed: tallies.iter().all(|t| t.failures.is_empty()),
        detail: tallies.iter().map(Tally::summary).collect::<Vec<_>>().join("; "),
    }
}

fn mellin() -> Outcome {
    let mut t = Tally::new("quadrature vs closed form", 1e-6);
    for (a, b, c, nu) in [(2.0, 3.0, 4.0, 1.0), (3.0, 5.0, 2.0, 0.5), (2.5, 4.0, 3.0, 1.5), (4.0, 6.0, 5.0, 2.0), (2.0, 2.0, 3.0, 0.75)] {
        t.compare(
            (a, b, c, nu),
            (|| Ok((oracle::mellin_lhs(a, b, c, nu)?, integrals::mellin_integral(a, b, c, nu)?)))(),
        );
    }
    let mut exact = Tally::new("(2,3,4,1) vs 1.5", 1e-6);
    for (name, v) in [
        ("closed form", integrals::mellin_integral(2.0, 3.0, 4.0, 1.0)),
        ("quadrature", oracle::mellin_lhs(2.0, 3.0, 4.0, 1.0)),
    ] {
        match v {
            Ok(v) => exact.value(name, (v - 1.5).abs(), format!("{v}")),
            Err(e) => exact.fail(format!("{name}: {e}")),
        }
    }
    outcome(&[t, exact])
}

fn mellin_power() -> Outcome {
    let mut t = Tally::new("quadrature vs closed form", 1e-6);
    let grid = [
        (2.0, 3.0, 4.0, 1.0, 1.0),
        (2.0, 3.0, 4.0, 2.0, 1.0),
        (2.5, 4.0, 3.0, 1.5, 2.0),
        (3.0, 5.0, 2.0, 0.5, 0.2),
        (4.0, 6.0, 5.0, 3.0, 2.5),
    ];
    for (a, b, c, mu, nu) in grid {
        t.compare(
            (a, b, c, mu, nu),
            (|| Ok((oracle::mellin_power_lhs(a, b, c, mu, nu)?, integrals::mellin_power_integral(a, b, c, mu, nu)?)))(),
        );
    }
    let mut degenerate = Tally::new("mu = 1 matches the Mellin path", 0.0);
    for (a, b, c, nu) in [(2.0, 3.0, 4.0, 1.0), (2.5, 4.0, 3.0, 1.5)] {
        degenerate.compare(
            (a, b, c, nu),
            (|| Ok((integrals::mellin_power_integral(a, b, c, 1.0, nu)?, integrals::mellin_integral(a, b, c, nu)?)))(),
        );
    }
    outcome(&[t, degenerate])
}

fn gaussian() -> Outcome {
    let mut t = Tally::new("quadrature vs halved-parameter form", 1e-6);
    let mut zero = Tally::new("beta = 0 vs sqrt(pi/alpha)", 1e-12);
    let families: [(&[f64], &[f64]); 4] = [
        (&[1.0], &[2.0]),
        (&[0.7], &[1.3, 2.2]),
        (&[], &[1.0]),
        (&[1.0, 2.0], &[3.0, 1.5]),
    ];
    let pairs = [(1.0, 1.0), (2.0, -1.5), (0.5, 0.8)];
    for (upper, lower) in families {
        let params = HypergeometricParams::new(upper, lower);
        for (alpha, beta) in pairs {
            t.compare(
                (params.p(), params.q(), alpha, beta),
                (|| {
                    Ok((
                        oracle::gaussian_pfq_lhs(&params, alpha, beta)?,
                        integrals::gaussian_integral_pfq(&params, alpha, beta)?.eval(ctl())?,
                    ))
                })(),
            );
        }
        for alpha in [0.5, 1.0, 3.0] {
            zero.compare(
                (params.p(), params.q(), alpha),
                (|| Ok((integrals::gaussian_integral_pfq(&params, alpha, 0.0)?.eval(ctl())?, (PI / alpha).sqrt())))(),
            );
        }
    }
    outcome(&[t, zero])
}

fn fox_wright() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x4657);
    let mut t = Tally::new("2F4 form vs 1Psi2 form", 1e-10);
    for _ in 0..10 {
        let a = rng.random_range(0.2..3.0);
        let b = rng.random_range(0.5..4.0);
        let c = rng.random_range(0.5..4.0);
        let alpha = rng.random_range(0.3..3.0);
        let beta = rng.random_range(-3.0..3.0);
        let params = HypergeometricParams::new([a], [b, c]);
        t.compare(
            (a, b, c, alpha, beta),
            (|| {
                Ok((
                    integrals::gaussian_integral_pfq(&params, alpha, beta)?.eval(ctl())?,
                    integrals::fox_wright_gaussian_form(a, b, c, alpha, beta)?,
                ))
            })(),
        );
    }
    outcome(&[t])
}

fn geometric() -> Outcome {
    let mut pi = Tally::new("alpha = 1, beta = 0 vs pi", 1e-10);
    match (integrals::geometric_gaussian_integral(1.0, 0.0), oracle::geometric_lhs(1.0, 0.0)) {
        (Ok(v), Ok(q)) => {
            pi.value("closed form", (v - PI).abs(), format!("{v}"));
            pi.value("quadrature", (q - PI).abs(), format!("{q}"));
        }
        (v, q) => pi.fail(format!("{v:?} {q:?}")),
    }
    let mut grid = Tally::new("quadrature vs closed form", 1e-8);
    for (alpha, beta) in [(1.0, 1.0), (2.0, -1.5), (0.5, 1.2), (3.0, 3.0), (1.0, 1.9)] {
        grid.compare(
            (alpha, beta),
            (|| Ok((oracle::geometric_lhs(alpha, beta)?, integrals::geometric_gaussian_integral(alpha, beta)?)))(),
        );
    }
    let mut boundary = Tally::new("beta^2 >= 4 alpha rejected", 0.0);
    for (alpha, beta) in [(1.0, 2.0), (1.0, -2.0), (1.0, 3.0), (0.5, 1.5)] {
        let r = integrals::geometric_gaussian_integral(alpha, beta);
        boundary.check((alpha, beta), matches!(r, Err(Error::Domain(_))), &format!("got {r:?}"));
    }
    outcome(&[pi, grid, boundary])
}

fn quadratic_arg() -> Outcome {
    let mut cancel = Tally::new("a = b = c vs Gaussian shift", 1e-10);
    for (a, alpha, beta) in [(1.0, 1.0, 1.0), (2.0, 1.0, 1.0), (1.5, 2.0, 0.5)] {
        cancel.compare(
            (a, alpha, beta),
            (|| {
                Ok((
                    integrals::gaussian_quadratic_arg_integral(a, a, a, alpha, beta, ctl())?,
                    (PI / alpha).sqrt() * (beta * beta / (4.0 * alpha)).exp(),
                ))
            })(),
        );
    }
    let mut general = Tally::new("non-degenerate vs quadrature", 1e-8);
    for (a, b, c, alpha, beta) in [(1.0, 2.0, 2.0, 1.0, 1.0), (1.5, 2.0, 3.0, 1.0, 1.0)] {
        general.compare(
            (a, b, c, alpha, beta),
            (|| {
                Ok((
                    oracle::quadratic_arg_lhs(a, b, c, alpha, beta)?,
                    integrals::gaussian_quadratic_arg_integral(a, b, c, alpha, beta, ctl())?,
                ))
            })(),
        );
    }
    outcome(&[cancel, general])
}

fn antiderivatives() -> Outcome {
    let mut roundtrip = Tally::new("antiderivative/derivative round trip", 0.0);
    let lists: [(&[f64], &[f64]); 4] = [
        (&[2.5, 3.0], &[4.0]),
        (&[0.5], &[1.5, 2.25]),
        (&[-1.5, 2.0], &[3.5]),
        (&[4.0], &[]),
    ];
    for (upper, lower) in lists {
        let params = HypergeometricParams::new(upper, lower);
        let there = antidifferentiate_pfq(&params).and_then(|(k1, up)| {
            let (k2, back) = differentiate_pfq(&up)?;
            Ok((k1 * k2, back))
        });
        let back_again = differentiate_pfq(&params).and_then(|(k1, down)| {
            let (k2, back) = antidifferentiate_pfq(&down)?;
            Ok((k1 * k2, back))
        });
        for r in [there, back_again] {
            match r {
                Ok((k, back)) => roundtrip.check((upper, lower), k == 1.0 && back == params, &format!("{k}, {back:?}")),
                Err(e) => roundtrip.fail(format!("{upper:?} {lower:?}: {e}")),
            }
        }
    }
    let mut power = Tally::new("derivative of power-weighted form vs integrand", 1e-8);
    let (a, b, c, alpha) = (1.0, 2.0, 3.0, 0.5);
    for i in 1..=10 {
        let x = 0.09 * i as f64;
        power.compare(
            x,
            (|| {
                let (pre, extended) = power_weighted_antiderivative(&HypergeometricParams::new([a, b], [c]), alpha)?;
                let f = odes::pfq_jet(&extended, x, ctl())?;
                let lhs = pre.scale * (pre.exponent * x.powf(alpha) * f.value + x.powf(pre.exponent) * f.d1);
                Ok((lhs, x.powf(alpha) * pfq(&[a, b], &[c], x)?))
            })(),
        );
    }
    let mut weighted = Tally::new("weighted exponential vs quadrature", 1e-6);
    let grid = [
        (1.0, 1.0, 2.0, 0.0, 0.5),
        (1.0, 2.0, 2.0, 1.0, 0.3),
        (0.5, 1.5, 2.5, 0.5, 0.7),
        (2.0, 3.0, 1.5, -0.5, 0.4),
        (1.2, 0.7, 3.1, 2.0, 0.9),
    ];
    for (a, b, c, alpha, x) in grid {
        weighted.compare(
            (a, b, c, alpha, x),
            (|| {
                Ok((
                    oracle::weighted_exp_lhs(a, b, c, alpha, x)?,
                    integrals::weighted_exp_integral(a, b, c, alpha, x, ctl())?,
                ))
            })(),
        );
    }
    outcome(&[roundtrip, power, weighted])
}

fn euler() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x4555);
    let mut kummer = Tally::new("1F1 Euler integral vs series", 1e-9);
    let mut gauss = Tally::new("2F1 Euler integral vs series", 1e-9);
    for _ in 0..10 {
        let a = rng.random_range(0.3..3.0);
        let b = a + rng.random_range(0.3..3.0);
        let x = rng.random_range(-5.0..5.0);
        kummer.compare((a, b, x), (|| Ok((integrals::euler_integral_1f1(a, b, x)?, pfq(&[a], &[b], x)?)))());
    }
    for _ in 0..10 {
        let a = rng.random_range(0.3..3.0);
        let c = a + rng.random_range(0.3..3.0);
        let b = rng.random_range(-2.0..3.0);
        let x = rng.random_range(-0.9..0.9);
        gauss.compare(
            (a, b, c, x),
            (|| Ok((integrals::euler_integral_2f1(a, b, c, x)?, pfq(&[a, b], &[c], x)?)))(),
        );
    }
    let mut transform = Tally::new("Gaussian transform of 1F1, both sides", 1e-9);
    for (a, b, alpha, beta) in [(1.0, 2.0, 1.0, 1.0), (0.5, 2.5, 2.0, 3.0), (1.5, 3.0, 1.0, 0.0), (0.8, 1.6, 0.5, 1.0), (2.0, 5.0, 1.0, 2.0)] {
        let z = beta * beta / (4.0 * alpha);
        transform.compare(
            (a, b, alpha, beta),
            (|| {
                Ok((
                    integrals::kummer_gauss_transform(a, b, alpha, beta)?,
                    pfq(&[a / 2.0, (a + 1.0) / 2.0], &[b / 2.0, (b + 1.0) / 2.0], z)?,
                ))
            })(),
        );
    }
    outcome(&[kummer, gauss, transform])
}

fn odes_suite() -> Outcome {
    let mut solutions = Tally::new("normalized residuals", 1e-9);
    let xs = [0.05, 0.3, 0.7, 1.2, 2.0, 3.5, 5.0];
    for (nu, lambda) in [(0.0, 1.0), (1.5, 2.0), (-0.5, 1.0), (2.5, 0.5), (-2.0, 1.0)] {
        for x in xs {
            let r = odes::tricomi_eigen_residual(nu, lambda, x, ctl()).map(|r| (r.normalized_residual, 0.0));
            solutions.compare(("tricomi", nu, lambda, x), r);
        }
    }
    for (a, b) in [(1.0, 2.0), (-2.0, 1.5), (0.5, 1.5), (2.3, 0.7)] {
        for x in [-3.0, -0.5, 0.4, 1.0, 2.5, 4.0] {
            let r = odes::kummer_ode_residual(a, b, x, ctl()).map(|r| (r.normalized_residual, 0.0));
            solutions.compare(("kummer", a, b, x), r);
            let r = odes::kummer_contiguous_residual(a, b, x, ctl()).map(|r| (r.normalized_residual, 0.0));
            solutions.compare(("kummer contiguous", a, b, x), r);
        }
    }
    for (a, b, c) in [(1.0, 1.0, 2.0), (2.0, 0.5, 1.7), (-3.0, 1.5, 2.5), (0.3, 0.9, 1.4)] {
        for x in [-0.8, -0.4, 0.0, 0.2, 0.5, 0.8] {
            let r = odes::gauss_ode_residual(a, b, c, x, ctl()).map(|r| (r.normalized_residual, 0.0));
            solutions.compare(("gauss", a, b, c, x), r);
        }
    }
    for x in [0.0, 0.5, 1.0, 2.0, 3.0, 5.0, 8.0] {
        let r = odes::cosine_ode_residual(x, ctl()).map(|r| (r.normalized_residual, 0.0));
        solutions.compare(("cosine", x), r);
    }

    let mut negative = Tally::new("negative controls above 1e-2", 0.0);
    let x = 0.7f64;
    let e = (-x).exp();
    let g = 1.0 / (1.0 - x);
    let ex = x.exp();
    let mut reports = vec![
        ("tricomi with e^-x", Ok(odes::laguerre_eigen_residual_of(0.0, 1.0, x, Jet::new(e, -e, e)))),
        (
            "kummer with cos",
            Ok(odes::kummer_ode_residual_of(1.0, 2.0, x, Jet::new(x.cos(), -x.sin(), -x.cos()))),
        ),
        ("kummer contiguous with a shifted", odes::kummer_contiguous_residual_with_rhs(1.0, 2.0, 1.5, x, ctl())),
        (
            "gauss with 1/(1-x)",
            Ok(odes::gauss_ode_residual_of(1.0, 2.0, 3.0, x, Jet::new(g, g * g, 2.0 * g * g * g))),
        ),
        ("cosine with e^x", Ok(odes::cosine_ode_residual_of(x, Jet::new(ex, ex, ex)))),
    ];
    for (case, report) in reports.drain(..) {
        match report {
            Ok(r) => negative.check(case, r.normalized_residual > 1e-2, &format!("residual {:e}", r.normalized_residual)),
            Err(err) => negative.fail(format!("{case}: {err}")),
        }
    }
    outcome(&[solutions, negative])
}

fn pochhammer_suite() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x504f);
    let mut t = Tally::new("randomized identities", 1e-10);
    let both = |l: hyperumbral::Result<f64>, r: hyperumbral::Result<f64>| Ok((l?, r?));
    for _ in 0..40 {
        let k = rng.random_range(0.1..10.0);
        let d = rng.random_range(0.1..10.0);
        let r: u64 = rng.random_range(0..=12);
        t.compare(("addition", k, d, r), both(pochhammer(k + d, r as f64), pochhammer_binomial(k, d, r)));
    }
    for _ in 0..40 {
        let d = rng.random_range(-9.5..20.0);
        let m: i64 = rng.random_range(0..=10);
        let n: i64 = rng.random_range(0..=10);
        t.compare(("split", d, m, n), both(pochhammer_split(d, m, n), pochhammer(d, (m + n) as f64)));
    }
    for _ in 0..40 {
        let d = rng.random_range(0.1..20.0);
        let r: u64 = rng.random_range(0..=10);
        t.compare(("negate", d, r), both(pochhammer_negate(d, r), pochhammer(d, -(r as f64))));
    }
    for _ in 0..40 {
        let d = rng.random_range(0.1..20.0);
        let r: u64 = rng.random_range(0..=12);
        t.compare(("duplicate", d, r), both(pochhammer_duplicate(d, r), pochhammer(d, 2.0 * r as f64)));
    }
    for r in 0..=10 {
        let r = r as f64;
        t.compare(
            ("half shift", r),
            both(pochhammer(1.0, r - 0.5), pochhammer(0.5, r).map(|v| PI.sqrt() * v)),
        );
    }
    for _ in 0..40 {
        let r: u64 = rng.random_range(0..=15);
        let s: u64 = rng.random_range(0..=15);
        let f = pochhammer_falling(r, s);
        let expected = if s > r {
            0.0
        } else {
            let sign = if s % 2 == 0 { 1.0 } else { -1.0 };
            sign * factorial(r) / factorial(r - s)
        };
        t.compare(("falling", r, s), both(Ok(f.value), pochhammer(-(r as f64), s as f64)));
        t.compare(("falling closed form", r, s), Ok((f.value, expected)));
        t.check(("falling flag", r, s), f.vanished == (s > r), "vanished flag");
    }
    let mut count = Tally::new("case count at least 200", 0.0);
    count.check(t.cases, t.cases >= 200, "too few cases");
    outcome(&[t, count])
}

fn special_suite() -> Outcome {
    let mut t = Tally::new("cross-identities", 1e-9);
    for x in [0.0, 0.5, 1.0, 2.0, 4.0, 6.0, 9.0] {
        let r = (|| Ok((special::tricomi_c(0.0, x, ctl())?.value, special::bessel_j0(2.0 * f64::sqrt(x), ctl())?.value)))();
        t.compare(("C0 vs J0", x), r);
    }
    for x in [0.0, 0.5, 1.0, 1.5, 2.0, 3.0, 4.0, 5.0] {
        let r: hyperumbral::Result<(f64, f64)> = (|| {
            let j = special::bessel_j0(x, ctl())?.value;
            Ok((j * j, special::j0_squared(x, ctl())?.value))
        })();
        // absolute below magnitude one, since J0 vanishes inside the grid
        match r {
            Ok((l, rr)) => t.value(("J0^2 vs 1F2", x), (l - rr).abs() / rr.abs().max(1.0), format!("{l:e} vs {rr:e}")),
            Err(e) => t.fail(format!("J0^2 {x}: {e}")),
        }
    }
    for x in [0.0, 0.5, 1.0, 2.0, 3.0, 4.0] {
        let r: hyperumbral::Result<(f64, f64)> = (|| Ok((special::gauss_transform_cos_half(x, ctl())?.value, x.cos())))();
        match r {
            Ok((l, rr)) => t.value(("Gauss transform vs cos", x), (l - rr).abs(), format!("{l:e} vs {rr:e}")),
            Err(e) => t.fail(format!("transform {x}: {e}")),
        }
    }
    for x in [-10.0, -5.0, -1.0, 0.0, 1.0, 3.0, 7.0, 10.0] {
        let r = (|| {
            let s = special::sin_hyp(x, ctl())?.value;
            let c = special::cos_hyp(x, ctl())?.value;
            Ok((s * s + c * c, 1.0))
        })();
        t.compare(("sin^2 + cos^2", x), r);
    }
    let mut integral = Tally::new("J0^2 Gaussian integral vs quadrature", 1e-6);
    for alpha in [0.5, 1.0, 2.0, 4.0, 10.0] {
        integral.compare(
            alpha,
            (|| Ok((oracle::bessel_squared_lhs(alpha)?, integrals::bessel_squared_gaussian_integral(alpha, ctl())?)))(),
        );
    }
    outcome(&[t, integral])
}

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_hyperumbral"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn scratch_file(name: &str, contents: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("hyperumbral-acceptance-{}-{name}", std::process::id()));
    std::fs::write(&path, contents).expect("temp file writable");
    path
}

fn cli() -> Outcome {
    let mut t = Tally::new("command line", 0.0);
    let first = run(&["verify"]);
    let second = run(&["verify"]);
    t.check("default verify exits 0", first.status.code() == Some(0), &format!("{:?}", first.status));
    t.check(
        "verify is byte-identical",
        first.stdout == second.stdout && !first.stdout.is_empty(),
        "outputs differ",
    );
    let table = ["table", "pfq", "--upper", "1,1", "--lower", "2", "--from", "0", "--to", "0.9", "--step", "0.1"];
    t.check("table is byte-identical", run(&table).stdout == run(&table).stdout, "outputs differ");

    let empty = scratch_file("empty.json", r#"{"identities": []}"#);
    let strict = scratch_file(
        "strict.json",
        r#"{"identities": [{"id": "mellin", "grid": [{"a": 2, "b": 3, "c": 4, "nu": 1}], "tolerance": 1e-30}]}"#,
    );
    let malformed = scratch_file("malformed.json", r#"{"identities": [{"id": "mellin"}"#);
    let cases: [(&str, Vec<&str>, i32); 7] = [
        ("eval succeeds", vec!["eval", "pfq", "--upper", "1,1", "--lower", "2", "--x", "0.5"], 0),
        ("empty suite", vec!["verify", empty.to_str().unwrap()], 0),
        ("unparsable number", vec!["eval", "pfq", "--x", "abc"], 2),
        ("malformed suite", vec!["verify", malformed.to_str().unwrap()], 2),
        ("outside the unit disk", vec!["eval", "pfq", "--upper", "1,1", "--lower", "2", "--x", "2"], 3),
        ("term cap", vec!["eval", "pfq", "--upper", "1,1", "--lower", "2", "--x", "0.99", "--max-terms", "10"], 4),
        ("unattainable tolerance", vec!["verify", strict.to_str().unwrap()], 5),
    ];
    for (name, args, code) in cases {
        let out = run(&args);
        t.check(name, out.status.code() == Some(code), &format!("expected {code}, got {:?}", out.status.code()));
    }
    let eval = run(&["eval", "pfq", "--upper", "1,1", "--lower", "2", "--x", "0.5"]);
    t.check(
        "eval prints 15 significant digits",
        String::from_utf8_lossy(&eval.stdout).trim() == "1.38629436111989",
        &String::from_utf8_lossy(&eval.stdout),
    );
    let summary = String::from_utf8_lossy(&run(&["verify", empty.to_str().unwrap()]).stderr).into_owned();
    t.check("empty suite summary", summary.contains("0 passed / 0 total"), &summary);
    for p in [empty, strict, malformed] {
        let _ = std::fs::remove_file(p);
    }
    outcome(&[t])
}

type Criterion = (u32, &'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 12] = [
        (1, "Mellin transform", mellin),
        (2, "power Mellin transform", mellin_power),
        (3, "Gaussian-weighted pFq", gaussian),
        (4, "Fox-Wright form", fox_wright),
        (5, "geometric integrals", geometric),
        (6, "quadratic-argument integral", quadratic_arg),
        (7, "antiderivatives", antiderivatives),
        (8, "Euler integrals", euler),
        (9, "differential equations", odes_suite),
        (10, "Pochhammer properties", pochhammer_suite),
        (11, "special functions", special_suite),
        (12, "command line", cli),
    ];
    let mut failed = Vec::new();
    for (n, name, f) in criteria {
        let o = panic::catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| Outcome {
            passed: false,
            detail: format!(
                "panicked: {}",
                p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_default()
            ),
        });
        println!("criterion {n}: {} {name}: {}", if o.passed { "PASS" } else { "FAIL" }, o.detail);
        if !o.passed {
            failed.push(n);
        }
    }
    if failed.is_empty() {
        println!("all 12 criteria passed");
    } else {
        println!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
