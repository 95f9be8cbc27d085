use hyperumbral::gamma::factorial;
use hyperumbral::pochhammer::*;
use proptest::prelude::*;

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(f64::MIN_POSITIVE)
}

proptest! {
    #[test]
    fn addition_theorem(k in 0.1f64..10.0, d in 0.1f64..10.0, r in 0u64..=12) {
        let lhs = pochhammer(k + d, r as f64).unwrap();
        let rhs = pochhammer_binomial(k, d, r).unwrap();
        prop_assert!(rel(lhs, rhs) <= 1e-10, "{lhs} vs {rhs}");
    }

    #[test]
    fn addition_theorem_signed(k in -4.5f64..4.5, d in -4.5f64..4.5, r in 0u64..=8) {
        let lhs = pochhammer(k + d, r as f64).unwrap();
        let rhs = pochhammer_binomial(k, d, r).unwrap();
        // signed parameters cancel, so measure against the largest summand
        let scale = (0..=r)
            .map(|s| {
                let c = factorial(r) / (factorial(s) * factorial(r - s));
                (c * pochhammer(d, (r - s) as f64).unwrap() * pochhammer(k, s as f64).unwrap()).abs()
            })
            .fold(lhs.abs(), f64::max);
        prop_assert!((lhs - rhs).abs() <= 1e-12 * scale.max(1.0));
    }

    #[test]
    fn split_matches_direct(d in -9.7f64..20.0, m in 0i64..=15, n in 0i64..=15) {
        let direct = pochhammer(d, (m + n) as f64).unwrap();
        let split = pochhammer_split(d, m, n).unwrap();
        prop_assert!((split - direct).abs() <= 1e-12 * direct.abs().max(f64::MIN_POSITIVE));
    }

    #[test]
    fn negation_matches_negative_shift(d in 0.05f64..20.0, r in 0u64..=10) {
        prop_assume!((d - d.round()).abs() > 1e-6);
        let negated = pochhammer_negate(d, r).unwrap();
        let direct = pochhammer(d, -(r as f64)).unwrap();
        prop_assert!(rel(negated, direct) <= 1e-10, "{negated} vs {direct}");
    }

    #[test]
    fn duplication(d in 0.1f64..20.0, r in 0u64..=12) {
        let dup = pochhammer_duplicate(d, r).unwrap();
        let direct = pochhammer(d, 2.0 * r as f64).unwrap();
        prop_assert!(rel(dup, direct) <= 1e-12);
    }

    #[test]
    fn product_and_log_gamma_paths_agree(d in 0.1f64..20.0, n in 0u64..=30) {
        let product = via_product(d, n).unwrap();
        let log_gamma = via_log_gamma(d, n as f64).unwrap();
        prop_assert!(rel(product, log_gamma) <= 1e-12, "{product} vs {log_gamma}");
    }

    #[test]
    fn falling_factorial(r in 0u64..=20, s in 0u64..=20) {
        let f = pochhammer_falling(r, s);
        prop_assert_eq!(f.vanished, s > r);
        let direct = pochhammer(-(r as f64), s as f64).unwrap();
        prop_assert!((f.value - direct).abs() <= 1e-12 * direct.abs());
    }
}

#[test]
fn half_shift_law() {
    let root_pi = std::f64::consts::PI.sqrt();
    for r in 0..=10 {
        let r = r as f64;
        let lhs = pochhammer(1.0, r - 0.5).unwrap();
        let rhs = root_pi * pochhammer(0.5, r).unwrap();
        assert!(rel(lhs, rhs) <= 1e-12, "{r}: {lhs} vs {rhs}");
    }
}

#[test]
fn documented_values() {
    assert_eq!(pochhammer(7.3, 0.0).unwrap(), 1.0);
    assert_eq!(pochhammer(1.0, 5.0).unwrap(), 120.0);
    assert!((pochhammer(2.0, -1.0).unwrap() - 1.0).abs() < 1e-15);
    assert!((pochhammer(3.0, 0.5).unwrap() - 1.661_675_485_223_921_3).abs() < 1e-14);
    assert_eq!(pochhammer_split(0.5, 2, 2).unwrap(), 6.5625);
    assert_eq!(pochhammer_negate(4.0, 1).unwrap(), 1.0 / 3.0);
    assert_eq!(pochhammer_duplicate(2.0, 2).unwrap(), 120.0);
    assert_eq!(pochhammer_falling(3, 2).value, 6.0);
    assert_eq!(pochhammer_falling(2, 3).value, 0.0);
}
