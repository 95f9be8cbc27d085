use hyperumbral::suite::{run_suite, SuiteConfig};

#[test]
fn bundled_suite_passes() {
    let suite = SuiteConfig::default_suite();
    let reports = run_suite(&suite, true).unwrap();
    assert_eq!(reports.len(), suite.len());
    let failed: Vec<_> = reports.iter().filter(|r| !r.passed).collect();
    for r in &failed {
        eprintln!("{} {:?} lhs={:e} rhs={:e} rel={:e}", r.identity_id, r.params, r.lhs, r.rhs, r.rel_diff);
    }
    assert!(failed.is_empty(), "{} of {} rows failed", failed.len(), reports.len());
}

#[test]
fn parallel_and_serial_runs_agree() {
    let suite = SuiteConfig::default_suite();
    let a = run_suite(&suite, true).unwrap();
    let b = run_suite(&suite, false).unwrap();
    // compared through JSON so that NaN rows compare equal
    assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
}
