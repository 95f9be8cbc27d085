//! Shared inputs for the criterion benchmarks.

use hyperumbral::HypergeometricParams;

/// A representative parameter set for each common `pFq` shape.
pub fn sample_params() -> Vec<(&'static str, HypergeometricParams, f64)> {
    vec![
        ("0F1", HypergeometricParams::new([], [0.5]), -25.0),
        ("1F1", HypergeometricParams::new([0.7], [1.9]), 12.0),
        ("2F1", HypergeometricParams::new([0.5, 1.5], [2.5]), 0.9),
        ("1F2", HypergeometricParams::new([0.5], [1.0, 1.0]), -30.0),
    ]
}
