//! Generalized hypergeometric functions evaluated through their Pochhammer
//! moments.
//!
//! A `pFq` series is treated as the exponential of an umbral symbol whose
//! action on a vacuum returns a ratio of Pochhammer symbols. Because that
//! moment map is defined for any real index, the same parameter lists give
//! closed forms for derivatives, antiderivatives, Mellin transforms and
//! Gaussian-weighted integrals. Every closed form here has an independent
//! check: adaptive quadrature for integrals, termwise series arithmetic for
//! differential relations.
//!
//! Module map:
//!
//! * [`pochhammer`]: rising factorials for real shifts.
//! * [`hyperseries`]: truncated `pFq`, Fox–Wright and two-variable series.
//! * [`umbral`]: the moment map and the parameter-shift rules it implies.
//! * [`quadrature`]: adaptive Gauss–Kronrod over finite and infinite ranges.
//! * [`integrals`]: closed-form integral evaluators and their oracles.
//! * [`odes`]: residuals of the differential relations.
//! * [`special`]: Bessel, Tricomi, circular and Landau functions.
//! * [`suite`]: the JSON-configured identity suite behind `verify`.

pub mod error;
pub mod gamma;
pub mod hyperseries;
pub mod integrals;
pub mod odes;
pub mod pochhammer;
pub mod quadrature;
pub mod special;
pub mod suite;
pub mod umbral;

pub use error::{Error, Result};
pub use hyperseries::{
    classify_convergence, eval_appell, eval_fox_wright, eval_pfq, Convergence, EvalResult,
    FoxWrightParams, HypergeometricParams, SeriesControl,
};
pub use quadrature::{integrate, Domain, QuadratureResult};
pub use umbral::UmbralSymbol;
