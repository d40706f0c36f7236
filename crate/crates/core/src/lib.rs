//! Exact ℤ/2 Poincaré polynomials of moduli spaces of real vector bundles over
//! real curves.
//!
//! The pipeline is:
//!
//! - [`series`]: truncated power series with big-integer coefficients and
//!   symbolic products `prod (1 ± t^k)^e`;
//! - [`closed_forms`]: the gauge-group, loop-group, classical-group and
//!   low-rank moduli Poincaré series as factor data;
//! - [`strata`]: unstable Harder-Narasimhan types up to a codimension bound;
//! - [`recursion`]: the stratification recursion, memoized, with an optional
//!   on-disk [`cache`];
//! - [`identities`]: genus-zero generating function identities used as
//!   independent checks;
//! - [`tables`]: bundled reference polynomials.
//!
//! ```
//! use realbetti::{moduli_betti, RealCurveTopology};
//!
//! let curve = RealCurveTopology::new(2, 1).unwrap();
//! let result = moduli_betti(2, 1, &curve).unwrap();
//! assert_eq!(result.polynomial.to_string(), "1 + 3t + 4t^2 + 4t^3 + 3t^4 + t^5");
//! ```

pub mod cache;
pub mod closed_forms;
pub mod curves;
pub mod error;
pub mod identities;
pub mod recursion;
pub mod series;
pub mod strata;
pub mod tables;

pub use cache::{CacheStats, DiskCache, CACHE_DIR_ENV};
pub use closed_forms::{
    classical_group_series, gauge_classifying_series, loop_group_series,
    low_rank_moduli_closed_form, ClassicalFamily, ClosedForm, FormulaId, FormulaParams, GroupRank,
    LoopKind,
};
pub use curves::{
    enumerate_real_types, quaternionic_admissible, quaternionic_to_real, validate_topology,
    QuaternionicBundleType, RealBundleType, RealCurveTopology,
};
pub use error::{Error, Result};
pub use recursion::{
    default_order, expected_moduli_degree, moduli_betti, semistable_series, BettiResult, Engine,
    ModuliOptions, ModuliParams, RecursionKey,
};
pub use series::{
    extract_polynomial, is_palindromic, series_div, series_from_factors, series_mul,
    BettiPolynomial, Factor, FactorProduct, TruncatedSeries,
};
pub use strata::{
    codimension, enumerate_unstable_types, real_refinement_count, ComplexHnType, Part, RealHnType,
};
