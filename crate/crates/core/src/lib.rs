//! Bi-objective quadratic minimum spanning tree under rough-fuzzy costs.
//!
//! Edge costs and pairwise interaction costs are rough-fuzzy variables. A
//! chance constraint at trust level `alpha` and credibility level `beta`
//! reduces each objective to a crisp bound, which exact enumeration
//! ([`exact`]) or evolutionary search ([`moea`]) then minimizes.
//!
//! Numeric code is generic over [`Scalar`] (`f32` or `f64`); the aliases
//! below fix the common `f64` instantiations.

pub mod dsu;
pub mod error;
pub mod exact;
pub mod instance;
pub mod metrics;
pub mod moea;
pub mod qmst;
pub mod scalar;
pub mod uncertainty;

pub use error::{Error, Result};
pub use instance::{generate_random, paper_instance, parse_instance, serialize_instance};
pub use qmst::{dominates, EvalContext, ObjectivePair, TreeGenotype};
pub use scalar::Scalar;
pub use uncertainty::ConfidenceLevels;

pub type Instance64 = instance::Instance<f64>;
pub type Instance32 = instance::Instance<f32>;
pub type Tfv64 = uncertainty::TriangularFuzzy<f64>;
pub type Tfv32 = uncertainty::TriangularFuzzy<f32>;
pub type RoughFuzzy64 = uncertainty::RoughFuzzyWeight<f64>;
pub type RoughFuzzy32 = uncertainty::RoughFuzzyWeight<f32>;
pub type Levels64 = ConfidenceLevels<f64>;
pub type Levels32 = ConfidenceLevels<f32>;
pub type Objectives64 = ObjectivePair<f64>;
pub type Objectives32 = ObjectivePair<f32>;
pub type Front64 = metrics::Front<f64>;
pub type Front32 = metrics::Front<f32>;
