//! Hybrid uncertainty calculus: fuzzy credibility, rough trust, and the crisp
//! reduction of rough-fuzzy chance constraints.

mod chance;
mod fuzzy;
mod rough;

pub use chance::{
    chance_reduce, chance_reduce_bisect_oracle, chance_reduce_branch, AggregatedChance,
    ChanceBranch, ConfidenceLevels,
};
pub use fuzzy::{AffineTerm, TriangularFuzzy};
pub use rough::{RoughFuzzyWeight, RoughInterval};
