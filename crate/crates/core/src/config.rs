use serde::{Deserialize, Serialize};

/// Tunables shared by the randomized and size-guarded computations.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct ComputeConfig {
    /// Seed for every randomized step (generic ranks, sample points).
    pub seed: u64,
    /// Polynomial matrices with at most this many rows and columns are
    /// ranked symbolically; larger ones by random evaluation.
    pub symbolic_max_dim: usize,
    /// Evaluation points tried by a randomized generic rank.
    pub random_trials: usize,
    /// Maximal number of maximal minors enumerated for a Weierstrass locus.
    pub minors_cap: usize,
    /// Height bound for the saturation scan of vertex semigroups.
    pub very_ample_bound: u32,
    /// Rational sample points used by pointwise checks.
    pub sample_points: usize,
}

impl Default for ComputeConfig {
    fn default() -> Self {
        ComputeConfig {
            seed: 0,
            symbolic_max_dim: 12,
            random_trials: 6,
            minors_cap: 5000,
            very_ample_bound: 10,
            sample_points: 10,
        }
    }
}

impl ComputeConfig {
    pub fn with_seed(seed: u64) -> Self {
        ComputeConfig {
            seed,
            ..Self::default()
        }
    }
}
