//! Seedable random state threaded explicitly through every probabilistic
//! operation so runs are reproducible.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Deterministic random generator: the same seed always yields the same
/// sample sequence, independent of platform.
#[derive(Debug, Clone)]
pub struct RngState {
    rng: ChaCha8Rng,
}

impl RngState {
    pub fn from_seed(seed: u64) -> Self {
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// Uniform sample from the inclusive range [lo, hi].
    pub fn sample_inclusive(&mut self, lo: u64, hi: u64) -> u64 {
        debug_assert!(lo <= hi);
        self.rng.random_range(lo..=hi)
    }

    /// Derive an independent generator, advancing this one.
    pub fn split(&mut self) -> RngState {
        RngState::from_seed(self.rng.random())
    }
}
