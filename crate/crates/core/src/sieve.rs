//! Sieve of Eratosthenes and the prime table that key generation samples
//! from.

use crate::error::{Error, Result};

/// Default sieve bound: covers the first 10,000 primes (the last one is
/// 104,729) with a little margin.
pub const DEFAULT_SIEVE_LIMIT: u64 = 104_730;

/// Resource guard on the sieve bound.
pub const MAX_SIEVE_LIMIT: u64 = 100_000_000;

/// Ordered table of every prime in `[2, limit]`. Immutable once built, so it
/// can be shared freely across threads.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeTable {
    limit: u64,
    primes: Vec<u64>,
}

impl PrimeTable {
    /// The inclusive upper bound the table was sieved to.
    pub fn limit(&self) -> u64 {
        self.limit
    }

    /// All primes in ascending order.
    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    pub fn len(&self) -> usize {
        self.primes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.primes.is_empty()
    }

    /// The prime at `index` (0-based), or a bounds error.
    pub fn nth_prime(&self, index: usize) -> Result<u64> {
        self.primes.get(index).copied().ok_or(Error::IndexOutOfRange {
            index,
            len: self.primes.len(),
        })
    }
}

/// Build the table of all primes up to `limit` (inclusive). Composite
/// marking for each prime p starts at p*p, since smaller multiples were
/// already marked by smaller primes.
pub fn sieve_primes(limit: u64) -> Result<PrimeTable> {
    if limit < 2 {
        return Err(Error::SieveLimitTooSmall(limit));
    }
    if limit > MAX_SIEVE_LIMIT {
        return Err(Error::SieveLimitTooLarge(limit));
    }
    let bound = limit as usize;
    let mut is_prime = vec![true; bound + 1];
    is_prime[0] = false;
    is_prime[1] = false;
    let mut p = 2usize;
    while p * p <= bound {
        if is_prime[p] {
            for multiple in (p * p..=bound).step_by(p) {
                is_prime[multiple] = false;
            }
        }
        p += 1;
    }
    let primes = is_prime
        .iter()
        .enumerate()
        .filter_map(|(value, &keep)| keep.then_some(value as u64))
        .collect();
    Ok(PrimeTable { limit, primes })
}
