//! Probabilistic primality testing: a Fermat pre-filter backed by
//! Miller-Rabin confirmation, plus a trial-division ground truth for tests.
//!
//! Base sampling uses the range [2, n-2]. Bases 1 and n-1 never witness
//! anything, so n in {2, 3, 4} is classified directly instead of sampled.
//! Every probabilistic entry point takes an explicit [`RngState`], which
//! makes verdicts a pure function of (n, iterations, seed).

use crate::error::{Error, Result};
use crate::modarith::{modexp_raw, mulmod_raw};
use crate::rng::RngState;

/// Outcome of a primality test. `Composite` is always definite;
/// `ProbablyPrime` records how many individual test rounds passed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Composite,
    ProbablyPrime { iterations_passed: u32 },
}

impl Verdict {
    pub fn is_probably_prime(&self) -> bool {
        matches!(self, Verdict::ProbablyPrime { .. })
    }

    fn probably_prime(iterations_passed: u32) -> Verdict {
        Verdict::ProbablyPrime { iterations_passed }
    }
}

/// The factorization n - 1 = 2^s * t with t odd, as used by Miller-Rabin.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MrDecomposition {
    /// Power of two.
    pub s: u32,
    /// Odd part.
    pub t: u64,
}

/// Split n - 1 into 2^s * t with t odd. Requires odd n >= 3.
pub fn decompose(n: u64) -> Result<MrDecomposition> {
    if n < 3 || n.is_multiple_of(2) {
        return Err(Error::DecomposeDomain(n));
    }
    let s = (n - 1).trailing_zeros();
    Ok(MrDecomposition { s, t: (n - 1) >> s })
}

/// One Fermat round: does base^(n-1) ≡ 1 (mod n)? True is consistent with
/// n prime; false proves n composite. Requires n >= 2.
pub fn fermat_round(n: u64, base: u64) -> bool {
    debug_assert!(n >= 2);
    modexp_raw(base, n - 1, n) == 1
}

/// One Miller-Rabin round for odd n >= 3: true when `base` is consistent
/// with n prime, false when it witnesses compositeness.
pub fn miller_rabin_round(n: u64, base: u64) -> Result<bool> {
    let decomp = decompose(n)?;
    Ok(mr_base_consistent(n, decomp, base))
}

fn mr_base_consistent(n: u64, decomp: MrDecomposition, base: u64) -> bool {
    let mut x = modexp_raw(base, decomp.t, n);
    if x == 1 || x == n - 1 {
        return true;
    }
    for _ in 1..decomp.s {
        x = mulmod_raw(x, x, n);
        if x == n - 1 {
            return true;
        }
        if x == 1 {
            // nontrivial square root of 1: composite for sure
            return false;
        }
    }
    false
}

/// Fermat test with `iterations` random bases from [2, n-2].
pub fn fermat_test(n: u64, iterations: u32, rng: &mut RngState) -> Result<Verdict> {
    if iterations == 0 {
        return Err(Error::ZeroIterations);
    }
    if n < 2 {
        return Err(Error::PrimalityDomain(n));
    }
    match n {
        2 | 3 => return Ok(Verdict::probably_prime(0)),
        4 => return Ok(Verdict::Composite),
        _ => {}
    }
    for _ in 0..iterations {
        let base = rng.sample_inclusive(2, n - 2);
        if !fermat_round(n, base) {
            return Ok(Verdict::Composite);
        }
    }
    Ok(Verdict::probably_prime(iterations))
}

/// Miller-Rabin test with `iterations` random bases from [2, n-2]. Each
/// round a composite survives has probability at most 1/4, so k rounds
/// bound the error by 4^-k.
pub fn miller_rabin(n: u64, iterations: u32, rng: &mut RngState) -> Result<Verdict> {
    if iterations == 0 {
        return Err(Error::ZeroIterations);
    }
    if n < 2 {
        return Err(Error::PrimalityDomain(n));
    }
    match n {
        2 | 3 => return Ok(Verdict::probably_prime(0)),
        _ if n.is_multiple_of(2) => return Ok(Verdict::Composite),
        _ => {}
    }
    let decomp = decompose(n)?;
    for _ in 0..iterations {
        let base = rng.sample_inclusive(2, n - 2);
        if !mr_base_consistent(n, decomp, base) {
            return Ok(Verdict::Composite);
        }
    }
    Ok(Verdict::probably_prime(iterations))
}

/// Full candidate pipeline: a fixed base-2 Fermat check, then `fermat_iters`
/// random Fermat rounds, then `mr_iters` Miller-Rabin rounds. Composite
/// short-circuits. `iterations_passed` counts every round that ran.
pub fn is_probable_prime(
    n: u64,
    fermat_iters: u32,
    mr_iters: u32,
    rng: &mut RngState,
) -> Result<Verdict> {
    if n < 2 {
        return Err(Error::PrimalityDomain(n));
    }
    if n == 2 || n == 3 {
        return Ok(Verdict::probably_prime(0));
    }
    if !fermat_round(n, 2) {
        return Ok(Verdict::Composite);
    }
    let mut rounds = 1;
    match fermat_test(n, fermat_iters, rng)? {
        Verdict::Composite => return Ok(Verdict::Composite),
        Verdict::ProbablyPrime { iterations_passed } => rounds += iterations_passed,
    }
    match miller_rabin(n, mr_iters, rng)? {
        Verdict::Composite => Ok(Verdict::Composite),
        Verdict::ProbablyPrime { iterations_passed } => {
            Ok(Verdict::probably_prime(rounds + iterations_passed))
        }
    }
}

/// Definite primality by dividing out every candidate up to sqrt(n).
/// Ground-truth oracle for the probabilistic tests; guarded to n <= 10^12.
pub fn trial_division(n: u64) -> Result<Verdict> {
    if !(2..=1_000_000_000_000).contains(&n) {
        return Err(Error::TrialDivisionRange(n));
    }
    if n.is_multiple_of(2) {
        return Ok(if n == 2 {
            Verdict::probably_prime(0)
        } else {
            Verdict::Composite
        });
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return Ok(Verdict::Composite);
        }
        d += 2;
    }
    Ok(Verdict::probably_prime(0))
}
