//! Key generation, encryption, and decryption over single-word moduli.
//!
//! Messages are bare integers in [0, n); there is no padding and no byte
//! encoding, which also means none of this is safe for real-world use.

use crate::error::{Error, Result};
use crate::modarith::{gcd_raw, mod_inverse, ExpMethod};
use crate::primality::is_probable_prime;
use crate::rng::RngState;
use crate::sieve::{sieve_primes, PrimeTable, DEFAULT_SIEVE_LIMIT};

/// Public half of a keypair: exponent e and modulus n.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PublicKey {
    pub e: u64,
    pub n: u64,
}

/// Private half of a keypair: exponent d and modulus n.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrivateKey {
    pub d: u64,
    pub n: u64,
}

/// A complete keypair, retaining the generating primes and totient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KeyPair {
    pub public: PublicKey,
    pub private: PrivateKey,
    pub p: u64,
    pub q: u64,
    pub phi: u64,
}

/// Knobs for [`generate_keypair`]: the RNG seed, the index window of the
/// prime table that candidates are drawn from, and the primality iteration
/// counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KeyGenParams {
    pub seed: u64,
    pub index_min: u32,
    pub index_max: u32,
    pub fermat_iters: u32,
    pub mr_iters: u32,
}

impl KeyGenParams {
    /// Defaults: candidate primes are the 1001st through 10,000th
    /// (values 7927..=104729), 5 Fermat rounds, 20 Miller-Rabin rounds.
    pub fn new(seed: u64) -> Self {
        Self {
            seed,
            index_min: 1000,
            index_max: 9999,
            fermat_iters: 5,
            mr_iters: 20,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.index_min > self.index_max || self.index_max > 9999 {
            return Err(Error::IndexRange {
                min: self.index_min,
                max: self.index_max,
            });
        }
        Ok(())
    }
}

/// Moduli must stay below 2^63 so every multiplication fits the 128-bit
/// intermediate exactly.
const MAX_MODULUS: u64 = 1 << 63;

/// Retry cap for the sampling loops; they terminate on the first draw in
/// practice.
const MAX_ATTEMPTS: u32 = 1_000_000;

/// Seed for the deterministic primality re-verification inside
/// [`keypair_from_primes`]. The verdict for a true prime does not depend on
/// the bases drawn, so any fixed value works.
const VERIFY_SEED: u64 = 0x9e37_79b9_7f4a_7c15;

/// Draw table indices uniformly from the configured window until a value
/// passes the full primality pipeline. With a correctly sieved table the
/// first draw wins.
pub fn sample_prime_candidate(
    table: &PrimeTable,
    params: &KeyGenParams,
    rng: &mut RngState,
) -> Result<u64> {
    params.validate()?;
    for _ in 0..MAX_ATTEMPTS {
        let index = rng.sample_inclusive(params.index_min as u64, params.index_max as u64);
        let candidate = table.nth_prime(index as usize)?;
        if is_probable_prime(candidate, params.fermat_iters, params.mr_iters, rng)?
            .is_probably_prime()
        {
            return Ok(candidate);
        }
    }
    Err(Error::GenerationExhausted {
        what: "prime candidate",
        attempts: MAX_ATTEMPTS,
    })
}

/// Generate a fresh keypair: draw distinct primes p and q, form n = p*q and
/// phi = (p-1)(q-1), pick a random e coprime to phi, and set d = e^-1 mod
/// phi. Fully determined by `params.seed`.
pub fn generate_keypair(params: &KeyGenParams) -> Result<KeyPair> {
    params.validate()?;
    let table = sieve_primes(DEFAULT_SIEVE_LIMIT)?;
    let mut rng = RngState::from_seed(params.seed);

    let p = sample_prime_candidate(&table, params, &mut rng)?;
    let mut q = sample_prime_candidate(&table, params, &mut rng)?;
    let mut redraws = 0;
    while q == p {
        redraws += 1;
        if redraws >= MAX_ATTEMPTS {
            return Err(Error::GenerationExhausted {
                what: "distinct second prime",
                attempts: MAX_ATTEMPTS,
            });
        }
        q = sample_prime_candidate(&table, params, &mut rng)?;
    }

    let n = p * q;
    let phi = (p - 1) * (q - 1);

    let mut e = 0;
    for _ in 0..MAX_ATTEMPTS {
        let candidate = rng.sample_inclusive(3, phi - 1);
        if gcd_raw(candidate, phi) == 1 {
            e = candidate;
            break;
        }
    }
    if e == 0 {
        return Err(Error::GenerationExhausted {
            what: "public exponent",
            attempts: MAX_ATTEMPTS,
        });
    }
    let d = mod_inverse(e, phi)?;

    Ok(KeyPair {
        public: PublicKey { e, n },
        private: PrivateKey { d, n },
        p,
        q,
        phi,
    })
}

/// Build a keypair from explicitly chosen primes and public exponent.
/// Deterministic, so known published key material can be reconstructed
/// exactly. Both inputs are re-verified with the primality pipeline.
pub fn keypair_from_primes(p: u64, q: u64, e: u64) -> Result<KeyPair> {
    if p == q {
        return Err(Error::IdenticalPrimes(p));
    }
    for value in [p, q] {
        if value < 2 {
            return Err(Error::NotPrime(value));
        }
        let mut rng = RngState::from_seed(VERIFY_SEED);
        if !is_probable_prime(value, 5, 20, &mut rng)?.is_probably_prime() {
            return Err(Error::NotPrime(value));
        }
    }
    let n = p
        .checked_mul(q)
        .filter(|&n| n < MAX_MODULUS)
        .ok_or(Error::ModulusOverflow { p, q })?;
    let phi = (p - 1) * (q - 1);
    if e <= 1 || e >= phi {
        return Err(Error::ExponentOutOfRange { e, phi });
    }
    if gcd_raw(e, phi) != 1 {
        return Err(Error::ExponentNotCoprime { e, phi });
    }
    let d = mod_inverse(e, phi)?;
    Ok(KeyPair {
        public: PublicKey { e, n },
        private: PrivateKey { d, n },
        p,
        q,
        phi,
    })
}

/// Encrypt: m^e mod n. The message must already be reduced; anything >= n
/// is rejected rather than silently wrapped, since the wrapped value would
/// decrypt to a different message.
pub fn encrypt(key: &PublicKey, m: u64, method: ExpMethod) -> Result<u64> {
    if m >= key.n {
        return Err(Error::MessageOutOfRange {
            value: m,
            modulus: key.n,
        });
    }
    method.modexp(m, key.e, key.n)
}

/// Decrypt: c^d mod n.
pub fn decrypt(key: &PrivateKey, c: u64, method: ExpMethod) -> Result<u64> {
    if c >= key.n {
        return Err(Error::CipherOutOfRange {
            value: c,
            modulus: key.n,
        });
    }
    method.modexp(c, key.d, key.n)
}
