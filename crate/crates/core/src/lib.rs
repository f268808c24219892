//! An educational textbook-RSA toolkit over 64-bit moduli.
//!
//! The pieces fit together the way a first from-scratch implementation
//! does: a Sieve of Eratosthenes builds a table of small primes, candidates
//! drawn from it are screened by a Fermat test and confirmed by
//! Miller-Rabin, and the resulting keypair drives bare modular
//! exponentiation of integer messages. A benchmark harness contrasts the
//! one-multiplication-per-exponent-unit decrypt loop with
//! square-and-multiply to show why the naive version is unusable even at
//! these toy sizes.
//!
//! None of this is cryptographically safe: moduli fit in a machine word,
//! there is no padding, and nothing is constant-time. It exists to be read.

#![forbid(unsafe_code)]

pub mod bench;
pub mod cli;
pub mod error;
pub mod keyfile;
pub mod modarith;
pub mod primality;
pub mod rng;
pub mod rsa;
pub mod sieve;

pub use error::{Error, Result};
pub use keyfile::{KeyDocument, KeyKind};
pub use modarith::ExpMethod;
pub use primality::Verdict;
pub use rng::RngState;
pub use rsa::{KeyGenParams, KeyPair, PrivateKey, PublicKey};
pub use sieve::PrimeTable;
