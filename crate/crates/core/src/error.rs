use crate::keyfile::KeyKind;

/// Crate-wide error type. Every fallible operation returns one of these;
/// none of them panic on bad input.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("zero modulus")]
    ZeroModulus,

    #[error("modulus {0} too large for naive path (limit {limit})", limit = crate::modarith::NAIVE_MODULUS_LIMIT)]
    NaiveModulusTooLarge(u64),

    #[error("gcd(0, 0) is undefined")]
    GcdOfZeros,

    #[error("{value} is not invertible modulo {modulus}")]
    NotInvertible { value: u64, modulus: u64 },

    #[error("modulus {0} must be at least 2")]
    ModulusTooSmall(u64),

    #[error("sieve limit {0} must be at least 2")]
    SieveLimitTooSmall(u64),

    #[error("sieve limit {0} exceeds the resource guard of {limit}", limit = crate::sieve::MAX_SIEVE_LIMIT)]
    SieveLimitTooLarge(u64),

    #[error("prime index {index} out of range for a table of {len} primes")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("{0} is below the primality test domain (need n >= 2)")]
    PrimalityDomain(u64),

    #[error("cannot decompose {0}: need an odd n >= 3")]
    DecomposeDomain(u64),

    #[error("iteration count must be at least 1")]
    ZeroIterations,

    #[error("{0} out of range for trial division (need 2 <= n <= 10^12)")]
    TrialDivisionRange(u64),

    #[error("identical primes: p and q must differ (both were {0})")]
    IdenticalPrimes(u64),

    #[error("input not prime: {0}")]
    NotPrime(u64),

    #[error("exponent {e} not coprime to {phi}")]
    ExponentNotCoprime { e: u64, phi: u64 },

    #[error("public exponent {e} out of range (need 1 < e < {phi})")]
    ExponentOutOfRange { e: u64, phi: u64 },

    #[error("product of {p} and {q} overflows the supported modulus range")]
    ModulusOverflow { p: u64, q: u64 },

    #[error("prime index range [{min}, {max}] invalid (need min <= max <= 9999)")]
    IndexRange { min: u32, max: u32 },

    #[error("message {value} out of range for modulus {modulus}")]
    MessageOutOfRange { value: u64, modulus: u64 },

    #[error("cipher {value} out of range for modulus {modulus}")]
    CipherOutOfRange { value: u64, modulus: u64 },

    #[error("key generation gave up after {attempts} attempts ({what})")]
    GenerationExhausted { what: &'static str, attempts: u32 },

    #[error("unrecognized format")]
    UnrecognizedFormat,

    #[error("inconsistent key: kind `{kind}` paired with a `{label}:` exponent line")]
    InconsistentKey { kind: KeyKind, label: char },

    #[error("key parse error at line {line}: {reason}")]
    KeyParse { line: usize, reason: String },

    #[error("expected a {expected} key")]
    WrongKeyKind { expected: KeyKind },

    #[error("unknown exponentiation method `{0}`")]
    UnknownMethod(String),

    #[error("no exponentiation methods requested")]
    NoMethods,

    #[error("trial count must be at least 1")]
    ZeroTrials,

    #[error("bench decrypt mismatch: got {got}, expected {expected}")]
    BenchMismatch { got: u64, expected: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;
