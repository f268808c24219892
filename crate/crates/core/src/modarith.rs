//! Overflow-safe modular arithmetic primitives.
//!
//! All products go through a 128-bit intermediate, so results are exact for
//! any modulus below 2^63. The one deliberate exception is [`modexp_naive`],
//! which multiplies in plain 64-bit arithmetic and therefore caps its modulus
//! at [`NAIVE_MODULUS_LIMIT`]; it exists as the slow baseline for the
//! benchmark, not for general use.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest modulus accepted by [`modexp_naive`]: floor(2^31.5). Two reduced
/// operands below this bound multiply to less than 2^63 without widening.
pub const NAIVE_MODULUS_LIMIT: u64 = 3_037_000_499;

/// Which exponentiation routine to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExpMethod {
    /// One modular multiplication per unit of the exponent.
    Naive,
    /// Right-to-left binary square-and-multiply.
    SquareMultiply,
}

impl ExpMethod {
    /// Compute `base^exp mod n` with this method.
    pub fn modexp(self, base: u64, exp: u64, n: u64) -> Result<u64> {
        match self {
            ExpMethod::Naive => modexp_naive(base, exp, n),
            ExpMethod::SquareMultiply => modexp(base, exp, n),
        }
    }
}

impl fmt::Display for ExpMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExpMethod::Naive => f.write_str("naive"),
            ExpMethod::SquareMultiply => f.write_str("square-multiply"),
        }
    }
}

impl FromStr for ExpMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "naive" => Ok(ExpMethod::Naive),
            "fast" | "square-multiply" => Ok(ExpMethod::SquareMultiply),
            other => Err(Error::UnknownMethod(other.to_string())),
        }
    }
}

// Core routines for callers that have already established n >= 1.

pub(crate) fn mulmod_raw(a: u64, b: u64, n: u64) -> u64 {
    debug_assert!(n >= 1);
    ((a as u128 * b as u128) % n as u128) as u64
}

pub(crate) fn modexp_raw(base: u64, mut exp: u64, n: u64) -> u64 {
    debug_assert!(n >= 1);
    let mut result = 1 % n;
    let mut base = base % n;
    while exp > 0 {
        if exp & 1 == 1 {
            result = mulmod_raw(result, base, n);
        }
        base = mulmod_raw(base, base, n);
        exp >>= 1;
    }
    result
}

pub(crate) fn gcd_raw(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// `(a * b) mod n` without intermediate overflow, for any `n` below 2^63.
pub fn mulmod(a: u64, b: u64, n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::ZeroModulus);
    }
    Ok(mulmod_raw(a, b, n))
}

/// `base^exp mod n` by square-and-multiply: O(log exp) multiplications.
///
/// `modexp(b, 0, n)` is `1 mod n`, so 0 when n = 1.
pub fn modexp(base: u64, exp: u64, n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::ZeroModulus);
    }
    Ok(modexp_raw(base, exp, n))
}

/// `base^exp mod n` by `exp` sequential multiplications in plain 64-bit
/// arithmetic. Kept as the benchmark baseline; the modulus must not exceed
/// [`NAIVE_MODULUS_LIMIT`] so the running product stays below 2^63.
pub fn modexp_naive(base: u64, exp: u64, n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::ZeroModulus);
    }
    if n > NAIVE_MODULUS_LIMIT {
        return Err(Error::NaiveModulusTooLarge(n));
    }
    let base = base % n;
    let mut result = 1 % n;
    for _ in 0..exp {
        result = result * base % n;
    }
    Ok(result)
}

/// Greatest common divisor by Euclid's algorithm.
pub fn gcd(a: u64, b: u64) -> Result<u64> {
    if a == 0 && b == 0 {
        return Err(Error::GcdOfZeros);
    }
    Ok(gcd_raw(a, b))
}

/// Extended Euclid: returns `(g, x, y)` with `a*x + b*y = g = gcd(a, b)`.
/// Coefficients are computed over signed 128-bit integers so they cannot
/// overflow for any u64 inputs.
pub fn ext_gcd(a: u64, b: u64) -> Result<(u64, i128, i128)> {
    if a == 0 && b == 0 {
        return Err(Error::GcdOfZeros);
    }
    let (mut r0, mut r1) = (a as i128, b as i128);
    let (mut x0, mut x1) = (1i128, 0i128);
    let (mut y0, mut y1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (x0, x1) = (x1, x0 - q * x1);
        (y0, y1) = (y1, y0 - q * y1);
    }
    Ok((r0 as u64, x0, y0))
}

/// `e^-1 mod m`: the unique d in [1, m) with `(d * e) mod m = 1`.
pub fn mod_inverse(e: u64, m: u64) -> Result<u64> {
    if m < 2 {
        return Err(Error::ModulusTooSmall(m));
    }
    let (g, x, _) = ext_gcd(e, m)?;
    if g != 1 {
        return Err(Error::NotInvertible { value: e, modulus: m });
    }
    let m_wide = m as i128;
    Ok((x.rem_euclid(m_wide)) as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mulmod_examples() {
        assert_eq!(mulmod(7, 8, 5).unwrap(), 1);
        assert_eq!(mulmod(123_456, 1, 789).unwrap(), 123_456 % 789);
        assert_eq!(mulmod(1 << 62, 2, (1 << 63) - 1).unwrap(), 1);
        assert_eq!(mulmod(0, 0, 1).unwrap(), 0);
        assert_eq!(mulmod(3, 4, 0), Err(Error::ZeroModulus));
    }

    #[test]
    fn mulmod_matches_wide_reference_near_the_bound() {
        let n = (1u64 << 63) - 25; // largest prime below 2^63
        for &(a, b) in &[(n - 1, n - 1), (n - 2, n - 1), (1 << 62, 1 << 62), (u64::MAX, u64::MAX)] {
            let want = ((a as u128 * b as u128) % n as u128) as u64;
            assert_eq!(mulmod(a, b, n).unwrap(), want);
        }
    }

    #[test]
    fn modexp_examples() {
        assert_eq!(modexp(2, 10, 1000).unwrap(), 24);
        assert_eq!(modexp(9, 0, 7).unwrap(), 1);
        assert_eq!(modexp(9, 0, 1).unwrap(), 0);
        assert_eq!(modexp(5321, 11_723_299, 760_812_959).unwrap(), 573_183_424);
        assert_eq!(modexp(2, 5, 0), Err(Error::ZeroModulus));
    }

    #[test]
    fn modexp_naive_examples() {
        assert_eq!(modexp_naive(2, 10, 1000).unwrap(), 24);
        assert_eq!(modexp_naive(9, 1, 7).unwrap(), 2);
        assert_eq!(
            modexp_naive(3, 100_000, 65_537).unwrap(),
            modexp(3, 100_000, 65_537).unwrap()
        );
        assert_eq!(modexp_naive(2, 5, 0), Err(Error::ZeroModulus));
    }

    #[test]
    fn modexp_naive_modulus_cap() {
        // the cap itself is safe, one past it is not
        assert!(modexp_naive(2, 10, NAIVE_MODULUS_LIMIT).is_ok());
        assert_eq!(
            modexp_naive(2, 10, NAIVE_MODULUS_LIMIT + 1),
            Err(Error::NaiveModulusTooLarge(NAIVE_MODULUS_LIMIT + 1))
        );
        // worst-case operands at the cap must not wrap
        let n = NAIVE_MODULUS_LIMIT;
        assert_eq!(
            modexp_naive(n - 1, 2, n).unwrap(),
            mulmod(n - 1, n - 1, n).unwrap()
        );
    }

    #[test]
    fn modexp_naive_agrees_with_fast_exhaustively() {
        for n in 1..30u64 {
            for b in 0..30u64 {
                for e in 0..=1000u64 {
                    assert_eq!(
                        modexp_naive(b, e, n).unwrap(),
                        modexp(b, e, n).unwrap(),
                        "b={b} e={e} n={n}"
                    );
                }
            }
        }
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(gcd(12, 8).unwrap(), 4);
        assert_eq!(gcd(17, 0).unwrap(), 17);
        assert_eq!(gcd(0, 17).unwrap(), 17);
        assert_eq!(gcd(11_723_299, 760_738_680).unwrap(), 1);
        assert_eq!(gcd(0, 0), Err(Error::GcdOfZeros));
    }

    #[test]
    fn ext_gcd_examples() {
        let (g, x, y) = ext_gcd(3, 7).unwrap();
        assert_eq!((g, x, y), (1, -2, 1));
        assert_eq!(3 * x + 7 * y, 1);

        let (g, x, y) = ext_gcd(240, 46).unwrap();
        assert_eq!((g, x, y), (2, -9, 47));
        assert_eq!(240 * x + 46 * y, 2);

        let (g, x, y) = ext_gcd(5, 5).unwrap();
        assert_eq!(g, 5);
        assert_eq!(5 * x + 5 * y, 5);

        assert_eq!(ext_gcd(0, 0), Err(Error::GcdOfZeros));
    }

    #[test]
    fn ext_gcd_handles_full_u64_range() {
        let (g, x, y) = ext_gcd(u64::MAX, u64::MAX - 1).unwrap();
        assert_eq!(g, 1);
        assert_eq!(u64::MAX as i128 * x + (u64::MAX - 1) as i128 * y, 1);
    }

    #[test]
    fn mod_inverse_examples() {
        assert_eq!(mod_inverse(3, 7).unwrap(), 5);
        assert_eq!(mod_inverse(1, 97).unwrap(), 1);
        assert_eq!(mod_inverse(11_723_299, 760_738_680).unwrap(), 288_096_259);
        assert_eq!(
            mod_inverse(4, 8),
            Err(Error::NotInvertible { value: 4, modulus: 8 })
        );
        assert_eq!(mod_inverse(3, 1), Err(Error::ModulusTooSmall(1)));
        assert_eq!(
            mod_inverse(0, 5),
            Err(Error::NotInvertible { value: 0, modulus: 5 })
        );
    }

    #[test]
    fn mod_inverse_exhaustive_small_moduli() {
        // against brute-force search over residues
        for m in 2..60u64 {
            for e in 1..m {
                let brute = (1..m).find(|d| d * e % m == 1);
                match mod_inverse(e, m) {
                    Ok(d) => {
                        assert_eq!(Some(d), brute, "e={e} m={m}");
                        assert_eq!(d * e % m, 1);
                    }
                    Err(_) => assert_eq!(brute, None, "e={e} m={m}"),
                }
            }
        }
    }

    #[test]
    fn exp_method_dispatch_and_parsing() {
        assert_eq!(ExpMethod::Naive.modexp(2, 10, 1000).unwrap(), 24);
        assert_eq!(ExpMethod::SquareMultiply.modexp(2, 10, 1000).unwrap(), 24);
        assert_eq!("naive".parse::<ExpMethod>().unwrap(), ExpMethod::Naive);
        assert_eq!("fast".parse::<ExpMethod>().unwrap(), ExpMethod::SquareMultiply);
        assert_eq!(
            "square-multiply".parse::<ExpMethod>().unwrap(),
            ExpMethod::SquareMultiply
        );
        assert_eq!(ExpMethod::Naive.to_string(), "naive");
        assert_eq!(ExpMethod::SquareMultiply.to_string(), "square-multiply");
        assert!("slow".parse::<ExpMethod>().is_err());
    }
}
