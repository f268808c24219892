//! Randomized invariants for the arithmetic core and the key-file format.

use proptest::prelude::*;

use rsa_toy::bench::{write_csv, BenchRecord};
use rsa_toy::keyfile::{read_key, write_key, KeyDocument, KeyKind};
use rsa_toy::modarith::{
    ext_gcd, gcd, mod_inverse, modexp, modexp_naive, mulmod, ExpMethod, NAIVE_MODULUS_LIMIT,
};

/// Iterated-multiplication oracle with a wide accumulator; exact for any
/// modulus, feasible only for small exponents.
fn modexp_by_iteration(base: u64, exp: u64, n: u64) -> u64 {
    let n = n as u128;
    let mut acc = 1 % n;
    for _ in 0..exp {
        acc = acc * base as u128 % n;
    }
    acc as u64
}

proptest! {
    #[test]
    fn mulmod_matches_wide_reference(a: u64, b: u64, n in 1u64..(1 << 63)) {
        let want = ((a as u128 * b as u128) % n as u128) as u64;
        prop_assert_eq!(mulmod(a, b, n).unwrap(), want);
        prop_assert!(mulmod(a, b, n).unwrap() < n);
    }

    #[test]
    fn modexp_matches_iteration_oracle(
        base in 0u64..=10_000,
        exp in 0u64..=10_000,
        n in 1u64..=10_000,
    ) {
        prop_assert_eq!(modexp(base, exp, n).unwrap(), modexp_by_iteration(base, exp, n));
    }

    #[test]
    fn naive_agrees_with_fast_in_safe_range(
        base: u64,
        exp in 0u64..=5_000,
        n in 1u64..=NAIVE_MODULUS_LIMIT,
    ) {
        prop_assert_eq!(modexp_naive(base, exp, n).unwrap(), modexp(base, exp, n).unwrap());
    }

    #[test]
    fn ext_gcd_satisfies_bezout(a: u64, b: u64) {
        prop_assume!(a != 0 || b != 0);
        let (g, x, y) = ext_gcd(a, b).unwrap();
        prop_assert_eq!(g, gcd(a, b).unwrap());
        prop_assert_eq!(a as i128 * x + b as i128 * y, g as i128);
    }

    #[test]
    fn mod_inverse_inverts_or_reports(e: u64, m in 2u64..) {
        match mod_inverse(e, m) {
            Ok(d) => {
                prop_assert!(d >= 1 && d < m);
                prop_assert_eq!(mulmod(d, e % m, m).unwrap(), 1 % m);
                prop_assert_eq!(gcd(e, m).unwrap(), 1);
            }
            Err(_) => prop_assert_ne!(gcd(e, m).unwrap(), 1),
        }
    }

    #[test]
    fn key_documents_roundtrip(
        public in any::<bool>(),
        exponent in 1u64..,
        modulus in 6u64..,
    ) {
        let doc = KeyDocument {
            kind: if public { KeyKind::Public } else { KeyKind::Private },
            exponent,
            modulus,
        };
        prop_assert_eq!(read_key(write_key(&doc).as_bytes()).unwrap(), doc);
    }

    #[test]
    fn key_parser_never_panics_on_noise(bytes in proptest::collection::vec(any::<u8>(), 0..256)) {
        let _ = read_key(&bytes);
    }

    #[test]
    fn key_parser_never_panics_on_mutated_valid_files(
        exponent in 1u64..,
        modulus in 6u64..,
        idx in 0usize..64,
        byte: u8,
        truncate in 0usize..64,
    ) {
        let doc = KeyDocument { kind: KeyKind::Public, exponent, modulus };
        let mut bytes = write_key(&doc).into_bytes();
        let pos = idx % bytes.len();
        bytes[pos] = byte;
        let _ = read_key(&bytes);
        let keep = bytes.len() - truncate % bytes.len();
        let _ = read_key(&bytes[..keep]);
    }

    #[test]
    fn csv_rows_roundtrip(
        phi: u64,
        d: u64,
        naive: bool,
        elapsed in proptest::option::of(0.0f64..1.0e6),
        message: u64,
    ) {
        let record = BenchRecord {
            phi,
            d,
            method: if naive { ExpMethod::Naive } else { ExpMethod::SquareMultiply },
            elapsed_seconds: elapsed,
            message,
        };
        let text = write_csv(std::slice::from_ref(&record));
        let mut lines = text.lines();
        prop_assert_eq!(lines.next(), Some("phi,d,method,elapsed_seconds,message"));
        let row = lines.next().unwrap();
        let fields: Vec<&str> = row.split(',').collect();
        prop_assert_eq!(fields.len(), 5);
        prop_assert_eq!(fields[0].parse::<u64>().unwrap(), record.phi);
        prop_assert_eq!(fields[1].parse::<u64>().unwrap(), record.d);
        prop_assert_eq!(fields[2].parse::<ExpMethod>().unwrap(), record.method);
        let parsed_elapsed = if fields[3].is_empty() {
            None
        } else {
            Some(fields[3].parse::<f64>().unwrap())
        };
        prop_assert_eq!(parsed_elapsed, record.elapsed_seconds);
        prop_assert_eq!(fields[4].parse::<u64>().unwrap(), record.message);
        prop_assert_eq!(lines.next(), None);
    }
}
