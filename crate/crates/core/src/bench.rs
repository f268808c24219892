//! Timing harness contrasting naive exponentiation with square-and-multiply
//! on the decrypt step, where the private exponent makes the naive loop
//! painfully slow.

use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::modarith::{modexp_naive, ExpMethod, NAIVE_MODULUS_LIMIT};
use crate::rsa::{decrypt, encrypt, generate_keypair, KeyGenParams, PrivateKey};

/// The plaintext used when none is specified.
pub const DEFAULT_MESSAGE: u64 = 25_000;

/// Per-trial ceiling on the projected naive decrypt time.
pub const DEFAULT_NAIVE_BUDGET: Duration = Duration::from_secs(120);

/// Exponent used to calibrate the per-multiplication cost of the naive loop.
const CALIBRATION_EXP: u64 = 2_000_000;

/// One timing observation. `elapsed_seconds` is `None` when the trial was
/// skipped: either the projected naive time exceeded the budget, or the
/// modulus fell outside the naive-safe range.
#[derive(Debug, Clone, PartialEq)]
pub struct BenchRecord {
    pub phi: u64,
    pub d: u64,
    pub method: ExpMethod,
    pub elapsed_seconds: Option<f64>,
    pub message: u64,
}

impl BenchRecord {
    pub fn skipped(&self) -> bool {
        self.elapsed_seconds.is_none()
    }
}

/// Decrypt once untimed to warm caches, then once timed. Returns the
/// recovered message alongside the wall-clock duration of the timed run.
pub fn measure_decrypt(
    key: &PrivateKey,
    cipher: u64,
    method: ExpMethod,
) -> Result<(u64, Duration)> {
    std::hint::black_box(decrypt(key, cipher, method)?);
    let start = Instant::now();
    let recovered = decrypt(key, cipher, method)?;
    let elapsed = start.elapsed();
    Ok((std::hint::black_box(recovered), elapsed))
}

/// Estimate how long one naive decrypt with exponent `d` would take by
/// timing a short calibration loop on a representative modulus.
fn projected_naive_time(d: u64) -> Duration {
    let start = Instant::now();
    std::hint::black_box(modexp_naive(3, CALIBRATION_EXP, 1_000_000_007).expect("valid modulus"));
    let per_multiply = start.elapsed().as_secs_f64() / CALIBRATION_EXP as f64;
    Duration::from_secs_f64(per_multiply * d as f64)
}

/// Run `trials` independent trials with the default 120 s naive budget.
pub fn run_bench(
    seed: u64,
    trials: u32,
    methods: &[ExpMethod],
    message: u64,
) -> Result<Vec<BenchRecord>> {
    run_bench_with_budget(seed, trials, methods, message, DEFAULT_NAIVE_BUDGET)
}

/// Per trial: generate a keypair (trial k uses seed + k), encrypt `message`,
/// then time one decrypt per requested method. Naive decrypts that would
/// run past `naive_budget`, or whose modulus exceeds the naive-safe bound,
/// produce a skipped record instead of a measurement.
pub fn run_bench_with_budget(
    seed: u64,
    trials: u32,
    methods: &[ExpMethod],
    message: u64,
    naive_budget: Duration,
) -> Result<Vec<BenchRecord>> {
    if methods.is_empty() {
        return Err(Error::NoMethods);
    }
    if trials == 0 {
        return Err(Error::ZeroTrials);
    }
    let mut records = Vec::with_capacity(trials as usize * methods.len());
    for trial in 0..trials {
        let params = KeyGenParams::new(seed.wrapping_add(trial as u64));
        let keypair = generate_keypair(&params)?;
        let cipher = encrypt(&keypair.public, message, ExpMethod::SquareMultiply)?;
        for &method in methods {
            let runnable = method != ExpMethod::Naive
                || (keypair.public.n <= NAIVE_MODULUS_LIMIT
                    && projected_naive_time(keypair.private.d) <= naive_budget);
            let elapsed_seconds = if runnable {
                let (recovered, elapsed) = measure_decrypt(&keypair.private, cipher, method)?;
                if recovered != message {
                    return Err(Error::BenchMismatch {
                        got: recovered,
                        expected: message,
                    });
                }
                Some(elapsed.as_secs_f64())
            } else {
                None
            };
            records.push(BenchRecord {
                phi: keypair.phi,
                d: keypair.private.d,
                method,
                elapsed_seconds,
                message,
            });
        }
    }
    Ok(records)
}

/// Render records as CSV: a fixed header, then one LF-terminated row per
/// record. Skipped trials leave the elapsed field empty.
pub fn write_csv(records: &[BenchRecord]) -> String {
    let mut out = String::from("phi,d,method,elapsed_seconds,message\n");
    for record in records {
        let elapsed = record
            .elapsed_seconds
            .map(|s| s.to_string())
            .unwrap_or_default();
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            record.phi, record.d, record.method, elapsed, record.message
        ));
    }
    out
}
