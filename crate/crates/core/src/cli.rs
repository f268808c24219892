//! Command-line surface: scriptable keygen / encrypt / decrypt /
//! check-prime / bench subcommands.
//!
//! Exit codes: 0 on success (including `check-prime` reporting a probable
//! prime), 1 for domain errors and composite verdicts, 2 for usage errors.

use std::ffi::OsString;
use std::fs;
use std::path::PathBuf;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};

use crate::bench::{run_bench_with_budget, write_csv, DEFAULT_MESSAGE};
use crate::keyfile::{read_key, write_key, KeyDocument};
use crate::modarith::ExpMethod;
use crate::primality::is_probable_prime;
use crate::rng::RngState;
use crate::rsa::{decrypt, encrypt, generate_keypair, KeyGenParams};

#[derive(Parser)]
#[command(
    name = "rsa-toy",
    version,
    about = "Educational textbook RSA over 64-bit moduli. Not secure; for study only."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a keypair and write <prefix>.pub and <prefix>.priv
    Keygen {
        /// Path prefix for the two key files
        #[arg(long)]
        out_prefix: PathBuf,
        /// RNG seed; identical seeds reproduce identical keys
        #[arg(long)]
        seed: Option<u64>,
        /// Lowest prime-table index candidates are drawn from
        #[arg(long, default_value_t = 1000)]
        index_min: u32,
        /// Highest prime-table index candidates are drawn from
        #[arg(long, default_value_t = 9999)]
        index_max: u32,
        /// Random-base Fermat rounds per candidate
        #[arg(long, default_value_t = 5)]
        fermat_iters: u32,
        /// Miller-Rabin rounds per candidate
        #[arg(long, default_value_t = 20)]
        mr_iters: u32,
    },
    /// Encrypt an integer message with a public key file
    Encrypt {
        /// Path to a .pub key file
        #[arg(long)]
        key: PathBuf,
        /// Message m with 0 <= m < n
        #[arg(long)]
        message: u64,
    },
    /// Decrypt an integer cipher with a private key file
    Decrypt {
        /// Path to a .priv key file
        #[arg(long)]
        key: PathBuf,
        /// Cipher c with 0 <= c < n
        #[arg(long)]
        cipher: u64,
    },
    /// Test a number for primality; exits 0 if probably prime, 1 if composite
    CheckPrime {
        n: u64,
        /// Miller-Rabin rounds
        #[arg(long, default_value_t = 20)]
        mr_iters: u32,
        /// RNG seed for base sampling
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Time naive vs square-and-multiply decryption and emit CSV
    Bench {
        /// RNG seed; a fresh one is drawn when omitted
        #[arg(long)]
        seed: Option<u64>,
        /// Number of keypairs to measure
        #[arg(long, default_value_t = 7)]
        trials: u32,
        /// Which exponentiation paths to time
        #[arg(long, value_enum, default_value_t = MethodArg::Fast)]
        method: MethodArg,
        /// Plaintext to encrypt and decrypt
        #[arg(long, default_value_t = DEFAULT_MESSAGE)]
        message: u64,
        /// Write CSV here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
        /// Skip naive trials projected to run longer than this
        #[arg(long, default_value_t = 120)]
        budget_secs: u64,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Naive,
    Fast,
    Both,
}

impl MethodArg {
    fn methods(self) -> Vec<ExpMethod> {
        match self {
            MethodArg::Naive => vec![ExpMethod::Naive],
            MethodArg::Fast => vec![ExpMethod::SquareMultiply],
            MethodArg::Both => vec![ExpMethod::Naive, ExpMethod::SquareMultiply],
        }
    }
}

/// Parse `args` and run the selected subcommand, returning the process exit
/// code. The first argument is the program name, as in `std::env::args_os`.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            use clap::error::ErrorKind;
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = err.print();
            return code;
        }
    };
    match execute(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            1
        }
    }
}

fn execute(command: Command) -> Result<i32, Box<dyn std::error::Error>> {
    match command {
        Command::Keygen {
            out_prefix,
            seed,
            index_min,
            index_max,
            fermat_iters,
            mr_iters,
        } => {
            let seed = seed.unwrap_or_else(rand::random);
            let params = KeyGenParams {
                seed,
                index_min,
                index_max,
                fermat_iters,
                mr_iters,
            };
            let keypair = generate_keypair(&params)?;

            let pub_path = with_extension(&out_prefix, "pub");
            let priv_path = with_extension(&out_prefix, "priv");
            fs::write(&pub_path, write_key(&KeyDocument::from_public(&keypair.public)))?;
            fs::write(&priv_path, write_key(&KeyDocument::from_private(&keypair.private)))?;

            println!("seed        : {seed}");
            println!("p           : {}", keypair.p);
            println!("q           : {}", keypair.q);
            println!("phi         : {}", keypair.phi);
            println!("public key  : {{{},{}}}", keypair.public.e, keypair.public.n);
            println!("private key : {{{},{}}}", keypair.private.d, keypair.private.n);
            eprintln!("wrote {} and {}", pub_path.display(), priv_path.display());
            Ok(0)
        }
        Command::Encrypt { key, message } => {
            let public = read_key(&fs::read(&key)?)?.as_public()?;
            let cipher = encrypt(&public, message, ExpMethod::SquareMultiply)?;
            println!("{cipher}");
            Ok(0)
        }
        Command::Decrypt { key, cipher } => {
            let private = read_key(&fs::read(&key)?)?.as_private()?;
            let message = decrypt(&private, cipher, ExpMethod::SquareMultiply)?;
            println!("{message}");
            Ok(0)
        }
        Command::CheckPrime { n, mr_iters, seed } => {
            let mut rng = RngState::from_seed(seed);
            let verdict = is_probable_prime(n, 5, mr_iters, &mut rng)?;
            if verdict.is_probably_prime() {
                println!("probably-prime");
                Ok(0)
            } else {
                println!("composite");
                Ok(1)
            }
        }
        Command::Bench {
            seed,
            trials,
            method,
            message,
            out,
            budget_secs,
        } => {
            let seed = seed.unwrap_or_else(rand::random);
            let records = run_bench_with_budget(
                seed,
                trials,
                &method.methods(),
                message,
                Duration::from_secs(budget_secs),
            )?;
            for record in records.iter().filter(|r| r.skipped()) {
                eprintln!(
                    "warning: naive trial skipped (d = {}): over the time budget or outside the naive-safe modulus range",
                    record.d
                );
            }
            let csv = write_csv(&records);
            match out {
                Some(path) => {
                    fs::write(&path, csv)?;
                    eprintln!("wrote {}", path.display());
                }
                None => print!("{csv}"),
            }
            Ok(0)
        }
    }
}

/// `prefix.pub` / `prefix.priv` next to whatever the prefix names; appends
/// rather than replacing so a prefix like `v1.2` keeps its dot.
fn with_extension(prefix: &std::path::Path, ext: &str) -> PathBuf {
    let mut name = prefix.as_os_str().to_os_string();
    name.push(".");
    name.push(ext);
    PathBuf::from(name)
}
