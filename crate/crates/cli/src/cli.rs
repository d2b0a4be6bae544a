use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

/// Steiner triple systems and their Pasch invariants.
///
/// Points are 0-based everywhere. Systems are read and written in the
/// `.sts` format: optional `# key: value` comment lines, the order `n`, then
/// one block per line as three ascending indices, lines sorted.
#[derive(Parser, Debug)]
#[command(name = "sts", version, propagate_version = true)]
pub struct Cli {
    /// Worker threads for the invariant engines (0 = one per core).
    #[arg(long, global = true, default_value_t = 0)]
    pub threads: usize,

    /// Also run the brute-force oracle checks; exit 1 if any fails.
    #[arg(long, global = true)]
    pub oracle: bool,

    /// Print machine-readable JSON where supported.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build a system from one of the known families.
    Construct {
        #[command(subcommand)]
        kind: ConstructKind,
    },
    /// Compute alpha, beta, gamma, the Pasch count and the class flags.
    Invariants {
        input: PathBuf,
        /// Aligned key/value table instead of JSON.
        #[arg(long, conflicts_with = "json")]
        table: bool,
    },
    /// Direct product of two systems. Point (a, x) becomes index a*n + x,
    /// where n is the order of the right factor.
    Product {
        left: PathBuf,
        right: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Compare the product formulas for alpha, beta, gamma with direct
    /// enumeration of the product system.
    VerifyProduct {
        left: PathBuf,
        right: PathBuf,
        /// Refuse products of larger order.
        #[arg(long, default_value_t = 255)]
        max_order: u32,
    },
    /// Count (and optionally list) the Pasch configurations.
    Pasch {
        input: PathBuf,
        /// Print every configuration as `a b c d e f`.
        #[arg(long)]
        list: bool,
    },
    /// One row of invariants per `.sts` file in a directory; fails if any
    /// system breaks the inequality chain or has gamma = C(n,2)/3 - 1.
    Spectrum { dir: PathBuf },
    /// Generate every STS(n) for n in {7, 9, 13} and write one
    /// representative per isomorphism class plus `census.txt`.
    GenAll {
        #[arg(long)]
        n: u32,
        #[arg(short, long)]
        output: PathBuf,
        /// Do not fix the blocks through point 0 (only practical for n <= 9).
        #[arg(long)]
        no_normalize: bool,
    },
}

#[derive(Subcommand, Debug)]
pub enum ConstructKind {
    /// Projective geometry PG(k, 2) on 2^(k+1) - 1 points.
    Pg {
        #[arg(long)]
        k: u32,
        #[command(flatten)]
        out: Output,
    },
    /// Affine power AG(m, 3), the m-fold product of STS(3).
    Ag {
        #[arg(long)]
        m: u32,
        #[command(flatten)]
        out: Output,
    },
    /// Direct product of two existing files.
    Product {
        #[arg(long)]
        left: PathBuf,
        #[arg(long)]
        right: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Netto-type system over GF(q), q = 6t + 1 a prime or a prime squared.
    Netto {
        #[arg(long)]
        q: u32,
        /// Explicit multiplier set as comma-separated field elements
        /// (a0 + a1*p encodes a0 + a1*z over GF(p^2)).
        #[arg(long, value_delimiter = ',', conflicts_with = "auto_c")]
        c: Vec<u32>,
        /// Choose C so that every block lies in a Pasch configuration.
        #[arg(long)]
        auto_c: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Bose construction for n = 6t + 3.
    Bose {
        #[arg(long)]
        n: u32,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Args, Debug)]
pub struct Output {
    /// Output file; standard output when absent.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}
