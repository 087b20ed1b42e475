//! Argument surface of the `lbit` binary. Orientation cosines and exponents
//! are exact fractions (`p/q` or integers), never floating-point angles;
//! angles are fractions of π.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;

use lbit::rational::RationalAngle;

use crate::render::Format;

pub fn parse_ratio(s: &str) -> Result<BigRational, String> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = num
        .parse()
        .map_err(|_| format!("`{s}` is not a fraction p/q"))?;
    let d: BigInt = den
        .parse()
        .map_err(|_| format!("`{s}` is not a fraction p/q"))?;
    if d == BigInt::from(0) {
        return Err(format!("`{s}` has a zero denominator"));
    }
    Ok(BigRational::new(n, d))
}

/// An angle given as a rational multiple of π, e.g. `1/3` for π/3 or `2`
/// for 2π.
pub fn parse_angle(s: &str) -> Result<RationalAngle, String> {
    let r = parse_ratio(s)?;
    let num: i64 = r
        .numer()
        .try_into()
        .map_err(|_| format!("angle numerator in `{s}` out of range"))?;
    let den: i64 = r
        .denom()
        .try_into()
        .map_err(|_| format!("angle denominator in `{s}` out of range"))?;
    RationalAngle::new(num, den).map_err(|e| e.to_string())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    /// Human-readable aligned table.
    Table,
    /// Line-delimited JSON records (one `meta` line, then `row` lines).
    Records,
    /// CSV with a fixed six-column header.
    Csv,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Table => Format::Table,
            FormatArg::Records => Format::Records,
            FormatArg::Csv => Format::Csv,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BranchArg {
    Sum,
    Difference,
}

#[derive(Debug, Parser)]
#[command(
    name = "lbit",
    version,
    about = "Exact signed-permutation operator experiments: verification, SG chains, Bell/GHZ statistics, granular-time precession"
)]
pub struct Cli {
    /// Universe size n_tot (default depends on the subcommand).
    #[arg(long, global = true)]
    pub n_tot: Option<u32>,

    /// Seed for every Monte-Carlo draw; identical seeds give byte-identical
    /// reports.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Monte-Carlo draw count.
    #[arg(long, global = true, default_value_t = 100_000)]
    pub samples: u64,

    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Table)]
    pub format: FormatArg,

    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run the invariant suites and print one PASS/FAIL line per check.
    Verify,

    /// Inspect a fractional power Ē_J^α: frequency law, operator
    /// properties, ket correspondence.
    Pow {
        /// Circle coordinate J in 1..=4M.
        #[arg(long)]
        j: u32,
        /// Exponent α as a dyadic fraction, e.g. 1/4.
        #[arg(long, value_parser = parse_ratio, allow_hyphen_values = true)]
        alpha: BigRational,
    },

    /// Sequential Stern-Gerlach chain in the toy universe (n_tot = 1 or 2).
    SgChain {
        /// Orientations of the second and third devices (the first is +z),
        /// e.g. +x,+z.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, default_values_t = [String::from("+x"), String::from("+z")])]
        orientations: Vec<String>,
    },

    /// Two entangled pairs plus the definability verdict on the third
    /// (counterfactual) Bell setting.
    Bell {
        /// cos θ between the first pair of orientations, exact fraction.
        #[arg(long, value_parser = parse_ratio, allow_hyphen_values = true)]
        cos_ab: BigRational,
        /// cos θ' between the second pair of orientations, exact fraction.
        #[arg(long, value_parser = parse_ratio, allow_hyphen_values = true)]
        cos_ab_prime: BigRational,
        /// Base exponent α₁ of both pairs (the prediction is α₁-independent).
        #[arg(long, value_parser = parse_ratio, allow_hyphen_values = true, default_value = "0")]
        alpha1: BigRational,
        /// Shared circle coordinate.
        #[arg(long, default_value_t = 1)]
        j: u32,
    },

    /// Fully-shared 3-lbit statistics (three-party frequencies and pairwise
    /// correlation tables).
    Ghz {
        /// Seven exponents α₁..α₇, comma-separated fractions.
        #[arg(long, value_delimiter = ',', value_parser = parse_ratio, allow_hyphen_values = true)]
        alphas: Vec<BigRational>,
        #[arg(long, default_value_t = 1)]
        j_shared: u32,
        #[arg(long, default_value_t = 3)]
        j_last: u32,
    },

    /// Enumerate the discrete times at which the precession exponent lands
    /// on the lattice.
    Precession {
        /// Frequency scale ω as a positive rational.
        #[arg(long, value_parser = parse_ratio)]
        omega: BigRational,
        /// Window end; defaults to one full period π²/ω.
        #[arg(long)]
        t_max: Option<f64>,
    },

    /// Classify cos(πm/n): rational exactly at {0, ±1/2, ±1}.
    Niven {
        /// Angle as a fraction of π, e.g. 1/3 for π/3.
        #[arg(long, value_parser = parse_angle, allow_hyphen_values = true)]
        angle: RationalAngle,
    },

    /// Definability of a combined orientation (sum/difference rule, or the
    /// spherical triangle's third side when an included angle is given).
    Defined {
        #[arg(long, value_parser = parse_ratio, allow_hyphen_values = true)]
        cos1: BigRational,
        #[arg(long, value_parser = parse_ratio, allow_hyphen_values = true)]
        cos2: BigRational,
        #[arg(long, value_enum, default_value_t = BranchArg::Difference)]
        branch: BranchArg,
        /// Included spherical angle P as a fraction of π; switches to the
        /// cosine-rule mode.
        #[arg(long, value_parser = parse_angle, allow_hyphen_values = true)]
        included_angle: Option<RationalAngle>,
    },
}

impl Command {
    /// Per-subcommand default universe size.
    pub fn default_n_tot(&self) -> u32 {
        match self {
            Command::SgChain { .. } => 1,
            Command::Precession { .. } => 2,
            Command::Bell { .. } | Command::Defined { .. } => 4,
            _ => 3,
        }
    }
}
