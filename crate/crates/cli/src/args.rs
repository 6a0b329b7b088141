use std::path::PathBuf;

use clap::{Parser, ValueEnum};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Command {
    /// Moments m_0..m_n at each mu.
    Moments,
    /// Biorthogonal polynomial for the given mu list.
    Poly,
    /// Randomized invariant suite up to degree n.
    Verify,
    /// The weight's differential equation and indicial data.
    Ode,
    /// Hypergeometric classification of the Frobenius solution.
    Hyper,
    /// Polynomials for a range of degrees, one row per mu tuple.
    Sweep,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Exact,
    Float,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum NormalizationArg {
    Expansion,
    LeadingOne,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Output {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum PathArg {
    DividedDifference,
    MixedBasis,
    Oracle,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GateArg {
    /// theta >= s
    Order,
    /// theta >= 1
    One,
    /// any real root
    Any,
}

/// Biorthogonal polynomials for Moebius-quotient weight families.
#[derive(Clone, Debug, Parser)]
#[command(name = "biorth", version)]
pub struct RunConfig {
    pub command: Command,

    /// Family description (JSON).
    #[arg(long = "family", value_name = "PATH")]
    pub family_path: PathBuf,

    /// Comma-separated rationals such as 1,2,7/3.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub mu: Vec<String>,

    /// Degree; defaults to the length of --mu for poly, 6 for verify, 4 for
    /// sweep and 5 for moments.
    #[arg(long)]
    pub n: Option<usize>,

    #[arg(long, value_enum, default_value = "exact")]
    pub mode: Mode,

    #[arg(long, value_enum, default_value = "expansion")]
    pub normalization: NormalizationArg,

    #[arg(long, value_enum, default_value = "json")]
    pub output: Output,

    /// Seed for the randomized suites and sweeps.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,

    /// First construction to try; failures fall back towards the oracle.
    #[arg(long, value_enum, default_value = "divided-difference")]
    pub path: PathArg,

    /// Admissibility rule for the Frobenius exponent.
    #[arg(long, value_enum, default_value = "order")]
    pub theta_gate: GateArg,
}
