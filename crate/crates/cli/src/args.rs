use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use crand_core::GeneratorKind;

#[derive(Debug, Parser)]
#[command(
    name = "crand",
    version,
    about = "Run pseudorandom generators and inspect their output"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print or stream a generator's output.
    Generate(GenerateArgs),
    /// Sample autocorrelation of normalized draws, as CSV `lag,acf`.
    Acf(AcfArgs),
    /// Lag-plot coordinates `x_i,x_{i+k}` of normalized draws.
    Lag(LagArgs),
    /// Time bulk generation, mean and standard deviation in microseconds.
    Bench(BenchArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutType {
    Int,
    Float,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutFormat {
    /// One decimal value per line.
    Text,
    /// Raw little-endian u64 words (or binary64 for floats), no framing.
    Binary,
}

#[derive(Debug, Args)]
pub struct SourceArgs {
    /// Generator name.
    #[arg(long = "gen", value_parser = parse_kind, default_value = "xorshift128plus")]
    pub kind: GeneratorKind,

    /// Seed words, comma separated (decimal or 0x-prefixed hex). Without
    /// it a seed is drawn from system entropy (or CRAND_SEED) and echoed to
    /// stderr.
    #[arg(long, value_delimiter = ',', value_parser = parse_word)]
    pub seed: Option<Vec<u64>>,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[command(flatten)]
    pub source: SourceArgs,

    #[arg(long, default_value_t = 10)]
    pub count: u64,

    #[arg(long = "type", value_enum, default_value_t = OutType::Int)]
    pub out_type: OutType,

    #[arg(long, value_enum, default_value_t = OutFormat::Text)]
    pub format: OutFormat,

    /// Write to this file instead of standard output.
    #[arg(long = "out")]
    pub out_path: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct AcfArgs {
    #[command(flatten)]
    pub source: SourceArgs,

    #[arg(long, default_value_t = 100_000)]
    pub count: usize,

    #[arg(long, default_value_t = 50)]
    pub max_lag: usize,

    /// Analyse the series in this file (one number per line, `-` for
    /// stdin) instead of generator output.
    #[arg(long)]
    pub input: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct LagArgs {
    #[command(flatten)]
    pub source: SourceArgs,

    #[arg(long, default_value_t = 1000)]
    pub count: usize,

    #[arg(long, default_value_t = 1)]
    pub lag: usize,

    /// Read the series from this file (`-` for stdin).
    #[arg(long)]
    pub input: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// Generators to time; mt19937_64 is always added as the baseline.
    #[arg(
        long = "gen",
        value_delimiter = ',',
        value_parser = parse_kind,
        default_value = "xorshift128plus"
    )]
    pub kinds: Vec<GeneratorKind>,

    /// Words generated per call.
    #[arg(long, default_value_t = 10_000)]
    pub count: usize,

    /// Timed runs per generator (at least 2).
    #[arg(long, default_value_t = 7)]
    pub reps: usize,

    /// Calls per run; calibrated automatically when omitted.
    #[arg(long)]
    pub loops: Option<usize>,
}

fn parse_kind(s: &str) -> Result<GeneratorKind, String> {
    s.parse().map_err(|_| {
        let names: Vec<_> = GeneratorKind::ALL.iter().map(|k| k.name()).collect();
        format!(
            "unknown generator `{s}` (expected one of: {})",
            names.join(", ")
        )
    })
}

pub(crate) fn parse_word(s: &str) -> Result<u64, String> {
    let s = s.trim();
    let parsed = match s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
        Some(hex) => u64::from_str_radix(hex, 16),
        None => s.parse(),
    };
    parsed.map_err(|e| format!("`{s}` is not an unsigned 64-bit integer: {e}"))
}
