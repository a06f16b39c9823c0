//! Desk-scale randomness diagnostics and throughput timing.
//!
//! These are quick sanity checks, not a replacement for the large external
//! batteries; use the CLI's binary output to feed those.

mod acf;
mod bench;
mod gamma;
mod lag;
mod monobit;
mod uniformity;

pub use acf::{acf, AcfSeries};
pub use bench::{bench_throughput, bench_with, BenchConfig, BenchReport};
pub use gamma::{chi_square_sf, ln_gamma, regularized_gamma_q};
pub use lag::lag_pairs;
pub use monobit::monobit;
pub use uniformity::{chi_square_counts, chi_square_uniform, UniformityResult};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AnalysisError {
    #[error("series has zero variance")]
    ZeroVariance,
    #[error("need at least {needed} samples, got {got}")]
    TooShort { needed: usize, got: usize },
    #[error("bin count {0} must be a power of two between 2 and 2^output_bits")]
    BadBinCount(usize),
    #[error("at least 2 repetitions are needed for a standard deviation, got {0}")]
    TooFewReps(usize),
    #[error("benchmark checksum changed between runs")]
    ChecksumMismatch,
    #[error(transparent)]
    Generator(#[from] crate::Error),
}
