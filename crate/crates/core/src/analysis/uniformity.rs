use super::{chi_square_sf, AnalysisError};
use crate::OutputWidth;

#[derive(Debug, Clone, PartialEq)]
pub struct UniformityResult {
    pub bins: usize,
    pub statistic: f64,
    pub p_value: f64,
}

/// Pearson chi-square against the uniform distribution over `counts.len()`
/// equiprobable bins.
pub fn chi_square_counts(counts: &[u64]) -> Result<UniformityResult, AnalysisError> {
    let bins = counts.len();
    if bins < 2 {
        return Err(AnalysisError::BadBinCount(bins));
    }
    let total: u64 = counts.iter().sum();
    if total == 0 {
        return Err(AnalysisError::TooShort { needed: 1, got: 0 });
    }
    let expected = total as f64 / bins as f64;
    let statistic: f64 = counts
        .iter()
        .map(|&c| {
            let d = c as f64 - expected;
            d * d / expected
        })
        .sum();
    Ok(UniformityResult {
        bins,
        statistic,
        p_value: chi_square_sf(statistic, (bins - 1) as f64),
    })
}

/// Bins each output by its top `log2(bins)` bits and runs
/// [`chi_square_counts`]. Needs at least `10 * bins` words.
pub fn chi_square_uniform(
    words: &[u64],
    width: OutputWidth,
    bins: usize,
) -> Result<UniformityResult, AnalysisError> {
    if bins < 2 || !bins.is_power_of_two() || bins.trailing_zeros() > width.bits() {
        return Err(AnalysisError::BadBinCount(bins));
    }
    let needed = 10 * bins;
    if words.len() < needed {
        return Err(AnalysisError::TooShort {
            needed,
            got: words.len(),
        });
    }
    let shift = width.bits() - bins.trailing_zeros();
    let mut counts = vec![0u64; bins];
    for &w in words {
        // shift may be 0 when bins == 2^bits; checked_shr keeps that sound
        let bin = (w & width.max_value()).checked_shr(shift).unwrap_or(0);
        counts[bin as usize] += 1;
    }
    chi_square_counts(&counts)
}
