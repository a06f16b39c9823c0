use super::AnalysisError;
use crate::OutputWidth;

const MIN_BITS: usize = 10_000;

/// Frequency test: `z = (ones - bits/2) / sqrt(bits/4)` over every output bit.
pub fn monobit(words: &[u64], width: OutputWidth) -> Result<f64, AnalysisError> {
    let bits = words.len() * width.bits() as usize;
    if bits < MIN_BITS {
        return Err(AnalysisError::TooShort {
            needed: MIN_BITS.div_ceil(width.bits() as usize),
            got: words.len(),
        });
    }
    let mask = width.max_value();
    let ones: u64 = words
        .iter()
        .map(|&w| u64::from((w & mask).count_ones()))
        .sum();
    let bits = bits as f64;
    Ok((ones as f64 - bits / 2.0) / (bits / 4.0).sqrt())
}
