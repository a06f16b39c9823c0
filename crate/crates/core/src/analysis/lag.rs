use super::AnalysisError;

/// Pairs `(x_i, x_{i+k})` for every `i` with `i + k < len`.
pub fn lag_pairs<T: Copy>(series: &[T], k: usize) -> Result<Vec<(T, T)>, AnalysisError> {
    if series.len() <= k {
        return Err(AnalysisError::TooShort {
            needed: k + 1,
            got: series.len(),
        });
    }
    Ok(series
        .iter()
        .copied()
        .zip(series[k..].iter().copied())
        .collect())
}
