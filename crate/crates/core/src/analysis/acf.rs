use super::AnalysisError;

/// Sample autocorrelations `r_1..=r_max_lag`.
#[derive(Debug, Clone, PartialEq)]
pub struct AcfSeries {
    values: Vec<f64>,
}

impl AcfSeries {
    pub fn max_lag(&self) -> usize {
        self.values.len()
    }

    /// `r_k` for `k` in `1..=max_lag`.
    pub fn get(&self, lag: usize) -> Option<f64> {
        lag.checked_sub(1).and_then(|i| self.values.get(i).copied())
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// `(lag, r_lag)` pairs starting at lag 1.
    pub fn iter(&self) -> impl Iterator<Item = (usize, f64)> + '_ {
        self.values.iter().enumerate().map(|(i, &r)| (i + 1, r))
    }
}

/// Standard sample ACF:
/// `r_k = sum_{i<n-k} (x_i - m)(x_{i+k} - m) / sum_i (x_i - m)^2`.
pub fn acf(series: &[f64], max_lag: usize) -> Result<AcfSeries, AnalysisError> {
    let n = series.len();
    let needed = max_lag + 2;
    if n < needed {
        return Err(AnalysisError::TooShort { needed, got: n });
    }
    if series.iter().all(|&x| x == series[0]) {
        return Err(AnalysisError::ZeroVariance);
    }

    let mean = series.iter().sum::<f64>() / n as f64;
    let centered: Vec<f64> = series.iter().map(|&x| x - mean).collect();
    let denom: f64 = centered.iter().map(|d| d * d).sum();
    if denom == 0.0 {
        return Err(AnalysisError::ZeroVariance);
    }

    let values = (1..=max_lag)
        .map(|k| {
            let num: f64 = centered
                .iter()
                .zip(&centered[k..])
                .map(|(a, b)| a * b)
                .sum();
            // rounding can push |r| a hair past one for tiny series
            (num / denom).clamp(-1.0, 1.0)
        })
        .collect();
    Ok(AcfSeries { values })
}
