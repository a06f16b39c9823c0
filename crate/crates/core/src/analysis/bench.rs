use std::hint::black_box;
use std::time::{Duration, Instant};

use super::AnalysisError;
use crate::{seed_expand, GeneratorKind, GeneratorState};

/// Timing protocol for [`bench_with`].
///
/// Each of the `reps` runs restarts the generator from the same seed and
/// calls `fill(n)` `loops` times back to back; the per-call time of a run is
/// its wall time divided by `loops`. When `loops` is `None` it is picked
/// like `timeit` does: the smallest 1-2-5 step whose run lasts at least
/// `min_run`.
#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub n: usize,
    pub reps: usize,
    pub loops: Option<usize>,
    pub min_run: Duration,
    pub seed: u64,
}

impl Default for BenchConfig {
    fn default() -> Self {
        Self {
            n: 10_000,
            reps: 7,
            loops: None,
            min_run: Duration::from_millis(10),
            seed: 0x5EED,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchReport {
    pub kind: GeneratorKind,
    pub n: usize,
    pub reps: usize,
    pub loops: usize,
    pub mean_us: f64,
    /// Sample standard deviation (Bessel-corrected) of the per-run means.
    pub stddev_us: f64,
    /// Wrapping sum of the last buffer filled in each run; identical across
    /// runs because every run restarts from the same seed.
    pub checksum: u64,
}

/// Times `fill(n)` for `kind` over `reps` runs with default settings.
pub fn bench_throughput(
    kind: GeneratorKind,
    n: usize,
    reps: usize,
) -> Result<BenchReport, AnalysisError> {
    bench_with(
        kind,
        &BenchConfig {
            n,
            reps,
            ..BenchConfig::default()
        },
    )
}

pub fn bench_with(kind: GeneratorKind, config: &BenchConfig) -> Result<BenchReport, AnalysisError> {
    if config.reps < 2 {
        return Err(AnalysisError::TooFewReps(config.reps));
    }
    let start = GeneratorState::new(kind, &seed_expand(config.seed, kind.seed_words()))?;
    let mut buf = vec![0u64; config.n];

    let mut run = |loops: usize| -> (Duration, u64) {
        let mut state = start.clone();
        let t0 = Instant::now();
        for _ in 0..loops {
            state.fill_into(black_box(&mut buf));
            black_box(&buf);
        }
        let elapsed = t0.elapsed();
        (
            elapsed,
            buf.iter().fold(0u64, |acc, &w| acc.wrapping_add(w)),
        )
    };

    // warm-up, then calibrate
    run(1);
    let loops = match config.loops {
        Some(l) => l.max(1),
        None => {
            let mut loops = 1;
            while run(loops).0 < config.min_run && loops < 1_000_000_000 {
                loops = next_loops(loops);
            }
            loops
        }
    };

    let mut per_call_us = Vec::with_capacity(config.reps);
    let mut checksum = None;
    for _ in 0..config.reps {
        let (elapsed, sum) = run(loops);
        if *checksum.get_or_insert(sum) != sum {
            return Err(AnalysisError::ChecksumMismatch);
        }
        per_call_us.push(elapsed.as_secs_f64() * 1e6 / loops as f64);
    }

    let (mean_us, stddev_us) = mean_and_sample_stddev(&per_call_us);
    Ok(BenchReport {
        kind,
        n: config.n,
        reps: config.reps,
        loops,
        mean_us,
        stddev_us,
        checksum: checksum.unwrap_or(0),
    })
}

fn next_loops(loops: usize) -> usize {
    // 1, 2, 5, 10, 20, 50, ...
    let mut decade = 1;
    while decade * 10 <= loops {
        decade *= 10;
    }
    match loops / decade {
        1 => 2 * decade,
        2 => 5 * decade,
        _ => 10 * decade,
    }
}

fn mean_and_sample_stddev(xs: &[f64]) -> (f64, f64) {
    let n = xs.len() as f64;
    let mean = xs.iter().sum::<f64>() / n;
    let var = xs.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (n - 1.0);
    (mean, var.sqrt())
}
