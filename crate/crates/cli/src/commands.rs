use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use crand_core::analysis::{acf, bench_with, lag_pairs, BenchConfig, BenchReport};
use crand_core::{normalize_value, GeneratorKind, GeneratorState};

use crate::args::{AcfArgs, BenchArgs, Command, GenerateArgs, LagArgs, OutFormat, OutType};
use crate::{seed, Cli, CliError, Io};

const CHUNK: usize = 1 << 14;

pub fn execute(cli: &Cli, io: &mut Io<'_>) -> Result<(), CliError> {
    match &cli.command {
        Command::Generate(args) => generate(args, io),
        Command::Acf(args) => run_acf(args, io),
        Command::Lag(args) => run_lag(args, io),
        Command::Bench(args) => run_bench(args, io),
    }
}

fn generate(args: &GenerateArgs, io: &mut Io<'_>) -> Result<(), CliError> {
    let mut state = seed::resolve(&args.source, io.stderr)?;
    match &args.out_path {
        Some(path) => {
            let mut file = BufWriter::new(File::create(path)?);
            write_stream(&mut state, args, &mut file)?;
            file.flush()?;
        }
        None => {
            let mut out = BufWriter::new(&mut *io.stdout);
            write_stream(&mut state, args, &mut out)?;
            out.flush()?;
        }
    }
    Ok(())
}

/// Generates `args.count` values in fixed-size chunks, so arbitrarily long
/// streams run in constant memory.
fn write_stream(
    state: &mut GeneratorState,
    args: &GenerateArgs,
    out: &mut dyn Write,
) -> io::Result<()> {
    let width = state.kind().output_width();
    let mut words = vec![0u64; CHUNK];
    let mut remaining = args.count;
    let mut line = String::new();
    while remaining > 0 {
        let take = remaining.min(CHUNK as u64) as usize;
        let chunk = &mut words[..take];
        state.fill_into(chunk);
        match (args.out_type, args.format) {
            (OutType::Int, OutFormat::Binary) => {
                for w in chunk.iter() {
                    out.write_all(&w.to_le_bytes())?;
                }
            }
            (OutType::Float, OutFormat::Binary) => {
                for &w in chunk.iter() {
                    out.write_all(&normalize_value(w, width).to_le_bytes())?;
                }
            }
            (OutType::Int, OutFormat::Text) => {
                line.clear();
                for w in chunk.iter() {
                    line.push_str(&w.to_string());
                    line.push('\n');
                }
                out.write_all(line.as_bytes())?;
            }
            (OutType::Float, OutFormat::Text) => {
                line.clear();
                for &w in chunk.iter() {
                    line.push_str(&normalize_value(w, width).to_string());
                    line.push('\n');
                }
                out.write_all(line.as_bytes())?;
            }
        }
        remaining -= take as u64;
    }
    Ok(())
}

/// Normalized draws from the generator, or the numbers in `input`.
fn series(
    source: &crate::args::SourceArgs,
    input: Option<&Path>,
    count: usize,
    io: &mut Io<'_>,
) -> Result<Vec<f64>, CliError> {
    match input {
        Some(path) if path == Path::new("-") => read_series(&mut *io.stdin, "stdin"),
        Some(path) => {
            let file = File::open(path)?;
            read_series(&mut BufReader::new(file), &path.display().to_string())
        }
        None => {
            let mut state = seed::resolve(source, io.stderr)?;
            Ok(state.fill_unit(count)?)
        }
    }
}

fn read_series(reader: &mut dyn BufRead, name: &str) -> Result<Vec<f64>, CliError> {
    let mut values = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let v = line
            .parse::<f64>()
            .map_err(|e| CliError::Usage(format!("{name}:{}: `{line}`: {e}", i + 1)))?;
        values.push(v);
    }
    Ok(values)
}

fn run_acf(args: &AcfArgs, io: &mut Io<'_>) -> Result<(), CliError> {
    if args.input.is_none() && args.count < args.max_lag + 2 {
        return Err(CliError::Usage(format!(
            "--count must be at least --max-lag + 2 ({})",
            args.max_lag + 2
        )));
    }
    let xs = series(&args.source, args.input.as_deref(), args.count, io)?;
    let r = acf(&xs, args.max_lag)?;
    let mut out = BufWriter::new(&mut *io.stdout);
    writeln!(out, "lag,acf")?;
    for (lag, value) in r.iter() {
        writeln!(out, "{lag},{value}")?;
    }
    out.flush()?;
    Ok(())
}

fn run_lag(args: &LagArgs, io: &mut Io<'_>) -> Result<(), CliError> {
    if args.input.is_none() && args.lag >= args.count {
        return Err(CliError::Usage(format!(
            "--lag ({}) must be smaller than --count ({})",
            args.lag, args.count
        )));
    }
    let xs = series(&args.source, args.input.as_deref(), args.count, io)?;
    let pairs = lag_pairs(&xs, args.lag)?;
    let mut out = BufWriter::new(&mut *io.stdout);
    for (x, y) in pairs {
        writeln!(out, "{x},{y}")?;
    }
    out.flush()?;
    Ok(())
}

fn run_bench(args: &BenchArgs, io: &mut Io<'_>) -> Result<(), CliError> {
    if args.reps < 2 {
        return Err(CliError::Usage(format!(
            "--reps must be at least 2 to estimate a standard deviation, got {}",
            args.reps
        )));
    }
    let mut kinds: Vec<GeneratorKind> = Vec::new();
    for &k in &args.kinds {
        if !kinds.contains(&k) {
            kinds.push(k);
        }
    }
    if !kinds.contains(&GeneratorKind::Mt19937_64) {
        kinds.push(GeneratorKind::Mt19937_64);
    }
    let config = BenchConfig {
        n: args.count,
        reps: args.reps,
        loops: args.loops,
        ..BenchConfig::default()
    };
    // strictly one after another; overlapping runs would skew the timings
    let reports = kinds
        .iter()
        .map(|&k| bench_with(k, &config))
        .collect::<Result<Vec<BenchReport>, _>>()?;
    let baseline = reports
        .iter()
        .find(|r| r.kind == GeneratorKind::Mt19937_64)
        .map(|r| r.mean_us)
        .unwrap_or(f64::NAN);

    let mut out = BufWriter::new(&mut *io.stdout);
    writeln!(
        out,
        "kind,n,reps,loops,mean_us,stddev_us,ratio_to_mt19937_64,checksum"
    )?;
    for r in &reports {
        writeln!(
            out,
            "{},{},{},{},{:.3},{:.3},{:.3},{:#018x}",
            r.kind,
            r.n,
            r.reps,
            r.loops,
            r.mean_us,
            r.stddev_us,
            r.mean_us / baseline,
            r.checksum
        )?;
    }
    out.flush()?;
    Ok(())
}
