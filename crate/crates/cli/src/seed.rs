use std::io::Write;

use crand_core::{seed_expand, Error, GeneratorState};

use crate::args::{parse_word, SourceArgs};
use crate::CliError;

pub const SEED_ENV: &str = "CRAND_SEED";

/// Builds the generator for a command. Without explicit seed words, one
/// 64-bit word (from `CRAND_SEED` or system entropy) is expanded to the
/// kind's arity and the resulting words are echoed to `stderr` so the run can
/// be repeated with `--seed`.
pub fn resolve(source: &SourceArgs, stderr: &mut dyn Write) -> Result<GeneratorState, CliError> {
    let kind = source.kind;
    if let Some(words) = &source.seed {
        return Ok(GeneratorState::new(kind, words)?);
    }

    let mut base = match std::env::var(SEED_ENV) {
        Ok(v) => parse_word(&v).map_err(|e| CliError::Usage(format!("{SEED_ENV}: {e}")))?,
        Err(_) => getrandom::u64().map_err(|e| CliError::Entropy(e.to_string()))?,
    };
    loop {
        let words = seed_expand(base, kind.seed_words());
        match GeneratorState::new(kind, &words) {
            Ok(state) => {
                let list: Vec<String> = words.iter().map(u64::to_string).collect();
                writeln!(stderr, "seed: {}", list.join(","))?;
                return Ok(state);
            }
            // a 32-bit lane came out zero
            Err(Error::DegenerateSeed { .. }) => base = base.wrapping_add(1),
            Err(e) => return Err(e.into()),
        }
    }
}
