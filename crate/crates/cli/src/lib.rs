//! The `crand` command-line utility.
//!
//! ```text
//! crand generate --gen xorshift64 --seed 1 --count 5
//! crand generate --gen pcg32 --count 1000000000 --format binary | RNG_test stdin32
//! crand acf --gen kiss --count 100000 --max-lag 50
//! crand lag --gen xorshift32 --lag 1 --count 1000
//! crand bench --gen xorshift128plus
//! ```
//!
//! Exit status is 0 on success, 1 for usage errors (bad flags, unknown
//! generator, invalid seed) and 2 for runtime failures.

mod args;
mod commands;
mod error;
mod seed;

use std::ffi::OsString;
use std::io::{self, BufRead, Write};
use std::process::ExitCode;

use clap::Parser;

pub use args::{Cli, Command, OutFormat, OutType};
pub use error::CliError;

/// Streams a command runs against. The binary wires these to the process's
/// standard streams; tests pass in-memory buffers.
pub struct Io<'a> {
    pub stdin: &'a mut dyn BufRead,
    pub stdout: &'a mut dyn Write,
    pub stderr: &'a mut dyn Write,
}

/// Parses `args` (including the program name) and runs the command,
/// returning the exit status.
pub fn run<I, T>(args: I, io: &mut Io<'_>) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            let text = err.render().to_string();
            let (sink, code): (&mut dyn Write, u8) = if err.use_stderr() {
                (&mut *io.stderr, error::USAGE)
            } else {
                (&mut *io.stdout, 0)
            };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    match commands::execute(&cli, io) {
        Ok(()) => 0,
        Err(CliError::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => 0,
        Err(err) => {
            let _ = writeln!(io.stderr, "crand: {err}");
            err.exit_code()
        }
    }
}

pub fn main() -> ExitCode {
    let stdin = io::stdin();
    let stdout = io::stdout();
    let stderr = io::stderr();
    let mut stdin = stdin.lock();
    let mut stdout = stdout.lock();
    let mut stderr = stderr.lock();
    let code = run(
        std::env::args_os(),
        &mut Io {
            stdin: &mut stdin,
            stdout: &mut stdout,
            stderr: &mut stderr,
        },
    );
    ExitCode::from(code)
}
