#![allow(dead_code)]

use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

pub fn crand() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_crand"));
    cmd.env_remove("CRAND_SEED");
    cmd
}

pub fn run(args: &[&str]) -> Output {
    crand().args(args).output().expect("spawn crand")
}

pub fn run_with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = crand()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

pub fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

pub fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

/// The `libcrand` shared library cargo builds for the `crand-abi`
/// dependency.
pub fn shared_library_path() -> PathBuf {
    let name = format!(
        "{}crand{}",
        std::env::consts::DLL_PREFIX,
        std::env::consts::DLL_SUFFIX
    );
    let exe = std::env::current_exe().unwrap();
    let deps = exe.parent().unwrap();
    [deps.join(&name), deps.parent().unwrap().join(&name)]
        .into_iter()
        .find(|p| p.exists())
        .unwrap_or_else(|| panic!("{name} not found next to {}", exe.display()))
}
