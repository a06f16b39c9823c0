fn main() -> std::process::ExitCode {
    crand_cli::main()
}
