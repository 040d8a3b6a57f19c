fn main() -> std::process::ExitCode {
    qcalc::cli::main()
}
