fn main() -> std::process::ExitCode {
    gbhard::cli::main()
}
