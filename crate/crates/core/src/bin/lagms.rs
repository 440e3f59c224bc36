fn main() -> std::process::ExitCode {
    lagms::cli::main()
}
