fn main() -> std::process::ExitCode {
    balword::cli::main()
}
