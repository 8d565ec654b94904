fn main() -> std::process::ExitCode {
    std::process::ExitCode::from(etabound::cli::run())
}
