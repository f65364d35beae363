fn main() -> std::process::ExitCode {
    amf_cli::run(std::env::args_os())
}
