use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(corona_cli::run_from(std::env::args_os()))
}
