use std::process::ExitCode;

use wallforce::cli;

fn main() -> ExitCode {
    match cli::parse_config(std::env::args_os()) {
        Ok(config) => ExitCode::from(cli::run(&config) as u8),
        Err(e) => {
            let _ = e.print();
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
