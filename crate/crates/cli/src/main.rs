use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use brunnian_cli::args::Cli;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match brunnian_cli::run(&cli) {
        Ok(report) => {
            let body = if cli.text { report.to_text() } else { format!("{}\n", report.to_json()) };
            // a closed pipe (e.g. `| head`) is not an error worth a panic
            let _ = std::io::stdout().lock().write_all(body.as_bytes());
            if report.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
