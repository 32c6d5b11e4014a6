use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;

use pauli_geom_cli::{execute_in_pool, Cli, CliError};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let output = match execute_in_pool(&cli) {
        Ok(o) => o,
        Err(e @ CliError::Usage(_)) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    let written = match &cli.out {
        Some(path) => std::fs::write(path, &output.body).map_err(|e| format!("{}: {e}", path.display())),
        None => std::io::stdout()
            .lock()
            .write_all(output.body.as_bytes())
            .map_err(|e| e.to_string()),
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    eprintln!("wall time {:.3} s", start.elapsed().as_secs_f64());
    ExitCode::from(output.status.exit_code())
}
