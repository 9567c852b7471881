use std::process::ExitCode;

use ballkurve_cli::commands::{run, serve, Cli, Command};
use clap::Parser;

fn main() -> ExitCode {
    // clap reports usage errors with status 2, which here means infeasible geometry
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let mut err = std::io::stderr();
    let code = match &cli.command {
        Command::Serve { port } => serve(*port, &mut err),
        command => run(command, &mut std::io::stdout().lock(), &mut err),
    };
    ExitCode::from(code as u8)
}
