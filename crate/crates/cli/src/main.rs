use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use polyclass_cli::args::Cli;
use polyclass_cli::commands::{self, EXIT_ERROR};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { 0 };
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    let (out, code) = match &cli.global.batch {
        Some(path) => commands::run_batch(path, &cli.global),
        None => {
            let o = commands::run(&cli);
            (o.render(cli.global.json), o.exit)
        }
    };
    let mut stdout = std::io::stdout().lock();
    let _ = stdout.write_all(out.as_bytes());
    let _ = stdout.flush();
    ExitCode::from(code as u8)
}
