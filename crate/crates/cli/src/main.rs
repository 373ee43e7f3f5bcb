use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use coxkrew_cli::{run, Cli, Failure};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let (doc, result) = run(&cli);
    if let Some(doc) = doc {
        let mut out = std::io::stdout().lock();
        if out.write_all(doc.as_bytes()).and_then(|_| out.flush()).is_err() {
            return ExitCode::from(1);
        }
    }
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            if !matches!(e, Failure::Identity) {
                eprintln!("coxkrew: {e}");
            } else {
                eprintln!("coxkrew: {e}; see rows with status fail");
            }
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
