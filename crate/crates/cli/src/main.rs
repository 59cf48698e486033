use std::process::ExitCode;

use clap::Parser;
use coverideal_cli::run::{EXIT_ERROR, MEMO_CAP_VAR};
use coverideal_cli::{run, text, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let memo_cap = match std::env::var(MEMO_CAP_VAR) {
        Ok(v) => match v.parse() {
            Ok(cap) => Some(cap),
            Err(_) => {
                eprintln!("error: {MEMO_CAP_VAR} must be a non-negative integer");
                return ExitCode::from(EXIT_ERROR);
            }
        },
        Err(_) => None,
    };
    match run(&cli, memo_cap) {
        Ok(outcome) => {
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&outcome.report).expect("report serialises")
                );
            } else {
                print!("{}", text::render(&outcome.report));
            }
            ExitCode::from(outcome.exit_code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_ERROR)
        }
    }
}
