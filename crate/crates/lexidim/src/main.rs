use clap::error::ErrorKind;
use clap::Parser;

use lexidim::cli::{self, Cli};

fn main() {
    // Usage errors are input errors (exit 1); help and version exit 0.
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => cli::EXIT_INPUT,
            };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    match cli::run(cli) {
        Ok(output) => {
            if output.json {
                match serde_json::to_string_pretty(&output.report) {
                    Ok(text) => println!("{text}"),
                    Err(e) => {
                        eprintln!("error: cannot serialize report: {e}");
                        std::process::exit(cli::EXIT_INPUT);
                    }
                }
            } else {
                print!("{}", output.rendered);
            }
            std::process::exit(output.exit_code);
        }
        Err(err) => {
            eprintln!("error: {err}");
            std::process::exit(err.code);
        }
    }
}
