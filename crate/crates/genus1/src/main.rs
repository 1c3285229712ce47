use clap::Parser;

use genus1::cli::{self, Cli};
use genus1::Error;

fn main() {
    // clap exits with code 2 on usage errors by itself.
    let cli = Cli::parse();
    match cli::run(cli) {
        Ok(code) => std::process::exit(code),
        Err(err) => {
            eprintln!("error: {err}");
            let code = match err {
                Error::BadInput(_) | Error::BadDiagram(_) => 2,
                _ => 1,
            };
            std::process::exit(code);
        }
    }
}
