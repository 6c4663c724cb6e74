use clap::Parser;
use relzeta_cli::config::Cli;
use relzeta_cli::run::{execute, validate_config, write_output};

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // help and version requests are not configuration errors
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    if let Err(e) = validate_config(&cli) {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
    match execute(&cli) {
        Ok((text, code)) => {
            if let Err(e) = write_output(&cli, &text) {
                eprintln!("error: {e}");
                std::process::exit(1);
            }
            std::process::exit(code);
        }
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(e.exit_code());
        }
    }
}
