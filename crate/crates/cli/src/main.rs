use clap::Parser;
use strgraph_cli::{execute, Cli};

fn main() {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok(stdout) => print!("{stdout}"),
        Err(e) => {
            eprintln!("strgraph: {e}");
            std::process::exit(e.exit_code());
        }
    }
}
