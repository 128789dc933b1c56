use std::io::Write;

use clap::Parser;

use osculate_cli::{run, Cli};

fn main() {
    let cli = Cli::parse();
    let outcome = run(&cli);
    print!("{}", outcome.stdout);
    eprint!("{}", outcome.stderr);
    let _ = std::io::stdout().flush();
    std::process::exit(outcome.code);
}
