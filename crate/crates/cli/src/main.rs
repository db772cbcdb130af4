use std::io;

use clap::Parser;

use formwork_cli::{run, Cli, Io};

fn main() {
    let cli = Cli::parse();
    let stdin = io::stdin();
    let mut input = stdin.lock();
    let mut out = io::stdout().lock();
    let mut err = io::stderr().lock();
    let code = run(
        &cli,
        &mut Io {
            input: &mut input,
            out: &mut out,
            err: &mut err,
        },
    );
    std::process::exit(code);
}
