use std::io;
use std::process::ExitCode;

use clap::Parser;
use dualkripke::cli::Cli;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let exit = dualkripke::run(cli, &mut io::stdout().lock(), &mut io::stderr().lock());
    ExitCode::from(exit.code())
}
